#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxorder::parse {

/// Parses a complete real number. `offset` is the position of `text` inside the
/// user-visible string and is only used in the error message.
double real(std::string_view text, std::size_t offset = 0);

/// "1,2.5,3" -> {1, 2.5, 3}. Errors carry the 1-based character position.
std::vector<double> real_list(std::string_view text);

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t value_offset;  ///< 0-based offset of the value inside the full string
};

/// "a=1,b=2" -> {{a,1},{b,2}}; `base_offset` shifts the reported positions.
std::vector<KeyValue> key_values(std::string_view text, std::size_t base_offset = 0);

}  // namespace maxorder::parse
