#include "maxorder/parse.hpp"

#include <charconv>
#include <cmath>

#include "maxorder/errors.hpp"

namespace maxorder::parse {
namespace {

std::string at(std::size_t offset) { return " at position " + std::to_string(offset + 1); }

}  // namespace

double real(std::string_view text, std::size_t offset) {
  if (text.empty()) throw UsageError("expected a number" + at(offset));
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) {
    throw UsageError("invalid number '" + std::string(text) + "'" + at(offset));
  }
  if (ptr != last) {
    throw UsageError("unexpected character '" + std::string(1, *ptr) + "'" +
                     at(offset + static_cast<std::size_t>(ptr - text.data())));
  }
  if (!std::isfinite(value)) throw UsageError("non-finite number" + at(offset));
  return value;
}

std::vector<double> real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(real(text.substr(start, end - start), start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<KeyValue> key_values(std::string_view text, std::size_t base_offset) {
  std::vector<KeyValue> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const auto item = text.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw UsageError("expected key=value" + at(base_offset + start));
    }
    out.push_back({std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)),
                   base_offset + start + eq + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace maxorder::parse
