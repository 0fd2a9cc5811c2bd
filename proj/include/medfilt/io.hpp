#pragma once

#include <charconv>
#include <concepts>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace medfilt {

/// FNV-1a fold of the output values; 32-bit values are sign-extended first
/// so both widths hash identical logical outputs to the same checksum.
template <std::signed_integral T>
std::uint64_t fold_checksum(std::span<const T> values) {
  std::uint64_t hash = 1469598103934665603ull;
  for (T v : values) {
    auto bits = static_cast<std::uint64_t>(static_cast<std::int64_t>(v));
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (bits >> (8 * byte)) & 0xff;
      hash *= 1099511628211ull;
    }
  }
  return hash;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_{0};
};

// Text format: one decimal integer per line, LF-terminated.

inline std::vector<std::int64_t> read_text(std::istream& in) {
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError("empty line", line_no);
    }
    std::int64_t value = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      throw ParseError("not a decimal integer: '" + line + "'", line_no);
    values.push_back(value);
  }
  return values;
}

template <std::signed_integral T>
void write_text(std::ostream& out, std::span<const T> values) {
  char buf[24];
  for (T v : values) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

// Binary format: one header byte (32 or 64), then little-endian fixed-width
// signed integers.

struct BinaryData {
  int width{64};
  std::vector<std::int64_t> values;
};

inline BinaryData read_binary(std::istream& in) {
  BinaryData data;
  const int header = in.get();
  if (header == std::char_traits<char>::eof())
    throw ParseError("empty binary stream (missing width header)", 0);
  if (header != 32 && header != 64)
    throw ParseError("bad width header byte " + std::to_string(header), 0);
  data.width = header;
  const std::size_t bytes = static_cast<std::size_t>(header) / 8;
  std::string payload((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (payload.size() % bytes != 0)
    throw ParseError("binary payload is not a whole number of values", 0);
  data.values.reserve(payload.size() / bytes);
  for (std::size_t off = 0; off < payload.size(); off += bytes) {
    std::uint64_t u = 0;
    for (std::size_t byte = 0; byte < bytes; ++byte)
      u |= static_cast<std::uint64_t>(
               static_cast<unsigned char>(payload[off + byte]))
           << (8 * byte);
    if (bytes == 4)
      data.values.push_back(static_cast<std::int32_t>(u));
    else
      data.values.push_back(static_cast<std::int64_t>(u));
  }
  return data;
}

template <std::signed_integral T>
void write_binary(std::ostream& out, std::span<const T> values) {
  const int width = static_cast<int>(sizeof(T) * 8);
  out.put(static_cast<char>(width));
  for (T v : values) {
    auto u = static_cast<std::make_unsigned_t<T>>(v);
    for (std::size_t byte = 0; byte < sizeof(T); ++byte)
      out.put(static_cast<char>((u >> (8 * byte)) & 0xff));
  }
}

}  // namespace medfilt
