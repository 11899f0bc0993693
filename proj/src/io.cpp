#include "fsig/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>

#include "fsig/error.hpp"

namespace fsig {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n,");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n,");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::FormatError, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

class PgmScanner {
 public:
  explicit PgmScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t number() {
    skip_space_and_comments();
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (++digits > 12) throw Error(ErrorCode::FormatError, "PGM number too long");
    }
    if (digits == 0) throw Error(ErrorCode::FormatError, "PGM header or data truncated");
    return v;
  }
  // Exactly one whitespace byte separates the header from binary data.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) throw Error(ErrorCode::FormatError, "PGM header not terminated");
    ++pos_;
  }
  std::uint8_t raw() {
    if (pos_ >= bytes_.size()) throw Error(ErrorCode::FormatError, "PGM raster truncated");
    return bytes_[pos_++];
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return bytes;
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

Signal parse_csv(std::string_view text) {
  Signal s;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      if (body.starts_with("origin=")) s.origin = parse_int(trim(body.substr(7)), "origin");
      continue;
    }
    auto q = parse_rational(line);
    if (!q) throw Error(ErrorCode::FormatError, "line " + std::to_string(line_no) + ": not a number");
    s.samples.push_back(std::move(*q));
  }
  return s;
}

std::string format_csv(const IntSignal& signal) {
  std::string out;
  if (signal.origin != 0) out += "# origin=" + std::to_string(signal.origin) + "\n";
  for (auto v : signal.samples) out += std::to_string(v) + "\n";
  return out;
}

IntSignal to_int_signal(const Signal& signal) {
  IntSignal out{signal.origin, {}};
  out.samples.reserve(signal.samples.size());
  for (const auto& q : signal.samples) {
    auto v = to_int64(q);
    if (!v) throw Error(ErrorCode::NotIntegral, "sample " + to_string(q) + " is not a 64-bit integer");
    out.samples.push_back(*v);
  }
  return out;
}

Signal to_signal(const IntSignal& signal) {
  Signal out{signal.origin, {}};
  out.samples.reserve(signal.samples.size());
  for (auto v : signal.samples) out.samples.push_back(make_rational(v));
  return out;
}

Image parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw Error(ErrorCode::FormatError, "not a PGM file");
  const bool binary = bytes[1] == '5';
  PgmScanner scan(bytes);
  const auto cols = scan.number();
  const auto rows = scan.number();
  const auto maxval = scan.number();
  if (cols == 0 || rows == 0) throw Error(ErrorCode::FormatError, "PGM image is empty");
  if (maxval == 0 || maxval > 65535) throw Error(ErrorCode::FormatError, "PGM maxval must be in 1..65535");
  if (cols > (1u << 20) || rows > (1u << 20) || cols * rows > (1u << 28))
    throw Error(ErrorCode::FormatError, "PGM image too large");
  Image img{static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), {}};
  img.pixels.resize(img.rows * img.cols);
  if (binary) {
    scan.single_space();
    const std::size_t width = maxval > 255 ? 2 : 1;
    if (scan.remaining() < img.pixels.size() * width) throw Error(ErrorCode::FormatError, "PGM raster truncated");
    for (auto& p : img.pixels) {
      std::uint32_t v = scan.raw();
      if (width == 2) v = (v << 8) | scan.raw();
      p = v;
    }
  } else {
    for (auto& p : img.pixels) p = static_cast<std::int64_t>(scan.number());
  }
  for (auto p : img.pixels)
    if (static_cast<std::uint64_t>(p) > maxval) throw Error(ErrorCode::FormatError, "PGM pixel exceeds maxval");
  return img;
}

std::vector<std::uint8_t> format_pgm(const Image& image) {
  if (image.rows * image.cols != image.pixels.size() || image.pixels.empty())
    throw Error(ErrorCode::FormatError, "image size mismatch");
  std::int64_t hi = 0;
  for (auto p : image.pixels) {
    if (p < 0 || p > 65535) throw Error(ErrorCode::FormatError, "pixel outside 0..65535");
    hi = std::max(hi, p);
  }
  const int maxval = hi > 255 ? 65535 : 255;
  const std::string header =
      "P5\n" + std::to_string(image.cols) + " " + std::to_string(image.rows) + "\n" + std::to_string(maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (auto p : image.pixels) {
    if (maxval > 255) out.push_back(static_cast<std::uint8_t>(p >> 8));
    out.push_back(static_cast<std::uint8_t>(p & 0xff));
  }
  return out;
}

FileKind sniff(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), "FSG1", 4) == 0) return FileKind::Container;
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) return FileKind::Pgm;
  return FileKind::Csv;
}

}  // namespace fsig
