#include <cstring>

#include "fsig/codec.hpp"
#include "fsig/error.hpp"

namespace fsig {

namespace {

constexpr char kMagic[4] = {'F', 'S', 'G', '1'};
constexpr std::uint8_t kVersion = 1;
// kind, T, S, c numerator, c denominator, Δ length.
constexpr std::size_t kRecordHeader = 1 + 5 * 8;

class Writer {
 public:
  void byte(std::uint8_t b) { out_.push_back(b); }
  void u64(std::uint64_t v) {
    for (int k = 0; k < 8; ++k) out_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void i64s(const std::vector<std::int64_t>& v) {
    u64(v.size());
    for (auto x : v) i64(x);
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t byte() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * k);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::vector<std::int64_t> i64s() {
    const auto n = u64();
    if (n > remaining() / 8) throw Error(ErrorCode::CorruptContainer, "array length exceeds the file");
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = i64();
    return v;
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) throw Error(ErrorCode::CorruptContainer, "truncated container");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> write_container(const EncodedSignal& enc) {
  Writer w;
  for (char c : kMagic) w.byte(static_cast<std::uint8_t>(c));
  w.byte(kVersion);
  w.byte(enc.dims);
  if (enc.dims == 1) {
    w.u64(enc.length);
  } else {
    w.u64(enc.rows);
    w.u64(enc.cols);
  }
  w.i64(enc.origin);
  w.byte(static_cast<std::uint8_t>(enc.policy));
  w.i64s(enc.seed);
  w.u64(enc.records.size());
  for (const auto& rec : enc.records) {
    w.byte(static_cast<std::uint8_t>(rec.kind));
    w.i64(rec.offset);
    w.i64(rec.scale);
    w.i64(rec.c_num);
    w.i64(rec.c_den);
    w.i64s(rec.delta);
  }
  return w.take();
}

EncodedSignal read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(ErrorCode::CorruptContainer, "bad magic");
  Reader r(bytes.subspan(4));
  if (r.byte() != kVersion) throw Error(ErrorCode::CorruptContainer, "unsupported container version");
  EncodedSignal enc;
  enc.dims = r.byte();
  if (enc.dims == 1) {
    enc.length = r.u64();
  } else if (enc.dims == 2) {
    enc.rows = r.u64();
    enc.cols = r.u64();
  } else {
    throw Error(ErrorCode::CorruptContainer, "dimension byte must be 1 or 2");
  }
  enc.origin = r.i64();
  const auto policy = r.byte();
  if (policy > static_cast<std::uint8_t>(Policy::Detected)) throw Error(ErrorCode::PolicyMismatch, "unknown policy id");
  enc.policy = static_cast<Policy>(policy);
  enc.seed = r.i64s();
  const auto count = r.u64();
  if (count > r.remaining() / kRecordHeader) throw Error(ErrorCode::CorruptContainer, "record count exceeds the file");
  enc.records.resize(static_cast<std::size_t>(count));
  for (auto& rec : enc.records) {
    const auto kind = r.byte();
    if (kind > static_cast<std::uint8_t>(ArrowKind::AmpAffine)) throw Error(ErrorCode::CorruptContainer, "unknown arrow kind");
    rec.kind = static_cast<ArrowKind>(kind);
    rec.offset = r.i64();
    rec.scale = r.i64();
    rec.c_num = r.i64();
    rec.c_den = r.i64();
    if (rec.c_den <= 0) throw Error(ErrorCode::CorruptContainer, "amplitude denominator must be positive");
    rec.delta = r.i64s();
  }
  if (r.remaining() != 0) throw Error(ErrorCode::CorruptContainer, "trailing bytes after the last record");
  return enc;
}

}  // namespace fsig
