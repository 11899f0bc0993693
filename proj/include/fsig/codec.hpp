#ifndef FSIG_CODEC_HPP
#define FSIG_CODEC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/signal.hpp"

namespace fsig {

/// How each segment's arrow is chosen.
///
/// Predecessor: unit segments, each predicted by the fixed translation from the
/// previous sample (1-D) or from the left neighbour, with the up neighbour for
/// the first column (2-D). Detected: runs of samples, each predicted by the best
/// arrow found among nearby translations, reversals and amplitude fits.
enum class Policy : std::uint8_t { Predecessor = 0, Detected = 1 };

std::string to_string(Policy policy);
std::optional<Policy> parse_policy(std::string_view text);

struct IntSignal {
  std::int64_t origin = 0;
  std::vector<std::int64_t> samples;

  friend bool operator==(const IntSignal&, const IntSignal&) = default;
};

/// Row-major grey image.
struct Image {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> pixels;

  std::int64_t at(std::size_t r, std::size_t c) const { return pixels.at(r * cols + c); }
  std::int64_t& at(std::size_t r, std::size_t c) { return pixels.at(r * cols + c); }

  friend bool operator==(const Image&, const Image&) = default;
};

/// One segment of the encoded stream: the target is the next |delta| positions,
/// predicted as c · x[φ⁻¹(j)] from already decoded samples.
struct ArrowRecord {
  ArrowKind kind = ArrowKind::Translation;
  std::int64_t offset = 1;  // T
  std::int64_t scale = 1;   // S
  std::int64_t c_num = 1;
  std::int64_t c_den = 1;
  std::vector<std::int64_t> delta;

  friend bool operator==(const ArrowRecord&, const ArrowRecord&) = default;
};

/// Positions are origin, origin+1, ... (1-D) or row-major linear pixel indices (2-D).
struct EncodedSignal {
  std::uint8_t dims = 1;
  std::uint64_t length = 0;  // 1-D
  std::uint64_t rows = 0;    // 2-D
  std::uint64_t cols = 0;    // 2-D
  std::int64_t origin = 0;
  Policy policy = Policy::Predecessor;
  std::vector<std::int64_t> seed;
  std::vector<ArrowRecord> records;

  std::uint64_t sample_count() const { return dims == 1 ? length : rows * cols; }

  friend bool operator==(const EncodedSignal&, const EncodedSignal&) = default;
};

struct EncodeOptions {
  std::size_t segment_len = 8;   // 1-D run length under the detected policy
  std::int64_t window = 32;      // how far back detected arrows may reach, in samples
  std::int64_t window_rows = 4;  // 2-D: whole-row shifts considered
};

/// Samples must satisfy |x| < 2^40 (Overflow otherwise); empty input throws EmptySignal.
EncodedSignal encode(const IntSignal& signal, Policy policy = Policy::Predecessor, const EncodeOptions& options = {});
EncodedSignal encode(const Image& image, Policy policy = Policy::Predecessor, const EncodeOptions& options = {});

/// Throws CorruptContainer when the records do not describe a decodable
/// stream and PolicyMismatch when they break the declared policy or when
/// `expected` is given and differs from it.
IntSignal decode_1d(const EncodedSignal& enc, std::optional<Policy> expected = std::nullopt);
Image decode_2d(const EncodedSignal& enc, std::optional<Policy> expected = std::nullopt);
/// Decoded samples in position order, whatever the dimension.
std::vector<std::int64_t> decode_samples(const EncodedSignal& enc, std::optional<Policy> expected = std::nullopt);

/// Concatenated Δ of all records (the seed is not part of it).
std::vector<std::int64_t> delta_stream(const EncodedSignal& enc);

/// FSG1 container bytes. Reading rejects bad magic or version, truncation,
/// trailing bytes and malformed fields with CorruptContainer.
std::vector<std::uint8_t> write_container(const EncodedSignal& enc);
EncodedSignal read_container(std::span<const std::uint8_t> bytes);

struct Metrics {
  std::size_t samples = 0;
  std::size_t delta_count = 0;
  std::size_t nonzero_deltas = 0;
  double nonzero_delta_fraction = 0;
  double raw_entropy = 0;    // bits per sample
  double delta_entropy = 0;  // bits per sample
  std::size_t encoded_bytes = 0;
};

/// Histogram entropy in bits per symbol (0 for an empty input).
double zeroth_order_entropy(std::span<const std::int64_t> values);

/// Throws IntervalMismatch when raw and enc disagree on the sample count.
Metrics metrics(std::span<const std::int64_t> raw, const EncodedSignal& enc);

}  // namespace fsig

#endif  // FSIG_CODEC_HPP
