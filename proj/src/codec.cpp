#include "fsig/codec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "fsig/error.hpp"

namespace fsig {

namespace {

using i128 = __int128;

constexpr std::int64_t kSampleLimit = std::int64_t{1} << 40;
constexpr std::int64_t kFactorLimit = std::int64_t{1} << 31;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= static_cast<i128>(INT64_MIN) && x <= static_cast<i128>(INT64_MAX);
}

struct Span {
  std::size_t start;
  std::size_t length;
};

struct Layout {
  std::size_t count = 0;
  std::size_t cols = 0;  // 0 for 1-D
};

// Index map on positions relative to the first sample.
struct Choice {
  std::int64_t scale = 1;
  std::int64_t offset = 1;
  std::int64_t num = 1;
  std::int64_t den = 1;
  std::vector<std::int64_t> delta;
  i128 norm = 0;

  auto key() const {
    return std::make_tuple(norm, scale < 0 ? -scale : scale, offset < 0 ? -offset : offset, scale < 0,
                           num != den, den, num);
  }
};

// Source index of relative target j under (S, T), if it is an earlier sample.
std::optional<std::size_t> source_of(std::int64_t s, std::int64_t t, std::size_t j) {
  const std::int64_t d = static_cast<std::int64_t>(j) - t;
  if (d % s != 0) return std::nullopt;
  const std::int64_t i = d / s;
  if (i < 0 || i >= static_cast<std::int64_t>(j)) return std::nullopt;
  return static_cast<std::size_t>(i);
}

std::optional<std::vector<std::int64_t>> prediction_source(const std::vector<std::int64_t>& x, const Span& seg,
                                                           std::int64_t s, std::int64_t t) {
  std::vector<std::int64_t> p(seg.length);
  for (std::size_t k = 0; k < seg.length; ++k) {
    auto i = source_of(s, t, seg.start + k);
    if (!i) return std::nullopt;
    p[k] = x[*i];
  }
  return p;
}

std::optional<Choice> evaluate(const std::vector<std::int64_t>& x, const Span& seg, std::int64_t s, std::int64_t t,
                               std::int64_t num, std::int64_t den, const std::vector<std::int64_t>& p) {
  Choice c{s, t, num, den, std::vector<std::int64_t>(seg.length), 0};
  for (std::size_t k = 0; k < seg.length; ++k) {
    const i128 scaled = static_cast<i128>(num) * p[k];
    if (scaled % den != 0) return std::nullopt;
    const i128 d = static_cast<i128>(x[seg.start + k]) - scaled / den;
    if (abs128(d) >= (static_cast<i128>(1) << 62)) return std::nullopt;
    c.delta[k] = static_cast<std::int64_t>(d);
    c.norm += d * d;
  }
  return c;
}

// Least-squares amplitude for prediction p against the segment, as a reduced fraction.
std::optional<std::pair<std::int64_t, std::int64_t>> fit_amplitude(const std::vector<std::int64_t>& x, const Span& seg,
                                                                   const std::vector<std::int64_t>& p) {
  i128 pp = 0, pg = 0;
  for (std::size_t k = 0; k < seg.length; ++k) {
    pp += static_cast<i128>(p[k]) * p[k];
    pg += static_cast<i128>(p[k]) * x[seg.start + k];
  }
  if (pp == 0 || pg == 0) return std::nullopt;
  const i128 g = gcd128(pg, pp);
  const i128 num = pg / g, den = pp / g;
  if (abs128(num) > kFactorLimit || den > kFactorLimit) return std::nullopt;
  if (num == den) return std::nullopt;
  return std::make_pair(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::vector<std::pair<std::int64_t, std::int64_t>> detected_maps(const Layout& layout, const Span& seg,
                                                                 const EncodeOptions& opt) {
  std::vector<std::pair<std::int64_t, std::int64_t>> maps;
  const auto a = static_cast<std::int64_t>(seg.start);
  const auto b = static_cast<std::int64_t>(seg.start + seg.length);
  for (std::int64_t t = 1; t <= std::min(a, opt.window); ++t) maps.emplace_back(1, t);
  if (layout.cols > 0) {
    const auto cols = static_cast<std::int64_t>(layout.cols);
    for (std::int64_t k = 1; k <= opt.window_rows; ++k)
      for (std::int64_t d = -1; d <= 1; ++d) {
        const std::int64_t t = k * cols + d;
        if (t > opt.window && t <= a) maps.emplace_back(1, t);
      }
  }
  for (std::int64_t t = std::max(b - 1, 2 * a - 1 - opt.window); t <= 2 * a - 1; ++t) maps.emplace_back(-1, t);
  return maps;
}

Choice choose_detected(const std::vector<std::int64_t>& x, const Layout& layout, const Span& seg,
                       const EncodeOptions& opt) {
  std::optional<Choice> best;
  auto consider = [&](std::optional<Choice> c) {
    if (c && (!best || c->key() < best->key())) best = std::move(c);
  };
  for (auto [s, t] : detected_maps(layout, seg, opt)) {
    auto p = prediction_source(x, seg, s, t);
    if (!p) continue;
    consider(evaluate(x, seg, s, t, 1, 1, *p));
    if (auto c = fit_amplitude(x, seg, *p)) consider(evaluate(x, seg, s, t, c->first, c->second, *p));
  }
  if (!best) throw Error(ErrorCode::CorruptContainer, "no admissible arrow for segment");
  return *best;
}

std::int64_t predecessor_offset(const Layout& layout, std::size_t j) {
  if (layout.cols > 0 && j % layout.cols == 0) return static_cast<std::int64_t>(layout.cols);
  return 1;
}

std::vector<Span> segments_for(const Layout& layout, Policy policy, const EncodeOptions& opt) {
  std::vector<Span> spans;
  if (policy == Policy::Predecessor) {
    for (std::size_t j = 1; j < layout.count; ++j) spans.push_back({j, 1});
    return spans;
  }
  if (layout.cols == 0) {
    const std::size_t len = std::max<std::size_t>(opt.segment_len, 1);
    for (std::size_t j = 1; j < layout.count; j += len) spans.push_back({j, std::min(len, layout.count - j)});
    return spans;
  }
  const std::size_t rows = layout.count / layout.cols;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t first = r * layout.cols;
    if (r > 0) spans.push_back({first, 1});
    if (layout.cols > 1) spans.push_back({first + 1, layout.cols - 1});
  }
  return spans;
}

// Converts a relative-coordinate map to absolute positions (origin + index).
std::int64_t absolute_offset(std::int64_t s, std::int64_t t_rel, std::int64_t origin) {
  const i128 t = static_cast<i128>(t_rel) - static_cast<i128>(s - 1) * origin;
  if (!fits64(t)) throw Error(ErrorCode::Overflow, "index map offset out of range");
  return static_cast<std::int64_t>(t);
}

std::int64_t relative_offset(std::int64_t s, std::int64_t t_abs, std::int64_t origin) {
  const i128 t = static_cast<i128>(t_abs) + static_cast<i128>(s - 1) * origin;
  if (!fits64(t)) throw Error(ErrorCode::CorruptContainer, "index map offset out of range");
  return static_cast<std::int64_t>(t);
}

EncodedSignal encode_samples(const std::vector<std::int64_t>& x, const Layout& layout, std::int64_t origin,
                             Policy policy, const EncodeOptions& opt) {
  if (x.empty()) throw Error(ErrorCode::EmptySignal, "nothing to encode");
  for (auto v : x)
    if (v <= -kSampleLimit || v >= kSampleLimit) throw Error(ErrorCode::Overflow, "sample magnitude exceeds 2^40");
  EncodedSignal enc;
  enc.origin = origin;
  enc.policy = policy;
  enc.seed = {x.front()};
  for (const auto& seg : segments_for(layout, policy, opt)) {
    Choice c;
    if (policy == Policy::Predecessor) {
      const auto t = predecessor_offset(layout, seg.start);
      c = *evaluate(x, seg, 1, t, 1, 1, *prediction_source(x, seg, 1, t));
    } else {
      c = choose_detected(x, layout, seg, opt);
    }
    ArrowRecord rec;
    rec.scale = c.scale;
    rec.offset = absolute_offset(c.scale, c.offset, origin);
    rec.c_num = c.num;
    rec.c_den = c.den;
    rec.kind = classify_arrow(IndexMap{rec.scale, rec.offset}, make_rational(rec.c_num, rec.c_den));
    rec.delta = std::move(c.delta);
    enc.records.push_back(std::move(rec));
  }
  return enc;
}

void check_policy(const EncodedSignal& enc, const Layout& layout) {
  if (enc.policy != Policy::Predecessor) return;
  std::size_t j = enc.seed.size();
  for (const auto& rec : enc.records) {
    const bool ok = rec.delta.size() == 1 && rec.scale == 1 && rec.c_num == 1 && rec.c_den == 1 &&
                    relative_offset(1, rec.offset, enc.origin) == predecessor_offset(layout, j);
    if (!ok) throw Error(ErrorCode::PolicyMismatch, "record breaks the predecessor policy");
    j += rec.delta.size();
  }
}

}  // namespace

std::string to_string(Policy policy) { return policy == Policy::Predecessor ? "predecessor" : "detected"; }

std::optional<Policy> parse_policy(std::string_view text) {
  if (text == "predecessor") return Policy::Predecessor;
  if (text == "detected") return Policy::Detected;
  return std::nullopt;
}

EncodedSignal encode(const IntSignal& signal, Policy policy, const EncodeOptions& options) {
  auto enc = encode_samples(signal.samples, {signal.samples.size(), 0}, signal.origin, policy, options);
  enc.dims = 1;
  enc.length = signal.samples.size();
  return enc;
}

EncodedSignal encode(const Image& image, Policy policy, const EncodeOptions& options) {
  if (image.rows * image.cols != image.pixels.size()) throw Error(ErrorCode::FormatError, "image size mismatch");
  auto enc = encode_samples(image.pixels, {image.pixels.size(), image.cols}, 0, policy, options);
  enc.dims = 2;
  enc.rows = image.rows;
  enc.cols = image.cols;
  return enc;
}

std::vector<std::int64_t> decode_samples(const EncodedSignal& enc, std::optional<Policy> expected) {
  if (expected && *expected != enc.policy) throw Error(ErrorCode::PolicyMismatch, "container uses the " + to_string(enc.policy) + " policy");
  if (enc.policy != Policy::Predecessor && enc.policy != Policy::Detected)
    throw Error(ErrorCode::PolicyMismatch, "unknown policy id");
  if (enc.dims != 1 && enc.dims != 2) throw Error(ErrorCode::CorruptContainer, "dimension must be 1 or 2");
  if (enc.dims == 2 && enc.origin != 0) throw Error(ErrorCode::CorruptContainer, "images have origin 0");
  const auto total = enc.sample_count();
  if (enc.seed.empty() || total == 0) throw Error(ErrorCode::CorruptContainer, "empty seed");
  std::uint64_t declared = enc.seed.size();
  for (const auto& rec : enc.records) {
    if (rec.delta.empty()) throw Error(ErrorCode::CorruptContainer, "empty record");
    declared += rec.delta.size();
  }
  if (declared != total || (enc.dims == 2 && enc.cols != 0 && total / enc.cols != enc.rows))
    throw Error(ErrorCode::CorruptContainer, "records do not cover the declared extent");
  const Layout layout{static_cast<std::size_t>(total), enc.dims == 2 ? static_cast<std::size_t>(enc.cols) : 0};
  check_policy(enc, layout);

  std::vector<std::int64_t> x(enc.seed);
  x.reserve(static_cast<std::size_t>(total));
  for (const auto& rec : enc.records) {
    if (rec.scale == 0 || rec.c_den <= 0 || rec.c_num == 0)
      throw Error(ErrorCode::CorruptContainer, "degenerate arrow");
    if (rec.kind != classify_arrow(IndexMap{rec.scale, rec.offset}, make_rational(rec.c_num, rec.c_den)))
      throw Error(ErrorCode::CorruptContainer, "arrow kind disagrees with its data");
    const auto t = relative_offset(rec.scale, rec.offset, enc.origin);
    for (auto d : rec.delta) {
      const std::size_t j = x.size();
      auto i = source_of(rec.scale, t, j);
      if (!i) throw Error(ErrorCode::CorruptContainer, "arrow reads a sample that is not decoded yet");
      const i128 scaled = static_cast<i128>(rec.c_num) * x[*i];
      if (scaled % rec.c_den != 0) throw Error(ErrorCode::CorruptContainer, "prediction is not integral");
      const i128 v = scaled / rec.c_den + d;
      if (!fits64(v)) throw Error(ErrorCode::CorruptContainer, "decoded sample overflows");
      x.push_back(static_cast<std::int64_t>(v));
    }
  }
  return x;
}

IntSignal decode_1d(const EncodedSignal& enc, std::optional<Policy> expected) {
  if (enc.dims != 1) throw Error(ErrorCode::CorruptContainer, "container holds an image");
  return {enc.origin, decode_samples(enc, expected)};
}

Image decode_2d(const EncodedSignal& enc, std::optional<Policy> expected) {
  if (enc.dims != 2) throw Error(ErrorCode::CorruptContainer, "container holds a 1-D signal");
  return {static_cast<std::size_t>(enc.rows), static_cast<std::size_t>(enc.cols), decode_samples(enc, expected)};
}

std::vector<std::int64_t> delta_stream(const EncodedSignal& enc) {
  std::vector<std::int64_t> out;
  for (const auto& rec : enc.records) out.insert(out.end(), rec.delta.begin(), rec.delta.end());
  return out;
}

double zeroth_order_entropy(std::span<const std::int64_t> values) {
  if (values.empty()) return 0.0;
  std::map<std::int64_t, std::size_t> hist;
  for (auto v : values) ++hist[v];
  const double n = static_cast<double>(values.size());
  double h = 0;
  for (const auto& [v, k] : hist) {
    const double p = static_cast<double>(k) / n;
    h -= p * std::log2(p);
  }
  return h <= 0 ? 0.0 : h;
}

Metrics metrics(std::span<const std::int64_t> raw, const EncodedSignal& enc) {
  if (raw.size() != enc.sample_count()) throw Error(ErrorCode::IntervalMismatch, "raw and encoded sizes differ");
  const auto deltas = delta_stream(enc);
  Metrics m;
  m.samples = raw.size();
  m.delta_count = deltas.size();
  m.nonzero_deltas = static_cast<std::size_t>(std::count_if(deltas.begin(), deltas.end(), [](auto d) { return d != 0; }));
  m.nonzero_delta_fraction = deltas.empty() ? 0.0 : static_cast<double>(m.nonzero_deltas) / static_cast<double>(deltas.size());
  m.raw_entropy = zeroth_order_entropy(raw);
  m.delta_entropy = zeroth_order_entropy(deltas);
  m.encoded_bytes = write_container(enc).size();
  return m;
}

}  // namespace fsig
