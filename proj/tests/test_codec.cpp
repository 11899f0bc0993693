#include <doctest.h>

#include "fsig/codec.hpp"
#include "fsig/error.hpp"
#include "fsig/random.hpp"

using namespace fsig;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::TooLarge;
}

ArrowRecord unit(std::int64_t d) { return ArrowRecord{ArrowKind::Translation, 1, 1, 1, 1, {d}}; }

Image filled(std::size_t rows, std::size_t cols, auto&& value) {
  Image img{rows, cols, std::vector<std::int64_t>(rows * cols)};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) img.at(r, c) = value(r, c);
  return img;
}

}  // namespace

TEST_CASE("predecessor encoding of a ramp") {
  const IntSignal x{1, {1, 2, 3, 4, 5}};
  const auto enc = encode(x);
  CHECK(enc.seed == std::vector<std::int64_t>{1});
  CHECK(enc.records.size() == 4);
  CHECK(delta_stream(enc) == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(decode_1d(enc) == x);

  const auto m = metrics(x.samples, enc);
  CHECK(m.delta_entropy == 0.0);
  CHECK(m.nonzero_delta_fraction == 1.0);
  CHECK(m.raw_entropy == doctest::Approx(std::log2(5.0)));
}

TEST_CASE("constant and two-region images") {
  const auto sevens = filled(3, 3, [](auto, auto) { return 7; });
  const auto enc = encode(sevens);
  CHECK(enc.seed == std::vector<std::int64_t>{7});
  for (auto d : delta_stream(enc)) CHECK(d == 0);
  CHECK(metrics(sevens.pixels, enc).nonzero_delta_fraction == 0.0);

  const auto halves = filled(4, 4, [](auto, std::size_t c) { return c < 2 ? 10 : 20; });
  const auto h = encode(halves);
  // Stream index j-1 holds the residual of pixel j (row-major); only column 2 differs from its left neighbour.
  const auto stream = delta_stream(h);
  std::size_t nonzero = 0;
  for (std::size_t j = 1; j < 16; ++j) {
    const bool boundary = j % 4 == 2;
    CHECK((stream[j - 1] != 0) == boundary);
    nonzero += stream[j - 1] != 0;
  }
  CHECK(nonzero == 4);
  CHECK(decode_2d(h) == halves);
}

TEST_CASE("hand-built container") {
  EncodedSignal enc;
  enc.dims = 1;
  enc.length = 3;
  enc.seed = {0};
  enc.records = {unit(1), unit(-1)};
  CHECK(decode_1d(enc).samples == std::vector<std::int64_t>{0, 1, 0});
  CHECK(decode_1d(read_container(write_container(enc))).samples == std::vector<std::int64_t>{0, 1, 0});
}

TEST_CASE("container errors") {
  const auto bytes = write_container(encode(IntSignal{0, {3, 1, 4, 1, 5}}));
  for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
    const std::span<const std::uint8_t> head(bytes.data(), cut);
    CHECK(code_of([&] { read_container(head); }) == ErrorCode::CorruptContainer);
  }
  auto bad = bytes;
  bad[0] = 'X';
  CHECK(code_of([&] { read_container(bad); }) == ErrorCode::CorruptContainer);
  bad = bytes;
  bad[4] = 9;
  CHECK(code_of([&] { read_container(bad); }) == ErrorCode::CorruptContainer);
  bad = bytes;
  bad.push_back(0);
  CHECK(code_of([&] { read_container(bad); }) == ErrorCode::CorruptContainer);
}

TEST_CASE("policy mismatches and malformed records") {
  const IntSignal x{0, {5, 6, 8, 8, 9, 1, 2, 3, 4, 5}};
  const auto det = encode(x, Policy::Detected, EncodeOptions{4, 8, 1});
  CHECK(decode_1d(det) == x);
  CHECK(code_of([&] { decode_1d(det, Policy::Predecessor); }) == ErrorCode::PolicyMismatch);

  auto forged = det;
  forged.policy = Policy::Predecessor;
  CHECK(code_of([&] { decode_1d(forged); }) == ErrorCode::PolicyMismatch);

  auto ahead = encode(x);
  ahead.records[0].offset = 0;  // predicts sample 1 from itself
  CHECK_THROWS_AS(decode_1d(ahead), Error);

  auto short_by_one = encode(x);
  short_by_one.records.pop_back();
  CHECK(code_of([&] { decode_1d(short_by_one); }) == ErrorCode::CorruptContainer);

  CHECK(code_of([&] { encode(IntSignal{0, {}}); }) == ErrorCode::EmptySignal);
  CHECK(code_of([&] { encode(IntSignal{0, {std::int64_t{1} << 41}}); }) == ErrorCode::Overflow);
}

TEST_CASE("detected policy finds repeats, reversals and scaled copies") {
  IntSignal x{-3, {99}};
  const std::vector<std::int64_t> motif{4, 9, -2, 7, 1, 3, 8, 0};
  x.samples.insert(x.samples.end(), motif.begin(), motif.end());
  x.samples.insert(x.samples.end(), motif.begin(), motif.end());
  x.samples.insert(x.samples.end(), motif.rbegin(), motif.rend());
  for (auto v : motif) x.samples.push_back(-2 * v);
  const auto enc = encode(x, Policy::Detected);
  CHECK(decode_1d(enc) == x);
  REQUIRE(enc.records.size() == 4);
  const auto stream = delta_stream(enc);
  // Runs after the first (repeat, reversal, scaled copy) are predicted exactly.
  for (std::size_t j = 8; j < stream.size(); ++j) CHECK(stream[j] == 0);
  bool reversed = false, scaled = false;
  for (const auto& r : enc.records) {
    reversed = reversed || r.scale == -1;
    scaled = scaled || (r.c_num == -2 && r.c_den == 1);
  }
  CHECK(reversed);
  CHECK(scaled);
}

TEST_CASE("detected never loses to predecessor per segment") {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto x = random_int_signal(rng, static_cast<std::size_t>(uniform_int(rng, 1, 300)), -50, 50);
    const auto p = delta_stream(encode(x));
    const auto d = encode(x, Policy::Detected);
    std::size_t pos = 0;
    for (const auto& r : d.records) {
      __int128 mine = 0, base = 0;
      for (std::size_t i = 0; i < r.delta.size(); ++i) {
        mine += static_cast<__int128>(r.delta[i]) * r.delta[i];
        base += static_cast<__int128>(p[pos + i]) * p[pos + i];
      }
      REQUIRE(mine <= base);
      pos += r.delta.size();
    }
    REQUIRE(decode_1d(d) == x);
  }
}

TEST_CASE("entropy") {
  const std::vector<std::int64_t> none;
  CHECK(zeroth_order_entropy(none) == 0.0);
  const std::vector<std::int64_t> two{1, 2, 1, 2};
  CHECK(zeroth_order_entropy(two) == doctest::Approx(1.0));
  CHECK_THROWS_AS(metrics(two, encode(IntSignal{0, {1, 2}})), Error);
}

TEST_CASE("noise does not compress") {
  Rng rng(2024);
  const auto noise = random_image(rng, 128, 128, 255);
  for (auto policy : {Policy::Predecessor, Policy::Detected}) {
    const auto m = metrics(noise.pixels, encode(noise, policy));
    CHECK(m.delta_entropy >= m.raw_entropy - 1.0);
  }
}
