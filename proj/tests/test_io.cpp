#include <doctest.h>

#include <filesystem>
#include <string>

#include "fsig/error.hpp"
#include "fsig/io.hpp"
#include "fsig/random.hpp"

using namespace fsig;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("csv") {
  const auto s = parse_csv("# origin=-4\n1\n\n-2\n3/6\n# comment\n7\n");
  CHECK(s.origin == -4);
  CHECK(s.samples == std::vector<Rational>{1, -2, Rational(1, 2), 7});
  CHECK_THROWS_AS(to_int_signal(s), Error);

  const IntSignal x{3, {5, -1, 0}};
  CHECK(to_int_signal(parse_csv(format_csv(x))) == x);
  CHECK(to_int_signal(parse_csv(format_csv(IntSignal{0, {8}}))) == IntSignal{0, {8}});

  CHECK_THROWS_AS(parse_csv("1\nabc\n"), Error);
  CHECK_THROWS_AS(parse_csv("1/0\n"), Error);
  CHECK_THROWS_AS(parse_csv("# origin=x\n1\n"), Error);
}

TEST_CASE("pgm") {
  const auto ascii = parse_pgm(bytes_of("P2\n# a comment\n3 2\n9\n0 1 2\n3 4 9\n"));
  CHECK(ascii.rows == 2);
  CHECK(ascii.cols == 3);
  CHECK(ascii.pixels == std::vector<std::int64_t>{0, 1, 2, 3, 4, 9});

  auto wide = bytes_of("P5\n2 1\n65535\n");
  for (std::uint8_t b : {0x01, 0x02, 0xff, 0xfe}) wide.push_back(b);
  CHECK(parse_pgm(wide).pixels == std::vector<std::int64_t>{0x0102, 0xfffe});

  CHECK(parse_pgm(format_pgm(ascii)) == ascii);
  const Image big{1, 2, {300, 65535}};
  CHECK(parse_pgm(format_pgm(big)) == big);
  CHECK_THROWS_AS(format_pgm(Image{1, 1, {70000}}), Error);

  CHECK_THROWS_AS(parse_pgm(bytes_of("P2\n2 2\n9\n1 2 3\n")), Error);
  CHECK_THROWS_AS(parse_pgm(bytes_of("P2\n1 1\n9\n10\n")), Error);
  CHECK_THROWS_AS(parse_pgm(bytes_of("P2\n1 1\n70000\n1\n")), Error);
  CHECK_THROWS_AS(parse_pgm(bytes_of("P5\n2 2\n255\n\x01")), Error);
  CHECK_THROWS_AS(parse_pgm(bytes_of("P6\n1 1\n255\n\x01")), Error);
}

TEST_CASE("random pgm round trips") {
  Rng rng(77);
  for (int k = 0; k < 20; ++k) {
    const auto img = random_image(rng, static_cast<std::size_t>(uniform_int(rng, 1, 40)),
                                  static_cast<std::size_t>(uniform_int(rng, 1, 40)), coin(rng) ? 255 : 65535);
    REQUIRE(parse_pgm(format_pgm(img)) == img);
  }
}

TEST_CASE("files and sniffing") {
  CHECK(sniff(bytes_of("FSG1....")) == FileKind::Container);
  CHECK(sniff(bytes_of("P5 1 1 255 x")) == FileKind::Pgm);
  CHECK(sniff(bytes_of("1\n2\n")) == FileKind::Csv);

  const auto dir = std::filesystem::temp_directory_path() / "fsig_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "x.bin";
  const std::vector<std::uint8_t> data{0, 1, 2, 255};
  write_bytes(path, data);
  CHECK(read_bytes(path) == data);
  std::filesystem::remove_all(dir);
  try {
    read_bytes(dir / "missing");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
