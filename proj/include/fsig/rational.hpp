#ifndef FSIG_RATIONAL_HPP
#define FSIG_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fsig {

/// Exact arbitrary-precision rational. All law checks compare these with ==.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q" (q != 0). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Converts an integral rational to int64; nullopt if not integral or out of range.
std::optional<std::int64_t> to_int64(const Rational& q);

/// Nonnegative rational or +infinity; the value domain of measures.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(const Rational& value);  // NOLINT(google-explicit-constructor)
  ExtRational(std::int64_t value);     // NOLINT(google-explicit-constructor)

  static ExtRational infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }
  /// Finite value; throws std::logic_error when infinite.
  const Rational& value() const;

  ExtRational& operator+=(const ExtRational& rhs);
  friend ExtRational operator+(ExtRational lhs, const ExtRational& rhs) { return lhs += rhs; }
  /// Scales by a nonnegative finite factor with the measure-theory convention 0 * inf = 0.
  ExtRational scaled(const Rational& factor) const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<(const ExtRational& a, const ExtRational& b);
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }

  std::string str() const;
  double to_double() const;

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& x);

}  // namespace fsig

#endif  // FSIG_RATIONAL_HPP
