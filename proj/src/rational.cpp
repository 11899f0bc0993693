#include "fsig/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace fsig {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true)) return std::nullopt;
  if (slash != std::string_view::npos && !valid_int(den, false)) return std::nullopt;

  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n, d(1);
  if (n.set_str(num_str, 10) != 0) return std::nullopt;
  if (slash != std::string_view::npos && d.set_str(std::string(den), 10) != 0) return std::nullopt;
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<std::int64_t> to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(q.get_num().get_si());
}

ExtRational::ExtRational(const Rational& value) : value_(value) {
  if (sgn(value_) < 0) throw std::invalid_argument("ExtRational must be nonnegative");
}

ExtRational::ExtRational(std::int64_t value) : ExtRational(make_rational(value)) {}

ExtRational ExtRational::infinity() {
  ExtRational x;
  x.infinite_ = true;
  return x;
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("value() of infinite ExtRational");
  return value_;
}

ExtRational& ExtRational::operator+=(const ExtRational& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

ExtRational ExtRational::scaled(const Rational& factor) const {
  if (sgn(factor) < 0) throw std::invalid_argument("negative scale factor");
  if (sgn(factor) == 0) return ExtRational{};
  if (infinite_) return *this;
  return ExtRational(Rational(value_ * factor));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

std::string ExtRational::str() const { return infinite_ ? std::string("inf") : value_.get_str(); }

double ExtRational::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.get_d();
}

std::ostream& operator<<(std::ostream& os, const ExtRational& x) { return os << x.str(); }

}  // namespace fsig
