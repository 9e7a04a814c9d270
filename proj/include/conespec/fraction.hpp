#ifndef CONESPEC_FRACTION_HPP
#define CONESPEC_FRACTION_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "conespec/error.hpp"

namespace conespec {

using BigInt = boost::multiprecision::cpp_int;

// Narrowing with a range check.
inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InputError("E_OVERFLOW", "integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// Floor division for q > 0, exact for every sign of p.
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
  BigInt quot = p / q;  // truncates toward zero
  if ((p % q) != 0 && p < 0) --quot;
  return quot;
}

// ceil(p/q) for q > 0, computed as floor((p + q - 1) / q).
inline BigInt ceil_div(const BigInt& p, const BigInt& q) { return floor_div(p + q - 1, q); }

/// Parses a string of decimal digits; leading zeros are not read as an octal prefix.
inline BigInt parse_decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

inline std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t quot = p / q;
  if (p % q != 0 && p < 0) --quot;
  return quot;
}

inline std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return floor_div(p + q - 1, q); }

// Exact rational number kept in lowest terms with a positive denominator.
class Fraction {
public:
  Fraction() : num_(0), den_(1) {}
  Fraction(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Fraction(std::int64_t n, std::int64_t d) : Fraction(BigInt(n), BigInt(d)) {}

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }

  Fraction operator-() const { return Fraction(-num_, den_, Normalized{}); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw InputError("E_DIV_ZERO", "division of a fraction by zero");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
  }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p", "-p", "p/q" with q != 0.
  static Fraction parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw InputError("E_BAD_FRACTION", "malformed fraction '" + std::string(text) + "'");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw InputError("E_BAD_FRACTION", "malformed fraction '" + std::string(text) + "'");
      for (std::size_t k = start; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
          throw InputError("E_BAD_FRACTION", "malformed fraction '" + std::string(text) + "'");
      BigInt v = parse_decimal(s.substr(start));
      return s[0] == '-' ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Fraction(parse_int(text));
    BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw InputError("E_BAD_FRACTION", "zero denominator in '" + std::string(text) + "'");
    return Fraction(parse_int(text.substr(0, slash)), std::move(d));
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

private:
  struct Normalized {};
  Fraction(BigInt n, BigInt d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw InputError("E_DIV_ZERO", "fraction with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace conespec

#endif  // CONESPEC_FRACTION_HPP
