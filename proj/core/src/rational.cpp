#include "apportion/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace apportion {
namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_int64(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// floor division for den > 0
wide floor_div(wide num, wide den) {
  wide q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits_int64(num) || !fits_int64(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rational::floor() const {
  return static_cast<std::int64_t>(floor_div(num_, den_));
}

std::int64_t Rational::ceil() const {
  return static_cast<std::int64_t>(-floor_div(-static_cast<wide>(num_), den_));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int digits) const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << to_double();
  return os.str();
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return compare_fractions(a.num_, a.den_, b.num_, b.den_);
}

std::strong_ordering compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c,
                                       std::int64_t d) {
  wide lhs = static_cast<wide>(a) * d;
  wide rhs = static_cast<wide>(c) * b;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace apportion
