#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace apportion {

/// Exact rational number with a normalized int64 numerator/denominator pair.
///
/// Every intermediate product is carried in 128-bit arithmetic and reduced
/// before narrowing back, so ordinary apportionment magnitudes (votes up to
/// 1e9, houses up to 1e5) never overflow. A result that does not fit throws
/// std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const;
  std::int64_t ceil() const;
  double to_double() const;

  /// "num/den", or just "num" for integers.
  std::string to_string() const;
  /// Decimal approximation for human-readable output only.
  std::string to_decimal(int digits = 4) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);

/// Compares a/b with c/d (b, d > 0) without constructing either quotient.
std::strong_ordering compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c,
                                       std::int64_t d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace apportion
