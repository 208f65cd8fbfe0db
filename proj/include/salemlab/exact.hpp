#pragma once

// Exact number types used by the question-mark evaluators: arbitrary
// precision rationals, regular continued fractions and dyadic rationals.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace salemlab {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
class Fraction {
public:
  Fraction() = default;
  Fraction(long num) : value_(num) {}
  Fraction(long num, long den);
  Fraction(const mpz_class& num, const mpz_class& den);
  explicit Fraction(const mpq_class& q);

  /// Parses "p/q", an integer, or a finite decimal such as "0.125" or "1e-3".
  /// The decimal form is converted exactly (0.1 is 1/10, not a binary double).
  static Fraction parse(std::string_view text);

  /// The exact binary rational carried by a finite double.
  static Fraction from_double(double x);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Fraction reciprocal() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b) { return Fraction(mpq_class(a.value_ + b.value_)); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return Fraction(mpq_class(a.value_ - b.value_)); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) { return Fraction(mpq_class(a.value_ * b.value_)); }
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.value_ == b.value_; }
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Fraction& a, const Fraction& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return a.value_ >= b.value_; }

  /// Mediant (a+c)/(b+d) of a/b and c/d, computed on the reduced forms.
  friend Fraction mediant(const Fraction& a, const Fraction& b);

private:
  mpq_class value_;
};

/// Regular continued fraction [a0; a1, ..., ak] in canonical form: either no
/// partials (integer) or the last partial is at least 2.
struct ContinuedFraction {
  mpz_class a0;
  std::vector<mpz_class> partials;

  Fraction convergent() const;
  std::string to_string() const;
};

/// Exact dyadic rational mantissa / 2^exponent with an odd (or zero)
/// mantissa. Signed, so exact residuals can be represented.
class DyadicValue {
public:
  DyadicValue() = default;
  DyadicValue(const mpz_class& mantissa, std::uint64_t exponent);
  static DyadicValue from_integer(long v) { return DyadicValue(mpz_class(v), 0); }
  /// 2^k
  static DyadicValue power_of_two(std::int64_t k);

  const mpz_class& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  int sign() const { return sgn(mantissa_); }
  Fraction to_fraction() const;
  double to_double() const;
  /// Decimal rendering rounded to `digits` significant digits ("%g" style).
  std::string to_decimal(int digits) const;
  /// Exact "p/q" rendering.
  std::string to_string() const { return to_fraction().to_string(); }

  DyadicValue abs() const;
  DyadicValue pow(unsigned m) const;

  friend DyadicValue operator+(const DyadicValue& a, const DyadicValue& b);
  friend DyadicValue operator-(const DyadicValue& a, const DyadicValue& b);
  friend DyadicValue operator*(const DyadicValue& a, const DyadicValue& b);
  friend DyadicValue operator-(const DyadicValue& a) { return DyadicValue(mpz_class(-a.mantissa_), a.exponent_); }
  friend bool operator==(const DyadicValue& a, const DyadicValue& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend bool operator<(const DyadicValue& a, const DyadicValue& b) { return (a - b).sign() < 0; }
  friend bool operator>(const DyadicValue& a, const DyadicValue& b) { return b < a; }
  friend bool operator<=(const DyadicValue& a, const DyadicValue& b) { return !(b < a); }

private:
  void normalize();

  mpz_class mantissa_{0};
  std::uint64_t exponent_ = 0;
};

}  // namespace salemlab
