#include "salemlab/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace salemlab {

Fraction::Fraction(long num, long den) {
  if (den == 0) throw std::domain_error("Fraction: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Fraction::Fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Fraction: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Fraction::Fraction(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Fraction Fraction::parse(std::string_view text) {
  auto fail = [&]() -> Fraction {
    throw std::invalid_argument("cannot parse number: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class p, q;
    if (p.set_str(s.substr(0, slash), 10) != 0 || q.set_str(s.substr(slash + 1), 10) != 0) return fail();
    if (q == 0) throw std::domain_error("Fraction: zero denominator");
    return Fraction(p, q);
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) return fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    ++i;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (i + used != s.size()) return fail();
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long scale = exponent - fraction_digits;
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  if (scale >= 0) return Fraction(mpz_class(mantissa * ten_power), mpz_class(1));
  return Fraction(mantissa, ten_power);
}

Fraction Fraction::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Fraction: non-finite input");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Fraction(q);
}

std::string Fraction::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Fraction Fraction::reciprocal() const {
  if (value_ == 0) throw std::domain_error("Fraction: reciprocal of zero");
  return Fraction(value_.get_den(), value_.get_num());
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.value_ == 0) throw std::domain_error("Fraction: division by zero");
  return Fraction(mpq_class(a.value_ / b.value_));
}

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(mpz_class(a.value_.get_num() + b.value_.get_num()),
                  mpz_class(a.value_.get_den() + b.value_.get_den()));
}

Fraction ContinuedFraction::convergent() const {
  // p_k / q_k by the standard three-term recurrence.
  mpz_class p_prev = 1, q_prev = 0;
  mpz_class p = a0, q = 1;
  for (const auto& a : partials) {
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return Fraction(p, q);
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[" + a0.get_str();
  for (std::size_t i = 0; i < partials.size(); ++i) {
    out += (i == 0 ? "; " : ", ");
    out += partials[i].get_str();
  }
  return out + "]";
}

DyadicValue::DyadicValue(const mpz_class& mantissa, std::uint64_t exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

DyadicValue DyadicValue::power_of_two(std::int64_t k) {
  if (k <= 0) return DyadicValue(mpz_class(1), static_cast<std::uint64_t>(-k));
  mpz_class m;
  mpz_setbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return DyadicValue(m, 0);
}

void DyadicValue::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  auto twos = static_cast<std::uint64_t>(mpz_scan1(mantissa_.get_mpz_t(), 0));
  auto shift = std::min(twos, exponent_);
  if (shift > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), shift);
    exponent_ -= shift;
  }
}

Fraction DyadicValue::to_fraction() const {
  mpz_class den;
  mpz_setbit(den.get_mpz_t(), exponent_);
  return Fraction(mantissa_, den);
}

double DyadicValue::to_double() const {
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(exp - static_cast<long>(exponent_)));
}

std::string DyadicValue::to_decimal(int digits) const {
  auto bits = std::max<std::size_t>(mpz_sizeinbase(mantissa_.get_mpz_t(), 2), 2);
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(bits));
  mpfr_set_z(x, mantissa_.get_mpz_t(), MPFR_RNDN);
  mpfr_div_2ui(x, x, exponent_, MPFR_RNDN);
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, x);
  std::string out(buffer);
  mpfr_free_str(buffer);
  mpfr_clear(x);
  return out;
}

DyadicValue DyadicValue::abs() const { return DyadicValue(mpz_class(::abs(mantissa_)), exponent_); }

DyadicValue DyadicValue::pow(unsigned m) const {
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), mantissa_.get_mpz_t(), m);
  return DyadicValue(power, exponent_ * m);
}

DyadicValue operator+(const DyadicValue& a, const DyadicValue& b) {
  auto e = std::max(a.exponent_, b.exponent_);
  mpz_class x = a.mantissa_, y = b.mantissa_;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), e - a.exponent_);
  mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), e - b.exponent_);
  return DyadicValue(mpz_class(x + y), e);
}

DyadicValue operator-(const DyadicValue& a, const DyadicValue& b) { return a + (-b); }

DyadicValue operator*(const DyadicValue& a, const DyadicValue& b) {
  return DyadicValue(mpz_class(a.mantissa_ * b.mantissa_), a.exponent_ + b.exponent_);
}

}  // namespace salemlab
