#include "salemlab/minkowski.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace salemlab {

namespace {

// Euclid on p/q, stopping early once the partial sums exceed `sum_cap`.
ContinuedFraction expand(const Fraction& x, const mpz_class& sum_cap) {
  if (x.sign() < 0) throw std::domain_error("continued fraction of a negative number");
  ContinuedFraction cf;
  mpz_class p = x.numerator(), q = x.denominator();
  mpz_fdiv_qr(cf.a0.get_mpz_t(), p.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class running = 0;
  while (p != 0 && running <= sum_cap) {
    // x_k = q / p
    mpz_class a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    cf.partials.push_back(a);
    running += a;
    q = p;
    p = r;
  }
  return cf;
}

// 2 * sum_i (-1)^(i+1) 2^-(a_1 + ... + a_i), keeping terms with exponent <= cap.
DyadicValue partial_series(const std::vector<mpz_class>& partials, const mpz_class& cap) {
  std::vector<std::uint64_t> sums;
  mpz_class running = 0;
  for (const auto& a : partials) {
    running += a;
    if (running > cap) break;
    sums.push_back(running.get_ui());
  }
  if (sums.empty()) return {};
  std::uint64_t top = sums.back();
  mpz_class total = 0, bit;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    bit = 0;
    mpz_setbit(bit.get_mpz_t(), top - sums[i]);
    if (i % 2 == 0)
      total += bit;
    else
      total -= bit;
  }
  // total / 2^(top - 1)
  if (top == 0) return DyadicValue(mpz_class(total * 2), 0);
  return DyadicValue(total, top - 1);
}

void require_unit_interval(const Fraction& x) {
  if (x.sign() < 0 || x > Fraction(1)) throw std::domain_error("question mark: argument outside [0, 1]");
}

}  // namespace

ContinuedFraction continued_fraction_of(const Fraction& x) {
  mpz_class unlimited;
  // the sum of partials never exceeds the denominator
  unlimited = x.denominator() + 1;
  auto cf = expand(x, unlimited);
  // Euclid on a reduced p/q ends with a partial >= 2 unless the value is an
  // integer-plus-unit fraction, where the last partial 1 folds into a0 or
  // into the previous partial.
  if (!cf.partials.empty() && cf.partials.back() == 1) {
    cf.partials.pop_back();
    if (cf.partials.empty())
      cf.a0 += 1;
    else
      cf.partials.back() += 1;
  }
  return cf;
}

DyadicValue question_mark_exact(const Fraction& x) {
  require_unit_interval(x);
  if (x == Fraction(1)) return DyadicValue::from_integer(1);
  auto cf = continued_fraction_of(x);
  return partial_series(cf.partials, x.denominator() + 1);
}

DyadicValue question_mark_truncated(const Fraction& x, std::uint64_t exponent_cap) {
  require_unit_interval(x);
  if (x == Fraction(1)) return DyadicValue::from_integer(1);
  mpz_class cap(static_cast<unsigned long>(exponent_cap));
  auto cf = expand(x, cap);
  return partial_series(cf.partials, cap);
}

DyadicValue question_mark_extended(const Fraction& x) {
  if (x.sign() < 0) throw std::domain_error("question mark: negative argument");
  if (x <= Fraction(1)) return question_mark_exact(x);
  return DyadicValue::from_integer(2) - question_mark_exact(x.reciprocal());
}

double question_mark_float(double x, unsigned precision_bits) {
  if (!std::isfinite(x)) throw std::domain_error("question mark: non-finite argument");
  if (x < 0) throw std::domain_error("question mark: negative argument");
  std::uint64_t cap = precision_bits + 1;
  auto exact = Fraction::from_double(x);
  if (exact <= Fraction(1)) return question_mark_truncated(exact, cap).to_double();
  return (DyadicValue::from_integer(2) - question_mark_truncated(exact.reciprocal(), cap)).to_double();
}

InverseResult question_mark_inverse(const DyadicValue& y, unsigned precision_bits) {
  if (y.sign() < 0 || DyadicValue::from_integer(1) < y)
    throw std::domain_error("question mark inverse: argument outside [0, 1]");
  if (y.is_zero()) return {Fraction(0), true, 0};
  if (y == DyadicValue::from_integer(1)) return {Fraction(1), true, 0};

  mpz_class ln = 0, ld = 1, rn = 1, rd = 1;
  // q(left) = j / 2^depth
  mpz_class j = 0;
  unsigned depth = 0;
  const mpz_class& ym = y.mantissa();
  const std::uint64_t ye = y.exponent();
  for (;;) {
    mpz_class mn = ln + rn, md = ld + rd;
    // compare y = ym / 2^ye against (2j + 1) / 2^(depth + 1)
    mpz_class lhs = ym, rhs = 2 * j + 1;
    std::uint64_t target = depth + 1;
    if (target > ye)
      mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), target - ye);
    else
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), ye - target);
    int c = cmp(lhs, rhs);
    if (c == 0) return {Fraction(mn, md), true, depth + 1};
    if (depth + 1 >= precision_bits) return {Fraction(mn, md), false, depth + 1};
    if (c < 0) {
      rn = mn;
      rd = md;
      j = 2 * j;
    } else {
      ln = mn;
      ld = md;
      j = 2 * j + 1;
    }
    ++depth;
  }
}

double question_mark_inverse(double y, unsigned precision_bits) {
  if (!std::isfinite(y)) throw std::domain_error("question mark inverse: non-finite argument");
  auto f = Fraction::from_double(y);
  mpz_class den = f.denominator();
  auto exponent = static_cast<std::uint64_t>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
  return question_mark_inverse(DyadicValue(f.numerator(), exponent), precision_bits).x.to_double();
}

FunctionalEquationReport verify_functional_equations(std::size_t sample_count, std::uint64_t seed,
                                                     std::uint64_t max_denominator) {
  if (sample_count < 1) throw std::invalid_argument("verify_functional_equations: sample_count < 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> den_dist(1, max_denominator);
  FunctionalEquationReport report;
  const auto one = DyadicValue::from_integer(1);
  const auto two = DyadicValue::from_integer(2);
  for (std::size_t s = 0; s < sample_count; ++s) {
    auto d = den_dist(rng);
    std::uniform_int_distribution<std::uint64_t> num_dist(0, d);
    auto n = num_dist(rng);
    Fraction x(mpz_class(static_cast<unsigned long>(n)), mpz_class(static_cast<unsigned long>(d)));
    auto qx = question_mark_exact(x);

    auto reflection = (qx + question_mark_exact(Fraction(1) - x) - one).abs();
    auto halving = (qx - two * question_mark_exact(x / (x + Fraction(1)))).abs();
    report.max_reflection = std::max(report.max_reflection, reflection);
    report.max_halving = std::max(report.max_halving, halving);
    if (x.sign() > 0) {
      auto reciprocal = (qx + question_mark_extended(x.reciprocal()) - two).abs();
      report.max_reciprocal = std::max(report.max_reciprocal, reciprocal);
    }
    ++report.samples;
  }
  return report;
}

double local_holder_exponent(double x, double y) {
  if (x == y) throw std::invalid_argument("local_holder_exponent: pair must be distinct");
  if (x < 0 || y < 0 || x > 1 || y > 1) throw std::domain_error("local_holder_exponent: points outside [0, 1]");
  constexpr std::uint64_t cap = 2000;
  auto qx = question_mark_truncated(Fraction::from_double(x), cap);
  auto qy = question_mark_truncated(Fraction::from_double(y), cap);
  double dq = (qx - qy).abs().to_double();
  double dx = std::fabs(x - y);
  if (dq == 0) return std::numeric_limits<double>::infinity();
  return std::log(dq) / std::log(dx);
}

HolderProbeResult holder_exponent_probe(std::size_t pair_count, std::uint64_t seed, double min_separation,
                                        double max_separation) {
  if (pair_count < 2) throw std::invalid_argument("holder_exponent_probe: pair_count < 2");
  if (!(min_separation > 0) || !(max_separation >= min_separation) || max_separation >= 0.5)
    throw std::invalid_argument("holder_exponent_probe: bad separation range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> point(0.0, 1.0);
  std::uniform_real_distribution<double> log_sep(std::log(min_separation), std::log(max_separation));
  HolderProbeResult result;
  result.min_exponent = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pair_count; ++i) {
    double x = point(rng);
    double h = std::exp(log_sep(rng));
    double y = x + h <= 1.0 ? x + h : x - h;
    if (x == y) continue;
    double e = local_holder_exponent(x, y);
    if (e < result.min_exponent) {
      result.min_exponent = e;
      result.argmin_x = x;
      result.argmin_separation = std::fabs(y - x);
    }
    ++result.pairs;
  }
  return result;
}

}  // namespace salemlab
