#include "salemlab/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

namespace salemlab {

namespace {

constexpr double kPi = std::numbers::pi;

// RAII for mpfr_t.
class Big {
public:
  explicit Big(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Big() { mpfr_clear(v_); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

private:
  mpfr_t v_;
};

bool is_nonpositive_integer(double b) { return b <= 0 && std::floor(b) == b; }

}  // namespace

double gamma_function(double x) {
  static constexpr std::array<double, 9> p = {0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
                                              771.32342877765313,      -176.61502916214059,  12.507343278686905,
                                              -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (is_nonpositive_integer(x)) throw std::domain_error("gamma_function: pole");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_function(1.0 - x));
  x -= 1.0;
  double a = p[0];
  double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += p[i] / (x + i);
  return std::sqrt(2 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double bessel_j0_series(double z, unsigned precision_bits) {
  if (z < 0) throw std::domain_error("bessel_j0: negative argument");
  // long double keeps the e^z / (2 pi z) cancellation below 1e-13 up to z = 12
  if (precision_bits <= 64 && z <= 12) {
    long double q = -static_cast<long double>(z) * z / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 10000; ++k) {
      term *= q / (static_cast<long double>(k) * k);
      sum += term;
      if (k > z && std::fabs(term) < 1e-22L * std::max(1.0L, std::fabs(sum))) break;
    }
    return static_cast<double>(sum);
  }
  // the largest term is about e^z / (2 pi z)
  auto bits = static_cast<mpfr_prec_t>(std::max(precision_bits, 53u) + 1.45 * z + 32);
  Big q(bits), term(bits), sum(bits);
  mpfr_set_d(q, z, MPFR_RNDN);
  mpfr_sqr(q, q, MPFR_RNDN);
  mpfr_div_si(q, q, -4, MPFR_RNDN);
  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  for (long k = 1; k < 100000; ++k) {
    mpfr_mul(term, term, q, MPFR_RNDN);
    mpfr_div_si(term, term, k * k, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (k > z && !mpfr_zero_p(term.get()) &&
        mpfr_get_exp(term.get()) < mpfr_get_exp(sum.get()) - static_cast<mpfr_exp_t>(precision_bits) - 8)
      break;
  }
  return mpfr_get_d(sum, MPFR_RNDN);
}

double bessel_j0_asymptotic(double z) {
  if (!(z > 0)) throw std::domain_error("bessel_j0_asymptotic: argument must be positive");
  // a_k = (-1)^k 1^2 3^2 ... (2k-1)^2 / (k! 8^k); P takes even k, Q odd k, both with (-1)^floor(k/2)
  double p = 1.0, q = 0.0;
  double term = 1.0;  // a_k / z^k
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    double next = term * (-(odd * odd) / (8.0 * k * z));
    if (std::fabs(next) >= previous || std::fabs(next) < 1e-18) break;
    previous = std::fabs(next);
    term = next;
    double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
  }
  double chi = z - kPi / 4;
  return std::sqrt(2.0 / (kPi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j0_two_term(double z) {
  double chi = z - kPi / 4;
  return std::sqrt(2.0 / (kPi * z)) * (std::cos(chi) + std::sin(chi) / (8.0 * z));
}

double bessel_j0(double z, unsigned precision_bits) {
  if (!(z >= 0)) throw std::domain_error("bessel_j0: argument must be non-negative");
  if (z <= kBesselSwitch) return bessel_j0_series(z, precision_bits);
  return bessel_j0_asymptotic(z);
}

FresnelValue fresnel_limits() {
  double v = 0.5 * std::sqrt(kPi / 2);
  return {v, v, 0.0};
}

std::complex<double> fresnel_tail(double T) {
  if (!(T >= 6)) throw std::domain_error("fresnel_tail: asymptotic series needs T >= 6");
  // int_X^inf e^(iu) u^-s du = i e^(iX) X^-s sum_k (-i)^k (s)_k X^-k, s = 1/2, X = T^2
  double X = T * T;
  std::complex<double> sum = 0, power = 1;
  double poch = 1, previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 400; ++k) {
    double magnitude = poch / std::pow(X, k);
    if (magnitude >= previous || magnitude < 1e-20) break;
    previous = magnitude;
    sum += power * magnitude;
    power *= std::complex<double>(0, -1);
    poch *= 0.5 + k;
  }
  std::complex<double> phase(std::cos(X), std::sin(X));
  return 0.5 * std::complex<double>(0, 1) * phase / T * sum;
}

FresnelValue fresnel_truncated(double T) {
  if (!(T >= 0)) throw std::domain_error("fresnel_truncated: T must be non-negative");
  if (T == 0) return {0.0, 0.0, std::numeric_limits<double>::infinity()};
  double bound = 1.0 / (2.0 * T);
  if (T >= 6) {
    auto lim = fresnel_limits();
    auto tail = fresnel_tail(T);
    return {lim.cos_part - tail.real(), lim.sin_part - tail.imag(), bound};
  }
  auto v = fresnel_series(T);
  v.tail_bound = bound;
  return v;
}

FresnelValue fresnel_series(double T) {
  if (!(T >= 0)) throw std::domain_error("fresnel_series: T must be non-negative");
  auto bits = static_cast<mpfr_prec_t>(96 + 1.45 * T * T);
  Big t4(bits), power(bits), c(bits), s(bits), term(bits), fact(bits);
  mpfr_set_d(t4, T, MPFR_RNDN);
  mpfr_pow_ui(t4, t4, 4, MPFR_RNDN);
  mpfr_set_d(power, T, MPFR_RNDN);  // T^(4k+1)
  mpfr_set_ui(fact, 1, MPFR_RNDN);  // (2k)!
  mpfr_set_ui(c, 0, MPFR_RNDN);
  mpfr_set_ui(s, 0, MPFR_RNDN);
  for (long k = 0; k < 10000; ++k) {
    // cos part: (-1)^k T^(4k+1) / ((2k)! (4k+1))
    mpfr_div(term, power, fact, MPFR_RNDN);
    mpfr_div_si(term, term, (k % 2 ? -1 : 1) * (4 * k + 1), MPFR_RNDN);
    mpfr_add(c, c, term, MPFR_RNDN);
    // sin part: (-1)^k T^(4k+3) / ((2k+1)! (4k+3))
    mpfr_div_ui(term, power, 2 * k + 1, MPFR_RNDN);
    mpfr_div(term, term, fact, MPFR_RNDN);
    mpfr_mul_d(term, term, T * T, MPFR_RNDN);
    mpfr_div_si(term, term, (k % 2 ? -1 : 1) * (4 * k + 3), MPFR_RNDN);
    mpfr_add(s, s, term, MPFR_RNDN);
    bool small = !mpfr_zero_p(term.get()) && mpfr_get_exp(term.get()) < -80;
    if (k > T * T && small) break;
    mpfr_mul(power, power, t4, MPFR_RNDN);
    mpfr_mul_ui(fact, fact, static_cast<unsigned long>((2 * k + 1) * (2 * k + 2)), MPFR_RNDN);
  }
  return {mpfr_get_d(c, MPFR_RNDN), mpfr_get_d(s, MPFR_RNDN), T > 0 ? 1.0 / (2.0 * T) : std::numeric_limits<double>::infinity()};
}

void TwoFThreeParams::validate() const {
  for (double b : {beta1, beta2, beta3})
    if (is_nonpositive_integer(b)) throw std::domain_error("hyp2f3: beta is zero or a negative integer");
  if (!std::isfinite(argument)) throw std::domain_error("hyp2f3: non-finite argument");
}

AsymptoticGamma AsymptoticGamma::of(const TwoFThreeParams& p) {
  return {0.25 + 0.5 * ((p.alpha1 + p.alpha2) - (p.beta1 + p.beta2 + p.beta3))};
}

namespace {

struct SeriesSum {
  double value;
  double max_term;
  long terms;
};

template <class R>
SeriesSum series(const TwoFThreeParams& p) {
  R z = p.argument;
  R term = 1, sum = 1, max_term = 1;
  const R eps = std::numeric_limits<R>::epsilon();
  long k = 0;
  for (; k < 200000; ++k) {
    R ratio = (p.alpha1 + k) * (p.alpha2 + k) / ((p.beta1 + k) * (p.beta2 + k) * (p.beta3 + k) * (k + 1.0L));
    term *= ratio * z;
    sum += term;
    max_term = std::max<R>(max_term, std::fabs(term));
    if (term == 0) break;
    if (std::fabs(ratio * z) < 0.5 && std::fabs(term) < eps * eps * max_term) break;
  }
  return {static_cast<double>(sum), static_cast<double>(max_term), k + 1};
}

// Returns false when the requested bits could not defeat the cancellation.
bool series_mpfr(const TwoFThreeParams& p, mpfr_prec_t bits, unsigned target_bits, SeriesSum& out) {
  Big z(bits), term(bits), sum(bits), num(bits), den(bits), max_term(bits), tmp(bits);
  mpfr_set_d(z, p.argument, MPFR_RNDN);
  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  mpfr_set_ui(max_term, 1, MPFR_RNDN);
  long k = 0;
  for (; k < 1000000; ++k) {
    double kd = static_cast<double>(k);
    mpfr_set_d(num, p.alpha1, MPFR_RNDN);
    mpfr_add_d(num, num, kd, MPFR_RNDN);
    mpfr_set_d(tmp, p.alpha2, MPFR_RNDN);
    mpfr_add_d(tmp, tmp, kd, MPFR_RNDN);
    mpfr_mul(num, num, tmp, MPFR_RNDN);
    mpfr_set_d(den, p.beta1, MPFR_RNDN);
    mpfr_add_d(den, den, kd, MPFR_RNDN);
    for (double b : {p.beta2, p.beta3}) {
      mpfr_set_d(tmp, b, MPFR_RNDN);
      mpfr_add_d(tmp, tmp, kd, MPFR_RNDN);
      mpfr_mul(den, den, tmp, MPFR_RNDN);
    }
    mpfr_mul_ui(den, den, static_cast<unsigned long>(k + 1), MPFR_RNDN);
    mpfr_mul(term, term, num, MPFR_RNDN);
    mpfr_div(term, term, den, MPFR_RNDN);
    mpfr_mul(term, term, z, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (mpfr_cmpabs(term, max_term) > 0) mpfr_abs(max_term, term, MPFR_RNDN);
    if (mpfr_zero_p(term.get())) break;
    double ratio = std::fabs(p.argument) * (std::fabs(p.alpha1) + kd) * (std::fabs(p.alpha2) + kd) /
                   ((kd + 1) * (kd + 1) * (kd + 1) * (kd + 1));
    if (ratio < 0.25 && mpfr_get_exp(term.get()) < mpfr_get_exp(max_term.get()) - bits - 4) break;
  }
  out.value = mpfr_get_d(sum, MPFR_RNDN);
  out.terms = k + 1;
  out.max_term = mpfr_get_d(max_term, MPFR_RNDN);
  if (mpfr_zero_p(sum.get())) return false;
  long lost = mpfr_get_exp(max_term.get()) - mpfr_get_exp(sum.get());
  return lost + static_cast<long>(target_bits) + 16 <= static_cast<long>(bits);
}

// The largest term is about exp(2 sqrt(|z|)); this many bits cancel.
double cancellation_bits(const TwoFThreeParams& p) { return 2.0 * std::sqrt(std::fabs(p.argument)) * 1.4427; }

}  // namespace

double hyp2f3_leading(const TwoFThreeParams& p) {
  double x = -p.argument;
  if (!(x > 0)) throw std::domain_error("hyp2f3_leading: needs a negative argument");
  double g = AsymptoticGamma::of(p).gamma;
  double prefactor = gamma_function(p.beta1) * gamma_function(p.beta2) * gamma_function(p.beta3) /
                     (gamma_function(p.alpha1) * gamma_function(p.alpha2));
  return prefactor * std::pow(x, g) / std::sqrt(kPi) * std::cos(2 * std::sqrt(x) + kPi * g);
}

HypergeometricValue hyp2f3(const TwoFThreeParams& p, unsigned precision_bits) {
  p.validate();
  precision_bits = std::clamp(precision_bits, 24u, 1024u);
  if (p.argument == 0) return {1.0, 0.0, HypergeometricMethod::series_double, 53};
  double target = std::ldexp(1.0, -static_cast<int>(precision_bits));

  // double, then long double: accept when max_term / |sum| <= 10^(digits/2)
  if (precision_bits <= 53) {
    auto s = series<double>(p);
    double digits = std::numeric_limits<double>::digits10 + 1;
    if (s.value != 0 && s.max_term <= std::pow(10.0, digits / 2) * std::fabs(s.value)) {
      double err = 8 * std::numeric_limits<double>::epsilon() * s.max_term * std::sqrt(static_cast<double>(s.terms));
      if (err <= std::max(target, 1e-15) * std::fabs(s.value) * 64)
        return {s.value, err, HypergeometricMethod::series_double, 53};
    }
    auto e = series<long double>(p);
    double edigits = std::numeric_limits<long double>::digits10 + 1;
    if (e.value != 0 && e.max_term <= std::pow(10.0, edigits / 2) * std::fabs(e.value)) {
      double err = 8 * static_cast<double>(std::numeric_limits<long double>::epsilon()) * e.max_term *
                   std::sqrt(static_cast<double>(e.terms));
      if (err <= std::max(target, 1e-15) * std::fabs(e.value) * 64)
        return {e.value, err, HypergeometricMethod::series_extended, std::numeric_limits<long double>::digits};
    }
  }
  auto bits = static_cast<mpfr_prec_t>(precision_bits + cancellation_bits(p) + 48);
  constexpr mpfr_prec_t kMaxBits = 4096;
  while (bits <= kMaxBits) {
    SeriesSum s{};
    if (series_mpfr(p, bits, precision_bits, s)) {
      double err = std::ldexp(std::fabs(s.value), -static_cast<int>(precision_bits));
      return {s.value, err, HypergeometricMethod::series_mpfr, static_cast<unsigned>(bits)};
    }
    bits *= 2;
  }
  if (p.argument > 0) throw std::domain_error("hyp2f3: positive argument beyond the supported range");
  double x = -p.argument;
  double g = AsymptoticGamma::of(p).gamma;
  double prefactor = std::fabs(gamma_function(p.beta1) * gamma_function(p.beta2) * gamma_function(p.beta3) /
                               (gamma_function(p.alpha1) * gamma_function(p.alpha2)));
  double err = prefactor * (std::pow(x, g - 0.5) + std::pow(x, -p.alpha1) + std::pow(x, -p.alpha2));
  return {hyp2f3_leading(p), err, HypergeometricMethod::asymptotic, 53};
}

namespace {

void require_mu(double a, double b, double mu) {
  if (!(mu > 0 && mu < 2)) throw std::domain_error("oscillatory integral: mu must lie in (0, 2)");
  if (!(a > 0) || !(b > 0)) throw std::domain_error("oscillatory integral: a and b must be positive");
}

double f23(double a1, double a2, double b1, double b2, double b3, double z) {
  return hyp2f3({a1, a2, b1, b2, b3, z}).value;
}

}  // namespace

double oscillatory_sin_integral(double a, double b, double mu, Kernel kernel) {
  require_mu(a, b, mu);
  double z = -std::pow(b * b / (8 * a), 2);
  double first = b / (2 * std::pow(a, (mu + 1) / 2)) * gamma_function((mu + 1) / 2) *
                 f23((mu + 3) / 4, (mu + 1) / 4, 0.5, 0.75, 1.25, z);
  double second = b * b * b / (12 * std::pow(a, (mu + 3) / 2)) * gamma_function((mu + 3) / 2) *
                  f23((mu + 5) / 4, (mu + 3) / 4, 1.5, 1.25, 1.75, z);
  double lo = (1 - mu) * kPi / 4, hi = (1 + mu) * kPi / 4;
  if (kernel == Kernel::sin) return first * std::cos(lo) - second * std::cos(hi);
  return first * std::sin(lo) + second * std::sin(hi);
}

double oscillatory_cos_integral(double a, double b, double mu, Kernel kernel) {
  require_mu(a, b, mu);
  double z = -std::pow(b * b / (8 * a), 2);
  double first = 1 / (2 * std::pow(a, mu / 2)) * gamma_function(mu / 2) *
                 f23((mu + 2) / 4, mu / 4, 0.5, 0.25, 0.75, z);
  double second = b * b / (4 * std::pow(a, mu / 2 + 1)) * gamma_function(mu / 2 + 1) *
                  f23(mu / 4 + 1, (mu + 2) / 4, 1.5, 0.75, 1.25, z);
  double angle = mu * kPi / 4;
  if (kernel == Kernel::sin) return first * std::sin(angle) - second * std::cos(angle);
  return first * std::cos(angle) + second * std::sin(angle);
}

void richardson_weights(const double* eps, int count, double* weights) {
  for (int i = 0; i < count; ++i) {
    double w = 1;
    for (int j = 0; j < count; ++j)
      if (j != i) w *= -eps[j] / (eps[i] - eps[j]);
    weights[i] = w;
  }
}

void gauss_legendre(int n, double* nodes, double* weights) {
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2 / ((1 - x * x) * dp * dp);
  }
}

namespace {

// Tanh-sinh rule on [0, L] for a complex integrand; levels refine until stable.
template <class F>
std::complex<double> tanh_sinh(F&& f, double L) {
  const double h0 = 1.0 / 8;
  auto point = [&](double t, std::complex<double>& acc, double h) {
    double s = kPi / 2 * std::sinh(t);
    double c = std::cosh(s);
    double x01 = 1.0 / (std::exp(2 * s) + 1.0);  // (1 - tanh s) / 2, near 0 for large s
    double w = kPi / 2 * std::cosh(t) / (c * c) * h * L / 2;
    double left = L * x01, right = L * (1.0 - x01);
    if (left > 0) acc += w * f(left);
    if (right < L) acc += w * f(right);
  };
  std::complex<double> total = 0;
  double tmax = 3.2;
  {
    double h = h0;
    std::complex<double> acc = 0;
    acc += kPi / 2 * h * L / 2 * f(L / 2);
    for (double t = h; t <= tmax; t += h) point(t, acc, h);
    total = acc;
  }
  for (int level = 1; level < 12; ++level) {
    double h = h0 / (1 << level);
    std::complex<double> acc = 0;
    for (double t = h; t <= tmax; t += 2 * h) point(t, acc, h);
    std::complex<double> next = total / 2.0 + acc;
    bool done = std::abs(next - total) < 1e-15 * std::max(1.0, std::abs(next)) && level > 3;
    total = next;
    if (done) break;
  }
  return total;
}

// J(tau) = int_0^inf x^(mu-1) exp(i a x^2 + i tau b x - eps x) dx on the ray x = r e^(i pi/4).
std::complex<double> rotated(double a, double b, double mu, double tau, double eps) {
  const std::complex<double> omega(std::sqrt(0.5), std::sqrt(0.5));
  std::complex<double> lin = std::complex<double>(-eps, tau * b) * omega;
  double grow = std::max(0.0, lin.real());
  double r_max = (grow + std::sqrt(grow * grow + 4 * a * 60)) / (2 * a);
  // r = v^(1/mu) absorbs r^(mu-1) dr = dv / mu
  double v_max = std::pow(r_max, mu);
  auto g = [&](double v) {
    double r = std::pow(v, 1.0 / mu);
    return std::exp(std::complex<double>(-a * r * r, 0) + lin * r) / mu;
  };
  std::complex<double> phase = std::pow(omega, mu);
  return phase * tanh_sinh(g, v_max);
}

}  // namespace

OscillatoryOracle oscillatory_oracle(double a, double b, double mu, Kernel kernel, bool outer_sin) {
  require_mu(a, b, mu);
  const double eps[3] = {1e-2, 1e-3, 1e-4};
  double w[3];
  richardson_weights(eps, 3, w);
  double values[3];
  for (int i = 0; i < 3; ++i) {
    auto jp = rotated(a, b, mu, 1.0, eps[i]);
    auto jm = rotated(a, b, mu, -1.0, eps[i]);
    double v;
    if (kernel == Kernel::sin)
      v = outer_sin ? -0.5 * (jp - jm).real() : 0.5 * (jp + jm).imag();
    else
      v = outer_sin ? 0.5 * (jp - jm).imag() : 0.5 * (jp + jm).real();
    values[i] = v;
  }
  double extrapolated = w[0] * values[0] + w[1] * values[1] + w[2] * values[2];
  return {extrapolated, std::fabs(extrapolated - values[2])};
}

KernelIdentityValue hankel_kernel_identity(double x, double t, double T, double epsilon) {
  if (!(x > 0) || !(t > 0) || !(T > 0)) throw std::domain_error("hankel_kernel_identity: x, t, T must be positive");
  if (!(epsilon > 0)) throw std::domain_error("hankel_kernel_identity: epsilon must be positive");
  constexpr int kPoints = 16;
  double nodes[kPoints], weights[kPoints];
  gauss_legendre(kPoints, nodes, weights);
  const double eps[3] = {100 * epsilon, 10 * epsilon, epsilon};
  double rw[3];
  richardson_weights(eps, 3, rw);

  // panels no wider than about one radian of either oscillation
  std::vector<double> ys, ws, js;
  for (double y0 = 0; y0 < T;) {
    double local = t + std::sqrt(x / std::max(y0, 1e-6));
    double h = std::min({2.0, 1.0 / local, T - y0});
    for (int i = 0; i < kPoints; ++i) {
      double y = y0 + 0.5 * h * (nodes[i] + 1);
      ys.push_back(y);
      ws.push_back(0.5 * h * weights[i]);
      js.push_back(bessel_j0(2 * std::sqrt(x * y)));
    }
    y0 += h;
  }
  auto g = [&](double y) { return bessel_j0(2 * std::sqrt(x * y)); };
  double step = 1e-3 * T;
  double gT = g(T);
  double dgT = (g(T + step) - g(T - step)) / (2 * step);

  std::complex<double> value = 0;
  for (int k = 0; k < 3; ++k) {
    std::complex<double> p(eps[k], t);
    std::complex<double> sum = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) sum += ws[i] * js[i] * std::exp(-p * ys[i]);
    // int_T^inf g e^(-py) dy = e^(-pT) [g(T)/p + g'(T)/p^2 + ...]
    sum += std::exp(-p * T) * (gT / p + dgT / (p * p));
    value += rw[k] * sum;
  }
  std::complex<double> target = std::exp(std::complex<double>(0, x / t)) / std::complex<double>(0, t);
  return {value, target, std::abs(value - target)};
}

}  // namespace salemlab
