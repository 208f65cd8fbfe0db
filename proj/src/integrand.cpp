#include "salemlab/integrand.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace salemlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDerivatives = 24;

double falling(double lambda, int j) {
  double r = 1;
  for (int i = 0; i < j; ++i) r *= lambda - i;
  return r;
}

struct BinomialTable {
  std::array<std::array<double, kMaxDerivatives>, kMaxDerivatives> c{};
  BinomialTable() {
    for (int n = 0; n < kMaxDerivatives; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0.0);
    }
  }
};

const BinomialTable kBinomials;

double binom(int n, int k) { return kBinomials.c[n][k]; }

// 0 * inf = 0 here: a derivative that vanishes identically kills the term.
double safe_mul(double a, double b) {
  if (a == 0 || b == 0) return 0;
  return a * b;
}

void leibniz(std::span<double> acc, std::span<const double> g) {
  std::array<double, kMaxDerivatives> out{};
  std::size_t n = acc.size();
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t k = 0; k <= j; ++k) s += binom(static_cast<int>(j), static_cast<int>(k)) * acc[k] * g[j - k];
    out[j] = s;
  }
  std::copy_n(out.begin(), n, acc.begin());
}

// cos and sin of omega t + phase; phases that are multiples of pi/2 rotate
// exactly so that sin(0 t) is 0.
void cos_sin(double omega_t, double phase, double& c, double& s) {
  double quarter = phase / (std::numbers::pi / 2);
  double k = std::nearbyint(quarter);
  if (phase == k * (std::numbers::pi / 2) && std::fabs(k) < 8) {
    double c0 = std::cos(omega_t), s0 = std::sin(omega_t);
    switch (((static_cast<int>(k) % 4) + 4) % 4) {
      case 0: c = c0; s = s0; break;
      case 1: c = -s0; s = c0; break;
      case 2: c = -c0; s = -s0; break;
      default: c = s0; s = -c0; break;
    }
    return;
  }
  c = std::cos(omega_t + phase);
  s = std::sin(omega_t + phase);
}

}  // namespace

Factor Factor::sine(double omega) { return {Kind::trig, omega, -std::numbers::pi / 2}; }

void Factor::derivatives(double t, std::span<double> out) const {
  switch (kind) {
    case Kind::trig: {
      double c, s;
      cos_sin(a * t, b, c, s);
      double scale = 1;
      for (std::size_t j = 0; j < out.size(); ++j) {
        switch (j % 4) {
          case 0: out[j] = scale * c; break;
          case 1: out[j] = -scale * s; break;
          case 2: out[j] = -scale * c; break;
          default: out[j] = scale * s; break;
        }
        scale *= a;
      }
      return;
    }
    case Kind::power:
      for (std::size_t j = 0; j < out.size(); ++j) {
        double f = falling(a, static_cast<int>(j));
        out[j] = f == 0 ? 0.0 : f * std::pow(t, a - static_cast<double>(j));
      }
      return;
    case Kind::reflected_power:
      for (std::size_t j = 0; j < out.size(); ++j) {
        double f = falling(a, static_cast<int>(j));
        double sign = j % 2 ? -1.0 : 1.0;
        out[j] = f == 0 ? 0.0 : sign * f * std::pow(1.0 - t, a - static_cast<double>(j));
      }
      return;
  }
}

double Factor::sup_derivative(int j, double lo, double hi) const {
  switch (kind) {
    case Kind::trig: {
      double scale = std::pow(std::fabs(a), j);
      if (!std::isfinite(hi)) return scale;
      double mid = 0.5 * (lo + hi);
      double at_mid = std::fabs(std::cos(a * mid + b + j * std::numbers::pi / 2));
      return scale * std::min(1.0, at_mid + std::fabs(a) * (hi - lo) / 2);
    }
    case Kind::power: {
      double f = std::fabs(falling(a, j));
      if (f == 0) return 0;
      double e = a - j;
      if (e == 0) return f;
      if (e > 0) return std::isfinite(hi) ? f * std::pow(hi, e) : kInf;
      return lo > 0 ? f * std::pow(lo, e) : kInf;
    }
    case Kind::reflected_power: {
      double f = std::fabs(falling(a, j));
      if (f == 0) return 0;
      if (hi > 1) return kInf;
      double e = a - j;
      if (e == 0) return f;
      if (e > 0) return f * std::pow(1.0 - lo, e);
      return hi < 1 ? f * std::pow(1.0 - hi, e) : kInf;
    }
  }
  return kInf;
}

SmoothIntegrand::SmoothIntegrand(double coefficient, std::vector<Factor> factors) : coefficient_(coefficient) {
  for (const auto& g : factors) *this = *this * g;
}

SmoothIntegrand SmoothIntegrand::operator*(const Factor& g) const {
  SmoothIntegrand r = *this;
  switch (g.kind) {
    case Factor::Kind::trig: r.trig_.push_back(g); break;
    case Factor::Kind::power: r.lambda_ += g.a; break;
    case Factor::Kind::reflected_power: r.reflected_lambda_ += g.a; break;
  }
  return r;
}

SmoothIntegrand SmoothIntegrand::operator*(double c) const {
  SmoothIntegrand r = *this;
  r.coefficient_ *= c;
  return r;
}

double SmoothIntegrand::operator()(double t) const {
  double v = coefficient_;
  for (const auto& g : trig_) v *= std::cos(g.a * t + g.b);
  if (lambda_ != 0) v *= std::pow(t, lambda_);
  if (reflected_lambda_ != 0) v *= std::pow(1.0 - t, reflected_lambda_);
  return v;
}

void SmoothIntegrand::derivatives(double t, std::span<double> out) const {
  if (out.size() > static_cast<std::size_t>(kMaxDerivatives))
    throw std::invalid_argument("SmoothIntegrand: too many derivatives requested");
  std::fill(out.begin(), out.end(), 0.0);
  out[0] = coefficient_;
  std::array<double, kMaxDerivatives> g{};
  auto part = std::span<double>(g.data(), out.size());
  for (const auto& factor : trig_) {
    factor.derivatives(t, part);
    leibniz(out, part);
  }
  if (lambda_ != 0) {
    Factor::power(lambda_).derivatives(t, part);
    leibniz(out, part);
  }
  if (reflected_lambda_ != 0) {
    Factor::reflected_power(reflected_lambda_).derivatives(t, part);
    leibniz(out, part);
  }
}

double SmoothIntegrand::sup_derivative(int j, double lo, double hi) const {
  if (j >= kMaxDerivatives) throw std::invalid_argument("SmoothIntegrand: derivative order too high");
  if (trig_.size() == 1 && lambda_ == 0 && reflected_lambda_ == 0)
    return std::fabs(coefficient_) * trig_[0].sup_derivative(j, lo, hi);
  std::array<double, kMaxDerivatives> acc{}, next{};
  acc[0] = std::fabs(coefficient_);
  auto fold = [&](const Factor& g) {
    std::array<double, kMaxDerivatives> s{};
    for (int i = 0; i <= j; ++i) s[i] = g.sup_derivative(i, lo, hi);
    for (int m = 0; m <= j; ++m) {
      double total = 0;
      for (int k = 0; k <= m; ++k) total += binom(m, k) * safe_mul(acc[k], s[m - k]);
      next[m] = total;
    }
    acc = next;
  };
  for (const auto& g : trig_) fold(g);
  if (lambda_ != 0) fold(Factor::power(lambda_));
  if (reflected_lambda_ != 0) fold(Factor::reflected_power(reflected_lambda_));
  return acc[j];
}

double SmoothIntegrand::max_frequency() const {
  double w = 0;
  for (const auto& g : trig_) w = std::max(w, std::fabs(g.a));
  return w;
}

}  // namespace salemlab
