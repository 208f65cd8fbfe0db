#include "salemlab/asymptotic_lab.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "salemlab/parallel.hpp"
#include "salemlab/special_functions.hpp"

namespace salemlab {

namespace {

constexpr int kPanelNodes = 16;

struct Ladder {
  std::array<double, 3> eps;
  std::array<double, 3> weight;
};

Ladder ladder(double epsilon) {
  if (!(epsilon > 0) || epsilon > 0.1) throw std::invalid_argument("hankel: epsilon must lie in (0, 0.1]");
  Ladder l{{100 * epsilon, 10 * epsilon, epsilon}, {}};
  richardson_weights(l.eps.data(), 3, l.weight.data());
  return l;
}

struct Regularized {
  double value = 0, truncated = 0;
  std::array<double, 3> by_eps{};
};

template <class G>
Regularized regularize(const HankelSamples& s, const Ladder& l, G&& g) {
  Regularized r;
  for (std::size_t i = 0; i < s.y.size(); ++i) {
    double base = s.weight[i] * s.kernel[i] * g(i);
    r.truncated += base;
    for (int k = 0; k < 3; ++k) r.by_eps[k] += base * std::exp(-l.eps[k] * s.y[i]);
  }
  for (int k = 0; k < 3; ++k) r.value += l.weight[k] * r.by_eps[k];
  return r;
}

double sampling_error(const HankelSamples& s, const Ladder& l) {
  double amplification = 0;
  for (double w : l.weight) amplification += std::fabs(w);
  double e = 0;
  for (std::size_t i = 0; i < s.y.size(); ++i) e += std::fabs(s.weight[i] * s.kernel[i]) * s.f_error[i];
  return amplification * e;
}

double fit_line(const std::vector<double>& x, const std::vector<double>& y, double& intercept, double& r2,
                double* stderr_out) {
  std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  double slope = sxy / sxx;
  intercept = my - slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = y[i] - intercept - slope * x[i];
    sse += e * e;
  }
  r2 = syy > 0 ? 1 - sse / syy : 1.0;
  if (stderr_out) *stderr_out = n > 2 ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
  return slope;
}

}  // namespace

HankelSamples sample_hankel(long n, double T, const HankelOptions& options) {
  if (n < 1) throw std::invalid_argument("hankel: n must be positive");
  if (!(T > 0)) throw std::invalid_argument("hankel: T must be positive");
  HankelSamples s;
  s.x = 2 * std::numbers::pi * static_cast<double>(n);
  s.T = T;
  double nodes[kPanelNodes], weights[kPanelNodes];
  gauss_legendre(kPanelNodes, nodes, weights);
  // Each panel spans at most one radian of the phase 2 sqrt(x y) + y.
  for (double a = 0; a < T;) {
    double h = std::min({1.0, T - a, 1.0 / (1.0 + std::sqrt(s.x / std::max(a, 1e-2)))});
    if (T - a - h < 1e-9 * T) h = T - a;
    for (int i = 0; i < kPanelNodes; ++i) {
      s.y.push_back(a + h * (nodes[i] + 1) / 2);
      s.weight.push_back(weights[i] * h / 2);
    }
    a += h;
  }
  std::size_t m = s.y.size();
  s.kernel.resize(m);
  s.f_cos.resize(m);
  s.f_sin.resize(m);
  s.f_error.resize(m);
  QuadratureOptions q = options.quadrature;
  q.jobs = 1;
  parallel_for(m, options.jobs, [&](std::size_t i) {
    s.kernel[i] = bessel_j0(2 * std::sqrt(s.x * s.y[i]));
    auto f = transform_f(s.y[i], q);
    s.f_cos[i] = f.re;
    s.f_sin[i] = f.im;
    s.f_error[i] = std::max(f.re_error, f.im_error);
  });
  return s;
}

HankelValue hankel_dn(const HankelSamples& s, long n, double epsilon, const QuadratureOptions& direct) {
  auto l = ladder(epsilon);
  auto r = regularize(s, l, [&](std::size_t i) { return s.f_sin[i]; });
  HankelValue v;
  v.n = n;
  v.T = s.T;
  v.epsilon = epsilon;
  v.value = 0.4 * r.value;
  v.truncated = 0.4 * r.truncated;
  for (int k = 0; k < 3; ++k) v.regularized[k] = 0.4 * r.by_eps[k];
  CoefficientOptions co{direct, false, false};
  v.direct = coefficient_dn(n, co).d_n;
  v.residual = std::fabs(v.value - v.direct);
  v.sampling_error = 0.4 * sampling_error(s, l);
  v.nodes = s.y.size();
  return v;
}

HankelValue hankel_cn(const HankelSamples& s, long n, double epsilon, const QuadratureOptions& direct) {
  auto l = ladder(epsilon);
  auto r = regularize(s, l, [&](std::size_t i) { return s.f_cos[i]; });
  HankelValue v;
  v.n = n;
  v.T = s.T;
  v.epsilon = epsilon;
  v.value = r.value;
  v.truncated = r.truncated;
  v.regularized = r.by_eps;
  CoefficientOptions co{direct, false, true};
  v.direct = coefficient_dn(n, co).c_n;
  v.residual = std::fabs(v.value - v.direct);
  v.sampling_error = sampling_error(s, l);
  v.nodes = s.y.size();
  return v;
}

HankelValue hankel_dn(long n, double T, double epsilon, const HankelOptions& options) {
  ladder(epsilon);
  return hankel_dn(sample_hankel(n, T, options), n, epsilon);
}

HankelValue hankel_cn(long n, double T, double epsilon, const HankelOptions& options) {
  ladder(epsilon);
  return hankel_cn(sample_hankel(n, T, options), n, epsilon);
}

HankelSuite hankel_suite(long n, double T, double epsilon, const HankelOptions& options) {
  auto l = ladder(epsilon);
  auto s = sample_hankel(n, T, options);
  HankelSuite out;
  out.d = hankel_dn(s, n, epsilon);
  out.c = hankel_cn(s, n, epsilon);
  out.combined = {-out.c.value, 2.5 * out.d.value};
  // e^(-iy) f(y) = (cos y f_c + sin y f_s) + i (cos y f_s - sin y f_c)
  auto re = regularize(s, l, [&](std::size_t i) { return std::cos(s.y[i]) * s.f_cos[i] + std::sin(s.y[i]) * s.f_sin[i]; });
  auto im = regularize(s, l, [&](std::size_t i) { return std::cos(s.y[i]) * s.f_sin[i] - std::sin(s.y[i]) * s.f_cos[i]; });
  out.kernel = {-re.value, -im.value};
  out.combination_residual = std::abs(out.combined - out.kernel);
  // Both sides use the same samples; they differ by the reflection identity at each node,
  // which holds up to the quadrature bounds on f plus rounding.
  double amplification = 0, scale = 0;
  for (double w : l.weight) amplification += std::fabs(w);
  double e = 0;
  for (std::size_t i = 0; i < s.y.size(); ++i) {
    double k = std::fabs(s.weight[i] * s.kernel[i]);
    e += k * 4 * s.f_error[i];
    scale += k * (std::fabs(s.f_cos[i]) + std::fabs(s.f_sin[i]));
  }
  out.combination_bound = amplification * (2 * e + 64 * std::numeric_limits<double>::epsilon() * scale);
  return out;
}

QuadratureResult oscillatory_moment(long n, const QuadratureOptions& options) {
  if (n < 0) throw std::invalid_argument("oscillatory_moment: n must be non-negative");
  SmoothIntegrand g(1.0, {Factor::power(-0.5)});
  if (n > 0) g = g * Factor::cosine(2 * std::numbers::pi * static_cast<double>(n));
  return integrate_1inf(g, options);
}

DecayFit fit_decay(const std::vector<std::pair<long, double>>& values, long n_min, long n_max) {
  if (n_min < 8) throw std::invalid_argument("fit_decay: n_min must be at least 8");
  if (n_max < n_min) throw std::invalid_argument("fit_decay: empty range");
  std::map<long, double> by_n;
  for (const auto& [n, v] : values)
    if (n >= n_min && n <= n_max) by_n[n] = v;
  if (static_cast<long>(by_n.size()) != n_max - n_min + 1)
    throw std::invalid_argument("fit_decay: table does not cover the requested range");

  DecayFit fit;
  fit.n_range = {n_min, n_max};
  int k0 = std::bit_width(static_cast<unsigned long>(n_min)) - 1;
  int k1 = std::bit_width(static_cast<unsigned long>(n_max)) - 1;
  std::vector<double> bx, by;
  for (int k = k0; k <= k1; ++k) {
    long lo = std::max(n_min, 1L << k), hi = std::min(n_max, (1L << (k + 1)) - 1);
    BlockSup b{k, 0, -1};
    for (long n = lo; n <= hi; ++n) {
      double a = std::fabs(by_n[n]);
      if (a > b.sup) {
        b.sup = a;
        b.argmax = n;
      }
    }
    if (b.sup <= 0) throw std::invalid_argument("fit_decay: block with no nonzero entries");
    fit.tail_sup.push_back(b);
    bx.push_back(std::log(static_cast<double>(b.argmax)));
    by.push_back(std::log(b.sup));
  }
  if (fit.tail_sup.size() < 2) throw std::invalid_argument("fit_decay: need at least two dyadic blocks");
  // 0.0 - slope gives +0 for a flat fit
  fit.mu_hat = 0.0 - fit_line(bx, by, fit.intercept, fit.r_squared, &fit.mu_stderr);

  std::vector<double> rx, ry;
  for (const auto& [n, v] : by_n)
    if (v != 0) {
      rx.push_back(std::log(static_cast<double>(n)));
      ry.push_back(std::log(std::fabs(v)));
    }
  double raw_intercept = 0;
  if (rx.size() >= 2) fit.raw_mu_hat = 0.0 - fit_line(rx, ry, raw_intercept, fit.raw_r_squared, nullptr);
  return fit;
}

DecayFit fit_decay(const std::vector<CoefficientRecord>& records, long n_min, long n_max) {
  std::vector<std::pair<long, double>> values;
  values.reserve(records.size());
  for (const auto& r : records) values.emplace_back(r.n, r.d_n);
  return fit_decay(values, n_min, n_max);
}

}  // namespace salemlab
