#include "salemlab/fourier_stieltjes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "salemlab/parallel.hpp"

namespace salemlab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rounding allowance for a residual assembled from terms of total size `scale`.
double rounding(double scale) { return 8 * kEps * scale; }

TransformValue make_transform(double x, const QuadratureResult& c, const QuadratureResult& s) {
  TransformValue v;
  v.x = x;
  v.re = c.value;
  v.im = s.value;
  v.re_error = c.error_bound;
  v.im_error = s.error_bound;
  v.converged = c.converged && s.converged;
  return v;
}

double binomial(unsigned n, unsigned k) {
  double r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void add(IdentityReport& report, std::string name, double arg, double residual, double bound) {
  report.rows.push_back({std::move(name), arg, residual, bound});
}

}  // namespace

std::string to_string(CoefficientMethod m) {
  switch (m) {
    case CoefficientMethod::direct: return "direct";
    case CoefficientMethod::hankel: return "hankel";
    case CoefficientMethod::extension: return "extension";
  }
  return "unknown";
}

TransformValue transform_f(double x, const QuadratureOptions& options) {
  return make_transform(x, integrate_01(SmoothIntegrand::cosine(x), options),
                        integrate_01(SmoothIntegrand::sine(x), options));
}

TransformValue transform_G(double x, const QuadratureOptions& options) {
  return make_transform(x, integrate_1inf(SmoothIntegrand::cosine(x), options),
                        integrate_1inf(SmoothIntegrand::sine(x), options));
}

TransformValue transform_F(double x, const QuadratureOptions& options) {
  return make_transform(x, integrate_0inf(SmoothIntegrand::cosine(x), options),
                        integrate_0inf(SmoothIntegrand::sine(x), options));
}

CoefficientRecord coefficient_dn(long n, const CoefficientOptions& options) {
  if (n < 0) throw std::invalid_argument("coefficient_dn: n must be non-negative");
  CoefficientRecord r;
  r.n = n;
  if (n == 0) {
    r.d_n = 1;
    r.c_n = 0;
    r.method = CoefficientMethod::extension;
    r.converged = true;
    return r;
  }
  double omega = kTwoPi * static_cast<double>(n);
  auto d = integrate_01(SmoothIntegrand::cosine(omega), options.quadrature);
  r.d_n = d.value;
  r.d_error = d.error_bound;
  r.converged = d.converged;
  if (options.with_c) {
    auto c = integrate_01(SmoothIntegrand::sine(omega) * Factor::power(1), options.quadrature);
    r.c_n = c.value;
    r.c_error = c.error_bound;
    r.converged = r.converged && c.converged;
  }
  if (options.with_sine_check) {
    auto s = integrate_01(SmoothIntegrand::sine(omega), options.quadrature);
    r.sine_value = s.value;
    r.sine_error = s.error_bound;
  }
  r.error_bound = std::max(r.d_error, r.c_error);
  return r;
}

std::vector<CoefficientRecord> coefficient_table(long n_max, const CoefficientOptions& options, unsigned jobs) {
  if (n_max < 0) throw std::invalid_argument("coefficient_table: n_max must be non-negative");
  std::vector<CoefficientRecord> rows(static_cast<std::size_t>(n_max) + 1);
  // Parallelism is over n; each integral runs single-threaded so rows do not depend on jobs.
  CoefficientOptions inner = options;
  inner.quadrature.jobs = 1;
  parallel_for(rows.size(), jobs, [&](std::size_t i) { rows[i] = coefficient_dn(static_cast<long>(i), inner); });
  return rows;
}

DerivativeCheck derivative_relation_check(long n, double h, const QuadratureOptions& options) {
  if (n < 1 || !(h > 0)) throw std::invalid_argument("derivative_relation_check: need n >= 1 and h > 0");
  double x = kTwoPi * static_cast<double>(n);
  auto plus = transform_f(x + h, options);
  auto minus = transform_f(x - h, options);
  CoefficientOptions co;
  co.quadrature = options;
  co.with_sine_check = false;
  auto rec = coefficient_dn(n, co);
  auto tc = integrate_01(SmoothIntegrand::cosine(x) * Factor::power(1), options);

  DerivativeCheck out;
  out.fd_re = (plus.re - minus.re) / (2 * h);
  out.fd_im = (plus.im - minus.im) / (2 * h);
  out.relation_re = -rec.c_n;
  out.relation_im = rec.d_n / 2;
  out.direct_re = -rec.c_n;
  out.direct_im = tc.value;
  out.residual = std::fabs(out.fd_re - out.relation_re) + std::fabs(out.fd_im - out.relation_im);
  // |f'''| <= int t^3 dq <= 1 on [0, 1].
  double truncation = h * h / 6;
  double noise_re = (plus.re_error + minus.re_error) / (2 * h) + rounding((std::fabs(plus.re) + std::fabs(minus.re)) / (2 * h));
  double noise_im = (plus.im_error + minus.im_error) / (2 * h) + rounding((std::fabs(plus.im) + std::fabs(minus.im)) / (2 * h));
  out.bound = 2 * truncation + noise_re + noise_im + rec.c_error + rec.d_error / 2;
  out.direct_residual = std::fabs(out.direct_im - out.relation_im);
  out.direct_bound = tc.error_bound + rec.d_error / 2 + rounding(std::fabs(tc.value));
  return out;
}

QuadratureResult power_coefficient(long n, unsigned m, const QuadratureOptions& options) {
  if (m == 0) throw std::invalid_argument("power_coefficient: m must be positive");
  return integrate_power_measure(SmoothIntegrand::cosine(kTwoPi * static_cast<double>(n)), m, options);
}

bool IdentityReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

std::vector<IdentityRow> IdentityReport::failures() const {
  std::vector<IdentityRow> out;
  for (const auto& r : rows)
    if (!r.pass()) out.push_back(r);
  return out;
}

IdentityReport verify_power_recurrence(long n_max, unsigned m_max, const QuadratureOptions& options) {
  IdentityReport report;
  for (long n = 1; n <= n_max; ++n) {
    std::vector<QuadratureResult> d(m_max + 1);
    for (unsigned k = 1; k <= m_max; ++k) d[k] = power_coefficient(n, k, options);
    for (unsigned M = 1; M <= m_max; ++M) {
      double sum = 0, bound = d[M].error_bound, scale = std::fabs(d[M].value);
      for (unsigned k = 1; k <= M; ++k) {
        double c = binomial(M, k) * (k % 2 ? 1.0 : -1.0);
        sum += c * d[k].value;
        bound += std::fabs(c) * d[k].error_bound;
        scale += std::fabs(c * d[k].value);
      }
      add(report, "power recurrence m=" + std::to_string(M), static_cast<double>(n), std::fabs(d[M].value - sum),
          bound + rounding(scale));
    }
    if (m_max >= 2)
      add(report, "d_{n,2} = d_{n,1}", static_cast<double>(n), std::fabs(d[2].value - d[1].value),
          d[1].error_bound + d[2].error_bound + rounding(std::fabs(d[1].value) + std::fabs(d[2].value)));
  }
  return report;
}

std::vector<double> default_identity_grid() {
  std::vector<double> g(50);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = 100.0 * static_cast<double>(i) / 49.0;
  return g;
}

IdentityReport verify_identity_suite(const std::vector<double>& x_grid, long n_max, const QuadratureOptions& options) {
  IdentityReport report;
  for (double x : x_grid) {
    auto f = transform_f(x, options);
    auto g = transform_G(x, options);
    double cx = std::cos(x), sx = std::sin(x);
    double ch = std::cos(x / 2), sh = std::sin(x / 2);
    double scale = std::fabs(f.re) + std::fabs(f.im);

    // f(x) - e^(ix) conj(f(x))
    double r1 = std::fabs(f.re - cx * f.re - sx * f.im) + std::fabs(f.im - sx * f.re + cx * f.im);
    double b1 = (1 + std::fabs(cx)) * f.re_error + std::fabs(sx) * f.im_error + std::fabs(sx) * f.re_error +
                (1 + std::fabs(cx)) * f.im_error;
    add(report, "reflection", x, r1, b1 + rounding(4 * scale));

    double r2 = std::fabs(ch * f.im - sh * f.re);
    add(report, "half-angle", x, r2, std::fabs(ch) * f.im_error + std::fabs(sh) * f.re_error + rounding(scale));

    // f = (1 - e^(ix)/2) F with F = f + G
    double Fr = f.re + g.re, Fi = f.im + g.im;
    double Fre = f.re_error + g.re_error, Fie = f.im_error + g.im_error;
    double a = 1 - cx / 2, b = sx / 2;
    double r3 = std::fabs(f.re - (a * Fr + b * Fi)) + std::fabs(f.im - (a * Fi - b * Fr));
    double b3 = f.re_error + f.im_error + (std::fabs(a) + std::fabs(b)) * (Fre + Fie);
    add(report, "f = (1 - e^(ix)/2) F", x, r3, b3 + rounding(4 * (scale + std::fabs(Fr) + std::fabs(Fi))));

    double s2 = sh * sh;
    double rc = (1 - 8 * s2) / (1 + 8 * s2), rs = (5 - 8 * s2) / (1 + 8 * s2);
    add(report, "cosine ratio", x, std::fabs(g.re - rc * f.re),
        g.re_error + std::fabs(rc) * f.re_error + rounding(std::fabs(g.re) + std::fabs(f.re)));
    add(report, "sine ratio", x, std::fabs(g.im - rs * f.im),
        g.im_error + std::fabs(rs) * f.im_error + rounding(std::fabs(g.im) + 5 * std::fabs(f.im)));
  }

  auto lower = integrate_01(SmoothIntegrand::monomial(1), options);
  auto upper = integrate_1inf(SmoothIntegrand::monomial(1), options);
  add(report, "first moment int_1^inf t dq = 5 int_0^1 t dq", 0, std::fabs(upper.value - 5 * lower.value),
      upper.error_bound + 5 * lower.error_bound + rounding(2 * std::fabs(upper.value)));

  // Small-x form of the sine ratio: G_s(x)/x -> int_1^inf t dq, expanded to second order.
  {
    double x = 1e-3;
    auto gs = integrate_1inf(SmoothIntegrand::sine(x), options);
    // sin(xt) / x = t - x^2 t^3 / 6 + R, |R| <= x^4 t^5 / 120
    auto m3 = integrate_1inf(SmoothIntegrand::monomial(3), options);
    auto m5 = integrate_1inf(SmoothIntegrand::monomial(5), options);
    double r = std::fabs(gs.value / x - upper.value + x * x / 6 * m3.value);
    double b = gs.error_bound / x + upper.error_bound + x * x / 6 * m3.error_bound +
               std::pow(x, 4) / 120 * (m5.value + m5.error_bound) + rounding(2 * std::fabs(upper.value));
    add(report, "sine ratio small-x limit", x, r, b);
  }

  for (long n = 1; n <= n_max; ++n) {
    double omega = kTwoPi * static_cast<double>(n);
    auto d = integrate_01(SmoothIntegrand::cosine(omega), options);
    auto t = integrate_01(SmoothIntegrand::cosine(omega) * Factor::power(1), options);
    add(report, "d_n = 2 int t cos(2 pi n t) dq", static_cast<double>(n), std::fabs(d.value - 2 * t.value),
        d.error_bound + 2 * t.error_bound + rounding(2 * std::fabs(d.value)));
  }
  return report;
}

}  // namespace salemlab
