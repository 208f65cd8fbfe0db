#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "salemlab/asymptotic_lab.hpp"
#include "salemlab/special_functions.hpp"

using namespace salemlab;

namespace {

std::vector<std::pair<long, double>> power_law(double p, long n_max) {
  std::vector<std::pair<long, double>> v;
  for (long n = 1; n <= n_max; ++n) v.emplace_back(n, std::pow(static_cast<double>(n), p));
  return v;
}

}  // namespace

TEST_CASE("fit recovers exact power laws") {
  for (double p : {-0.5, -1.25, -0.1}) {
    auto fit = fit_decay(power_law(p, 2048), 8, 2048);
    CHECK(std::fabs(fit.mu_hat + p) <= 1e-6);
    CHECK(std::fabs(fit.raw_mu_hat + p) <= 1e-6);
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  }
  auto flat = fit_decay(power_law(0, 1024), 8, 1024);
  CHECK(std::fabs(flat.mu_hat) <= 1e-6);
  // non-power-of-two lower end
  auto odd = fit_decay(power_law(-0.5, 1000), 11, 1000);
  CHECK(std::fabs(odd.mu_hat - 0.5) <= 1e-6);
}

TEST_CASE("fit blocks") {
  auto fit = fit_decay(power_law(-0.5, 4096), 8, 4096);
  // floor(log2 n_max) - 2 blocks from n_min = 8
  CHECK(fit.tail_sup.size() == 10);
  CHECK(fit.tail_sup.front().block == 3);
  CHECK(fit.tail_sup.front().argmax == 8);
  CHECK(fit.tail_sup.back().block == 12);
  CHECK(fit.n_range == std::pair<long, long>{8, 4096});
  CHECK_THROWS_AS(fit_decay(power_law(-0.5, 100), 4, 100), std::invalid_argument);
  CHECK_THROWS_AS(fit_decay(power_law(-0.5, 100), 8, 200), std::invalid_argument);
  CHECK_THROWS_AS(fit_decay(power_law(-0.5, 15), 8, 15), std::invalid_argument);
  std::vector<std::pair<long, double>> zeros;
  for (long n = 1; n <= 64; ++n) zeros.emplace_back(n, n < 16 || n >= 32 ? 1.0 : 0.0);
  CHECK_THROWS_AS(fit_decay(zeros, 8, 64), std::invalid_argument);
}

TEST_CASE("fit on computed coefficients") {
  CoefficientOptions o;
  o.with_c = false;
  o.with_sine_check = false;
  auto table = coefficient_table(256, o, 1);
  auto fit = fit_decay(table, 8, 256);
  CHECK(fit.tail_sup.size() == 6);
  CHECK(fit.mu_hat > 0);
  CHECK(fit.tail_sup.back().sup < fit.tail_sup.front().sup);
}

TEST_CASE("oscillatory moment") {
  auto zero = oscillatory_moment(0);
  auto direct = integrate_01(SmoothIntegrand::monomial(0.5));
  CHECK(std::fabs(zero.value - direct.value) <= zero.error_bound + direct.error_bound);
  std::vector<std::pair<long, double>> values;
  for (long n = 1; n <= 64; ++n) {
    auto m = oscillatory_moment(n);
    CHECK(m.converged);
    CHECK(std::fabs(m.value) <= direct.value + direct.error_bound + m.error_bound);
    values.emplace_back(n, m.value);
  }
  auto fit = fit_decay(values, 8, 64);
  CHECK(fit.tail_sup.back().sup < fit.tail_sup.front().sup);
  CHECK_THROWS(oscillatory_moment(-1));
}

TEST_CASE("hankel integrand endpoints") {
  auto f0 = transform_f(0);
  CHECK(bessel_j0(0) * f0.im == 0.0);
  CHECK(bessel_j0(0) * f0.re == 1.0);
  CHECK_THROWS(hankel_dn(0, 10, 1e-3));
  CHECK_THROWS(hankel_dn(1, 10, 0.2));
  CHECK_THROWS(hankel_cn(1, -1, 1e-3));
}

TEST_CASE("hankel residuals shrink with T for n = 1") {
  double previous_d = 1, previous_c = 1;
  for (double T : {50.0, 100.0, 200.0}) {
    auto s = hankel_suite(1, T, 1e-3);
    CHECK(s.d.residual < previous_d);
    CHECK(s.c.residual < previous_c);
    previous_d = s.d.residual;
    previous_c = s.c.residual;
    CHECK(s.combination_residual <= s.combination_bound);
    CHECK(s.d.sampling_error < 1e-8);
    CHECK(std::fabs(s.d.direct - oracle::d_1.value) <= oracle::d_1.half_width + 1e-8);
    CHECK(std::fabs(s.c.direct - oracle::c_1.value) <= oracle::c_1.half_width + 1e-8);
  }
}
