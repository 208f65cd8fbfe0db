#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "salemlab/fourier_stieltjes.hpp"

using namespace salemlab;

TEST_CASE("transform values") {
  auto f0 = transform_f(0);
  CHECK(f0.re == 1.0);
  CHECK(f0.im == 0.0);
  auto F0 = transform_F(0);
  CHECK(std::fabs(F0.re - 2) <= F0.error_bound() + 1e-15);
  for (double x : {0.5, 3.0, 17.0, 99.0}) {
    auto f = transform_f(x);
    CHECK(f.converged);
    CHECK(std::hypot(f.re, f.im) <= 1 + f.error_bound());
    auto F = transform_F(x);
    CHECK(std::hypot(F.re, F.im) <= 2 + F.error_bound());
    auto g = transform_G(x);
    CHECK(std::fabs(F.re - f.re - g.re) <= F.re_error + f.re_error + g.re_error + 1e-15);
    // real measure: f(-x) is the conjugate
    auto m = transform_f(-x);
    CHECK(std::fabs(m.re - f.re) <= m.re_error + f.re_error);
    CHECK(std::fabs(m.im + f.im) <= m.im_error + f.im_error);
  }
  auto f10 = transform_f(10);
  CHECK(std::fabs(f10.re - oracle::f_10_cos.value) <= f10.re_error + oracle::f_10_cos.half_width);
  CHECK(std::fabs(f10.im - oracle::f_10_sin.value) <= f10.im_error + oracle::f_10_sin.half_width);
}

TEST_CASE("coefficients") {
  auto r0 = coefficient_dn(0);
  CHECK(r0.d_n == 1.0);
  CHECK(r0.c_n == 0.0);
  CHECK(r0.method == CoefficientMethod::extension);
  const oracle::Bracket* d[] = {&oracle::d_1, &oracle::d_2, &oracle::d_3};
  const oracle::Bracket* c[] = {&oracle::c_1, &oracle::c_2};
  for (long n = 1; n <= 3; ++n) {
    auto r = coefficient_dn(n);
    CHECK(r.converged);
    CHECK(r.method == CoefficientMethod::direct);
    CHECK(std::fabs(r.d_n - d[n - 1]->value) <= r.d_error + d[n - 1]->half_width);
    if (n <= 2) CHECK(std::fabs(r.c_n - c[n - 1]->value) <= r.c_error + c[n - 1]->half_width);
    // the sine part vanishes at 2 pi n
    CHECK(std::fabs(r.sine_value) <= r.sine_error);
    CHECK(std::fabs(r.sine_value) <= r.error_bound);
  }
  CHECK_THROWS(coefficient_dn(-1));
  CHECK(to_string(CoefficientMethod::hankel) == "hankel");
}

TEST_CASE("property: tables are ordered and independent of jobs") {
  CoefficientOptions o;
  o.with_sine_check = false;
  auto a = coefficient_table(40, o, 1);
  auto b = coefficient_table(40, o, 4);
  REQUIRE(a.size() == 41);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == static_cast<long>(i));
    CHECK(a[i].d_n == b[i].d_n);
    CHECK(a[i].c_n == b[i].c_n);
    CHECK(a[i].error_bound == b[i].error_bound);
  }
}

TEST_CASE("derivative relation") {
  QuadratureOptions q;
  q.target_error = 1e-12;
  auto coarse = derivative_relation_check(1, 1e-2, q);
  auto fine = derivative_relation_check(1, 5e-3, q);
  CHECK(coarse.pass());
  CHECK(fine.pass());
  CHECK(fine.residual <= 1e-6 + fine.bound);
  // central differences are second order
  CHECK(coarse.residual / fine.residual == doctest::Approx(4.0).epsilon(0.02));
  CHECK_THROWS(derivative_relation_check(0, 1e-3));
}

TEST_CASE("identity suite on a small grid") {
  auto rep = verify_identity_suite({0.0, 1.0, 6.5, 31.0, 100.0}, 8);
  CHECK(rep.rows.size() == 5 * 5 + 2 + 8);
  for (const auto& r : rep.rows) {
    INFO(r.identity << " at " << r.argument);
    CHECK(r.residual <= r.bound);
    CHECK(r.bound <= 1e-6);
  }
  CHECK(rep.all_pass());
  CHECK(rep.failures().empty());
  auto grid = default_identity_grid();
  CHECK(grid.size() == 50);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 100.0);
}

TEST_CASE("power coefficients and the recurrence") {
  auto d1 = power_coefficient(1, 1);
  auto d2 = power_coefficient(1, 2);
  CHECK(std::fabs(d1.value - d2.value) <= d1.error_bound + d2.error_bound);
  auto rep = verify_power_recurrence(2, 4);
  CHECK(rep.rows.size() == 2 * 5);
  for (const auto& r : rep.rows) {
    INFO(r.identity << " at n=" << r.argument);
    CHECK(r.pass());
  }
  CHECK_THROWS(power_coefficient(1, 0));
}
