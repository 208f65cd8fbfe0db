#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "salemlab/errors.hpp"
#include "salemlab/quadrature.hpp"

using namespace salemlab;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void check_against(const QuadratureResult& r, const oracle::Bracket& b) {
  CHECK(r.converged);
  CHECK(std::fabs(r.value - b.value) <= r.error_bound + b.half_width);
}

}  // namespace

TEST_CASE("partition structure") {
  for (unsigned d : {0u, 1u, 5u, 10u}) {
    auto p = partition(d);
    REQUIRE(p.size() == (std::size_t{1} << d));
    CHECK(p.front().left == Fraction(0));
    CHECK(p.back().right == Fraction(1));
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].mass == DyadicValue::power_of_two(-static_cast<std::int64_t>(d)));
      if (i > 0) CHECK(p[i - 1].right == p[i].left);
    }
  }
  CHECK_THROWS_AS(partition(12, 10), ResourceError);
}

TEST_CASE("constant and linear integrands") {
  auto one = integrate_01(SmoothIntegrand::constant(1));
  CHECK(one.value == 1.0);
  auto t = integrate_01(SmoothIntegrand::monomial(1));
  CHECK(std::fabs(t.value - 0.5) <= 1e-10);
  CHECK(std::fabs(t.value - 0.5) <= t.error_bound + 1e-15);
  // t and 1 - t integrate to the same value
  auto r = integrate_01(SmoothIntegrand(1.0, {Factor::reflected_power(1)}));
  CHECK(std::fabs(r.value - t.value) <= r.error_bound + t.error_bound + 1e-15);
}

TEST_CASE("oracle brackets") {
  check_against(integrate_01(SmoothIntegrand::monomial(2)), oracle::t_squared);
  check_against(integrate_01(SmoothIntegrand::monomial(0.5)), oracle::sqrt_t);
  check_against(integrate_01(SmoothIntegrand::cosine(kTwoPi)), oracle::d_1);
  check_against(integrate_01(SmoothIntegrand::cosine(2 * kTwoPi)), oracle::d_2);
  check_against(integrate_01(SmoothIntegrand::cosine(3 * kTwoPi)), oracle::d_3);
  check_against(integrate_01(SmoothIntegrand::cosine(64 * kTwoPi)), oracle::d_64);
  check_against(integrate_01(SmoothIntegrand::sine(kTwoPi) * Factor::power(1)), oracle::c_1);
  check_against(integrate_01(SmoothIntegrand::sine(2 * kTwoPi) * Factor::power(1)), oracle::c_2);
  check_against(integrate_01(SmoothIntegrand::cosine(10)), oracle::f_10_cos);
  check_against(integrate_01(SmoothIntegrand::sine(10)), oracle::f_10_sin);
}

TEST_CASE("midpoint rule bounds are honest") {
  QuadratureOptions o;
  o.rule = QuadratureRule::midpoint;
  o.target_error = 1e-4;
  auto r = integrate_01(SmoothIntegrand::cosine(kTwoPi), o);
  CHECK(r.converged);
  CHECK(r.error_bound <= 1e-4);
  CHECK(std::fabs(r.value - oracle::d_1.value) <= r.error_bound + oracle::d_1.half_width);
  CHECK(r.max_depth >= frequency_min_depth(kTwoPi));
}

TEST_CASE("Taylor orders agree within their bounds") {
  QuadratureOptions a, b;
  a.order = 8;
  b.order = 16;
  a.target_error = b.target_error = 1e-11;
  for (double w : {kTwoPi, 5 * kTwoPi, 37.0}) {
    auto ra = integrate_01(SmoothIntegrand::cosine(w), a);
    auto rb = integrate_01(SmoothIntegrand::cosine(w), b);
    CHECK(std::fabs(ra.value - rb.value) <= ra.error_bound + rb.error_bound);
  }
}

TEST_CASE("black-box integrands") {
  GenericIntegrand g{[](double t) { return std::cos(kTwoPi * t); },
                     [](double lo, double hi) { return std::min(2.0, kTwoPi * (hi - lo)); }};
  QuadratureOptions o;
  o.target_error = 1e-5;
  auto r = integrate_01(g, o);
  CHECK(r.certified);
  CHECK(std::fabs(r.value - oracle::d_1.value) <= r.error_bound + oracle::d_1.half_width);
  GenericIntegrand unbounded{[](double t) { return t; }, nullptr};
  auto u = integrate_01(unbounded, o);
  CHECK_FALSE(u.certified);
}

TEST_CASE("moments on [1, inf) and [0, inf)") {
  auto lower = integrate_01(SmoothIntegrand::monomial(1));
  auto upper = integrate_1inf(SmoothIntegrand::monomial(1));
  CHECK(std::fabs(upper.value - 5 * lower.value) <= 1e-8);
  auto whole = integrate_0inf(SmoothIntegrand::monomial(1));
  CHECK(std::fabs(whole.value - 3) <= 1e-8);
  CHECK(std::fabs(whole.value - 3) <= whole.error_bound);
  // int_1^inf dq / t = int_0^1 t dq = 1/2
  auto inv = integrate_1inf(SmoothIntegrand::monomial(-1));
  CHECK(std::fabs(inv.value - 0.5) <= inv.error_bound + 1e-15);
  // [1, inf) carries mass 1
  auto mass = integrate_1inf(SmoothIntegrand::constant(1));
  CHECK(std::fabs(mass.value - 1) <= mass.error_bound + 1e-15);
}

TEST_CASE("singular endpoints") {
  auto left = integrate_01(SmoothIntegrand::monomial(-0.5));
  auto right = integrate_01(SmoothIntegrand(1.0, {Factor::reflected_power(-0.5)}));
  CHECK(left.converged);
  CHECK(right.converged);
  CHECK(std::fabs(left.value - right.value) <= left.error_bound + right.error_bound);
  auto half = integrate_01(SmoothIntegrand::monomial(0.5));
  // t^(-1/2) >= t^(1/2) on (0, 1]
  CHECK(left.value > half.value);
}

TEST_CASE("property: results do not depend on the job count") {
  QuadratureOptions one, many;
  many.jobs = 4;
  for (double w : {kTwoPi, 100 * kTwoPi, 3.3}) {
    auto a = integrate_01(SmoothIntegrand::cosine(w) * Factor::power(1), one);
    auto b = integrate_01(SmoothIntegrand::cosine(w) * Factor::power(1), many);
    CHECK(a.value == b.value);
    CHECK(a.error_bound == b.error_bound);
    CHECK(a.intervals_used == b.intervals_used);
  }
}

TEST_CASE("property: linearity in the coefficient") {
  for (double c : {-3.0, 0.5, 7.0}) {
    auto a = integrate_01(SmoothIntegrand::cosine(20));
    auto b = integrate_01(SmoothIntegrand::cosine(20) * c);
    CHECK(std::fabs(b.value - c * a.value) <= b.error_bound + std::fabs(c) * a.error_bound);
  }
}

TEST_CASE("power measures") {
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned depth : {0u, 3u, 9u}) CHECK(power_measure_total_mass(depth, m) == DyadicValue::from_integer(1));
  for (unsigned m = 1; m <= 4; ++m) {
    auto r = integrate_power_measure(SmoothIntegrand::constant(1), m);
    CHECK(std::fabs(r.value - 1) <= r.error_bound + 1e-15);
  }
  auto p1 = integrate_power_measure(SmoothIntegrand::cosine(kTwoPi), 1);
  auto p2 = integrate_power_measure(SmoothIntegrand::cosine(kTwoPi), 2);
  CHECK(std::fabs(p1.value - p2.value) <= p1.error_bound + p2.error_bound);
  CHECK_THROWS(integrate_power_measure(SmoothIntegrand::constant(1), 0));
}

TEST_CASE("depth cap limits convergence honestly") {
  QuadratureOptions o;
  o.depth_cap = 8;
  o.target_error = 1e-12;
  auto r = integrate_01(SmoothIntegrand::cosine(200 * kTwoPi), o);
  CHECK_FALSE(r.converged);
  CHECK(r.max_depth <= 8);
  CHECK(r.error_bound > 1e-12);
}

TEST_CASE("frequency depth and combine") {
  CHECK(frequency_min_depth(kTwoPi) == 3);
  CHECK(frequency_min_depth(0) == 0);
  QuadratureResult a{1.0, 1e-9, 10, 3, true, true}, b{2.0, 2e-9, 5, 4, false, true};
  auto c = combine(a, b, -1.0);
  CHECK(c.value == -1.0);
  CHECK(c.error_bound == doctest::Approx(3e-9));
  CHECK_FALSE(c.converged);
  CHECK(c.intervals_used == 15);
}
