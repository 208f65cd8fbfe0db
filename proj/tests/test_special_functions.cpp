#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "salemlab/special_functions.hpp"

using namespace salemlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gamma") {
  CHECK(gamma_function(0.3) == doctest::Approx(oracle::gamma_0_3).epsilon(1e-13));
  CHECK(gamma_function(0.5) == doctest::Approx(oracle::gamma_0_5).epsilon(1e-13));
  CHECK(gamma_function(1.7) == doctest::Approx(oracle::gamma_1_7).epsilon(1e-13));
  CHECK(gamma_function(2.5) == doctest::Approx(oracle::gamma_2_5).epsilon(1e-13));
  CHECK(gamma_function(7.25) == doctest::Approx(oracle::gamma_7_25).epsilon(1e-13));
  CHECK(gamma_function(1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("J0 values") {
  CHECK(bessel_j0(0) == 1.0);
  for (auto [x, y] : oracle::j0) CHECK(std::fabs(bessel_j0(x) - y) <= 2e-15 * std::max(1.0, 1.0 / std::sqrt(x)));
  double z = oracle::j0_first_zero;
  CHECK(std::fabs(bessel_j0(z)) <= 1e-15);
  CHECK(bessel_j0(z - 1e-9) > 0);
  CHECK(bessel_j0(z + 1e-9) < 0);
}

TEST_CASE("J0 branches agree around the switch point") {
  for (double z = kBesselSwitch - 5; z <= kBesselSwitch + 5; z += 0.25)
    CHECK(std::fabs(bessel_j0_series(z, 128) - bessel_j0_asymptotic(z)) <= 1e-10);
}

TEST_CASE("J0 leading asymptotic term converges at rate 1/z") {
  // sqrt(pi z / 2) J0(z) - cos(z - pi/4) = sin(z - pi/4) / (8 z) + O(z^-2)
  for (double z : {50.0, 200.0, 1000.0, 5000.0}) {
    double d = std::sqrt(kPi * z / 2) * bessel_j0(z) - std::cos(z - kPi / 4);
    CHECK(std::fabs(d) <= 1.0 / (8 * z) + 1.0 / (z * z));
    CHECK(std::fabs(d - std::sin(z - kPi / 4) / (8 * z)) <= 1.0 / (z * z));
  }
  CHECK(std::fabs(bessel_j0_two_term(200) - bessel_j0(200)) <= 1e-6);
}

TEST_CASE("Fresnel") {
  auto lim = fresnel_limits();
  CHECK(lim.cos_part == doctest::Approx(0.6266570687).epsilon(1e-10));
  CHECK(lim.cos_part == lim.sin_part);
  auto zero = fresnel_truncated(0);
  CHECK(zero.cos_part == 0);
  CHECK(zero.sin_part == 0);
  for (auto [T, c, s] : oracle::fresnel) {
    auto v = fresnel_truncated(T);
    CHECK(std::fabs(v.cos_part - c) <= 1e-13);
    CHECK(std::fabs(v.sin_part - s) <= 1e-13);
  }
  for (double T : {1.0, 10.0, 100.0}) {
    auto v = fresnel_truncated(T);
    CHECK(v.tail_bound == doctest::Approx(1 / (2 * T)));
    CHECK(std::fabs(v.cos_part - lim.cos_part) <= v.tail_bound);
    CHECK(std::fabs(v.sin_part - lim.sin_part) <= v.tail_bound);
  }
  CHECK(std::fabs(fresnel_truncated(10).cos_part - lim.cos_part) <= 0.05);
  // series up to T plus asymptotic tail reproduces the limit
  auto head = fresnel_series(8);
  auto tail = fresnel_tail(8);
  CHECK(std::fabs(head.cos_part + tail.real() - lim.cos_part) <= 1e-12);
  CHECK(std::fabs(head.sin_part + tail.imag() - lim.sin_part) <= 1e-12);
  CHECK_THROWS(fresnel_tail(3));
}

TEST_CASE("2F3") {
  TwoFThreeParams p{7. / 8, 3. / 8, 0.5, 0.75, 1.25, 0};
  CHECK(hyp2f3(p).value == 1.0);
  for (auto [z, v] : oracle::hyp2f3_decay_set) {
    p.argument = z;
    auto h = hyp2f3(p);
    CHECK(h.value == doctest::Approx(v).epsilon(1e-12));
  }
  TwoFThreeParams pole{0.5, 0.5, -2.0, 1.0, 1.0, -1};
  CHECK_THROWS_AS(pole.validate(), std::domain_error);
  CHECK_THROWS_AS(hyp2f3(pole), std::domain_error);
  TwoFThreeParams zero_beta{0.5, 0.5, 0.0, 1.0, 1.0, -1};
  CHECK_THROWS_AS(hyp2f3(zero_beta), std::domain_error);
}

TEST_CASE("2F3 precision ladder escalates with |z|") {
  TwoFThreeParams p{7. / 8, 3. / 8, 0.5, 0.75, 1.25, -1};
  CHECK(hyp2f3(p).method == HypergeometricMethod::series_double);
  p.argument = -1000;
  auto h = hyp2f3(p);
  CHECK(h.method == HypergeometricMethod::series_mpfr);
  CHECK(h.bits > 64);
}

TEST_CASE("decay exponents of the four parameter sets") {
  struct Set {
    TwoFThreeParams p;
    double two_gamma;
  };
  const Set sets[] = {{{7. / 8, 3. / 8, 0.5, 0.75, 1.25, 0}, -0.75},
                      {{11. / 8, 7. / 8, 1.5, 1.25, 1.75, 0}, -1.75},
                      {{5. / 8, 1. / 8, 0.5, 0.25, 0.75, 0}, -0.25},
                      {{9. / 8, 5. / 8, 1.5, 0.75, 1.25, 0}, -1.25}};
  for (const auto& s : sets) CHECK(2 * AsymptoticGamma::of(s.p).gamma == s.two_gamma);
}

TEST_CASE("2F3 approaches its leading asymptotic term along cosine maxima") {
  // alpha large enough that the x^-alpha2 series term is below x^gamma
  TwoFThreeParams p{1.5, 1.25, 0.5, 0.75, 1.25, 0};
  double g = AsymptoticGamma::of(p).gamma;
  double previous = 1;
  for (int k : {10, 30, 100}) {
    // 2 sqrt(x) + pi gamma = 2 pi k
    double s = (2 * kPi * k - kPi * g) / 2;
    p.argument = -s * s;
    double ratio = hyp2f3(p, 53).value / hyp2f3_leading(p);
    double dev = std::fabs(ratio - 1);
    CHECK(dev < previous);
    previous = dev;
  }
  CHECK(previous <= 1e-6);
}

TEST_CASE("closed forms against the Mellin series oracle") {
  for (const auto& o : oracle::oscillatory) {
    Kernel k = o.kernel_sin ? Kernel::sin : Kernel::cos;
    double closed = o.outer_sin ? oscillatory_sin_integral(o.a, o.b, o.mu, k) : oscillatory_cos_integral(o.a, o.b, o.mu, k);
    CHECK(std::fabs(closed - o.value) <= 1e-9 * std::max(1.0, std::fabs(o.value)));
    auto reg = oscillatory_oracle(o.a, o.b, o.mu, k, o.outer_sin);
    CHECK(std::fabs(reg.value - o.value) <= 1e-6);
  }
}

TEST_CASE("closed-form structure") {
  // substituting x -> x / sqrt(a): I(a, b, mu) = a^(-mu/2) I(1, b / sqrt(a), mu)
  for (double a : {0.2, 3.0}) {
    double lhs = oscillatory_sin_integral(a, 1.3, 0.7, Kernel::cos);
    double rhs = std::pow(a, -0.35) * oscillatory_sin_integral(1.0, 1.3 / std::sqrt(a), 0.7, Kernel::cos);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  // sine outer factor: linear in b as b -> 0
  double r1 = oscillatory_sin_integral(1, 1e-4, 0.5, Kernel::sin) / 1e-4;
  double r2 = oscillatory_sin_integral(1, 1e-5, 0.5, Kernel::sin) / 1e-5;
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-7));
  // cosine outer factor at b -> 0: int x^(mu-1) sin(a x^2) dx = Gamma(mu/2) sin(pi mu / 4) / (2 a^(mu/2))
  double limit = gamma_function(0.25) * std::sin(kPi / 8) / 2;
  CHECK(oscillatory_cos_integral(1, 1e-8, 0.5, Kernel::sin) == doctest::Approx(limit).epsilon(1e-10));
  CHECK_THROWS_AS(oscillatory_sin_integral(1, 1, 2.0, Kernel::sin), std::domain_error);
  CHECK_THROWS_AS(oscillatory_cos_integral(1, 1, 0.0, Kernel::cos), std::domain_error);
  CHECK_THROWS_AS(oscillatory_cos_integral(-1, 1, 0.5, Kernel::cos), std::domain_error);
}

TEST_CASE("kernel identity") {
  auto v = hankel_kernel_identity(1, 1, 1000);
  CHECK(v.target.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  CHECK(v.target.imag() == doctest::Approx(-std::cos(1.0)).epsilon(1e-15));
  CHECK(v.residual <= 1e-2);
  auto coarse = hankel_kernel_identity(1, 1, 100);
  CHECK(v.residual < coarse.residual);
  // x -> 0: target 1 / (i t)
  auto small = hankel_kernel_identity(1e-8, 2, 1000);
  CHECK(std::abs(small.target - std::complex<double>(0, -0.5)) <= 1e-8);
  CHECK(small.residual <= 1e-2);
}

TEST_CASE("Richardson weights and Gauss-Legendre") {
  double eps[] = {1e-1, 1e-2, 1e-3}, w[3];
  richardson_weights(eps, 3, w);
  CHECK(w[0] + w[1] + w[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w[0] * eps[0] + w[1] * eps[1] + w[2] * eps[2] == doctest::Approx(0.0).epsilon(1e-14));
  double x[16], gw[16];
  gauss_legendre(16, x, gw);
  double s0 = 0, s30 = 0;
  for (int i = 0; i < 16; ++i) {
    s0 += gw[i];
    s30 += gw[i] * std::pow(x[i], 30);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s30 == doctest::Approx(2.0 / 31).epsilon(1e-13));
}
