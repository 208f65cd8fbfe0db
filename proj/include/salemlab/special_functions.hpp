#pragma once

// Gamma, Bessel J0, Fresnel integrals, 2F3 and the oscillatory Mellin-type
// integrals int_0^inf x^(mu-1) {sin, cos}(a x^2) {sin, cos}(b x) dx.

#include <complex>

namespace salemlab {

/// Lanczos approximation (g = 7, 9 terms), reflection below 1/2.
double gamma_function(double x);

/// J0 below this argument uses the power series, above it the Hankel expansion.
inline constexpr double kBesselSwitch = 20.0;

/// J0(z), z >= 0. precision_bits above 64 routes the series through MPFR.
double bessel_j0(double z, unsigned precision_bits = 53);
/// Power series sum (-z^2/4)^k / k!^2 in long double (or MPFR above 64 bits).
double bessel_j0_series(double z, unsigned precision_bits = 64);
/// Hankel expansion sqrt(2/(pi z)) [P cos(z - pi/4) - Q sin(z - pi/4)], truncated at its smallest term.
double bessel_j0_asymptotic(double z);
/// The two-term form sqrt(2/(pi z)) [cos(z - pi/4) + sin(z - pi/4) / (8 z)].
double bessel_j0_two_term(double z);

struct FresnelValue {
  double cos_part = 0;    ///< int cos y^2 dy
  double sin_part = 0;    ///< int sin y^2 dy
  double tail_bound = 0;  ///< bound on the omitted int_T^inf of either part
};

/// Both infinite integrals, (1/2) sqrt(pi/2).
FresnelValue fresnel_limits();
/// int_0^T with tail bound 1/(2T) (infinite at T = 0).
FresnelValue fresnel_truncated(double T);
/// int_0^T by the power series in MPFR, any T >= 0.
FresnelValue fresnel_series(double T);
/// int_T^inf e^(i y^2) dy from the asymptotic series, T >= 6.
std::complex<double> fresnel_tail(double T);

struct TwoFThreeParams {
  double alpha1 = 0, alpha2 = 0;
  double beta1 = 1, beta2 = 1, beta3 = 1;
  double argument = 0;

  /// Throws std::domain_error when a beta is zero or a negative integer.
  void validate() const;
};

struct AsymptoticGamma {
  double gamma = 0;
  static AsymptoticGamma of(const TwoFThreeParams& p);
};

enum class HypergeometricMethod { series_double, series_extended, series_mpfr, asymptotic };

struct HypergeometricValue {
  double value = 0;
  double error_estimate = 0;
  HypergeometricMethod method = HypergeometricMethod::series_double;
  unsigned bits = 53;
};

/// 2F3 by series with precision escalation on cancellation, leading
/// asymptotic term once the required precision passes 4096 bits.
HypergeometricValue hyp2f3(const TwoFThreeParams& p, unsigned precision_bits = 53);
/// Gamma ratio * x^gamma / sqrt(pi) * cos(2 sqrt(x) + pi gamma) at argument -x, x > 0.
double hyp2f3_leading(const TwoFThreeParams& p);

enum class Kernel { sin, cos };

/// int_0^inf x^(mu-1) kernel(a x^2) sin(b x) dx in closed form.
double oscillatory_sin_integral(double a, double b, double mu, Kernel kernel);
/// int_0^inf x^(mu-1) kernel(a x^2) cos(b x) dx in closed form.
double oscillatory_cos_integral(double a, double b, double mu, Kernel kernel);

struct OscillatoryOracle {
  double value = 0;
  double spread = 0;  ///< |extrapolated - finest regularized value|
};

/// Independent numerical value of the same integrals: e^(-eps x) regularizer,
/// each regularized integral evaluated on the rotated ray x = r e^(i pi/4),
/// then Richardson extrapolation over eps in {1e-2, 1e-3, 1e-4}.
OscillatoryOracle oscillatory_oracle(double a, double b, double mu, Kernel kernel, bool outer_sin);

struct KernelIdentityValue {
  std::complex<double> value;   ///< extrapolated truncated integral
  std::complex<double> target;  ///< e^(ix/t) / (it)
  double residual = 0;
};

/// int_0^T J0(2 sqrt(x y)) e^(-ity) dy: e^(-eps y) regularizer, an
/// integration-by-parts estimate of the part beyond T, and Richardson
/// extrapolation over eps, 10 eps, 100 eps. Compared with e^(ix/t)/(it).
KernelIdentityValue hankel_kernel_identity(double x, double t, double T, double epsilon = 1e-3);

/// Richardson weights for extrapolating a smooth function of eps to eps = 0.
void richardson_weights(const double* eps, int count, double* weights);

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on the recurrence).
void gauss_legendre(int n, double* nodes, double* weights);

}  // namespace salemlab
