#pragma once

// Hankel-type representations of d_n and c_n, the oscillatory moment
// int_0^1 cos(2 pi n / t) sqrt(t) dq(t), and decay fits of coefficient tables.

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "salemlab/fourier_stieltjes.hpp"
#include "salemlab/quadrature.hpp"

namespace salemlab {

struct HankelOptions {
  QuadratureOptions quadrature{1e-10};  ///< for f(y) at the nodes
  unsigned jobs = 1;                    ///< node sampling threads; does not change results
};

/// f(y) sampled on Gauss-Legendre panels of [0, T] adapted to J0(2 sqrt(x y)).
struct HankelSamples {
  double x = 0, T = 0;
  std::vector<double> y, weight, kernel, f_cos, f_sin, f_error;
};

HankelSamples sample_hankel(long n, double T, const HankelOptions& options = {});

struct HankelValue {
  long n = 0;
  double T = 0;
  double epsilon = 0;
  double value = 0;      ///< extrapolated over eps in {100 eps, 10 eps, eps}
  double truncated = 0;  ///< the same sum with no regularizer
  std::array<double, 3> regularized{};
  double direct = 0;          ///< d_n or c_n from the Stieltjes quadrature
  double residual = 0;        ///< |value - direct|
  double sampling_error = 0;  ///< effect of the quadrature bounds on f at the nodes
  std::size_t nodes = 0;
};

/// (2/5) int_0^T J0(2 sqrt(2 pi n y)) f_s(y) e^(-eps y) dy, compared with d_n.
HankelValue hankel_dn(long n, double T, double epsilon, const HankelOptions& options = {});
/// int_0^T J0(2 sqrt(2 pi n y)) f_c(y) e^(-eps y) dy, compared with c_n.
HankelValue hankel_cn(long n, double T, double epsilon, const HankelOptions& options = {});

struct HankelSuite {
  HankelValue d, c;
  std::complex<double> combined;  ///< (5/2) i d - c from the two values above
  std::complex<double> kernel;    ///< -int J0 e^(-iy) f(y) dy, same truncation and extrapolation
  double combination_residual = 0;
  double combination_bound = 0;
};

/// Both representations and the complex combination from one set of samples.
HankelSuite hankel_suite(long n, double T, double epsilon, const HankelOptions& options = {});
HankelValue hankel_dn(const HankelSamples& s, long n, double epsilon, const QuadratureOptions& direct = {});
HankelValue hankel_cn(const HankelSamples& s, long n, double epsilon, const QuadratureOptions& direct = {});

/// int_0^1 cos(2 pi n / t) sqrt(t) dq(t), computed as int_1^inf cos(2 pi n u) u^(-1/2) dq(u).
/// n = 0 gives int_0^1 sqrt(t) dq(t).
QuadratureResult oscillatory_moment(long n, const QuadratureOptions& options = {});

struct BlockSup {
  int block = 0;     ///< k for [2^k, 2^(k+1))
  long argmax = 0;   ///< n attaining the supremum
  double sup = 0;
};

struct DecayFit {
  std::pair<long, long> n_range{0, 0};
  double mu_hat = 0;
  double intercept = 0;
  double r_squared = 0;
  double mu_stderr = 0;  ///< standard error of the block slope (0 with two blocks)
  double raw_mu_hat = 0;  ///< per-n regression of log |d_n|
  double raw_r_squared = 0;
  std::vector<BlockSup> tail_sup;
};

/// Least squares of log sup_block |d_n| against log argmax n over dyadic blocks
/// clipped to [n_min, n_max]. Throws std::invalid_argument on a range the table
/// does not cover, n_min < 8, an empty block or fewer than two blocks.
DecayFit fit_decay(const std::vector<CoefficientRecord>& records, long n_min, long n_max);
/// Same fit over (n, value) pairs.
DecayFit fit_decay(const std::vector<std::pair<long, double>>& values, long n_min, long n_max);

}  // namespace salemlab
