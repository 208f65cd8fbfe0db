#pragma once

// Fourier-Stieltjes transforms of dq:
//   f(x) = int_0^1 e^(ixt) dq(t),  F(x) = int_0^inf e^(ixt) dq(t),
// the coefficients d_n = f_c(2 pi n), c_n = int_0^1 t sin(2 pi n t) dq(t),
// the coefficients d_{n,m} of dq^m, and residuals of the identities relating them.

#include <string>
#include <vector>

#include "salemlab/quadrature.hpp"

namespace salemlab {

struct TransformValue {
  double x = 0;
  double re = 0, im = 0;
  double re_error = 0, im_error = 0;
  bool converged = false;
  double error_bound() const { return re_error + im_error; }
};

TransformValue transform_f(double x, const QuadratureOptions& options = {});
TransformValue transform_F(double x, const QuadratureOptions& options = {});
/// int_1^inf e^(ixt) dq(t), so that F = f + G.
TransformValue transform_G(double x, const QuadratureOptions& options = {});

enum class CoefficientMethod { direct, hankel, extension };
std::string to_string(CoefficientMethod m);

struct CoefficientRecord {
  long n = 0;
  double d_n = 0;
  double c_n = 0;
  double error_bound = 0;  ///< max of d_error and c_error
  CoefficientMethod method = CoefficientMethod::direct;
  double d_error = 0;
  double c_error = 0;
  double sine_value = 0;  ///< f_s(2 pi n), zero in exact arithmetic
  double sine_error = 0;
  bool converged = false;
};

struct CoefficientOptions {
  QuadratureOptions quadrature;
  bool with_sine_check = true;
  bool with_c = true;
};

/// n = 0 is the extension row d_0 = 1, c_0 = 0.
CoefficientRecord coefficient_dn(long n, const CoefficientOptions& options = {});
/// Rows 0..n_max, computed in parallel, ordered by n.
std::vector<CoefficientRecord> coefficient_table(long n_max, const CoefficientOptions& options, unsigned jobs);

struct DerivativeCheck {
  double fd_re = 0, fd_im = 0;          ///< (f(x+h) - f(x-h)) / 2h at x = 2 pi n
  double relation_re = 0, relation_im = 0;  ///< -c_n and d_n / 2
  double direct_re = 0, direct_im = 0;  ///< -int t sin(xt) dq and int t cos(xt) dq
  double residual = 0;                  ///< |fd - relation|, both parts summed
  double bound = 0;                     ///< h^2/6 + finite-difference noise + quadrature bounds
  double direct_residual = 0;           ///< |direct - relation|
  double direct_bound = 0;
  bool pass() const { return residual <= bound && direct_residual <= direct_bound; }
};

DerivativeCheck derivative_relation_check(long n, double h, const QuadratureOptions& options = {});

/// d_{n,m} = int_0^1 cos(2 pi n t) dq^m(t).
QuadratureResult power_coefficient(long n, unsigned m, const QuadratureOptions& options = {});

struct IdentityRow {
  std::string identity;
  double argument = 0;
  double residual = 0;
  double bound = 0;
  bool pass() const { return residual <= bound; }
};

struct IdentityReport {
  std::vector<IdentityRow> rows;
  bool all_pass() const;
  /// Rows that violate their bound.
  std::vector<IdentityRow> failures() const;
};

/// d_{n,M} - sum_{k=1}^{M} (-1)^(k+1) binom(M, k) d_{n,k} for M = 1..m_max, n = 1..n_max.
IdentityReport verify_power_recurrence(long n_max, unsigned m_max, const QuadratureOptions& options = {});

/// Reflection f(x) = e^(ix) f(-x), the half-angle relation, f = (1 - e^(ix)/2) F,
/// the cosine and sine ratio identities for int_1^inf, the first-moment
/// relation and its small-x form, and d_n = 2 int t cos(2 pi n t) dq for n <= n_max.
IdentityReport verify_identity_suite(const std::vector<double>& x_grid, long n_max,
                                     const QuadratureOptions& options = {});

/// 50 evenly spaced points on [0, 100].
std::vector<double> default_identity_grid();

}  // namespace salemlab
