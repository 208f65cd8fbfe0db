#pragma once

// Normalized moments of dq restricted to a Stern-Brocot interval.
//
// The interval [a/b, c/d] (cb - ad = 1) is the image of [0, 1] under a
// Moebius map that also carries dq to 2^-depth dq. In the normalized
// coordinate v = (t - a/b) / (c/d - a/b) the restricted measure depends only
// on rho = b / d. Writing C_k(rho) = E[(v - 1/2)^k], the mediant split gives
//
//   C_k(rho) = 1/2 sum_j binom(k, j) [ mu^j A^(k-j) C_j(rho / (1 + rho))
//                                     + (1 - mu)^j B^(k-j) C_j(1 + rho) ]
//
// with mu = 1/(1 + rho), A = (mu - 1)/2, B = mu/2, and the reflection
// C_k(1/rho) = (-1)^k C_k(rho). The right side is a contraction with factor
// 1/2, so the moments are its unique bounded fixed point. They are tabulated
// as piecewise Chebyshev series in log(rho) over [rho_min, 1].

#include <array>
#include <span>
#include <vector>

namespace salemlab {

class ShapeMoments {
public:
  static constexpr int kMaxOrder = 16;
  static constexpr double kRhoMin = 1e-9;

  /// Process-wide table, built on first use.
  static const ShapeMoments& instance();

  /// Writes C_0..C_{out.size()-1} at rho in (0, inf).
  void central_moments(double rho, std::span<double> out) const;

  /// Bound on |C_k(table) - C_k(true)| over all rho.
  double error_bound(int k) const { return error_bound_[k]; }
  /// Largest fixed-point residual seen on the verification grid.
  double residual(int k) const { return residual_[k]; }

  ShapeMoments();

private:
  static constexpr int kPanels = 23;
  static constexpr int kNodes = 22;

  void evaluate_table(double rho, std::span<double> out) const;
  void apply_operator(double rho, std::span<double> out) const;

  double log_min_;
  double panel_width_;
  // coefficients_[panel][node][k]
  std::vector<std::array<double, kMaxOrder + 1>> coefficients_;
  std::array<double, kMaxOrder + 1> error_bound_{};
  std::array<double, kMaxOrder + 1> residual_{};
};

}  // namespace salemlab
