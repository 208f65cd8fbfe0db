#pragma once

// Certified integration against dq on [0, 1], [1, inf) and [0, inf), and
// against dq^m on [0, 1].
//
// Every Stern-Brocot interval carries mass exactly 2^-depth. On a leaf the
// default rule expands f around the arithmetic midpoint p,
//
//   int f dq = m sum_{k<K} f^(k)(p) / k! w^k C_k(rho) + R,
//   |R| <= m sup|f^(K)| / K! w^K C_K(rho)            (K even),
//
// with the normalized moments C_k of shape_moments.hpp. Order 1 is the plain
// midpoint rule m f(p) with bound m osc(f). Leaves touching 0 or infinity
// where f is unbounded are bounded through the masses 2^-j of [1/(j+1), 1/j]
// and [j, j+1].

#include <cstddef>
#include <cstdint>
#include <vector>

#include "salemlab/exact.hpp"
#include "salemlab/integrand.hpp"

namespace salemlab {

struct SternBrocotInterval {
  Fraction left;
  Fraction right;
  unsigned depth = 0;
  DyadicValue mass;
};

inline constexpr unsigned kDefaultDepthCap = 40;
inline constexpr unsigned kHardDepthCap = 60;

/// All 2^depth intervals of the given depth, sorted by left endpoint.
/// Throws ResourceError when depth exceeds depth_cap.
std::vector<SternBrocotInterval> partition(unsigned depth, unsigned depth_cap = kDefaultDepthCap);

enum class QuadratureRule { midpoint, taylor };

struct QuadratureOptions {
  double target_error = 1e-8;
  unsigned depth_cap = kDefaultDepthCap;
  unsigned min_depth = 0;
  QuadratureRule rule = QuadratureRule::taylor;
  unsigned order = 12; ///< even Taylor order K, at most 16
  unsigned jobs = 1;   ///< worker threads; does not change results
  std::size_t max_intervals = 50'000'000;
};

struct QuadratureResult {
  double value = 0;
  double error_bound = 0;
  std::size_t intervals_used = 0;
  unsigned max_depth = 0;
  bool converged = false;
  bool certified = true;  ///< false when a black-box integrand lacked an oscillation bound
};

/// Minimum depth giving 8 intervals per period of cos(omega t): ceil(log2(8 omega / 2pi)).
unsigned frequency_min_depth(double omega);

QuadratureResult integrate_01(const SmoothIntegrand& f, const QuadratureOptions& options = {});
QuadratureResult integrate_01(const GenericIntegrand& f, const QuadratureOptions& options = {});

/// int over [1, inf).
QuadratureResult integrate_1inf(const SmoothIntegrand& f, const QuadratureOptions& options = {});

/// int over [0, inf) as int_0^1 f dq + int_1^inf f dq.
QuadratureResult integrate_0inf(const SmoothIntegrand& f, const QuadratureOptions& options = {});
/// Black-box form: int_0^1 f(t) dq(t) + int_0^1 f(1/u) dq(u).
QuadratureResult integrate_0inf(const GenericIntegrand& f, const QuadratureOptions& options = {});

/// int_0^1 f dq^m.
QuadratureResult integrate_power_measure(const SmoothIntegrand& f, unsigned m,
                                         const QuadratureOptions& options = {});

/// sum over the depth-d partition of q(right)^m - q(left)^m, in exact dyadic arithmetic.
DyadicValue power_measure_total_mass(unsigned depth, unsigned m);

/// Sum of two results; bounds add.
QuadratureResult combine(const QuadratureResult& a, const QuadratureResult& b, double scale_b = 1.0);

}  // namespace salemlab
