#pragma once

// Minkowski question mark function ?(x), written q(x) throughout.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>

#include "salemlab/exact.hpp"

namespace salemlab {

/// Hölder exponent of q: log 2 / (2 log phi).
inline const double kHolderExponent = std::numbers::ln2 / (2.0 * std::log(std::numbers::phi));

/// Euclidean continued-fraction expansion of x >= 0 in canonical form.
ContinuedFraction continued_fraction_of(const Fraction& x);

/// Exact q(x) for rational x in [0, 1].
DyadicValue question_mark_exact(const Fraction& x);

/// Exact q(x) for rational x >= 0, using q(x) = 2 - q(1/x) above 1.
DyadicValue question_mark_extended(const Fraction& x);

/// q(x) for rational x in [0, 1] with the dyadic series cut once the partial
/// sums of the continued fraction exceed `exponent_cap`. The discarded
/// alternating tail is below 2^(1 - exponent_cap).
DyadicValue question_mark_truncated(const Fraction& x, std::uint64_t exponent_cap);

/// q(x) for finite x >= 0, accurate to 2^-precision_bits before the final
/// rounding to double. The exact binary rational of x is expanded.
double question_mark_float(double x, unsigned precision_bits = 64);

struct InverseResult {
  Fraction x;          ///< Stern-Brocot node reached by the descent
  bool exact = false;  ///< q(x) == y exactly
  unsigned depth = 0;  ///< number of descent steps
};

/// Stern-Brocot descent for x with |q(x) - y| <= 2^-precision_bits, y in [0, 1].
InverseResult question_mark_inverse(const DyadicValue& y, unsigned precision_bits);
double question_mark_inverse(double y, unsigned precision_bits = 64);

struct FunctionalEquationReport {
  std::size_t samples = 0;
  DyadicValue max_reflection;  ///< max |q(x) + q(1-x) - 1|
  DyadicValue max_halving;     ///< max |q(x) - 2 q(x/(x+1))|
  DyadicValue max_reciprocal;  ///< max |q(x) + q(1/x) - 2|, x in (0, 1]
  bool all_zero() const {
    return max_reflection.is_zero() && max_halving.is_zero() && max_reciprocal.is_zero();
  }
};

/// Exact residuals of the three functional equations on random rationals
/// p/d with 1 <= d <= max_denominator.
FunctionalEquationReport verify_functional_equations(std::size_t sample_count, std::uint64_t seed,
                                                     std::uint64_t max_denominator = 10000);

/// log|q(x) - q(y)| / log|x - y| for a pair of distinct points in [0, 1].
double local_holder_exponent(double x, double y);

struct HolderProbeResult {
  double min_exponent = 0;
  double argmin_x = 0;
  double argmin_separation = 0;
  std::size_t pairs = 0;
};

/// Minimum local exponent over random close pairs with separations drawn
/// log-uniformly from [min_separation, max_separation].
HolderProbeResult holder_exponent_probe(std::size_t pair_count, std::uint64_t seed,
                                        double min_separation = 1e-9, double max_separation = 1e-6);

}  // namespace salemlab
