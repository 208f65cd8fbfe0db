#pragma once

// Integrands with enough structure for certified Taylor bounds: a constant
// times a product of elementary factors.

#include <functional>
#include <span>
#include <vector>

namespace salemlab {

struct Factor {
  enum class Kind {
    trig,            ///< cos(omega t + phase)
    power,           ///< t^lambda, t > 0
    reflected_power  ///< (1 - t)^lambda, t < 1
  };
  Kind kind = Kind::trig;
  double a = 0;  ///< omega or lambda
  double b = 0;  ///< phase (trig only)

  static Factor cosine(double omega) { return {Kind::trig, omega, 0.0}; }
  static Factor sine(double omega);
  static Factor trig(double omega, double phase) { return {Kind::trig, omega, phase}; }
  static Factor power(double lambda) { return {Kind::power, lambda, 0.0}; }
  static Factor reflected_power(double lambda) { return {Kind::reflected_power, lambda, 0.0}; }

  /// g(t), g'(t), ..., g^(n-1)(t).
  void derivatives(double t, std::span<double> out) const;
  /// Upper bound of |g^(j)| on [lo, hi]; +inf when unbounded there.
  double sup_derivative(int j, double lo, double hi) const;
};

class SmoothIntegrand {
public:
  SmoothIntegrand() = default;
  explicit SmoothIntegrand(double coefficient, std::vector<Factor> factors = {});

  static SmoothIntegrand constant(double c) { return SmoothIntegrand(c); }
  static SmoothIntegrand cosine(double omega) { return SmoothIntegrand(1.0, {Factor::cosine(omega)}); }
  static SmoothIntegrand sine(double omega) { return SmoothIntegrand(1.0, {Factor::sine(omega)}); }
  static SmoothIntegrand monomial(double lambda) { return SmoothIntegrand(1.0, {Factor::power(lambda)}); }

  SmoothIntegrand operator*(const Factor& g) const;
  SmoothIntegrand operator*(double c) const;

  double operator()(double t) const;
  /// f(t), f'(t), ..., f^(n-1)(t) by the Leibniz rule.
  void derivatives(double t, std::span<double> out) const;
  /// Upper bound of |f^(j)| on [lo, hi]; hi may be +inf.
  double sup_derivative(int j, double lo, double hi) const;

  /// Largest angular frequency among the trig factors.
  double max_frequency() const;
  /// Exponent of t after merging power factors (0 if none).
  double power_exponent() const { return lambda_; }
  /// Exponent of (1 - t) after merging (0 if none).
  double reflected_exponent() const { return reflected_lambda_; }
  double coefficient() const { return coefficient_; }
  const std::vector<Factor>& trig_factors() const { return trig_; }

private:
  double coefficient_ = 1.0;
  std::vector<Factor> trig_;
  double lambda_ = 0;
  double reflected_lambda_ = 0;
};

/// Black-box integrand with an optional oscillation bound osc(lo, hi) >= sup - inf.
struct GenericIntegrand {
  std::function<double(double)> f;
  std::function<double(double, double)> oscillation;
};

}  // namespace salemlab
