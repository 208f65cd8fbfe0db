#include "salemlab/shape_moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace salemlab {

namespace {

constexpr int kTerms = ShapeMoments::kMaxOrder + 1;

struct Binomials {
  std::array<std::array<double, kTerms>, kTerms> c{};
  Binomials() {
    for (int n = 0; n < kTerms; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0.0);
    }
  }
};

const Binomials& binomials() {
  static const Binomials b;
  return b;
}

// E[(v - 1/2)^k] for tiny rho: v = 1/(1 + rho g), E[g] = int (1-s)/s dq = 3/2.
void small_rho_moments(double rho, std::span<double> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    double base = std::ldexp(1.0, -static_cast<int>(k));
    out[k] = base * (1.0 - 3.0 * static_cast<double>(k) * rho);
  }
}

// Bound on the error of small_rho_moments, using E[g^2] <= 7.
double small_rho_error(int k, double rho) { return 7.0 * (k * k + k) * rho * rho; }

}  // namespace

const ShapeMoments& ShapeMoments::instance() {
  static const ShapeMoments table;
  return table;
}

ShapeMoments::ShapeMoments()
    : log_min_(std::log(kRhoMin)), panel_width_(-std::log(kRhoMin) / kPanels),
      coefficients_(static_cast<std::size_t>(kPanels) * kNodes) {
  // Chebyshev nodes of the first kind on each panel.
  std::vector<double> node_rho(static_cast<std::size_t>(kPanels) * kNodes);
  std::array<double, kNodes> theta{};
  for (int j = 0; j < kNodes; ++j) theta[j] = std::numbers::pi * (j + 0.5) / kNodes;
  for (int p = 0; p < kPanels; ++p) {
    double lo = log_min_ + p * panel_width_;
    for (int j = 0; j < kNodes; ++j) {
      double x = std::cos(theta[j]);
      node_rho[p * kNodes + j] = std::exp(lo + 0.5 * (x + 1.0) * panel_width_);
    }
  }

  std::vector<std::array<double, kTerms>> values(node_rho.size());
  for (auto& v : values) {
    v.fill(0.0);
    v[0] = 1.0;
  }

  auto fit = [&]() {
    for (int p = 0; p < kPanels; ++p) {
      for (int i = 0; i < kNodes; ++i) {
        std::array<double, kTerms> c{};
        for (int j = 0; j < kNodes; ++j) {
          double w = std::cos(i * theta[j]);
          const auto& v = values[p * kNodes + j];
          for (int k = 0; k < kTerms; ++k) c[k] += w * v[k];
        }
        double scale = (i == 0 ? 1.0 : 2.0) / kNodes;
        for (auto& x : c) x *= scale;
        coefficients_[p * kNodes + i] = c;
      }
    }
  };

  fit();
  // contraction factor 1/2: 64 sweeps reach the double-precision floor
  std::array<double, kTerms> next{};
  for (int sweep = 0; sweep < 64; ++sweep) {
    std::vector<std::array<double, kTerms>> updated(values.size());
    for (std::size_t n = 0; n < node_rho.size(); ++n) {
      apply_operator(node_rho[n], next);
      updated[n] = next;
    }
    values = std::move(updated);
    fit();
  }

  // Residual of the fixed-point equation on a grid finer than the nodes.
  constexpr int kCheck = 6000;
  std::array<double, kTerms> table{}, image{};
  for (int i = 0; i <= kCheck; ++i) {
    double rho = std::exp(log_min_ * (1.0 - static_cast<double>(i) / kCheck));
    evaluate_table(rho, table);
    apply_operator(rho, image);
    for (int k = 0; k < kTerms; ++k) residual_[k] = std::max(residual_[k], std::fabs(image[k] - table[k]));
  }
  // |e_k| <= 1/2 (mu^k + (1-mu)^k) |e_k| + coupling_k max_{j<k} |e_j| + residual_k,
  // coupling_k = max over mu in [1/2, 1] of the lower-order weight.
  double inherited = 0;
  for (int k = 0; k < kTerms; ++k) {
    double coupling = 0;
    for (int i = 0; i <= 1000; ++i) {
      double mu = 0.5 + 0.5 * i / 1000.0;
      double w = 0.5 * (std::pow((1.0 + mu) / 2.0, k) - std::pow(mu, k) + std::pow(1.0 - mu / 2.0, k) -
                        std::pow(1.0 - mu, k));
      coupling = std::max(coupling, w);
    }
    double floor = 8 * std::numeric_limits<double>::epsilon() + small_rho_error(k, kRhoMin);
    error_bound_[k] = k == 0 ? 0.0 : 2.0 * (residual_[k] + 1.01 * coupling * inherited) + floor;
    inherited = std::max(inherited, error_bound_[k]);
  }
}

void ShapeMoments::evaluate_table(double rho, std::span<double> out) const {
  double v = std::log(rho);
  int p = std::clamp(static_cast<int>((v - log_min_) / panel_width_), 0, kPanels - 1);
  double lo = log_min_ + p * panel_width_;
  double x = std::clamp(2.0 * (v - lo) / panel_width_ - 1.0, -1.0, 1.0);
  std::array<double, kNodes> t{};
  t[0] = 1.0;
  t[1] = x;
  for (int i = 2; i < kNodes; ++i) t[i] = 2.0 * x * t[i - 1] - t[i - 2];
  std::size_t count = std::min<std::size_t>(out.size(), kTerms);
  std::fill(out.begin(), out.end(), 0.0);
  for (int i = 0; i < kNodes; ++i) {
    const auto& c = coefficients_[p * kNodes + i];
    for (std::size_t k = 0; k < count; ++k) out[k] += t[i] * c[k];
  }
  out[0] = 1.0;
}

void ShapeMoments::central_moments(double rho, std::span<double> out) const {
  if (rho > 1.0) {
    central_moments(1.0 / rho, out);
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return;
  }
  if (rho < kRhoMin) {
    small_rho_moments(rho, out);
    return;
  }
  evaluate_table(rho, out);
}

void ShapeMoments::apply_operator(double rho, std::span<double> out) const {
  const auto& binom = binomials().c;
  double mu = 1.0 / (1.0 + rho);
  double a = (mu - 1.0) / 2.0;
  double b = mu / 2.0;
  std::array<double, kTerms> left{}, right{};
  central_moments(rho / (1.0 + rho), left);
  central_moments(1.0 + rho, right);
  std::array<double, kTerms> mu_pow{}, nmu_pow{}, a_pow{}, b_pow{};
  mu_pow[0] = nmu_pow[0] = a_pow[0] = b_pow[0] = 1.0;
  for (int k = 1; k < kTerms; ++k) {
    mu_pow[k] = mu_pow[k - 1] * mu;
    nmu_pow[k] = nmu_pow[k - 1] * (1.0 - mu);
    a_pow[k] = a_pow[k - 1] * a;
    b_pow[k] = b_pow[k - 1] * b;
  }
  std::size_t count = std::min<std::size_t>(out.size(), kTerms);
  for (std::size_t k = 0; k < count; ++k) {
    double s = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      s += binom[k][j] * (mu_pow[j] * a_pow[k - j] * left[j] + nmu_pow[j] * b_pow[k - j] * right[j]);
    }
    out[k] = 0.5 * s;
  }
}

}  // namespace salemlab
