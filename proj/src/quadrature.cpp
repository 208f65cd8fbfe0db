#include "salemlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "salemlab/errors.hpp"
#include "salemlab/minkowski.hpp"
#include "salemlab/parallel.hpp"
#include "salemlab/shape_moments.hpp"

namespace salemlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr unsigned kSeedDepth = 6;

// [a/b, c/d] with cb - ad = 1; d = 0 encodes the tail [a/b, inf).
// q(a/b) = qnum / 2^depth inside [0, 1].
struct Node {
  std::uint64_t a, b, c, d;
  std::uint64_t qnum;
  unsigned depth;

  Node left() const { return {a, b, a + c, b + d, 2 * qnum, depth + 1}; }
  Node right() const { return {a + c, b + d, c, d, 2 * qnum + 1, depth + 1}; }
  double mass() const { return std::ldexp(1.0, -static_cast<int>(depth)); }
};

constexpr Node kUnitRoot{0, 1, 1, 1, 0, 0};
constexpr Node kUpperRoot{1, 1, 1, 0, 0, 0};

struct Estimate {
  double value = 0;
  double error = 0;
};

class Neumaier {
public:
  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double result() const { return sum_ + comp_; }

private:
  double sum_ = 0, comp_ = 0;
};

// sum_{j >= k} g(j) 2^-j with g(j) = (j+1)^e for e >= 0 and j^e for e < 0:
// the bound of t^e over [j, j+1] (or of t^-e over [1/(j+1), 1/j]) times its mass.
double tail_sum(std::uint64_t k, double e) {
  auto g = [e](double j) { return e >= 0 ? std::pow(j + 1.0, e) : std::pow(j, e); };
  double sum = 0;
  double j = static_cast<double>(k);
  for (int step = 0; step < 100000; ++step, j += 1.0) {
    double term = g(j) * std::ldexp(1.0, -static_cast<int>(std::min(j, 2000.0)));
    if (j > 2000.0) return sum + term;  // unreachable for the depths used
    double ratio = g(j + 1.0) / g(j) / 2.0;
    if (ratio < 0.9 && term <= 1e-18 * sum) return (sum + term / (1.0 - ratio)) * (1.0 + 4 * kEps);
    sum += term;
  }
  return kInf;
}

double factorial(int k) {
  double r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

class TaylorRule {
public:
  TaylorRule(const SmoothIntegrand& f, unsigned order, QuadratureRule rule, bool upper)
      : f_(f), order_(rule == QuadratureRule::midpoint ? 1 : order), upper_(upper) {
    if (rule == QuadratureRule::taylor && (order < 2 || order % 2 != 0 || order > ShapeMoments::kMaxOrder))
      throw std::invalid_argument("quadrature: Taylor order must be even and in [2, 16]");
    if (upper && f.reflected_exponent() != 0)
      throw std::domain_error("quadrature: (1 - t)^lambda is not defined on [1, inf)");
    for (int k = 0; k <= ShapeMoments::kMaxOrder; ++k) {
      inv_factorial_[k] = 1.0 / factorial(k);
      table_error_[k] = ShapeMoments::instance().error_bound(k);
    }
  }

  // Nodes whose estimate is a pure bound (value 0).
  bool is_tail(const Node& n) const {
    if (n.d == 0) return true;
    if (!upper_ && n.a == 0 && f_.power_exponent() < 0) return true;
    if (!upper_ && n.c == n.d && f_.reflected_exponent() < 0) return true;
    return false;
  }

  Estimate tail(const Node& n) const {
    double lambda = f_.power_exponent();
    double rho_lambda = f_.reflected_exponent();
    double trig = std::fabs(f_.coefficient());
    if (n.d == 0) return {0.0, trig * tail_sum(n.a, lambda)};
    double lo = static_cast<double>(n.a) / static_cast<double>(n.b);
    double hi = static_cast<double>(n.c) / static_cast<double>(n.d);
    bool at_zero = n.a == 0 && lambda < 0;
    bool at_one = n.c == n.d && rho_lambda < 0;
    if (at_zero && at_one) return {0.0, kInf};
    if (at_zero) {
      double other = rho_lambda == 0 ? 1.0 : Factor::reflected_power(rho_lambda).sup_derivative(0, lo, hi);
      return {0.0, trig * other * tail_sum(n.d, -lambda)};
    }
    double other = lambda == 0 ? 1.0 : Factor::power(lambda).sup_derivative(0, lo, hi);
    return {0.0, trig * other * tail_sum(n.b, -rho_lambda)};
  }

  // Unit-mass estimate of int f dq over n divided by the interval mass,
  // together with the oscillation bound used by weighted measures.
  struct Local {
    Estimate normalized;
    double midpoint_value;
    double oscillation;
  };

  Local local(const Node& n) const {
    double bd = static_cast<double>(n.b) * static_cast<double>(n.d);
    double w = 1.0 / bd;
    double lo = static_cast<double>(n.a) / static_cast<double>(n.b);
    double hi = lo + w;
    double p = lo + 0.5 * w;
    std::array<double, ShapeMoments::kMaxOrder + 1> deriv{};
    unsigned need = std::max(order_, 2u);
    f_.derivatives(p, std::span<double>(deriv.data(), need));
    double sup0 = f_.sup_derivative(0, lo, hi);
    double sup1 = f_.sup_derivative(1, lo, hi);
    // p carries a relative rounding error of a few ulps
    double slope = std::isfinite(sup1) ? sup1 : 2 * std::fabs(deriv[1]);
    double placement = slope * (std::fabs(p) + w) * 4 * kEps;
    double oscillation = std::min(sup1 * 0.5 * w, sup0 + std::fabs(deriv[0])) + placement;

    Estimate mid{deriv[0], oscillation + 4 * kEps * std::fabs(deriv[0])};
    Local out{mid, deriv[0], oscillation};
    if (order_ == 1) return out;

    std::array<double, ShapeMoments::kMaxOrder + 1> c{};
    double rho = static_cast<double>(n.b) / static_cast<double>(n.d);
    ShapeMoments::instance().central_moments(rho, std::span<double>(c.data(), order_ + 1));
    double value = 0, magnitude = 0, table = 0, wk = 1;
    for (unsigned k = 0; k < order_; ++k) {
      double coef = deriv[k] * wk * inv_factorial_[k];
      value += coef * c[k];
      magnitude += std::fabs(coef * c[k]);
      table += std::fabs(coef) * table_error_[k];
      wk *= w;
    }
    double remainder = f_.sup_derivative(static_cast<int>(order_), lo, hi) * wk * inv_factorial_[order_] * c[order_];
    double error = remainder + table + 8 * kEps * magnitude + placement;
    if (std::isfinite(error) && error < mid.error) out.normalized = {value, error};
    return out;
  }

  Estimate operator()(const Node& n) const {
    if (is_tail(n)) return tail(n);
    auto l = local(n);
    double m = n.mass();
    return {l.normalized.value * m, l.normalized.error * m};
  }

private:
  const SmoothIntegrand& f_;
  unsigned order_;
  bool upper_;
  std::array<double, ShapeMoments::kMaxOrder + 1> inv_factorial_{};
  std::array<double, ShapeMoments::kMaxOrder + 1> table_error_{};
};

// int f dq^m on a node: with q = q_l + 2^-D Q, dq^m = m q^(m-1) dq expands into
// m sum_j binom(m-1, j) q_l^(m-1-j) 2^-Dj Q^j dq and int Q^j dq = 2^-D / (j+1).
class PowerRule {
public:
  PowerRule(const SmoothIntegrand& f, unsigned m, unsigned order, QuadratureRule rule)
      : base_(f, order, rule, false), m_(m) {}

  Estimate operator()(const Node& n) const {
    double ql = std::ldexp(static_cast<double>(n.qnum), -static_cast<int>(n.depth));
    double mass = n.mass();
    double md = static_cast<double>(m_);
    if (base_.is_tail(n)) {
      auto t = base_.tail(n);
      return {0.0, t.error * md * std::pow(ql + mass, md - 1.0)};
    }
    auto l = base_.local(n);
    double lead = md * std::pow(ql, md - 1.0);
    double value = lead * l.normalized.value * mass;
    double error = lead * l.normalized.error * mass;
    double binom = 1;
    double mass_power = mass;
    for (unsigned j = 1; j < m_; ++j) {
      binom = binom * (m_ - j) / j;
      mass_power *= mass;
      double weight = md * binom * std::pow(ql, md - 1.0 - j) * mass_power / (j + 1.0);
      value += weight * l.midpoint_value;
      error += weight * l.oscillation;
    }
    return {value, error * (1 + 8 * kEps) + 8 * kEps * std::fabs(value)};
  }

private:
  TaylorRule base_;
  unsigned m_;
};

class GenericRule {
public:
  GenericRule(const GenericIntegrand& f, bool reciprocal) : f_(f), reciprocal_(reciprocal) {}

  Estimate operator()(const Node& n) const {
    double w = 1.0 / (static_cast<double>(n.b) * static_cast<double>(n.d));
    double lo = static_cast<double>(n.a) / static_cast<double>(n.b);
    double hi = lo + w;
    double p = lo + 0.5 * w;
    auto eval = [&](double u) { return reciprocal_ ? f_.f(1.0 / u) : f_.f(u); };
    double fp = eval(p);
    double osc;
    if (f_.oscillation) {
      osc = reciprocal_ ? f_.oscillation(1.0 / hi, lo > 0 ? 1.0 / lo : kInf) : f_.oscillation(lo, hi);
    } else {
      double flo = lo > 0 || !reciprocal_ ? eval(lo) : fp;
      osc = std::max(std::fabs(eval(hi) - fp), std::fabs(flo - fp));
    }
    double m = n.mass();
    return {fp * m, (osc + 4 * kEps * std::fabs(fp)) * m};
  }

private:
  const GenericIntegrand& f_;
  bool reciprocal_;
};

struct PassResult {
  double value = 0;
  double error = 0;
  double capped_error = 0;  ///< from leaves that wanted to split at the depth cap
  std::size_t leaves = 0;
  unsigned max_depth = 0;
  bool aborted = false;
};

struct SeedResult {
  Neumaier sum;
  double error = 0;
  double capped_error = 0;
  std::size_t leaves = 0;
  unsigned max_depth = 0;
};

template <class Rule>
PassResult run_pass(const std::vector<Node>& seeds, const Rule& rule, double tau, unsigned min_depth,
                    unsigned depth_cap, unsigned jobs, std::size_t max_intervals) {
  std::vector<SeedResult> parts(seeds.size());
  std::atomic<std::size_t> total_leaves{0};
  std::atomic<bool> abort{false};
  parallel_for(seeds.size(), jobs, [&](std::size_t i) {
    SeedResult& out = parts[i];
    std::vector<Node> stack{seeds[i]};
    while (!stack.empty()) {
      if (abort.load(std::memory_order_relaxed)) return;
      Node n = stack.back();
      stack.pop_back();
      bool splittable = n.depth < depth_cap;
      if (n.depth < min_depth && splittable) {
        stack.push_back(n.right());
        stack.push_back(n.left());
        continue;
      }
      Estimate e = rule(n);
      if (e.error > tau && splittable) {
        stack.push_back(n.right());
        stack.push_back(n.left());
        continue;
      }
      out.sum.add(e.value);
      out.error += e.error;
      if (e.error > tau) out.capped_error += e.error;
      ++out.leaves;
      out.max_depth = std::max(out.max_depth, n.depth);
      if ((out.leaves & 1023) == 0 && total_leaves.fetch_add(1024) > max_intervals) abort = true;
    }
  });
  PassResult r;
  if (abort) {
    r.aborted = true;
    return r;
  }
  Neumaier sum;
  for (const auto& p : parts) {
    sum.add(p.sum.result());
    r.error += p.error;
    r.capped_error += p.capped_error;
    r.leaves += p.leaves;
    r.max_depth = std::max(r.max_depth, p.max_depth);
  }
  r.value = sum.result();
  // the error sum itself is rounded
  r.error *= 1.0 + static_cast<double>(r.leaves + 4) * kEps;
  return r;
}

template <class Rule>
QuadratureResult drive(Node root, const Rule& rule, const QuadratureOptions& options) {
  if (!(options.target_error > 0)) throw std::invalid_argument("quadrature: target_error must be positive");
  if (options.depth_cap > kHardDepthCap) throw ResourceError("quadrature: depth cap above the supported maximum");
  unsigned cap = options.depth_cap;
  unsigned seed_depth = std::min(kSeedDepth, cap);
  std::vector<Node> seeds{root};
  for (unsigned level = 0; level < seed_depth; ++level) {
    std::vector<Node> next;
    next.reserve(seeds.size() * 2);
    for (const auto& n : seeds) {
      next.push_back(n.left());
      next.push_back(n.right());
    }
    seeds = std::move(next);
  }
  unsigned jobs = options.jobs == 0 ? hardware_jobs() : options.jobs;
  double target = options.target_error;
  double tau = target / 64.0;
  QuadratureResult best;
  best.error_bound = kInf;
  std::size_t previous_leaves = 0;
  for (int pass = 0; pass < 64; ++pass) {
    auto r = run_pass(seeds, rule, tau, options.min_depth, cap, jobs, options.max_intervals);
    if (r.aborted) break;
    best.value = r.value;
    best.error_bound = r.error;
    best.intervals_used = r.leaves;
    best.max_depth = r.max_depth;
    if (r.error <= target) {
      best.converged = true;
      break;
    }
    // error parked at the depth cap cannot be reduced by a smaller threshold
    double reducible = r.error - r.capped_error;
    double room = target - r.capped_error;
    if (r.leaves == previous_leaves || room <= 0.25 * target) break;
    previous_leaves = r.leaves;
    tau *= std::clamp(0.5 * room / reducible, 1.0 / 256.0, 0.5);
  }
  return best;
}

}  // namespace

std::vector<SternBrocotInterval> partition(unsigned depth, unsigned depth_cap) {
  if (depth > depth_cap) throw ResourceError("partition: depth " + std::to_string(depth) + " above cap");
  if (depth > 26) throw ResourceError("partition: 2^depth intervals do not fit in memory");
  std::vector<Fraction> points{Fraction(0), Fraction(1)};
  for (unsigned level = 0; level < depth; ++level) {
    std::vector<Fraction> next;
    next.reserve(points.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      next.push_back(points[i]);
      next.push_back(mediant(points[i], points[i + 1]));
    }
    next.push_back(points.back());
    points = std::move(next);
  }
  std::vector<SternBrocotInterval> out;
  out.reserve(points.size() - 1);
  auto mass = DyadicValue::power_of_two(-static_cast<std::int64_t>(depth));
  for (std::size_t i = 0; i + 1 < points.size(); ++i) out.push_back({points[i], points[i + 1], depth, mass});
  return out;
}

unsigned frequency_min_depth(double omega) {
  double periods = std::fabs(omega) / (2 * std::numbers::pi);
  if (periods * 8 <= 1) return 0;
  return static_cast<unsigned>(std::ceil(std::log2(8 * periods) - 1e-12));
}

namespace {
QuadratureOptions with_frequency(const SmoothIntegrand& f, QuadratureOptions options) {
  if (options.rule == QuadratureRule::midpoint)
    options.min_depth = std::max(options.min_depth, std::min(frequency_min_depth(f.max_frequency()), options.depth_cap));
  return options;
}
}  // namespace

QuadratureResult integrate_01(const SmoothIntegrand& f, const QuadratureOptions& options) {
  auto opt = with_frequency(f, options);
  return drive(kUnitRoot, TaylorRule(f, opt.order, opt.rule, false), opt);
}

QuadratureResult integrate_01(const GenericIntegrand& f, const QuadratureOptions& options) {
  if (!f.f) throw std::invalid_argument("integrate_01: empty integrand");
  auto r = drive(kUnitRoot, GenericRule(f, false), options);
  r.certified = static_cast<bool>(f.oscillation);
  return r;
}

QuadratureResult integrate_1inf(const SmoothIntegrand& f, const QuadratureOptions& options) {
  auto opt = with_frequency(f, options);
  return drive(kUpperRoot, TaylorRule(f, opt.order, opt.rule, true), opt);
}

QuadratureResult combine(const QuadratureResult& a, const QuadratureResult& b, double scale_b) {
  QuadratureResult r;
  r.value = a.value + scale_b * b.value;
  r.error_bound = (a.error_bound + std::fabs(scale_b) * b.error_bound) * (1 + 2 * kEps) + 2 * kEps * std::fabs(r.value);
  r.intervals_used = a.intervals_used + b.intervals_used;
  r.max_depth = std::max(a.max_depth, b.max_depth);
  r.converged = a.converged && b.converged;
  r.certified = a.certified && b.certified;
  return r;
}

QuadratureResult integrate_0inf(const SmoothIntegrand& f, const QuadratureOptions& options) {
  auto half = options;
  half.target_error = options.target_error / 2;
  auto r = combine(integrate_01(f, half), integrate_1inf(f, half));
  r.converged = r.error_bound <= options.target_error;
  return r;
}

QuadratureResult integrate_0inf(const GenericIntegrand& f, const QuadratureOptions& options) {
  if (!f.f) throw std::invalid_argument("integrate_0inf: empty integrand");
  auto half = options;
  half.target_error = options.target_error / 2;
  auto lower = drive(kUnitRoot, GenericRule(f, false), half);
  auto upper = drive(kUnitRoot, GenericRule(f, true), half);
  auto r = combine(lower, upper);
  r.converged = r.error_bound <= options.target_error;
  r.certified = static_cast<bool>(f.oscillation);
  return r;
}

QuadratureResult integrate_power_measure(const SmoothIntegrand& f, unsigned m, const QuadratureOptions& options) {
  if (m < 1) throw std::invalid_argument("integrate_power_measure: m must be at least 1");
  if (m == 1) return integrate_01(f, options);
  auto opt = with_frequency(f, options);
  return drive(kUnitRoot, PowerRule(f, m, opt.order, opt.rule), opt);
}

DyadicValue power_measure_total_mass(unsigned depth, unsigned m) {
  if (m < 1) throw std::invalid_argument("power_measure_total_mass: m must be at least 1");
  auto cells = partition(depth, std::min(depth, 26u));
  DyadicValue total;
  for (const auto& cell : cells) {
    auto hi = question_mark_exact(cell.right).pow(m);
    auto lo = question_mark_exact(cell.left).pow(m);
    total = total + (hi - lo);
  }
  return total;
}

}  // namespace salemlab
