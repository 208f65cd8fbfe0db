#include "salemlab/cli.hpp"

#include <mpfr.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "salemlab/asymptotic_lab.hpp"
#include "salemlab/errors.hpp"
#include "salemlab/fourier_stieltjes.hpp"
#include "salemlab/minkowski.hpp"
#include "salemlab/parallel.hpp"
#include "salemlab/special_functions.hpp"

namespace salemlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int decimal_digits(unsigned bits) { return static_cast<int>(std::floor(bits * std::log10(2.0))); }

std::string fraction_decimal(const Fraction& x, unsigned bits) {
  mpfr_t v;
  mpfr_init2(v, static_cast<mpfr_prec_t>(bits + 16));
  mpfr_set_q(v, x.raw().get_mpq_t(), MPFR_RNDN);
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", decimal_digits(bits), v);
  std::string s(buffer);
  mpfr_free_str(buffer);
  mpfr_clear(v);
  return s;
}

// Closest dyadic with 2^-(bits + 16) resolution.
DyadicValue to_dyadic(const Fraction& y, unsigned bits) {
  mpz_class den = y.denominator();
  if ((den & (den - 1)) == 0) {
    auto e = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    return DyadicValue(y.numerator(), e);
  }
  std::uint64_t e = bits + 16;
  mpz_class scaled = y.numerator();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), e);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  return DyadicValue(scaled, e);
}

unsigned env_unsigned(const char* name, unsigned fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  unsigned out = 0;
  auto [p, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), out);
  if (ec != std::errc() || *p != '\0') throw UsageError(std::string("invalid value for ") + name + ": '" + v + "'");
  return out;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

QuadratureOptions quadrature_options(const RunConfig& c) {
  QuadratureOptions q;
  q.target_error = c.target_error;
  q.depth_cap = c.depth_cap;
  return q;
}

// ---- eval ----

int cmd_eval(const RunConfig& config, const std::string& input, bool inverse, std::ostream& out) {
  bool decimal = input.find_first_of(".eE") != std::string::npos;
  Fraction x;
  try {
    x = Fraction::parse(input);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (x.sign() < 0) throw UsageError("eval: argument must be non-negative");
  if (!inverse) {
    auto q = question_mark_extended(x);
    out << (decimal ? q.to_decimal(decimal_digits(config.precision_bits)) : q.to_string()) << '\n';
    return ok;
  }
  if (Fraction(2) < x) throw UsageError("eval --inverse: argument must lie in [0, 2]");
  bool upper = Fraction(1) < x;
  auto y = to_dyadic(upper ? Fraction(2) - x : x, config.precision_bits);
  auto r = question_mark_inverse(y, config.precision_bits);
  Fraction value = upper ? (r.x.sign() == 0 ? Fraction(0) : r.x.reciprocal()) : r.x;
  if (upper && r.x.sign() == 0) throw UsageError("eval --inverse: q^-1(2) is infinite");
  bool exact = r.exact && y.to_fraction() == (upper ? Fraction(2) - x : x);
  out << (exact && !decimal ? value.to_string() : fraction_decimal(value, config.precision_bits)) << '\n';
  return ok;
}

// ---- coeffs ----

int cmd_coeffs(const RunConfig& config, unsigned power, unsigned jobs, std::ostream& out) {
  if (config.n_max < 1) throw UsageError("coeffs: n_max must be at least 1");
  CoefficientOptions co;
  co.quadrature = quadrature_options(config);
  co.with_sine_check = false;
  auto rows = coefficient_table(config.n_max, co, jobs);
  std::vector<QuadratureResult> powered;
  if (power > 0) {
    powered.resize(rows.size());
    auto q = co.quadrature;
    parallel_for(rows.size(), jobs, [&](std::size_t n) {
      if (n == 0) {
        powered[n].value = 1;
        powered[n].converged = true;
      } else {
        powered[n] = power_coefficient(static_cast<long>(n), power, q);
      }
    });
  }
  bool all_converged = true;
  Output sink(config.output_path, out);
  auto& o = *sink;
  o << "n,d_n,c_n,err,method";
  if (power > 0) o << ",d_n_" << power;
  o << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    double err = r.error_bound;
    bool converged = r.converged;
    if (power > 0) {
      err = std::max(err, powered[i].error_bound);
      converged = converged && powered[i].converged;
    }
    if (!converged || err > config.target_error) all_converged = false;
    o << r.n << ',' << format_real(r.d_n) << ',' << format_real(r.c_n) << ',' << format_real(err) << ','
      << to_string(r.method);
    if (power > 0) o << ',' << format_real(powered[i].value);
    o << '\n';
  }
  o << config.trailer();
  if (power > 0) o << " power=" << power;
  o << '\n';
  return all_converged ? ok : unconverged;
}

// ---- verify ----

struct VerifySettings {
  std::vector<long> hankel_n{1};
  double hankel_T = 200;
  double hankel_eps = 1e-3;
  std::size_t grid_points = 50;
  long identity_n = 64;
  unsigned jobs = 1;
};

void append(IdentityReport& to, const IdentityReport& from, const std::string& prefix) {
  for (auto r : from.rows) {
    r.identity = prefix + r.identity;
    to.rows.push_back(r);
  }
}

IdentityReport suite_functional(const RunConfig& config) {
  IdentityReport rep;
  struct Key {
    const char* x;
    const char* q;
  };
  for (auto [x, q] : {Key{"0", "0"}, Key{"1", "1"}, Key{"1/2", "1/2"}, Key{"1/3", "1/4"}, Key{"2/5", "3/8"}}) {
    auto v = question_mark_exact(Fraction::parse(x)).to_fraction() - Fraction::parse(q);
    rep.rows.push_back({std::string("q(") + x + ") = " + q, Fraction::parse(x).to_double(),
                        std::fabs(v.to_double()), 0.0});
  }
  auto f = verify_functional_equations(1000, config.seed, 10000);
  rep.rows.push_back({"q(x) + q(1-x) = 1", 0, f.max_reflection.to_double(), 0.0});
  rep.rows.push_back({"q(x) = 2 q(x/(x+1))", 0, f.max_halving.to_double(), 0.0});
  rep.rows.push_back({"q(x) + q(1/x) = 2", 0, f.max_reciprocal.to_double(), 0.0});
  return rep;
}

IdentityReport suite_fourier(const RunConfig& config, const VerifySettings& s) {
  auto q = quadrature_options(config);
  IdentityReport rep;
  std::vector<double> grid(s.grid_points);
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = grid.size() > 1 ? 100.0 * static_cast<double>(i) / static_cast<double>(grid.size() - 1) : 0.0;
  append(rep, verify_identity_suite(grid, s.identity_n, q), "");
  QuadratureOptions fine = q;
  fine.target_error = std::min(q.target_error, 1e-12);
  for (long n = 1; n <= 3; ++n) {
    auto d = derivative_relation_check(n, 1e-3, fine);
    rep.rows.push_back({"f'(2 pi n) = (i/2) d_n - c_n, central difference", static_cast<double>(n), d.residual, d.bound});
    rep.rows.push_back({"f'(2 pi n) = (i/2) d_n - c_n, direct", static_cast<double>(n), d.direct_residual, d.direct_bound});
  }
  append(rep, verify_power_recurrence(8, 4, q), "");
  for (unsigned m = 1; m <= 6; ++m) {
    auto mass = power_measure_total_mass(12, m) - DyadicValue::from_integer(1);
    rep.rows.push_back({"total mass of dq^m", static_cast<double>(m), std::fabs(mass.to_double()), 0.0});
  }
  return rep;
}

IdentityReport suite_hankel(const VerifySettings& s) {
  IdentityReport rep;
  HankelOptions h;
  h.jobs = s.jobs;
  for (long n : s.hankel_n) {
    auto v = hankel_suite(n, s.hankel_T, s.hankel_eps, h);
    rep.rows.push_back({"hankel d_n", static_cast<double>(n), v.d.residual, 1e-2});
    rep.rows.push_back({"hankel c_n", static_cast<double>(n), v.c.residual, 1e-2});
    rep.rows.push_back({"(5/2) i d_n - c_n = -int J0 e^(-iy) f dy", static_cast<double>(n), v.combination_residual,
                        v.combination_bound});
  }
  return rep;
}

IdentityReport suite_specialfn() {
  IdentityReport rep;
  const double limit = 0.5 * std::sqrt(std::numbers::pi / 2);
  {
    auto head = fresnel_series(8);
    auto tail = fresnel_tail(8);
    rep.rows.push_back({"int_0^inf cos y^2 dy = (1/2) sqrt(pi/2)", 8, std::fabs(head.cos_part + tail.real() - limit), 1e-10});
    rep.rows.push_back({"int_0^inf sin y^2 dy = (1/2) sqrt(pi/2)", 8, std::fabs(head.sin_part + tail.imag() - limit), 1e-10});
  }
  for (double T : {1.0, 10.0, 100.0}) {
    auto v = fresnel_truncated(T);
    double r = std::max(std::fabs(v.cos_part - limit), std::fabs(v.sin_part - limit));
    rep.rows.push_back({"Fresnel tail within 1/(2T)", T, r, v.tail_bound});
  }
  for (double z = 16; z <= 24; z += 1) {
    rep.rows.push_back({"J0 series vs asymptotic", z, std::fabs(bessel_j0_series(z, 128) - bessel_j0_asymptotic(z)), 1e-10});
  }
  const double as[] = {1 / (2 * std::numbers::pi), 0.5, 1.0};
  const double bs[] = {0.5, 1.0, 2.0};
  const double mus[] = {0.25, 0.5, 1.5};
  for (double a : as)
    for (double b : bs)
      for (double mu : mus)
        for (Kernel k : {Kernel::sin, Kernel::cos})
          for (bool outer_sin : {true, false}) {
            double closed = outer_sin ? oscillatory_sin_integral(a, b, mu, k) : oscillatory_cos_integral(a, b, mu, k);
            auto oracle = oscillatory_oracle(a, b, mu, k, outer_sin);
            std::ostringstream name;
            name << "closed form " << (k == Kernel::sin ? "sin" : "cos") << "(a x^2) " << (outer_sin ? "sin" : "cos")
                 << "(bx), a=" << format_real(a) << " b=" << format_real(b);
            rep.rows.push_back({name.str(), mu, std::fabs(closed - oracle.value), 1e-6});
          }
  struct Set {
    double p[5];
    double two_gamma;
  };
  const Set sets[] = {{{7. / 8, 3. / 8, 0.5, 0.75, 1.25}, -0.75},
                      {{11. / 8, 7. / 8, 1.5, 1.25, 1.75}, -1.75},
                      {{5. / 8, 1. / 8, 0.5, 0.25, 0.75}, -0.25},
                      {{9. / 8, 5. / 8, 1.5, 0.75, 1.25}, -1.25}};
  for (const auto& s : sets) {
    TwoFThreeParams p{s.p[0], s.p[1], s.p[2], s.p[3], s.p[4], 0};
    rep.rows.push_back({"2 gamma of decay parameter set", s.two_gamma,
                        std::fabs(2 * AsymptoticGamma::of(p).gamma - s.two_gamma), 0.0});
  }
  return rep;
}

void print_report(const IdentityReport& rep, std::ostream& out) {
  char line[512];
  std::snprintf(line, sizeof line, "%-64s %14s %24s %24s  %s\n", "identity", "argument", "residual", "bound", "status");
  out << line;
  for (const auto& r : rep.rows) {
    std::snprintf(line, sizeof line, "%-64s %14s %24s %24s  %s\n", r.identity.c_str(), format_real(r.argument).c_str(),
                  format_real(r.residual).c_str(), format_real(r.bound).c_str(), r.pass() ? "pass" : "FAIL");
    out << line;
  }
}

int cmd_verify(const RunConfig& config, const std::string& suite, const VerifySettings& s, std::ostream& out,
               std::ostream& err) {
  IdentityReport rep;
  bool all = suite == "all";
  if (!all && suite != "functional" && suite != "fourier" && suite != "hankel" && suite != "specialfn")
    throw UsageError("verify: unknown suite '" + suite + "'");
  if (all || suite == "functional") append(rep, suite_functional(config), "functional: ");
  if (all || suite == "fourier") append(rep, suite_fourier(config, s), "fourier: ");
  if (all || suite == "hankel") append(rep, suite_hankel(s), "hankel: ");
  if (all || suite == "specialfn") append(rep, suite_specialfn(), "specialfn: ");

  print_report(rep, out);
  if (config.output_path != "-") {
    Output sink(config.output_path, out);
    auto& o = *sink;
    o << "identity,argument,residual,bound,pass\n";
    for (const auto& r : rep.rows)
      o << csv_field(r.identity) << ',' << format_real(r.argument) << ',' << format_real(r.residual) << ','
        << format_real(r.bound) << ',' << (r.pass() ? 1 : 0) << '\n';
    o << config.trailer() << '\n';
  }
  for (const auto& r : rep.failures())
    err << "violated: identity=\"" << r.identity << "\" argument=" << format_real(r.argument)
        << " residual=" << format_real(r.residual) << " bound=" << format_real(r.bound) << '\n';
  return rep.all_pass() ? ok : verification_failed;
}

// ---- fit ----

std::vector<std::pair<long, double>> read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("fit: cannot read '" + path + "'");
  std::vector<std::pair<long, double>> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || !std::isdigit(static_cast<unsigned char>(line[0]))) continue;
    auto c1 = line.find(',');
    if (c1 == std::string::npos) throw UsageError("fit: malformed row '" + line + "'");
    auto c2 = line.find(',', c1 + 1);
    long n = 0;
    double d = 0;
    auto r1 = std::from_chars(line.data(), line.data() + c1, n);
    auto r2 = std::from_chars(line.data() + c1 + 1, line.data() + (c2 == std::string::npos ? line.size() : c2), d);
    if (r1.ec != std::errc() || r2.ec != std::errc()) throw UsageError("fit: malformed row '" + line + "'");
    values.emplace_back(n, d);
  }
  return values;
}

// "const" or "n^p".
std::vector<std::pair<long, double>> synthetic(const std::string& spec, long n_max) {
  double p = 0;
  if (spec != "const") {
    if (spec.rfind("n^", 0) != 0) throw UsageError("fit --synthetic: expected 'const' or 'n^p'");
    auto s = spec.substr(2);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("fit --synthetic: bad exponent '" + s + "'");
  }
  std::vector<std::pair<long, double>> values;
  for (long n = 1; n <= n_max; ++n) values.emplace_back(n, p == 0 ? 1.0 : std::pow(static_cast<double>(n), p));
  return values;
}

int cmd_fit(const RunConfig& config, long n_min, const std::string& input, const std::string& synth, unsigned jobs,
            std::ostream& out) {
  std::vector<std::pair<long, double>> values;
  int status = ok;
  long n_max = config.n_max;
  if (!synth.empty()) {
    values = synthetic(synth, n_max);
  } else if (!input.empty()) {
    values = read_coefficients(input);
  } else {
    CoefficientOptions co;
    co.quadrature = quadrature_options(config);
    co.with_sine_check = false;
    co.with_c = false;
    for (const auto& r : coefficient_table(n_max, co, jobs)) {
      values.emplace_back(r.n, r.d_n);
      if (!r.converged || r.error_bound > config.target_error) status = unconverged;
    }
  }
  if (!input.empty()) {
    long top = 0;
    for (const auto& v : values) top = std::max(top, v.first);
    n_max = std::min(n_max, top);
  }
  int blocks = n_max >= n_min && n_min > 0
                   ? static_cast<int>(std::bit_width(static_cast<unsigned long>(n_max))) -
                         static_cast<int>(std::bit_width(static_cast<unsigned long>(n_min)))  + 1
                   : 0;
  if (blocks < 4) throw UsageError("fit: fewer than 4 dyadic blocks in [" + std::to_string(n_min) + ", " +
                                   std::to_string(n_max) + "]");
  DecayFit fit;
  try {
    fit = fit_decay(values, n_min, n_max);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "n_range=" << fit.n_range.first << ',' << fit.n_range.second << '\n';
  out << "mu_hat=" << format_real(fit.mu_hat) << '\n';
  out << "mu_stderr=" << format_real(fit.mu_stderr) << '\n';
  out << "intercept=" << format_real(fit.intercept) << '\n';
  out << "r_squared=" << format_real(fit.r_squared) << '\n';
  out << "raw_mu_hat=" << format_real(fit.raw_mu_hat) << '\n';
  out << "raw_r_squared=" << format_real(fit.raw_r_squared) << '\n';
  out << "block,argmax,sup\n";
  for (const auto& b : fit.tail_sup) out << b.block << ',' << b.argmax << ',' << format_real(b.sup) << '\n';

  Output sink(config.output_path, out);
  auto& o = *sink;
  if (config.output_path == "-") o << '\n';
  o << "block,log_n,log_sup\n";
  for (const auto& b : fit.tail_sup)
    o << b.block << ',' << format_real(std::log(static_cast<double>(b.argmax))) << ',' << format_real(std::log(b.sup))
      << '\n';
  o << config.trailer() << " n_min=" << n_min;
  if (!synth.empty()) o << " synthetic=" << synth;
  if (!input.empty()) o << " input=" << input;
  o << '\n';
  return status;
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < 53 || precision_bits > 512) throw std::invalid_argument("precision_bits must lie in [53, 512]");
  if (depth_cap < 8 || depth_cap > 40) throw std::invalid_argument("depth_cap must lie in [8, 40]");
  if (!(target_error > 0)) throw std::invalid_argument("target_error must be positive");
}

std::string RunConfig::trailer() const {
  std::ostringstream s;
  s << "# config: precision_bits=" << precision_bits << " depth_cap=" << depth_cap
    << " target_error=" << format_real(target_error) << " n_max=" << n_max << " output_path=" << output_path
    << " seed=" << seed;
  return s.str();
}

std::string format_real(double x) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
  std::string s(buffer, end);
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  unsigned jobs = 1;
  try {
    config.precision_bits = env_unsigned("SALEMLAB_PRECISION", config.precision_bits);
    config.depth_cap = env_unsigned("SALEMLAB_DEPTH", config.depth_cap);
    jobs = env_unsigned("SALEMLAB_JOBS", jobs);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  CLI::App app{"Minkowski question mark function: exact values, Fourier-Stieltjes coefficients, identity checks", "salemlab"};
  app.set_version_flag("--version", "salemlab 1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", config.precision_bits, "working precision in bits [53, 512]");
  app.add_option("--depth", config.depth_cap, "Stern-Brocot depth cap [8, 40]");
  app.add_option("--target", config.target_error, "target error per integral");
  app.add_option("--jobs", jobs, "worker threads (output does not depend on it)");
  app.add_option("--seed", config.seed, "seed for randomized checks");
  app.add_option("-o,--output", config.output_path, "output file, '-' for stdout");

  auto* eval = app.add_subcommand("eval", "print q(x), or q^-1(y) with --inverse");
  std::string eval_input;
  bool inverse = false;
  eval->add_option("x", eval_input, "fraction p/q or decimal")->required();
  eval->add_flag("--inverse", inverse, "invert q by Stern-Brocot descent");

  auto* coeffs = app.add_subcommand("coeffs", "CSV of d_n, c_n for 0 <= n <= n_max");
  unsigned power = 0;
  coeffs->add_option("--n-max", config.n_max, "largest n");
  coeffs->add_option("--power", power, "add d_{n,m} for the measure dq^m");

  auto* verify = app.add_subcommand("verify", "residual table for an identity suite");
  std::string suite = "all";
  VerifySettings vs;
  verify->add_option("suite", suite, "functional | fourier | hankel | specialfn | all");
  verify->add_option("--n", vs.hankel_n, "n values for the hankel suite");
  verify->add_option("--T", vs.hankel_T, "truncation point for the hankel suite");
  verify->add_option("--eps", vs.hankel_eps, "smallest regularizer for the hankel suite");
  verify->add_option("--grid-points", vs.grid_points, "x grid size on [0, 100] for the fourier suite");
  verify->add_option("--identity-n", vs.identity_n, "largest n for the coefficient identities");

  auto* fit = app.add_subcommand("fit", "decay fit of |d_n| over dyadic blocks");
  long n_min = 8;
  std::string input, synth;
  fit->add_option("--n-min", n_min, "first n of the fit");
  fit->add_option("--n-max", config.n_max, "last n of the fit");
  fit->add_option("--input", input, "coefficients CSV from 'coeffs'");
  fit->add_option("--synthetic", synth, "'const' or 'n^p' instead of computed coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << "salemlab 1.0\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    config.validate();
    if (jobs == 0) jobs = hardware_jobs();
    vs.jobs = jobs;
    if (eval->parsed()) return cmd_eval(config, eval_input, inverse, out);
    if (coeffs->parsed()) return cmd_coeffs(config, power, jobs, out);
    if (verify->parsed()) return cmd_verify(config, suite, vs, out, err);
    if (fit->parsed()) return cmd_fit(config, n_min, input, synth, jobs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return unconverged;
  }
  return usage_error;
}

}  // namespace salemlab::cli
