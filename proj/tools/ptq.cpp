#include "ptq/classical.hpp"
#include "ptq/errors.hpp"
#include "ptq/mpt.hpp"
#include "ptq/quadrature.hpp"
#include "ptq/rhp.hpp"
#include "ptq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tolerance defaults from the environment, read once.
struct EnvDefaults {
  double tolerance_scale = 1.0;
  double quadrature_tol = 1e-12;
};

double env_number(const char* name, double fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw UsageError(std::string(name) + " must be a positive number, got '" + raw + "'");
  return v;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Writes to the --output file if given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct Common {
  std::string format = "csv";
  std::string output;
  bool si = false;
  double mass = 1.0;
  double hbar = 1.0;

  void check_units() const {
    if (!si && (mass != 1.0 || hbar != 1.0))
      throw UsageError("natural units fix hbar = m = 1; pass --si to set --mass/--hbar");
  }
};

void emit_json(Sink& sink, const json& doc) { sink.out() << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- spectrum
struct SpectrumArgs {
  double depth = 1.0;
  double alpha = 1.0;
  std::optional<unsigned> max_n;
};

int cmd_spectrum(const Common& c, const SpectrumArgs& a) {
  c.check_units();
  const ptq::MptSystem sys{c.mass, a.depth, a.alpha, c.hbar};
  try {
    sys.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const auto states = ptq::spectrum(sys, a.max_n);
  Sink sink(c.output);
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& s : states)
      rows.push_back({{"n", s.n},
                      {"energy", s.energy},
                      {"normalizable", s.normalizable},
                      {"norm_constant", s.norm_constant ? json(*s.norm_constant) : json(nullptr)}});
    emit_json(sink, {{"schema", "ptq.spectrum/1"},
                     {"mass", sys.mass},
                     {"depth", sys.depth},
                     {"alpha", sys.alpha},
                     {"hbar", sys.hbar},
                     {"q", sys.q()},
                     {"omega", sys.omega()},
                     {"states", rows}});
    return kExitOk;
  }
  auto& os = sink.out();
  os << "# ptq spectrum v1\n";
  os << "# mass=" << csv_number(sys.mass) << " depth=" << csv_number(sys.depth) << " alpha=" << csv_number(sys.alpha)
     << " hbar=" << csv_number(sys.hbar) << '\n';
  os << "# q=" << csv_number(sys.q()) << " omega=" << csv_number(sys.omega()) << '\n';
  os << "n,energy,normalizable,norm_constant\n";
  for (const auto& s : states)
    os << s.n << ',' << csv_number(s.energy) << ',' << (s.normalizable ? "true" : "false") << ','
       << (s.norm_constant ? csv_number(*s.norm_constant) : "") << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- eigenfunction
struct EigenArgs {
  std::string q = "1";
  unsigned n = 0;
  unsigned samples = 21;
  double alpha = 1.0;
};

int cmd_eigenfunction(const Common& c, const EigenArgs& a) {
  ptq::Rational q;
  try {
    q = ptq::parse_rational(a.q);
  } catch (const std::invalid_argument&) {
    throw UsageError("--q: not a number: " + a.q);
  }
  if (sgn(q) <= 0) throw UsageError("--q must be > 0");
  if (!(a.alpha > 0.0)) throw UsageError("--alpha must be > 0");
  if (a.samples == 0) throw UsageError("--samples must be >= 1");

  const ptq::MptEigenfunction psi(q, a.n);
  const bool normalizable = psi.normalizable();
  const std::string warning = "n >= q: state is not normalizable, normalized column omitted";
  if (!normalizable) std::cerr << "warning: " << warning << '\n';

  struct Row {
    double u, x, raw;
    std::optional<double> normalized;
  };
  std::vector<Row> rows;
  for (unsigned i = 0; i < a.samples; ++i) {
    const double u = -1.0 + 2.0 * (i + 1.0) / (a.samples + 1.0);
    Row r{u, std::atanh(u) / a.alpha, psi(u), std::nullopt};
    if (normalizable) r.normalized = psi.normalized(u);
    rows.push_back(r);
  }

  Sink sink(c.output);
  if (c.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"u", r.u}, {"x", r.x}, {"psi", r.raw}, {"psi_normalized", r.normalized ? json(*r.normalized) : json(nullptr)}});
    json doc = {{"schema", "ptq.eigenfunction/1"}, {"q", psi.q()}, {"q_exact", ptq::to_string(q)},
                {"n", a.n},  {"alpha", a.alpha},  {"normalizable", normalizable},
                {"samples", out}};
    doc["warning"] = normalizable ? json(nullptr) : json(warning);
    emit_json(sink, doc);
    return kExitOk;
  }
  auto& os = sink.out();
  os << "# ptq eigenfunction v1\n";
  os << "# q=" << ptq::to_string(q) << " n=" << a.n << " alpha=" << csv_number(a.alpha) << '\n';
  if (!normalizable) os << "# warning: " << warning << '\n';
  os << "u,x,psi,psi_normalized\n";
  for (const auto& r : rows)
    os << csv_number(r.u) << ',' << csv_number(r.x) << ',' << csv_number(r.raw) << ','
       << (r.normalized ? csv_number(*r.normalized) : "") << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- classical
struct ClassicalArgs {
  double depth = 1.0;
  double alpha = 1.0;
  double eps = 0.5;
  double xi0 = 0.0;
  std::optional<double> t_end;
  double dt = ptq::kDefaultTimeStep;
  unsigned stride = 10;
};

int cmd_classical(const Common& c, const ClassicalArgs& a) {
  c.check_units();
  const ptq::MptSystem sys{c.mass, a.depth, a.alpha, c.hbar};
  try {
    sys.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (!(a.eps > 0.0 && a.eps < sys.depth)) throw UsageError("--eps must lie in (0, depth)");
  if (!(a.dt > 0.0)) throw UsageError("--dt must be > 0");
  if (a.stride == 0) throw UsageError("--stride must be >= 1");
  const double amplitude = ptq::turning_amplitude(sys, a.eps);
  if (std::abs(a.xi0) > amplitude) throw UsageError("--xi0 beyond the turning point " + csv_number(amplitude));

  const double period = 2.0 * std::numbers::pi / ptq::energy_frequency(sys, a.eps);
  const double t_end = a.t_end.value_or(period);
  if (!(t_end > 0.0)) throw UsageError("--t-end must be > 0");

  const ptq::PhaseState start = ptq::closed_form_trajectory(sys, a.eps, a.xi0, 0.0);
  const auto path = ptq::integrate_trajectory(sys, start, t_end, a.dt);
  double deviation = 0.0, drift = 0.0;
  struct Row {
    ptq::PhaseState closed, rk4;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& z = path[i];
    const ptq::PhaseState cf = ptq::closed_form_trajectory(sys, a.eps, a.xi0, z.t);
    deviation = std::max(deviation, std::abs(cf.xi - z.xi));
    drift = std::max(drift, std::abs(ptq::hamiltonian(sys, z) + a.eps) / a.eps);
    if (i % a.stride == 0 || i + 1 == path.size()) rows.push_back({cf, z});
  }

  Sink sink(c.output);
  if (c.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"t", r.closed.t},
                     {"xi", r.closed.xi},
                     {"p", r.closed.p},
                     {"x", ptq::x_from_xi(r.closed.xi, sys.alpha)},
                     {"H", ptq::hamiltonian(sys, r.closed)},
                     {"xi_rk4", r.rk4.xi},
                     {"p_rk4", r.rk4.p},
                     {"H_rk4", ptq::hamiltonian(sys, r.rk4)}});
    emit_json(sink, {{"schema", "ptq.classical/1"},
                     {"mass", sys.mass},
                     {"depth", sys.depth},
                     {"alpha", sys.alpha},
                     {"eps", a.eps},
                     {"xi0", a.xi0},
                     {"dt", a.dt},
                     {"period", period},
                     {"rows", out},
                     {"max_deviation", deviation},
                     {"max_energy_drift", drift}});
    return kExitOk;
  }
  auto& os = sink.out();
  os << "# ptq classical v1\n";
  os << "# mass=" << csv_number(sys.mass) << " depth=" << csv_number(sys.depth) << " alpha=" << csv_number(sys.alpha)
     << " eps=" << csv_number(a.eps) << " xi0=" << csv_number(a.xi0) << " dt=" << csv_number(a.dt)
     << " period=" << csv_number(period) << '\n';
  os << "t,xi,p,x,H,xi_rk4,p_rk4,H_rk4\n";
  for (const auto& r : rows)
    os << csv_number(r.closed.t) << ',' << csv_number(r.closed.xi) << ',' << csv_number(r.closed.p) << ','
       << csv_number(ptq::x_from_xi(r.closed.xi, sys.alpha)) << ',' << csv_number(ptq::hamiltonian(sys, r.closed)) << ','
       << csv_number(r.rk4.xi) << ',' << csv_number(r.rk4.p) << ',' << csv_number(ptq::hamiltonian(sys, r.rk4)) << '\n';
  os << "# max_deviation=" << csv_number(deviation) << " max_energy_drift=" << csv_number(drift) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- verify
struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::optional<double> tolerance;
  std::optional<double> tolerance_scale;
};

int cmd_verify(const Common& c, const VerifyArgs& a, const EnvDefaults& env) {
  const auto& names = ptq::suite_names();
  if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
    throw UsageError("unknown suite " + a.suite);
  ptq::VerifyOptions opts;
  opts.seed = a.seed;
  opts.tolerance_scale = a.tolerance_scale.value_or(env.tolerance_scale);
  opts.tolerance_override = a.tolerance;
  opts.quadrature_tol = env.quadrature_tol;
  const auto results = ptq::run_verify(a.suite, opts);

  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;

  Sink sink(c.output);
  if (c.format == "csv") {
    auto& os = sink.out();
    os << "# ptq verify v1\n# suite=" << a.suite << " seed=" << a.seed << '\n';
    os << "suite,check,measured,tolerance,passed\n";
    for (const auto& r : results)
      os << r.suite << ',' << r.check << ',' << csv_number(r.measured) << ',' << csv_number(r.tolerance) << ','
         << (r.passed ? "true" : "false") << '\n';
    os << "# total=" << results.size() << " failed=" << failed << '\n';
  } else {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"suite", r.suite},
                        {"check", r.check},
                        {"measured", std::isfinite(r.measured) ? json(r.measured) : json(nullptr)},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed}});
    json doc = {{"schema", "ptq.verify_report/1"},
                {"suite", a.suite},
                {"seed", a.seed},
                {"tolerance_scale", opts.tolerance_scale},
                {"quadrature_tol", opts.quadrature_tol},
                {"checks", checks},
                {"summary", {{"total", results.size()}, {"failed", failed}, {"passed", failed == 0}}}};
    doc["tolerance_override"] = a.tolerance ? json(*a.tolerance) : json(nullptr);
    emit_json(sink, doc);
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- limits
struct LimitsArgs {
  std::string kind = "hermite";
  unsigned n = 2;
  std::vector<double> sweep;
  double hbar_omega = 1.0;
};

int cmd_limits(const Common& c, const LimitsArgs& a) {
  if (a.sweep.empty()) throw UsageError("--sweep needs at least one value");
  for (std::size_t i = 1; i < a.sweep.size(); ++i)
    if (!(std::abs(a.sweep[i]) > std::abs(a.sweep[i - 1])))
      throw UsageError("--sweep values must increase in magnitude");

  std::vector<std::pair<double, double>> rows;  // (parameter, gap)
  std::string column = "N";
  if (a.kind == "hermite") {
    for (double N : a.sweep) {
      if (N == 0.0) throw UsageError("hermite sweep: N must be nonzero");
      rows.emplace_back(N, ptq::to_double(ptq::hermite_limit_error(a.n, ptq::Rational(N))));
    }
  } else {
    column = "depth";
    c.check_units();
    for (double D : a.sweep)
      if (!(D > 0.0)) throw UsageError("harmonic sweep: depths must be > 0");
    for (const auto& row : ptq::harmonic_limit_check(a.n, a.sweep, a.hbar_omega, c.mass, c.hbar))
      rows.emplace_back(row.depth, row.gap);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].second < rows[i - 1].second;

  Sink sink(c.output);
  if (c.format == "json") {
    json out = json::array();
    for (const auto& [p, g] : rows) out.push_back({{column, p}, {"gap", g}});
    emit_json(sink, {{"schema", "ptq.limits/1"}, {"kind", a.kind}, {"n", a.n}, {"rows", out}, {"monotone", monotone}});
  } else {
    auto& os = sink.out();
    os << "# ptq limits v1\n# kind=" << a.kind << " n=" << a.n << '\n';
    os << column << ",gap\n";
    for (const auto& [p, g] : rows) os << csv_number(p) << ',' << csv_number(g) << '\n';
    os << "# monotone=" << (monotone ? "true" : "false") << '\n';
  }
  return monotone ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poschl-Teller / relativistic oscillator numerics"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    common.format = default_format;
    sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", common.output, "write to this file instead of stdout");
  };
  auto add_units = [&](CLI::App* sub) {
    sub->add_flag("--si", common.si, "explicit units: allow --mass and --hbar other than 1");
    sub->add_option("--mass", common.mass, "particle mass");
    sub->add_option("--hbar", common.hbar, "reduced Planck constant");
  };

  SpectrumArgs spectrum;
  auto* s_spec = app.add_subcommand("spectrum", "bound-state spectrum of the Poschl-Teller well");
  add_units(s_spec);
  s_spec->add_option("--depth", spectrum.depth, "well depth D");
  s_spec->add_option("--alpha", spectrum.alpha, "inverse width alpha");
  s_spec->add_option("--max-n", spectrum.max_n, "last level listed (default floor(2q))");

  EigenArgs eigen;
  auto* s_eig = app.add_subcommand("eigenfunction", "tabulate Psi_n^q on (-1, 1)");
  s_eig->add_option("--q", eigen.q, "Bargmann index (rational text such as 3/2 or 1.8)");
  s_eig->add_option("--n", eigen.n, "level");
  s_eig->add_option("--samples", eigen.samples, "number of interior u points");
  s_eig->add_option("--alpha", eigen.alpha, "inverse width used for the x column");

  ClassicalArgs classical;
  auto* s_cls = app.add_subcommand("classical", "closed-form and RK4 bound trajectory");
  add_units(s_cls);
  s_cls->add_option("--depth", classical.depth, "well depth D");
  s_cls->add_option("--alpha", classical.alpha, "inverse width alpha");
  s_cls->add_option("--eps", classical.eps, "binding energy eps = -H, in (0, D)");
  s_cls->add_option("--xi0", classical.xi0, "initial xi");
  s_cls->add_option("--t-end", classical.t_end, "final time (default one period)");
  s_cls->add_option("--dt", classical.dt, "RK4 step");
  s_cls->add_option("--stride", classical.stride, "emit every k-th step");

  VerifyArgs verify;
  auto* s_ver = app.add_subcommand("verify", "run the invariant suites");
  s_ver->add_option("--suite", verify.suite, "all, rhp, gegenbauer, rho, mpt, classical or group");
  s_ver->add_option("--seed", verify.seed, "seed for the random property checks");
  s_ver->add_option("--tolerance", verify.tolerance, "replace every tolerance with this value");
  s_ver->add_option("--tolerance-scale", verify.tolerance_scale, "multiply every default tolerance");

  LimitsArgs limits;
  auto* s_lim = app.add_subcommand("limits", "convergence tables for the Hermite and harmonic limits");
  add_units(s_lim);
  s_lim->add_option("kind", limits.kind, "hermite or harmonic")->check(CLI::IsMember({"hermite", "harmonic"}));
  s_lim->add_option("--n", limits.n, "level / degree");
  s_lim->add_option("--sweep", limits.sweep, "N values (hermite) or depths (harmonic)")->delimiter(',');
  s_lim->add_option("--hbar-omega", limits.hbar_omega, "fixed hbar*Omega for the harmonic sweep");

  for (auto* sub : {s_spec, s_eig, s_cls, s_lim}) add_common(sub, "csv");
  s_ver->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));
  s_ver->add_option("-o,--output", common.output, "write to this file instead of stdout");

  try {
    EnvDefaults env;
    env.tolerance_scale = env_number("PTQ_TOLERANCE_SCALE", 1.0);
    env.quadrature_tol = env_number("PTQ_QUADRATURE_TOL", 1e-12);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return kExitError;
    }

    if (s_spec->parsed()) return cmd_spectrum(common, spectrum);
    if (s_eig->parsed()) return cmd_eigenfunction(common, eigen);
    if (s_cls->parsed()) return cmd_classical(common, classical);
    if (s_ver->parsed()) {
      if (s_ver->count("--format") == 0) common.format = "json";
      return cmd_verify(common, verify, env);
    }
    if (s_lim->parsed()) return cmd_limits(common, limits);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
