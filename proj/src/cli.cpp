#include "susy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "susy/error.hpp"
#include "susy/factorization.hpp"
#include "susy/kernels.hpp"
#include "susy/ladder.hpp"
#include "susy/model.hpp"
#include "susy/polar.hpp"
#include "susy/spectral.hpp"

namespace susy::cli {

using Json = nlohmann::ordered_json;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

struct GridFlags {
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<std::size_t> points;

  void attach(CLI::App* app) {
    app->add_option("--tmin", t_min, "Left grid end");
    app->add_option("--tmax", t_max, "Right grid end");
    app->add_option("--points", points, "Grid points (>= 3)");
  }

  Grid resolve(const Grid& fallback) const {
    return Grid(t_min.value_or(fallback.t_min()), t_max.value_or(fallback.t_max()),
                points.value_or(fallback.count()));
  }
};

// Column-oriented table written as CSV (header + rows) or JSON (object of arrays).
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      Json j = Json::object();
      for (std::size_t c = 0; c < header.size(); ++c) j[header[c]] = columns[c];
      os << j.dump() << '\n';
      return;
    }
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        os << (c ? "," : "") << format_number(columns[c][r]);
      }
      os << '\n';
    }
  }
};

Json grid_json(const Grid& g) {
  return Json{{"t_min", g.t_min()}, {"t_max", g.t_max()}, {"points", g.count()}};
}

// Writes either to the --out file or to the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void write_sidecar(const std::string& explicit_path, const std::string& out_path,
                   const Json& j) {
  const std::string path = !explicit_path.empty() ? explicit_path
                           : !out_path.empty()    ? out_path + ".json"
                                                  : std::string{};
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open sidecar file '" + path + "'");
  f << j.dump(2) << '\n';
}

struct CheckRow {
  std::string name;
  double value;
  double tolerance;
  bool pass;
};

CheckRow check_below(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value < tolerance};
}

CheckRow check_equal(std::string name, double value, double expected) {
  return {std::move(name), value, expected, value == expected};
}

// ---- subcommands -----------------------------------------------------------

struct Options {
  std::string out;
  std::string format = "csv";
  std::string sidecar;
  // classify / newton
  model::OscillatorParams params{};
  double critical_tol = model::kDefaultCriticalTol;
  // chain / spectrum / modes / verify
  std::string family = "under";
  int N = 1;
  int n = 1;
  int k = 1;
  double omega = 1.0;
  std::optional<double> tol;
  std::optional<double> tol_legendre;
  std::optional<double> tol_ratio;
  GridFlags grid;
  std::size_t theta_points = 2001;
};

int cmd_classify(const Options& o, std::ostream& os) {
  const model::Regime r = model::classify(o.params, o.critical_tol);
  Json j{{"regime", model::to_string(r.tag)}, {"omega_d_sq", r.omega_sq}, {"omega", r.omega}};
  os << j.dump() << '\n';
  return kExitOk;
}

int cmd_chirp(const Options& o, std::ostream& os) {
  ChirpProfile profile = o.family == "under" ? chirp_under(o.N, o.omega) : chirp_over(o.omega);
  if (o.family == "over" && o.N != 1) {
    throw DomainError("chirp: the sec^2 family exists only at level N = 1");
  }
  const Grid grid =
      o.grid.resolve(o.family == "under" ? default_under_grid(o.omega) : default_over_grid(o.omega));
  require_inside(profile, grid);
  Table t{{"t", "omega_sq"}, {grid.nodes(), {}}};
  t.columns[1] = kernels::omp::tabulate(grid.count(), [&](std::size_t i) { return profile(grid.at(i)); });
  t.write(os, o.format);
  return kExitOk;
}

int cmd_modes(const Options& o, std::ostream& os) {
  const std::vector<LadderMode> all = modes(o.N, o.omega);
  const Grid grid = o.grid.resolve(default_under_grid(o.omega));
  Table t{{"t"}, {grid.nodes()}};
  Json side{{"N", o.N}, {"omega", o.omega}, {"modes", Json::array()}};
  for (const LadderMode& m : all) {
    const ModeEvaluator f(m.mode);
    t.header.push_back("y_" + std::to_string(m.n));
    t.columns.push_back(kernels::omp::tabulate(grid.count(), [&](std::size_t i) { return f.value(grid.at(i)); }));
    side["modes"].push_back(Json{{"n", m.n},
                                 {"k", m.k},
                                 {"eigenvalue", m.eigenvalue},
                                 {"sech_power", m.mode.p},
                                 {"tanh_coeffs", m.mode.coeffs},
                                 {"scale", m.mode.scale}});
  }
  t.write(os, o.format);
  write_sidecar(o.sidecar, o.out, side);
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& os, std::ostream& err) {
  const Grid grid = o.grid.resolve(default_under_grid(o.omega));
  const SpectrumReport r = spectrum_report(o.N, o.omega, grid);
  const double tol = o.tol.value_or(5e-3 * o.omega * o.omega);
  const bool pass = r.max_abs_err() < tol && r.negative_count == static_cast<std::size_t>(o.N);
  Json j{{"N", r.N},
         {"omega", r.omega},
         {"grid", grid_json(grid)},
         {"computed", r.computed},
         {"analytic", r.analytic},
         {"abs_err", r.abs_err},
         {"negative_count", r.negative_count},
         {"tolerance", tol},
         {"warnings", r.warnings},
         {"pass", pass}};
  os << j.dump(2) << '\n';
  if (!pass) {
    err << "spectrum: max abs_err " << format_number(r.max_abs_err()) << " (tolerance "
        << format_number(tol) << "), negative eigenvalues " << r.negative_count << " (expected "
        << o.N << ")\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_riccati(const Options& o, std::ostream& os, std::ostream& err) {
  const Grid grid = o.grid.resolve(Grid::symmetric(10.0 / o.omega, 2001));
  const ChainResidual r = riccati_residual_chain(o.n, o.omega, grid);
  const double tol = o.tol.value_or(1e-10);
  const bool pass = r.lowering < tol && r.raising < tol;
  Json j{{"n", o.n},
         {"omega", o.omega},
         {"grid", grid_json(grid)},
         {"residual_lowering", r.lowering},
         {"residual_raising", r.raising},
         {"tolerance", tol},
         {"pass", pass}};
  os << j.dump(2) << '\n';
  if (!pass) {
    err << "riccati-check: chain residual above tolerance " << format_number(tol) << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

std::vector<CheckRow> verification_suite(int N, double omega) {
  std::vector<CheckRow> rows;
  const auto label = [](const std::string& base, int a) { return base + "[" + std::to_string(a) + "]"; };

  const Grid chain_grid = Grid::symmetric(10.0 / omega, 2001);
  rows.push_back(check_below("fermionic W_1", riccati_residual_fermionic(superpotential_under(1, omega), -omega * omega, chain_grid), 1e-12));
  for (int n = 1; n <= N; ++n) {
    const ChainResidual r = riccati_residual_chain(n, omega, chain_grid);
    rows.push_back(check_below(label("chain lowering", n), r.lowering, 1e-10));
    rows.push_back(check_below(label("chain raising", n), r.raising, 1e-10));
    const ChirpProfile hi = chirp_under(n, omega);
    const ChirpProfile lo = chirp_under(n - 1, omega);
    const double telescoping = kernels::omp::max_over(chain_grid.count(), [&](std::size_t i) {
      const double t = chain_grid.at(i);
      const double s = 1.0 / std::cosh(omega * t);
      return std::abs(hi(t) - lo(t) + 2.0 * n * omega * omega * s * s);
    });
    rows.push_back(check_below(label("telescoping", n), telescoping, 1e-12));
  }

  const std::vector<LadderMode> all = modes(N, omega);
  const ChirpProfile profile = chirp_under(N, omega);
  const Grid mode_grid = default_under_grid(omega);
  std::vector<ClosedFormMode> forms;
  for (const LadderMode& m : all) {
    forms.push_back(m.mode);
    rows.push_back(check_below(label("schrodinger k", m.k),
                               schrodinger_residual(m.mode, profile, m.eigenvalue, mode_grid), 1e-9));
    rows.push_back(check_equal(label("nodes k", m.k), node_count(m.mode), N - m.k));
    rows.push_back(check_equal(label("parity k", m.k), parity(m.mode), (N - m.k) % 2 == 0 ? 1 : -1));
  }

  const std::vector<double> g = orthogonality_matrix(forms, Grid::symmetric(30.0 / omega, 8001));
  double gram_dev = 0.0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      gram_dev = std::max(gram_dev, std::abs(g[i * forms.size() + j] - (i == j ? 1.0 : 0.0)));
    }
  }
  rows.push_back(check_below("orthonormality", gram_dev, 1e-8));

  const SpectrumReport spec = spectrum_report(N, omega, mode_grid);
  rows.push_back(check_equal("negative eigenvalues", static_cast<double>(spec.negative_count), N));
  rows.push_back(check_below("spectrum abs_err", spec.max_abs_err(), 5e-3 * omega * omega));

  const Grid th = theta_grid(2001);
  for (const LadderMode& m : all) {
    const PolarMode pm = to_polar(unit_rescaled(m.mode), N, m.k, th);
    rows.push_back(check_below(label("legendre k", m.k), legendre_residual(pm), 1e-5));
    rows.push_back(check_below(label("legendre ratio k", m.k), proportionality_check(pm), 1e-7));
  }

  const Grid over = default_over_grid(omega);
  rows.push_back(check_below("fermionic tan W", riccati_residual_fermionic(superpotential_over(omega), omega * omega, over), 1e-11));
  rows.push_back(check_below("bosonic tan W", riccati_residual_bosonic(superpotential_over(omega), chirp_over(omega), omega * omega, over), 1e-11));
  rows.push_back(check_below("sec mode", verify_sec_mode(omega, over), 1e-11));
  return rows;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  if (o.N < 1) throw DomainError("verify: N must be >= 1");
  const std::vector<CheckRow> rows = verification_suite(o.N, o.omega);
  bool all_pass = true;
  os << std::left << std::setw(24) << "check" << std::setw(26) << "value" << std::setw(26)
     << "bound" << "result\n";
  for (const CheckRow& r : rows) {
    os << std::setw(24) << r.name << std::setw(26) << format_number(r.value) << std::setw(26)
       << format_number(r.tolerance) << (r.pass ? "PASS" : "FAIL") << '\n';
    if (!r.pass) {
      all_pass = false;
      err << "verify: " << r.name << " failed (" << format_number(r.value) << ")\n";
    }
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_polar(const Options& o, std::ostream& os, std::ostream& err) {
  if (o.k < 1 || o.k > o.N) throw DomainError("polar: need 1 <= k <= N");
  const LadderMode m = mode(o.N - o.k + 1, o.N, 1.0);
  const PolarMode pm = to_polar(m.mode, o.N, o.k, theta_grid(o.theta_points));
  const double residual = legendre_residual(pm);
  const double ratio_dev = proportionality_check(pm);
  const double tol_res = o.tol_legendre.value_or(1e-5);
  const double tol_ratio = o.tol_ratio.value_or(1e-7);

  Table t{{"theta", "y", "legendre", "ratio"}, {pm.theta, pm.value, {}, {}}};
  for (std::size_t i = 0; i < pm.theta.size(); ++i) {
    const double p = assoc_legendre(o.N, o.k, std::cos(pm.theta[i]));
    t.columns[2].push_back(p);
    t.columns[3].push_back(p != 0.0 ? pm.value[i] / p : std::nan(""));
  }
  t.write(os, o.format);

  const bool pass = residual < tol_res && ratio_dev < tol_ratio;
  Json side{{"N", o.N},
            {"k", o.k},
            {"points", o.theta_points},
            {"legendre_residual", residual},
            {"proportionality", ratio_dev},
            {"pass", pass}};
  write_sidecar(o.sidecar, o.out, side);
  err << "polar N=" << o.N << " k=" << o.k << ": legendre_residual " << format_number(residual)
      << ", proportionality " << format_number(ratio_dev) << (pass ? " PASS" : " FAIL") << '\n';
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_newton(const Options& o, std::ostream& os, std::ostream& err) {
  const model::Regime regime = model::classify(o.params, o.critical_tol);
  const auto solutions = model::fundamental_solutions(regime);
  if (!o.grid.t_min || !o.grid.t_max || !o.grid.points) {
    throw DomainError("newton: --tmin, --tmax and --points are required");
  }
  const Grid grid = o.grid.resolve(Grid(0.0, 1.0, 3));
  Table t{{"t", "x_1", "x_2"}, {grid.nodes()}};
  for (const auto& y : solutions) {
    const std::vector<double> x = model::sample_newton<double>(y, o.params, grid);
    err << "newton " << model::to_string(regime.tag) << " y=" << y.name()
        << ": residual " << format_number(model::newton_residual(x, o.params, grid)) << '\n';
    t.columns.push_back(x);
  }
  t.write(os, o.format);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supersymmetric partner chirps of free damping: construction and verification",
               "susy-chirp"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write data to this file instead of stdout");
  };
  const auto add_table_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_oscillator = [&](CLI::App* sub) {
    sub->add_option("--m", o.params.m, "Mass")->required();
    sub->add_option("--gamma", o.params.gamma, "Damping coefficient")->required();
    sub->add_option("--k", o.params.k, "Stiffness")->required();
    sub->add_option("--critical-tol", o.critical_tol, "Relative tolerance for critical damping");
  };

  auto* classify = app.add_subcommand("classify", "Damping regime of m x'' + gamma x' + k x = 0");
  add_oscillator(classify);
  add_common(classify);

  auto* chirp = app.add_subcommand("chirp", "Tabulate a partner chirp profile omega^2(t)");
  chirp->add_option("--family", o.family, "under (sech^2) or over (sec^2)")
      ->check(CLI::IsMember({"under", "over"}));
  chirp->add_option("--N", o.N, "Chain level");
  chirp->add_option("--omega", o.omega, "omega_u or omega_o")->required();
  o.grid.attach(chirp);
  add_table_format(chirp);
  add_common(chirp);

  auto* modes_cmd = app.add_subcommand("modes", "Tabulate the N relaxation modes of the sech^2 chirp");
  modes_cmd->add_option("--N", o.N, "Chain level")->required();
  modes_cmd->add_option("--omega", o.omega, "omega_u")->required();
  modes_cmd->add_option("--sidecar", o.sidecar, "Eigenvalue JSON path (default: <out>.json)");
  o.grid.attach(modes_cmd);
  add_table_format(modes_cmd);
  add_common(modes_cmd);

  auto* spectrum = app.add_subcommand("spectrum", "Finite-difference spectrum against -k^2 omega^2");
  spectrum->add_option("--N", o.N, "Chain level")->required();
  spectrum->add_option("--omega", o.omega, "omega_u")->required();
  spectrum->add_option("--tol", o.tol, "Absolute eigenvalue tolerance (default 5e-3 omega^2)");
  o.grid.attach(spectrum);
  add_common(spectrum);

  auto* riccati = app.add_subcommand("riccati-check", "Residuals of the level-n Riccati chain pair");
  riccati->add_option("--n", o.n, "Chain level (>= 1)")->required();
  riccati->add_option("--omega", o.omega, "omega_u")->required();
  riccati->add_option("--tol", o.tol, "Residual tolerance (default 1e-10)");
  o.grid.attach(riccati);
  add_common(riccati);

  auto* verify = app.add_subcommand("verify", "Run every invariant check for one (N, omega)");
  verify->add_option("--N", o.N, "Chain level")->required();
  verify->add_option("--omega", o.omega, "omega_u")->required();
  add_common(verify);

  auto* polar = app.add_subcommand("polar", "Associated Legendre form of a mode (omega = 1)");
  polar->add_option("--N", o.N, "Chain level")->required();
  polar->add_option("--k", o.k, "Eigenvalue index, 1..N")->required();
  polar->add_option("--points", o.theta_points, "Theta samples on [0.05, pi - 0.05]");
  polar->add_option("--sidecar", o.sidecar, "Summary JSON path (default: <out>.json)");
  polar->add_option("--tol-legendre", o.tol_legendre, "Legendre residual tolerance (default 1e-5)");
  polar->add_option("--tol-ratio", o.tol_ratio, "Proportionality tolerance (default 1e-7)");
  add_table_format(polar);
  add_common(polar);

  auto* newton = app.add_subcommand("newton", "Gauge-mapped fundamental solutions x(t)");
  add_oscillator(newton);
  o.grid.attach(newton);
  add_table_format(newton);
  add_common(newton);

  std::vector<const char*> argv{"susy-chirp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    std::ostringstream buffer;
    int code = kExitOk;
    if (classify->parsed()) code = cmd_classify(o, buffer);
    else if (chirp->parsed()) code = cmd_chirp(o, buffer);
    else if (modes_cmd->parsed()) code = cmd_modes(o, buffer);
    else if (spectrum->parsed()) code = cmd_spectrum(o, buffer, err);
    else if (riccati->parsed()) code = cmd_riccati(o, buffer, err);
    else if (verify->parsed()) code = cmd_verify(o, buffer, err);
    else if (polar->parsed()) code = cmd_polar(o, buffer, err);
    else if (newton->parsed()) code = cmd_newton(o, buffer, err);
    Sink sink(o.out, out);
    sink.stream() << buffer.str();
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DegeneracyError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InconclusiveError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace susy::cli
