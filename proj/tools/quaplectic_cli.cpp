#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "quaplectic/field_eq.hpp"
#include "quaplectic/gelfand.hpp"
#include "quaplectic/io.hpp"
#include "quaplectic/kinematics.hpp"
#include "quaplectic/lie_core.hpp"
#include "quaplectic/verify.hpp"

using namespace quaplectic;

namespace {

struct RunConfig {
  int n = 1;
  int nmax = 8;
  int window = 6;
  double s = 1.0;
  double c = 1.0;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::vector<int> sigma_label;
  int beta = 1;
  std::string format = "text";
  std::string out;
  double light = 1.0;
  double force = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    if (nmax < 2) throw std::invalid_argument("--nmax must be at least 2");
    if (window < 2) throw std::invalid_argument("--window must be at least 2");
    if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
    if (s == 0) throw std::invalid_argument("--s must be nonzero");
    if (c == 0) throw std::invalid_argument("--c must be nonzero");
    if (beta < 1) throw std::invalid_argument("--beta-order must be at least 1");
  }

  PhysicalConstants constants() const {
    PhysicalConstants k;
    k.c = light;
    k.b = force;
    k.hbar = hbar;
    k.validate();
    return k;
  }
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a report is written to <out>/<name> atomically, or to stdout
void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    return;
  }
  io::write_atomic(std::filesystem::path(cfg.out) / name, content);
}

std::string label_str(const std::vector<int>& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? " " : "") + std::to_string(l[i]);
  return s;
}

std::string manifest_text(const RunConfig& cfg, const std::string& command, io::KeyValues extra = {}) {
  extra["command"] = command;
  extra["n"] = std::to_string(cfg.n);
  extra["nmax"] = std::to_string(cfg.nmax);
  extra["s"] = io::fmt(cfg.s);
  extra["c"] = io::fmt(cfg.c);
  extra["sigma_label"] = label_str(cfg.sigma_label);
  extra["beta"] = std::to_string(cfg.beta);
  extra["tol"] = io::fmt(cfg.tol);
  extra["seed"] = std::to_string(cfg.seed);
  return io::write_key_values(extra);
}

int run_verify(const RunConfig& cfg, bool list) {
  if (list) {
    std::string text;
    for (const auto& name : invariant_manifest()) text += name + "\n";
    emit(cfg, "manifest.txt", text);
    return 0;
  }
  VerifyConfig v;
  v.n = cfg.n;
  v.nmax = cfg.nmax;
  v.window = cfg.window;
  v.s = cfg.s;
  v.c = cfg.c;
  v.tol = cfg.tol;
  v.seed = cfg.seed;
  const auto results = run_invariants(v);

  // every manifest entry must be reported exactly once, in order
  const auto names = invariant_manifest();
  if (names.size() != results.size()) throw std::logic_error("verify report does not match the manifest");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] != results[i].module + "." + results[i].name) throw std::logic_error("verify report out of order");

  std::ostringstream os;
  int failures = 0;
  if (cfg.format == "csv") os << io::csv_row({"module", "invariant", "deviation", "tolerance", "status"});
  for (const auto& r : results) {
    const std::string status = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
    if (!r.pass && !r.informational) ++failures;
    if (cfg.format == "csv")
      os << io::csv_row({r.module, r.name, io::fmt(r.deviation), io::fmt(r.tol), status});
    else
      os << status << " " << r.module << "." << r.name << " deviation=" << io::fmt(r.deviation)
         << " tol=" << io::fmt(r.tol) << "\n";
  }
  if (cfg.format != "csv") os << (failures == 0 ? "all invariants pass\n" : std::to_string(failures) + " invariant(s) failed\n");
  emit(cfg, cfg.format == "csv" ? "verify.csv" : "verify.txt", os.str());
  for (const auto& r : results)
    if (!r.pass && !r.informational)
      std::cerr << "failed: " << r.module << "." << r.name << " deviation " << io::fmt(r.deviation) << " > "
                << io::fmt(r.tol) << "\n";
  return failures == 0 ? 0 : 1;
}

std::string spectrum_csv(const SpectrumResult& r, const std::string& format) {
  // cluster residual is the largest residual among its members
  std::ostringstream os;
  if (format == "csv") os << io::csv_row({"eigenvalue", "multiplicity", "residual"});
  std::size_t pos = 0;
  for (const auto& c : r.clusters) {
    double res = 0;
    for (int i = 0; i < c.multiplicity; ++i) res = std::max(res, r.residuals[pos + static_cast<std::size_t>(i)]);
    pos += static_cast<std::size_t>(c.multiplicity);
    if (format == "csv")
      os << io::csv_row({io::fmt(c.value), std::to_string(c.multiplicity), io::fmt(res)});
    else
      os << io::fmt(c.value) << " x" << c.multiplicity << " residual=" << io::fmt(res) << "\n";
  }
  return os.str();
}

int run_spectrum(RunConfig cfg, const std::string& mode, int k) {
  SpectrumResult r;
  io::KeyValues extra{{"mode", mode}};
  if (mode == "oscillator") {
    r = oscillator_spectrum(cfg.n, cfg.nmax);
  } else if (mode == "field") {
    if (cfg.sigma_label.empty()) cfg.sigma_label.assign(static_cast<std::size_t>(cfg.n + 1), 0);
    if (static_cast<int>(cfg.sigma_label.size()) != cfg.n + 1) throw std::invalid_argument("field mode needs a label of length n+1");
    const SigmaOperators ops(enumerate_nonunitary(cfg.sigma_label));
    const FieldRepresentation rep(ops, build_basis(cfg.n, cfg.nmax), {cfg.c, cfg.s});
    r = solve_spectrum(rho_casimir_op(cfg.beta, rep), true);
  } else if (mode == "compact") {
    if (cfg.sigma_label.empty()) cfg.sigma_label.assign(static_cast<std::size_t>(cfg.n), 0);
    if (static_cast<int>(cfg.sigma_label.size()) != cfg.n) throw std::invalid_argument("compact mode needs a label of length n");
    const auto p = compact_field_operator(enumerate_patterns(cfg.sigma_label, true), k, cfg.beta);
    r = solve_spectrum(p.matrix);
    extra["k"] = std::to_string(k);
  } else {
    throw std::invalid_argument("unknown mode " + mode);
  }
  extra["dim"] = std::to_string(r.dim);
  extra["max_residual"] = io::fmt(r.max_residual);
  emit(cfg, cfg.format == "csv" ? "spectrum.csv" : "spectrum.txt", spectrum_csv(r, cfg.format));
  if (!cfg.out.empty()) emit(cfg, "manifest.txt", manifest_text(cfg, "spectrum", extra));
  if (r.max_residual > cfg.tol) throw Failure("eigen residual " + io::fmt(r.max_residual) + " exceeds tolerance");
  return 0;
}

Vec3 parse_vec(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    v.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
  }
  if (v.size() == 1) return Vec3(v[0], 0, 0);
  if (v.size() != 3) throw std::invalid_argument("expected 1 or 3 components in '" + text + "'");
  return Vec3(v[0], v[1], v[2]);
}

int run_boost(const RunConfig& cfg, const std::string& beta_s, const std::string& gamma_s) {
  const PhysicalConstants k = cfg.constants();
  const Vec3 beta = parse_vec(beta_s), gamma = parse_vec(gamma_s);
  const Mat8 m = pure_boost(beta, gamma, k);
  const double born = born_defect(m, k);
  std::ostringstream os;
  static const char* slots[] = {"T", "E", "Q1", "Q2", "Q3", "P1", "P2", "P3"};
  if (cfg.format == "csv") {
    os << io::csv_row({slots, slots + 8});
    for (int i = 0; i < 8; ++i) {
      std::vector<std::string> row;
      for (int j = 0; j < 8; ++j) row.push_back(io::fmt(m(i, j)));
      os << io::csv_row(row);
    }
  } else {
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) os << (j ? " " : "") << io::fmt(m(i, j));
      os << "\n";
    }
  }
  io::KeyValues report{{"omega", io::fmt(omega(beta, gamma))}, {"born_defect", io::fmt(born)}};
  if (gamma.isZero()) report["velocity_boost_defect"] = io::fmt((m - velocity_boost(beta, k)).cwiseAbs().maxCoeff());
  if (beta.isZero()) report["force_boost_defect"] = io::fmt((m - force_boost(gamma, k)).cwiseAbs().maxCoeff());
  const std::string rep = io::write_key_values(report);
  if (cfg.out.empty()) {
    std::cout << os.str() << (cfg.format == "csv" ? "\r\n" : "") << rep;
  } else {
    emit(cfg, cfg.format == "csv" ? "boost.csv" : "boost.txt", os.str());
    emit(cfg, "report.txt", rep);
  }
  if (born > cfg.tol) throw Failure("born form not invariant: " + io::fmt(born));
  return 0;
}

int run_gt(RunConfig cfg, const std::string& kind) {
  if (cfg.sigma_label.empty()) throw std::invalid_argument("gt needs --sigma-label");
  GTBasis b;
  if (kind == "compact")
    b = enumerate_patterns(cfg.sigma_label, true);
  else if (kind == "windowed")
    b = enumerate_patterns(cfg.sigma_label, false, cfg.window);
  else if (kind == "nonunitary")
    b = enumerate_nonunitary(cfg.sigma_label);
  else
    throw std::invalid_argument("unknown kind " + kind);
  const SigmaOperators ops(b);
  if (cfg.format == "mm") {
    for (int a = b.first_index(); a <= b.last_index(); ++a)
      for (int c = b.first_index(); c <= b.last_index(); ++c) {
        const std::string name = "Z_" + std::to_string(a) + "_" + std::to_string(c);
        const std::string text = io::matrix_market(ops.Z(a, c), name);
        if (cfg.out.empty())
          std::cout << text;
        else
          emit(cfg, name + ".mtx", text);
      }
  } else {
    std::ostringstream os;
    if (cfg.format == "csv") os << io::csv_row({"index", "pattern"});
    for (int i = 0; i < b.size(); ++i) {
      std::string rows;
      for (const auto& r : b.patterns[static_cast<std::size_t>(i)].rows) rows += (rows.empty() ? "" : " | ") + label_str(r);
      if (cfg.format == "csv")
        os << io::csv_row({std::to_string(i), rows});
      else
        os << i << ": " << rows << "\n";
    }
    if (cfg.format != "csv") {
      os << "dimension=" << b.size() << "\n";
      os << "relations_defect=" << io::fmt(gt_relation_defect(ops, b.interior(kind == "windowed" ? 2 : 0))) << "\n";
      if (kind != "windowed")
        for (int beta = 1; beta <= 2 && beta <= b.N(); ++beta)
          os << "D" << beta << "=" << io::fmt(casimir_scalar_check(beta, b).scalar) << "\n";
    }
    emit(cfg, cfg.format == "csv" ? "gt.csv" : "gt.txt", os.str());
  }
  return 0;
}

int run_export(const RunConfig& cfg, const std::string& what, const std::string& basis, int mode, const std::string& sign) {
  std::string text, name;
  if (what == "table") {
    text = export_table(structure_constant_table(cfg.n, basis == "real" ? Basis::real : Basis::complex));
    name = "table.txt";
  } else {
    const FockBasis fb = build_basis(cfg.n, cfg.nmax);
    SparseOperator op;
    if (what == "ladder") {
      op = ladder_op(mode, sign == "plus" ? Sign::plus : Sign::minus, fb);
    } else if (what == "oracle") {
      op = hermite_oracle_op(mode, sign == "plus" ? Sign::plus : Sign::minus, fb);
    } else if (what == "oscillator") {
      op = oscillator_op(fb);
    } else if (what == "grading") {
      op = k_grading_op(fb);
    } else if (what == "casimir") {
      std::vector<int> label = cfg.sigma_label;
      if (label.empty()) label.assign(static_cast<std::size_t>(cfg.n + 1), 0);
      const SigmaOperators ops(enumerate_nonunitary(label));
      const FieldRepresentation rep(ops, fb, {cfg.c, cfg.s});
      op = rho_casimir_op(cfg.beta, rep).matrix;
    } else {
      throw std::invalid_argument("unknown export target " + what);
    }
    text = io::matrix_market(op, what + " n=" + std::to_string(cfg.n) + " nmax=" + std::to_string(cfg.nmax));
    name = what + ".mtx";
  }
  emit(cfg, name, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaplectic group representations and Casimir field equations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  app.add_option("--n", cfg.n, "spatial dimension n")->capture_default_str();
  app.add_option("--nmax", cfg.nmax, "Fock truncation degree")->capture_default_str();
  app.add_option("--window", cfg.window, "window bound for noncompact patterns")->capture_default_str();
  app.add_option("--s", cfg.s, "projective scale s")->capture_default_str();
  app.add_option("--c", cfg.c, "central eigenvalue c")->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--sigma-label", cfg.sigma_label, "irrep label, comma separated")->delimiter(',');
  app.add_option("--beta-order", cfg.beta, "Casimir order beta")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "mm", "text"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--light", cfg.light, "speed of light")->capture_default_str();
  app.add_option("--force", cfg.force, "universal force constant b")->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "Planck constant")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every module invariant");
  bool list = false;
  verify->add_flag("--list", list, "print the invariant manifest");

  auto* spectrum = app.add_subcommand("spectrum", "field operator spectra");
  std::string mode = "oscillator";
  int k = 1;
  spectrum->add_option("--mode", mode)->check(CLI::IsMember({"oscillator", "field", "compact"}))->capture_default_str();
  spectrum->add_option("--k", k, "polynomial degree for the compact case")->capture_default_str();

  auto* boost = app.add_subcommand("boost", "pure boost matrix and invariance report");
  std::string beta_s = "0", gamma_s = "0";
  boost->add_option("--beta", beta_s, "velocity rapidity, 1 or 3 comma separated components")->capture_default_str();
  boost->add_option("--gamma", gamma_s, "force rapidity, 1 or 3 comma separated components")->capture_default_str();

  auto* gt = app.add_subcommand("gt", "Gel'fand-Tsetlin patterns and operators");
  std::string kind = "compact";
  gt->add_option("--kind", kind)->check(CLI::IsMember({"compact", "windowed", "nonunitary"}))->capture_default_str();

  auto* exp = app.add_subcommand("export", "operators in Matrix Market form, structure tables as text");
  std::string what = "table", basis = "complex", sign = "plus";
  int export_mode = 0;
  exp->add_option("--what", what)
      ->check(CLI::IsMember({"table", "ladder", "oracle", "oscillator", "grading", "casimir"}))
      ->capture_default_str();
  exp->add_option("--basis", basis)->check(CLI::IsMember({"real", "complex"}))->capture_default_str();
  exp->add_option("--mode", export_mode, "ladder mode index")->capture_default_str();
  exp->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    if (*verify) return run_verify(cfg, list);
    if (*spectrum) return run_spectrum(cfg, mode, k);
    if (*boost) return run_boost(cfg, beta_s, gamma_s);
    if (*gt) return run_gt(cfg, kind);
    if (*exp) return run_export(cfg, what, basis, export_mode, sign);
  } catch (const Failure& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
