#include "quaplectic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "quaplectic/groups.hpp"
#include "quaplectic/kinematics.hpp"

namespace quaplectic {

int generator_degree(const GeneratorId& g) {
  switch (g.kind) {
    case Kind::I: return 0;
    case Kind::X:
    case Kind::Y:
    case Kind::Aplus:
    case Kind::Aminus: return 1;
    default: return 2;
  }
}

namespace {

bool in_little_algebra(const GeneratorId& g) {
  switch (g.kind) {
    case Kind::L:
    case Kind::M:
    case Kind::Z:
    case Kind::Zhat:
    case Kind::U: return true;
    default: return false;
  }
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

FieldRepresentation trivial_rep(int n, int nmax, const RepresentationParams& params) {
  static thread_local std::map<int, GTBasis> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_nonunitary(IrrepLabel(static_cast<std::size_t>(n + 1), 0))).first;
  return FieldRepresentation(SigmaOperators(it->second), build_basis(n, nmax), params);
}

}  // namespace

double represented_bracket_defect(int n, int nmax, const RepresentationParams& params, Basis basis) {
  const GTBasis sigma = enumerate_nonunitary(IrrepLabel(static_cast<std::size_t>(n + 1), 0));
  const SigmaOperators ops(sigma);
  const FieldRepresentation rep(ops, build_basis(n, nmax), params);
  const auto gens = basis_generators(n, basis);
  std::vector<AlgebraElement> el;
  std::vector<SparseOperator> op;
  for (const auto& g : gens) {
    el.push_back(AlgebraElement::generator(n, g));
    op.push_back(rep.represent(el.back()));
  }
  const double ratio = params.c / params.s;
  double worst = 0.0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const AlgebraElement br = basis == Basis::real ? bracket(el[i], el[j]) : bracket_complex(el[i], el[j]);
      const bool scaled = (in_little_algebra(gens[i]) && gens[j].kind != Kind::I) ||
                          (in_little_algebra(gens[j]) && gens[i].kind != Kind::I);
      const cd k(0.0, scaled ? ratio : 1.0);
      SparseOperator target = br.is_zero() ? SparseOperator(rep.dim(), rep.dim()) : SparseOperator(rep.represent(br) * k);
      SparseOperator dev = commutator(op[i], op[j]) - target;
      const auto cols = rep.interior(generator_degree(gens[i]) + generator_degree(gens[j]));
      worst = std::max(worst, column_max_norm(dev, cols));
    }
  }
  return worst;
}

InvarianceReport translation_invariance(const FieldRepresentation& rep) {
  InvarianceReport r;
  const auto cols = rep.interior(3);
  for (int a = 0; a <= rep.n(); ++a)
    for (int b = 0; b <= rep.n(); ++b) {
      const SparseOperator full = W_op(a, b, rep, WPart::full);
      const SparseOperator lad = W_op(a, b, rep, WPart::ladder_only);
      const SparseOperator cen = W_op(a, b, rep, WPart::central_only);
      for (int c = 0; c <= rep.n(); ++c)
        for (const SparseOperator& t : {rep.Aplus(c), rep.Aminus(c)}) {
          r.full = std::max(r.full, column_max_norm(commutator(full, t), cols));
          r.ladder_only = std::max(r.ladder_only, column_max_norm(commutator(lad, t), cols));
          r.central_only = std::max(r.central_only, column_max_norm(commutator(cen, t), cols));
        }
    }
  return r;
}

double centrality_defect(int beta, const FieldRepresentation& rep) {
  const FieldOperator C = rho_casimir_op(beta, rep);
  double worst = 0.0;
  for (const auto& g : basis_generators(rep.n(), Basis::complex)) {
    const SparseOperator x = rep.represent(AlgebraElement::generator(rep.n(), g));
    const auto cols = rep.interior(2 * beta + generator_degree(g));
    worst = std::max(worst, column_max_norm(commutator(C.matrix, x), cols));
  }
  return worst;
}

double oscillator_defect(int n, int nmax) {
  const FockBasis basis = build_basis(n, nmax);
  DenseOperator dev(oscillator_op(basis));
  for (int i = 0; i < basis.size(); ++i) dev(i, i) -= 2.0 * k_value(basis.states[static_cast<std::size_t>(i)]) + n - 1;
  return dev.cwiseAbs().maxCoeff();
}

double oracle_equivalence_defect(int n, int nmax) {
  const FockBasis basis = build_basis(n, nmax);
  double worst = 0.0;
  for (int a = 0; a <= n; ++a)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const DenseOperator d(ladder_op(a, s, basis) - hermite_oracle_op(a, s, basis));
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
  return worst;
}

double gt_relation_defect(const SigmaOperators& ops, const std::vector<int>& cols) {
  const auto& basis = ops.basis();
  const int lo = basis.first_index(), hi = basis.last_index();
  auto g = [&](int a, int b) { return basis.compact() ? (a == b ? 1 : 0) : eta(a, b); };
  double worst = 0.0;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c)
        for (int d = lo; d <= hi; ++d) {
          SparseOperator dev = commutator(ops.Z(a, b), ops.Z(c, d));
          if (g(b, c) != 0) dev -= ops.Z(a, d) * cd(g(b, c));
          if (g(a, d) != 0) dev += ops.Z(c, b) * cd(g(a, d));
          worst = std::max(worst, column_max_norm(dev, cols));
        }
  return worst;
}

GroupLawReport group_law_defects(int n, int samples, std::uint64_t seed) {
  GroupLawReport r;
  std::mt19937_64 rng(seed);
  for (auto form : {MetricForm::canonical, MetricForm::hatted}) {
    const auto e = HeisenbergElement::identity(n, form);
    const auto ea = AutomorphismElement::identity(n, form);
    for (int i = 0; i < samples; ++i) {
      const auto x = random_heisenberg(n, form, rng), y = random_heisenberg(n, form, rng), z = random_heisenberg(n, form, rng);
      r.heisenberg = std::max({r.heisenberg, h_distance(h_compose(h_compose(x, y), z), h_compose(x, h_compose(y, z))),
                               h_distance(h_compose(x, h_inverse(x)), e), h_distance(h_compose(h_inverse(x), x), e)});
      const auto p = random_automorphism(n, form, rng), q = random_automorphism(n, form, rng),
                 s = random_automorphism(n, form, rng);
      r.automorphism =
          std::max({r.automorphism, aut_distance(aut_compose(aut_compose(p, q), s), aut_compose(p, aut_compose(q, s))),
                    aut_distance(aut_compose(p, aut_inverse(p)), ea), aut_distance(aut_compose(aut_inverse(p), p), ea)});
    }
  }
  const auto eq = QuaplecticElement::identity(n);
  for (int i = 0; i < samples; ++i) {
    const auto x = random_quaplectic(n, rng), y = random_quaplectic(n, rng), z = random_quaplectic(n, rng);
    r.quaplectic = std::max({r.quaplectic, q_distance(q_compose(q_compose(x, y), z), q_compose(x, q_compose(y, z))),
                             q_distance(q_compose(x, q_inverse(x)), eq), q_distance(q_compose(q_inverse(x), x), eq)});
    const MembershipReport m = check_membership(random_pseudo_unitary(n, rng), 1e-10);
    r.membership = std::max({r.membership, m.symplectic_defect, m.orthogonal_defect});
  }
  return r;
}

KinematicsReport kinematics_defects(int samples, std::uint64_t seed) {
  KinematicsReport r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), scale(0.5, 3.0);
  for (int i = 0; i < samples; ++i) {
    PhysicalConstants k;
    k.c = scale(rng);
    k.b = scale(rng);
    Vec3 beta(u(rng), u(rng), u(rng)), gamma(u(rng), u(rng), u(rng));
    // keep omega at or below 3
    const double w = omega(beta, gamma);
    if (w > 3.0) {
      beta *= 3.0 / w;
      gamma *= 3.0 / w;
    }
    r.velocity_limit = std::max(r.velocity_limit, max_abs(pure_boost(beta, Vec3::Zero(), k) - velocity_boost(beta, k)));
    r.force_limit = std::max(r.force_limit, max_abs(pure_boost(Vec3::Zero(), gamma, k) - force_boost(gamma, k)));
    BoostParams z;
    z.beta = beta;
    z.gamma = gamma;
    const Mat8 G = infinitesimal_generator(z, k, {true, false});
    const Mat8 E = G.exp();
    const Mat8 B = pure_boost(beta, gamma, k);
    r.exponential = std::max(r.exponential, max_abs(B - E));
    r.born = std::max(r.born, born_defect(B, k));
  }
  return r;
}

CompactReport compact_field_check(const GTBasis& sigma, int k, int beta) {
  const CompactFieldProblem p = compact_field_operator(sigma, k, beta);
  CompactReport r;
  r.hermiticity = (p.matrix - p.matrix.adjoint()).cwiseAbs().maxCoeff();
  for (const auto& row : p.total)
    for (const auto& t : row) r.commutation = std::max(r.commutation, (p.matrix * t - t * p.matrix).cwiseAbs().maxCoeff());
  const SpectrumResult s = solve_spectrum(p.matrix, 1e-8);
  r.residual = s.max_residual;
  r.clusters = s.clusters;
  return r;
}

WeylReport weyl_defects(int nmax, double c, int samples, std::uint64_t seed) {
  WeylReport r;
  const FockBasis basis = build_basis(0, nmax);
  const auto cols = basis.interior(nmax - nmax / 4);
  const RepresentationParams params{c, 1.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  const auto eye = Eigen::MatrixXcd::Identity(basis.size(), basis.size());
  for (auto form : {MetricForm::canonical, MetricForm::hatted}) {
    const Eigen::MatrixXd zeta = zeta_matrix(0, form);
    for (int i = 0; i < samples; ++i) {
      HeisenbergElement x{Eigen::Vector2d(u(rng), u(rng)), u(rng), form};
      HeisenbergElement y{Eigen::Vector2d(u(rng), u(rng)), u(rng), form};
      const Eigen::MatrixXcd ux = rep_group_element(x, params, basis), uy = rep_group_element(y, params, basis);
      const double theta = -0.5 * c * x.w.dot(zeta * y.w);
      const Eigen::MatrixXcd comp = ux * uy - std::exp(cd(0.0, theta)) * rep_group_element(h_compose(x, y), params, basis);
      r.composition = std::max(r.composition, column_max_norm(DenseOperator(comp), cols));
      // U(x) U(y) U(x)^-1 U(y)^-1 is a pure phase: twice the cocycle plus the
      // central part of the group commutator
      const HeisenbergElement g = h_compose(h_compose(h_compose(x, y), h_inverse(x)), h_inverse(y));
      const Eigen::MatrixXcd grp = ux * uy * rep_group_element(h_inverse(x), params, basis) *
                                   rep_group_element(h_inverse(y), params, basis);
      const double phase = 2.0 * theta + c * g.iota;
      const Eigen::MatrixXcd comm = grp - std::exp(cd(0.0, phase)) * eye;
      r.commutator = std::max(r.commutator, g.w.cwiseAbs().maxCoeff());
      r.commutator = std::max(r.commutator, column_max_norm(DenseOperator(comm), basis.interior(nmax / 2)));
    }
  }
  return r;
}

namespace {

// [x, y] in the complex basis written from the index formulas
AlgebraElement complex_table_entry(int n, const GeneratorId& x, const GeneratorId& y) {
  AlgebraElement out(n);
  const Coeff i = Coeff::i();
  auto add = [&](const GeneratorId& g, int sign, int metric) {
    if (metric != 0) out += Coeff(static_cast<long>(sign * metric)) * i * AlgebraElement::generator(n, g);
  };
  if (x.kind == Kind::Z && y.kind == Kind::Z) {
    add(gen::Z(y.a, x.b), 1, eta(x.a, y.b));
    add(gen::Z(x.a, y.b), -1, eta(x.b, y.a));
  } else if (x.kind == Kind::Aplus && y.kind == Kind::Aminus) {
    add(gen::I(), 1, eta(x.a, y.a));
  } else if (x.kind == Kind::Aminus && y.kind == Kind::Aplus) {
    add(gen::I(), -1, eta(x.a, y.a));
  } else if (x.kind == Kind::Z && y.kind == Kind::Aminus) {
    add(gen::Aminus(x.b), 1, eta(x.a, y.a));
  } else if (x.kind == Kind::Z && y.kind == Kind::Aplus) {
    add(gen::Aplus(x.a), -1, eta(x.b, y.a));
  } else if (x.kind == Kind::Aminus && y.kind == Kind::Z) {
    add(gen::Aminus(y.b), -1, eta(y.a, x.a));
  } else if (x.kind == Kind::Aplus && y.kind == Kind::Z) {
    add(gen::Aplus(y.a), 1, eta(y.b, x.a));
  }
  return out;
}

std::vector<int> pattern_weight(const GTPattern& p, int N) {
  std::vector<int> w(static_cast<std::size_t>(N));
  int below = 0;
  for (int level = 1; level <= N; ++level) {
    int sum = 0;
    for (int i = 1; i <= level; ++i) sum += p.m(i, level);
    w[static_cast<std::size_t>(level - 1)] = sum - below;
    below = sum;
  }
  return w;
}

std::map<std::vector<int>, int> weights_of(const IrrepLabel& label) {
  std::map<std::vector<int>, int> out;
  const GTBasis b = enumerate_patterns(label, true);
  for (const auto& p : b.patterns) ++out[pattern_weight(p, b.N())];
  return out;
}

// highest weights of sigma (x) the degree-k polynomial sector
std::vector<IrrepLabel> tensor_decomposition(const IrrepLabel& sigma, int k) {
  const int N = static_cast<int>(sigma.size());
  std::map<std::vector<int>, int> w;
  std::vector<int> cur(static_cast<std::size_t>(N), 0);
  std::vector<std::vector<int>> monomials;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == N - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      monomials.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, k);
  for (const auto& [ws, m] : weights_of(sigma))
    for (const auto& mono : monomials) {
      std::vector<int> t = ws;
      for (int i = 0; i < N; ++i) t[static_cast<std::size_t>(i)] += mono[static_cast<std::size_t>(i)];
      w[t] += m;
    }
  std::vector<IrrepLabel> out;
  while (!w.empty()) {
    std::vector<int> hw;
    for (const auto& [x, m] : w)
      if (m > 0 && std::is_sorted(x.rbegin(), x.rend()) && (hw.empty() || x > hw)) hw = x;
    if (hw.empty()) break;
    out.push_back(hw);
    for (const auto& [x, m] : weights_of(hw))
      if ((w[x] -= m) == 0) w.erase(x);
  }
  return out;
}

bool refines(std::vector<int> parts, std::vector<int> targets) {
  std::sort(parts.rbegin(), parts.rend());
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == parts.size()) return std::all_of(targets.begin(), targets.end(), [](int t) { return t == 0; });
    for (auto& t : targets)
      if (t >= parts[i]) {
        t -= parts[i];
        if (place(i + 1)) return true;
        t += parts[i];
      }
    return false;
  };
  return place(0);
}

void for_each_label(int N, int lo, int hi, const std::function<void(const IrrepLabel&)>& f) {
  IrrepLabel cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == N) {
      f(cur);
      return;
    }
    const int top = cur.empty() ? hi : cur.back();
    for (int v = lo; v <= top; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

long weyl_dimension(const IrrepLabel& m) {
  double num = 1, den = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      num *= m[i] - m[j] + static_cast<double>(j - i);
      den *= static_cast<double>(j - i);
    }
  return std::lround(num / den);
}

struct Entry {
  const char* module;
  const char* name;
};

const std::vector<Entry>& manifest() {
  static const std::vector<Entry> m = {
      {"lie_core", "real_antisymmetry"},
      {"lie_core", "real_jacobi"},
      {"lie_core", "complex_table_change_of_basis"},
      {"lie_core", "zhat_traceless"},
      {"lie_core", "casimir_commutators"},
      {"lie_core", "poincare_closure"},
      {"groups", "membership_intersection"},
      {"groups", "heisenberg_axioms"},
      {"groups", "automorphism_axioms"},
      {"groups", "quaplectic_axioms"},
      {"groups", "aut_act_homomorphism"},
      {"groups", "inner_automorphism_shift"},
      {"kinematics", "exponential"},
      {"kinematics", "velocity_limit"},
      {"kinematics", "force_limit"},
      {"kinematics", "born_invariance"},
      {"kinematics", "unit_scaling_covariance"},
      {"fock", "commutator_suite_real"},
      {"fock", "commutator_suite_complex"},
      {"fock", "oracle_equivalence"},
      {"fock", "rho_z_preserves_grading"},
      {"fock", "ladder_adjoint"},
      {"fock", "weyl_composition"},
      {"fock", "weyl_commutator"},
      {"gelfand", "compact_relations"},
      {"gelfand", "pattern_counts"},
      {"gelfand", "schur_scalar"},
      {"gelfand", "windowed_relations"},
      {"field_eq", "casimir_centrality"},
      {"field_eq", "translation_invariance"},
      {"field_eq", "both_terms_necessity"},
      {"field_eq", "beta1_direct"},
      {"field_eq", "beta1_printed_reading"},
      {"field_eq", "oscillator_spectrum"},
      {"field_eq", "compact_hermiticity"},
      {"field_eq", "compact_real_spectrum"},
      {"field_eq", "compact_commutation"},
      {"field_eq", "compact_refinement"},
  };
  return m;
}

}  // namespace

std::vector<std::string> invariant_manifest() {
  std::vector<std::string> out;
  for (const auto& e : manifest()) out.push_back(std::string(e.module) + "." + e.name);
  return out;
}

std::vector<CheckResult> run_invariants(const VerifyConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
  if (cfg.nmax < 2) throw std::invalid_argument("Nmax must be at least 2");
  if (!(cfg.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.window < 2) throw std::invalid_argument("window must be at least 2");
  RepresentationParams{cfg.c, cfg.s}.validate();

  std::vector<CheckResult> out;
  auto push = [&](const char* mod, const char* name, double dev, double tol) {
    out.push_back({mod, name, dev, tol, dev <= tol, false});
  };
  // pass when the deviation exceeds the bound
  auto push_above = [&](const char* mod, const char* name, double dev, double bound) {
    out.push_back({mod, name, dev, bound, dev > bound, false});
  };
  auto push_info = [&](const char* mod, const char* name, double dev, double tol) {
    out.push_back({mod, name, dev, tol, dev <= tol, true});
  };
  const double tol = cfg.tol;
  const int n = cfg.n;
  auto G = [](int nn, const GeneratorId& g) { return AlgebraElement::generator(nn, g); };

  // exact arithmetic: deviations count failing cases
  {
    const auto gens = basis_generators(n, Basis::real);
    double anti = 0, jac = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!(bracket(G(n, gens[i]), G(n, gens[j])) + bracket(G(n, gens[j]), G(n, gens[i]))).is_zero()) anti += 1;
        if (i < j)
          for (std::size_t k = j + 1; k < gens.size(); ++k)
            if (!jacobiator(G(n, gens[i]), G(n, gens[j]), G(n, gens[k])).is_zero()) jac += 1;
      }
    push("lie_core", "real_antisymmetry", anti, 0);
    push("lie_core", "real_jacobi", jac, 0);
    double table = 0;
    const auto cg = basis_generators(n, Basis::complex);
    for (const auto& x : cg)
      for (const auto& y : cg)
        if (!(bracket_complex(G(n, x), G(n, y)) == complex_table_entry(n, x, y))) table += 1;
    push("lie_core", "complex_table_change_of_basis", table, 0);
    AlgebraElement tr(n);
    for (int a = 0; a <= n; ++a) tr += Coeff(static_cast<long>(eta(a, a))) * G(n, gen::Zhat(a, a));
    push("lie_core", "zhat_traceless", resolve(tr).is_zero() ? 0 : 1, 0);
    // the enveloping-algebra check runs at n = 1
    double central = 0;
    const EnvelopingPoly id = EnvelopingPoly::from_element(G(1, gen::I()));
    for (int beta = 1; beta <= 2; ++beta) {
      const EnvelopingPoly D = unitary_casimir_element(beta, 1);
      if (!normal_order(commutator(D, id)).is_zero()) central += 1;
      for (int alpha = 1; alpha <= 2; ++alpha)
        if (!normal_order(commutator(D, casimir_element(alpha, 1))).is_zero()) central += 1;
    }
    push("lie_core", "casimir_commutators", central, 0);
    double closure = 0;
    for (auto sel : {PoincareSet::velocity_EP, PoincareSet::velocity_TQ, PoincareSet::force_EQ, PoincareSet::force_TP})
      if (!closes(poincare_subalgebra(sel), 3)) closure += 1;
    push("lie_core", "poincare_closure", closure, 0);
  }

  {
    const auto g = group_law_defects(n, 100, cfg.seed);
    push("groups", "membership_intersection", g.membership, 1e-10);
    push("groups", "heisenberg_axioms", g.heisenberg, 1e-12);
    push("groups", "automorphism_axioms", g.automorphism, 1e-12);
    push("groups", "quaplectic_axioms", g.quaplectic, 1e-12);
    std::mt19937_64 rng(cfg.seed + 1);
    double hom = 0, inner = 0;
    for (int i = 0; i < 20; ++i) {
      const auto p = random_automorphism(n, MetricForm::hatted, rng), q = random_automorphism(n, MetricForm::hatted, rng);
      const auto h1 = random_heisenberg(n, MetricForm::hatted, rng), h2 = random_heisenberg(n, MetricForm::hatted, rng);
      hom = std::max({hom, h_distance(aut_act(p, h_compose(h1, h2)), h_compose(aut_act(p, h1), aut_act(p, h2))),
                      h_distance(aut_act(aut_compose(p, q), h1), aut_act(p, aut_act(q, h1)))});
      const auto conj = h_compose(h_compose(h2, h1), h_inverse(h2));
      const Eigen::MatrixXd z = zeta_matrix(n, MetricForm::hatted);
      inner = std::max({inner, (conj.w - h1.w).cwiseAbs().maxCoeff(),
                        std::abs(conj.iota - (h1.iota + 2.0 * h2.w.dot(z * h1.w)))});
    }
    push("groups", "aut_act_homomorphism", hom, 1e-10);
    push("groups", "inner_automorphism_shift", inner, 1e-12);
  }

  {
    const auto k = kinematics_defects(100, cfg.seed);
    push("kinematics", "exponential", k.exponential, 1e-8);
    push("kinematics", "velocity_limit", k.velocity_limit, 1e-14);
    push("kinematics", "force_limit", k.force_limit, 1e-14);
    push("kinematics", "born_invariance", k.born, 1e-10);
    const PhysicalConstants dim{2.5, 0.4, 3.0, 1.0};
    const auto l = planck_scales(dim);
    Eigen::Matrix<double, 8, 1> scale;
    scale << l.t, l.e, l.q, l.q, l.q, l.p, l.p, l.p;
    const Vec3 beta(0.3, -0.2, 0.5), gamma(0.1, 0.4, -0.6);
    const Mat8 m = scale.cwiseInverse().asDiagonal() * pure_boost(beta, gamma, dim) * scale.asDiagonal();
    push("kinematics", "unit_scaling_covariance", max_abs(m - pure_boost(beta, gamma, PhysicalConstants{})), 1e-12);
  }

  {
    const RepresentationParams p{cfg.c, cfg.s};
    push("fock", "commutator_suite_real", represented_bracket_defect(n, cfg.nmax, p, Basis::real), tol);
    push("fock", "commutator_suite_complex", represented_bracket_defect(n, cfg.nmax, p, Basis::complex), tol);
    push("fock", "oracle_equivalence", oracle_equivalence_defect(n, cfg.nmax), 1e-12);
    const FockBasis basis = build_basis(n, cfg.nmax);
    const SparseOperator kg = k_grading_op(basis);
    double grading = 0, adjoint = 0;
    const auto cols = basis.interior(2);
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) grading = std::max(grading, column_max_norm(commutator(rho_Z_op(a, b, p, basis), kg), cols));
      const SparseOperator d = SparseOperator(ladder_op(a, Sign::plus, basis).adjoint()) - ladder_op(a, Sign::minus, basis);
      adjoint = std::max(adjoint, DenseOperator(d).cwiseAbs().maxCoeff());
    }
    push("fock", "rho_z_preserves_grading", grading, tol);
    push("fock", "ladder_adjoint", adjoint, tol);
    const auto w = weyl_defects(40, cfg.c, 3, cfg.seed);
    push("fock", "weyl_composition", w.composition, 1e-6);
    push("fock", "weyl_commutator", w.commutator, 1e-6);
  }

  {
    double rel = 0, counts = 0, schur = 0;
    for (int N = 2; N <= 3; ++N)
      for_each_label(N, -2, 3, [&](const IrrepLabel& l) {
        const GTBasis b = enumerate_patterns(l, true);
        const SigmaOperators ops(b);
        rel = std::max(rel, gt_relation_defect(ops, b.interior()));
        if (b.size() != weyl_dimension(l)) counts += 1;
        for (int beta = 1; beta <= N; ++beta) schur = std::max(schur, casimir_scalar_check(beta, b).deviation);
      });
    push("gelfand", "compact_relations", rel, tol);
    push("gelfand", "pattern_counts", counts, 0);
    push("gelfand", "schur_scalar", schur, tol);
    double win = 0;
    for (const IrrepLabel& l : {IrrepLabel{0, 0}, IrrepLabel{1, -1}, IrrepLabel{0, 0, 0}, IrrepLabel{1, 0, -1}}) {
      const GTBasis b = enumerate_patterns(l, false, cfg.window);
      win = std::max(win, gt_relation_defect(SigmaOperators(b), b.interior(2)));
    }
    push("gelfand", "windowed_relations", win, tol);
  }

  {
    // translation invariance and centrality need s = c
    const RepresentationParams pc{cfg.c, cfg.c};
    double central = 0, full = 0, weakest = 1e300;
    for (int nn = 1; nn <= std::min(n, 2); ++nn) {
      IrrepLabel fund(static_cast<std::size_t>(nn + 1), 0);
      fund[0] = 1;
      for (const GTBasis& sb : {enumerate_nonunitary(IrrepLabel(static_cast<std::size_t>(nn + 1), 0)), enumerate_nonunitary(fund)}) {
        const SigmaOperators ops(sb);
        const FieldRepresentation rep(ops, build_basis(nn, std::max(cfg.nmax, 6)), pc);
        central = std::max(central, centrality_defect(1, rep));
        const auto t = translation_invariance(rep);
        full = std::max(full, t.full);
        weakest = std::min({weakest, t.ladder_only, t.central_only});
      }
    }
    push("field_eq", "casimir_centrality", central, tol);
    push("field_eq", "translation_invariance", full, tol);
    push_above("field_eq", "both_terms_necessity", weakest, 0.1);

    // joint eigenstates |M> (x) |K>: direct value a c (k - 1) - c d1 with d1 the label sum
    const RepresentationParams p{cfg.c, cfg.s};
    IrrepLabel fund(static_cast<std::size_t>(n + 1), 0);
    fund[0] = 1;
    const GTBasis sb = enumerate_nonunitary(fund);
    const SigmaOperators ops(sb);
    const FieldRepresentation rep(ops, build_basis(n, cfg.nmax), p);
    const FieldOperator C = rho_casimir_op(1, rep);
    DenseOperator direct(C.matrix), reading(C.matrix);
    const int fs = rep.fock().size();
    for (int i = 0; i < rep.dim(); ++i) {
      const double k = k_value(rep.fock().states[static_cast<std::size_t>(i % fs)]);
      direct(i, i) -= p.a() * p.c * (k - 1) - p.c * 1.0;
      // reduced W form summed: c d1 + a (k - 1) with undressed ladders
      reading(i, i) -= p.c * 1.0 + p.a() * (k - 1);
    }
    push("field_eq", "beta1_direct", column_max_norm(direct, C.interior), tol);
    push_info("field_eq", "beta1_printed_reading", column_max_norm(reading, C.interior), tol);
    push("field_eq", "oscillator_spectrum", oscillator_defect(n, cfg.nmax), 1e-12);

    const int cn = std::max(n, 2);
    IrrepLabel cf(static_cast<std::size_t>(cn), 0);
    cf[0] = 1;
    const GTBasis compact = enumerate_patterns(cf, true);
    double herm = 0, res = 0, comm = 0, refine = 0;
    for (int k = 1; k <= 3; ++k) {
      const CompactReport r = compact_field_check(compact, k, 1);
      herm = std::max(herm, r.hermiticity);
      res = std::max(res, r.residual);
      comm = std::max(comm, r.commutation);
      std::vector<int> dims, mult;
      for (const auto& hw : tensor_decomposition(cf, k)) dims.push_back(static_cast<int>(weyl_dimension(hw)));
      for (const auto& c : r.clusters) mult.push_back(c.multiplicity);
      if (!refines(dims, mult)) refine += 1;
    }
    push("field_eq", "compact_hermiticity", herm, 1e-12);
    push("field_eq", "compact_real_spectrum", res, tol);
    push("field_eq", "compact_commutation", comm, tol);
    push("field_eq", "compact_refinement", refine, 0);
  }
  return out;
}

}  // namespace quaplectic
