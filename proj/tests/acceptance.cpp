// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "quaplectic/field_eq.hpp"
#include "quaplectic/gelfand.hpp"
#include "quaplectic/groups.hpp"
#include "quaplectic/io.hpp"
#include "quaplectic/kinematics.hpp"
#include "quaplectic/verify.hpp"

using namespace quaplectic;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what + (ok ? "" : " [FAIL]");
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string dev(const char* name, double v, double tol) {
  return std::string(name) + "=" + io::fmt(v) + " (tol " + short_num(tol) + ")";
}

GTBasis trivial(int n) { return enumerate_nonunitary(IrrepLabel(static_cast<std::size_t>(n + 1), 0)); }
GTBasis fundamental(int n) {
  IrrepLabel l(static_cast<std::size_t>(n + 1), 0);
  l[0] = 1;
  return enumerate_nonunitary(l);
}

// complex-basis commutators compared with the index formula of the oracle
double complex_oracle_defect(int n, int nmax, const RepresentationParams& p) {
  const SigmaOperators ops(trivial(n));
  const FieldRepresentation rep(ops, build_basis(n, nmax), p);
  struct Gen {
    char kind;
    int a, b;
    SparseOperator op;
    int degree;
  };
  std::vector<Gen> gens;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) gens.push_back({'Z', a, b, rep.Z(a, b), 2});
  for (int a = 0; a <= n; ++a) {
    gens.push_back({'+', a, 0, rep.Aplus(a), 1});
    gens.push_back({'-', a, 0, rep.Aminus(a), 1});
  }
  gens.push_back({'I', 0, 0, rep.I(), 0});
  auto rep_of = [&](const oracle::ComplexTerm& t) -> SparseOperator {
    switch (t.kind) {
      case 'Z': return rep.Z(t.a, t.b);
      case '+': return rep.Aplus(t.a);
      case '-': return rep.Aminus(t.a);
      default: return rep.I();
    }
  };
  double worst = 0.0;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      SparseOperator target(rep.dim(), rep.dim());
      const bool scaled = (x.kind == 'Z' && y.kind != 'I') || (y.kind == 'Z' && x.kind != 'I');
      const cd k(0.0, scaled ? p.c / p.s : 1.0);
      for (const auto& t : oracle::complex_bracket_formula(x.kind, x.a, x.b, y.kind, y.a, y.b))
        target += rep_of(t) * (t.coeff * k);
      SparseOperator d = commutator(x.op, y.op) - target;
      worst = std::max(worst, column_max_norm(d, rep.interior(x.degree + y.degree)));
    }
  return worst;
}

Outcome criterion1() {
  Outcome o;
  double real = 0, cplx = 0, orc = 0;
  for (int n = 1; n <= 3; ++n)
    for (RepresentationParams p : {RepresentationParams{1.0, 1.0}, RepresentationParams{1.5, 2.0}}) {
      real = std::max(real, represented_bracket_defect(n, 10, p, Basis::real));
      cplx = std::max(cplx, represented_bracket_defect(n, 10, p, Basis::complex));
      orc = std::max(orc, complex_oracle_defect(n, 10, p));
    }
  require(o, real < 1e-10, dev("real", real, 1e-10));
  require(o, cplx < 1e-10, dev("complex", cplx, 1e-10));
  require(o, orc < 1e-10, dev("index_formula", orc, 1e-10));
  return o;
}

Outcome criterion2() {
  Outcome o;
  double full = 0, lad = 1e300, cen = 1e300;
  for (int n = 1; n <= 2; ++n)
    for (const GTBasis& sb : {trivial(n), fundamental(n)})
      for (double c : {1.0, 2.0}) {
        const SigmaOperators ops(sb);
        const FieldRepresentation rep(ops, build_basis(n, 8), {c, c});
        const auto r = translation_invariance(rep);
        full = std::max(full, r.full);
        lad = std::min(lad, r.ladder_only);
        cen = std::min(cen, r.central_only);
      }
  require(o, full < 1e-10, dev("full", full, 1e-10));
  require(o, lad > 0.1, "ladder_only=" + io::fmt(lad) + " (> 0.1)");
  require(o, cen > 0.1, "central_only=" + io::fmt(cen) + " (> 0.1)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 2; ++n)
    for (const GTBasis& sb : {trivial(n), fundamental(n)})
      for (double c : {1.0, 2.0}) {
        const SigmaOperators ops(sb);
        const FieldRepresentation rep(ops, build_basis(n, 8), {c, c});
        worst = std::max(worst, centrality_defect(1, rep));
      }
  require(o, worst < 1e-10, dev("C2", worst, 1e-10));
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 3; ++n) worst = std::max(worst, oscillator_defect(n, 8));
  require(o, worst < 1e-12, dev("diagonal", worst, 1e-12));
  const auto [a, c] = quantization(2.0);
  require(o, a == 1.0 && c == 2.0, "quantization(2)=(" + io::fmt(a) + ", " + io::fmt(c) + ")");
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst = 0;
  for (int n = 0; n <= 3; ++n) worst = std::max(worst, oracle_equivalence_defect(n, 12));
  require(o, worst < 1e-12, dev("entrywise", worst, 1e-12));
  return o;
}

void labels(int N, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == N) {
    f(cur);
    return;
  }
  const int hi = cur.empty() ? 3 : cur.back();
  for (int v = -2; v <= hi; ++v) {
    cur.push_back(v);
    labels(N, cur, f);
    cur.pop_back();
  }
}

Outcome criterion6() {
  Outcome o;
  double rel = 0, cas = 0;
  int count_bad = 0, d1_bad = 0, n_labels = 0, d1_is_sum = 0;
  for (int N = 2; N <= 3; ++N) {
    std::vector<int> cur;
    labels(N, cur, [&](const std::vector<int>& l) {
      ++n_labels;
      const GTBasis b = enumerate_patterns(l, true);
      const SigmaOperators ops(b);
      rel = std::max(rel, gt_relation_defect(ops, b.interior()));
      if (b.size() != oracle::brute_force_pattern_count(l) || b.size() != oracle::weyl_dimension(l)) ++count_bad;
      cas = std::max(cas, casimir_scalar_check(2, b).deviation);
      double expect = -l.back();
      for (std::size_t i = 0; i + 1 < l.size(); ++i) expect += l[i];
      if (d_eigenvalues(l, N - 1)[0] != expect) ++d1_bad;
      const GTBasis nb = enumerate_nonunitary(l);
      const DenseOperator D1(represented_unitary_casimir(1, SigmaOperators(nb)));
      double sum = 0;
      for (int v : l) sum += v;
      if (std::abs(D1(0, 0).real() - sum) < 1e-12) ++d1_is_sum;
    });
  }
  require(o, rel < 1e-10, dev("relations", rel, 1e-10));
  require(o, count_bad == 0, "count_mismatches=" + std::to_string(count_bad) + "/" + std::to_string(n_labels));
  require(o, cas < 1e-10, dev("D2_scalar", cas, 1e-10));
  require(o, d1_bad == 0, "d1_mismatches=" + std::to_string(d1_bad));
  const double spot = d_eigenvalues({2, 1, -1}, 2)[0];
  require(o, spot == 4.0, "d1(2,1,-1)=" + io::fmt(spot));
  // informational: the represented U acts as the plain label sum
  o.detail += "; note: represented D1 equals the label sum on " + std::to_string(d1_is_sum) + "/" +
              std::to_string(n_labels) + " labels";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto g = group_law_defects(2, 100, kSeed);
  require(o, g.heisenberg < 1e-12, dev("heisenberg", g.heisenberg, 1e-12));
  require(o, g.automorphism < 1e-12, dev("automorphism", g.automorphism, 1e-12));
  require(o, g.quaplectic < 1e-12, dev("quaplectic", g.quaplectic, 1e-12));
  require(o, g.membership < 1e-10, dev("membership", g.membership, 1e-10));
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(-1.0, 1.0), scale(0.5, 3.0), radius(0.0, 3.0);
  double vel = 0, force = 0, ex = 0, born = 0;
  auto max_abs = [](const Mat8& m) { return m.cwiseAbs().maxCoeff(); };
  for (int i = 0; i < 200; ++i) {
    PhysicalConstants k;
    k.c = scale(rng);
    k.b = scale(rng);
    Vec3 beta(u(rng), u(rng), u(rng)), gamma(u(rng), u(rng), u(rng));
    const double w = std::sqrt(beta.squaredNorm() + gamma.squaredNorm());
    const double target = radius(rng);
    beta *= target / w;
    gamma *= target / w;
    vel = std::max(vel, max_abs(pure_boost(beta, Vec3::Zero(), k) - velocity_boost(beta, k)));
    force = std::max(force, max_abs(pure_boost(Vec3::Zero(), gamma, k) - force_boost(gamma, k)));
    const Mat8 B = pure_boost(beta, gamma, k);
    ex = std::max(ex, max_abs(B - oracle::expm(oracle::boost_generator(beta, gamma, k.c, k.b))));
    for (int j = 0; j < 4; ++j) {
      PhaseVector v;
      for (int s = 0; s < 8; ++s) v(s) = u(rng);
      const double f = born_form(v, k);
      born = std::max(born, std::abs(born_form(B * v, k) - f) / std::max(1.0, v.squaredNorm()));
    }
  }
  require(o, vel < 1e-14, dev("velocity_limit", vel, 1e-14));
  require(o, force < 1e-14, dev("force_limit", force, 1e-14));
  require(o, ex < 1e-8, dev("exponential", ex, 1e-8));
  require(o, born < 1e-10, dev("born", born, 1e-10));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const GTBasis sb = enumerate_patterns({1, 0}, true);
  double herm = 0, comm = 0, res = 0;
  bool refine = true;
  for (int k = 1; k <= 3; ++k) {
    const CompactReport r = compact_field_check(sb, k, 1);
    herm = std::max(herm, r.hermiticity);
    comm = std::max(comm, r.commutation);
    res = std::max(res, r.residual);
    // weights of the fundamental tensored with the degree-k sector
    std::map<oracle::Weight, int> weights;
    for (const auto& [ws, ms] : oracle::irrep_weights({1, 0}))
      for (int a = 0; a <= k; ++a) weights[{ws[0] + a, ws[1] + k - a}] += ms;
    std::vector<int> dims;
    for (const auto& hw : oracle::decompose_by_weights(weights, oracle::irrep_weights))
      dims.push_back(static_cast<int>(oracle::weyl_dimension(hw)));
    std::vector<int> mult;
    for (const auto& c : r.clusters) mult.push_back(c.multiplicity);
    refine = refine && oracle::partitions_into(dims, mult);
  }
  require(o, herm < 1e-12, dev("asymmetry", herm, 1e-12));
  require(o, res < 1e-10, dev("eigen_residual", res, 1e-10));
  require(o, comm < 1e-10, dev("total_action", comm, 1e-10));
  require(o, refine, std::string("multiplicities_refine=") + (refine ? "yes" : "no"));
  return o;
}

Outcome criterion10() {
  Outcome o;
  double comp = 0, comm = 0;
  for (double c : {1.0, 0.5}) {
    const auto w = weyl_defects(40, c, 4, kSeed);
    comp = std::max(comp, w.composition);
    comm = std::max(comm, w.commutator);
  }
  require(o, comp < 1e-6, dev("composition", comp, 1e-6));
  require(o, comm < 1e-6, dev("commutator", comm, 1e-6));
  return o;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* name;
    double budget;
    Outcome (*run)();
  };
  const Row rows[] = {
      {1, "structure_constants", 30.0, criterion1},   {2, "translation_invariance", 0.0, criterion2},
      {3, "casimir_centrality", 60.0, criterion3},    {4, "oscillator_quantization", 0.0, criterion4},
      {5, "oracle_equivalence", 0.0, criterion5},     {6, "gelfand_suite", 0.0, criterion6},
      {7, "group_laws", 0.0, criterion7},             {8, "kinematics", 0.0, criterion8},
      {9, "compact_field_equation", 60.0, criterion9}, {10, "weyl_relations", 0.0, criterion10},
  };
  int failures = 0;
  for (const auto& r : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = r.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.budget > 0) require(o, secs < r.budget, "runtime=" + short_num(secs) + "s (< " + short_num(r.budget) + "s)");
    if (!o.pass) ++failures;
    std::printf("%s criterion %d %s: %s\n", o.pass ? "PASS" : "FAIL", r.id, r.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
