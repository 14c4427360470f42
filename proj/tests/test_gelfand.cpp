#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "quaplectic/gelfand.hpp"
#include "quaplectic/lie_core.hpp"

using namespace quaplectic;

namespace gelfand_tests {

static std::vector<IrrepLabel> labels(int N, int lo, int hi) {
  std::vector<IrrepLabel> out;
  IrrepLabel cur(static_cast<std::size_t>(N));
  std::function<void(int, int)> rec = [&](int pos, int top) {
    if (pos == N) {
      out.push_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, hi);
  return out;
}

static GTPattern pattern(std::vector<std::vector<int>> rows) { return GTPattern{std::move(rows)}; }

// [Z_ab, Z_cd] = eta_bc Z_ad - eta_ad Z_cb, checked on the given columns
static double relation_defect(const SigmaOperators& ops, const std::vector<int>& cols, bool compact) {
  const auto& basis = ops.basis();
  auto metric = [&](int a, int b) { return compact ? (a == b ? 1 : 0) : eta(a, b); };
  double worst = 0.0;
  for (int a = basis.first_index(); a <= basis.last_index(); ++a)
    for (int b = basis.first_index(); b <= basis.last_index(); ++b)
      for (int c = basis.first_index(); c <= basis.last_index(); ++c)
        for (int d = basis.first_index(); d <= basis.last_index(); ++d) {
          SparseOperator lhs = commutator(ops.Z(a, b), ops.Z(c, d));
          SparseOperator rhs = ops.Z(a, d) * cd(metric(b, c)) - ops.Z(c, b) * cd(metric(a, d));
          worst = std::max(worst, column_max_norm(SparseOperator(lhs - rhs), cols));
        }
  return worst;
}

static std::vector<int> all_columns(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST_CASE("pattern_count_examples") {
  CHECK(enumerate_patterns({1, 0}, true).size() == 2);
  CHECK(enumerate_patterns({1, 0, 0}, true).size() == 3);
  CHECK(enumerate_patterns({2, 1, 0}, true).size() == 8);
  CHECK(enumerate_patterns({0, 0, 0}, true).size() == 1);
  CHECK(enumerate_patterns({5}, true).size() == 1);
}

TEST_CASE("pattern_counts_match_oracles") {
  for (int N = 2; N <= 3; ++N)
    for (const auto& l : labels(N, -2, 3)) {
      const long count = enumerate_patterns(l, true).size();
      CHECK(count == oracle::weyl_dimension(l));
      CHECK(count == oracle::brute_force_pattern_count(l));
    }
}

TEST_CASE("patterns_satisfy_betweenness_and_are_ordered") {
  auto b = enumerate_patterns({3, 1, -1}, true);
  for (std::size_t i = 0; i < b.patterns.size(); ++i) {
    const auto& p = b.patterns[i];
    for (int level = 2; level <= 3; ++level)
      for (int i2 = 1; i2 < level; ++i2) {
        CHECK(p.m(i2, level) >= p.m(i2, level - 1));
        CHECK(p.m(i2, level - 1) >= p.m(i2 + 1, level));
      }
    if (i > 0) CHECK(b.patterns[i - 1].flat() < p.flat());
    CHECK(b.index(p) == static_cast<int>(i));
  }
}

TEST_CASE("label_validation") {
  CHECK_THROWS(enumerate_patterns({0, 1}, true));
  CHECK_THROWS(enumerate_patterns({1, 0}, false));
  CHECK_THROWS(enumerate_patterns({}, true));
}

TEST_CASE("diagonal_examples") {
  auto b = enumerate_patterns({1, 0}, true);
  const int up = b.index(pattern({{1, 0}, {1}}));
  const int down = b.index(pattern({{1, 0}, {0}}));
  auto z1 = sigma_diagonal(1, b);
  auto z2 = sigma_diagonal(2, b);
  CHECK(z1.coeff(up, up) == cd(1.0));
  CHECK(z1.coeff(down, down) == cd(0.0));
  CHECK(z2.coeff(down, down) == cd(1.0));
  CHECK(z2.coeff(up, up) == cd(0.0));
  CHECK_THROWS(sigma_diagonal(3, b));
}

TEST_CASE("diagonal_trace_is_weight_sum") {
  for (const IrrepLabel& l : {IrrepLabel{1, 0}, IrrepLabel{1, 0, 0}, IrrepLabel{2, 1, 0}, IrrepLabel{3, 0, -2}}) {
    auto b = enumerate_patterns(l, true);
    SparseOperator total(b.size(), b.size());
    for (int k = 1; k <= b.N(); ++k) total += sigma_diagonal(k, b);
    const double weight = std::accumulate(l.begin(), l.end(), 0);
    for (int i = 0; i < b.size(); ++i) CHECK(std::abs(total.coeff(i, i) - weight) < 1e-14);
  }
}

TEST_CASE("step_examples") {
  auto b = enumerate_patterns({1, 0}, true);
  const int up = b.index(pattern({{1, 0}, {1}}));
  const int down = b.index(pattern({{1, 0}, {0}}));
  auto r = sigma_step(1, Direction::raise, b);
  CHECK(std::abs(std::abs(r.coeff(up, down)) - 1.0) < 1e-15);
  CHECK(r.col(up).norm() == 0.0);
  CHECK_THROWS(sigma_step(2, Direction::raise, b));

  auto b3 = enumerate_patterns({1, 0, 0}, true);
  const int lowest = b3.index(pattern({{1, 0, 0}, {0, 0}, {0}}));
  SparseOperator chain = sigma_step(1, Direction::raise, b3) * sigma_step(2, Direction::raise, b3);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
  v(lowest) = 1.0;
  Eigen::VectorXcd reach = v;
  Eigen::VectorXcd w = sigma_step(2, Direction::raise, b3) * v;
  reach += w;
  reach += sigma_step(1, Direction::raise, b3) * w;
  for (int i = 0; i < 3; ++i) CHECK(std::abs(reach(i)) > 0.5);
  CHECK(chain.norm() > 0.5);
}

TEST_CASE("compact_commutation_relations") {
  double worst = 0.0;
  for (int N = 2; N <= 3; ++N)
    for (const auto& l : labels(N, -2, 3)) {
      auto b = enumerate_patterns(l, true);
      SigmaOperators ops(b);
      worst = std::max(worst, relation_defect(ops, all_columns(b.size()), true));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("nonadjacent_generator_recursion") {
  auto b = enumerate_patterns({2, 1, 0}, true);
  SigmaOperators ops(b);
  SparseOperator lhs = commutator(ops.Z(1, 3), ops.Z(3, 1));
  SparseOperator rhs = ops.Z(1, 1) - ops.Z(3, 3);
  CHECK(column_max_norm(SparseOperator(lhs - rhs), all_columns(b.size())) < 1e-12);
  CHECK((sigma_general(2, 2, b) - sigma_diagonal(2, b)).norm() == 0.0);
}

TEST_CASE("compact_hermiticity") {
  for (const IrrepLabel& l : {IrrepLabel{2, 1, 0}, IrrepLabel{3, -1, -2}, IrrepLabel{1, -1}}) {
    auto b = enumerate_patterns(l, true);
    SigmaOperators ops(b);
    for (int a = 1; a <= b.N(); ++a)
      for (int c = 1; c <= b.N(); ++c)
        CHECK((SparseOperator(ops.Z(a, c).adjoint()) - ops.Z(c, a)).norm() < 1e-12);
  }
}

TEST_CASE("casimir_scalars") {
  auto trivial = casimir_scalar_check(2, enumerate_patterns({0, 0}, true));
  CHECK(trivial.scalar == 0.0);
  CHECK(trivial.deviation == 0.0);
  auto fund = casimir_scalar_check(2, enumerate_patterns({1, 0}, true));
  CHECK(fund.deviation < 1e-10);
  auto adj = enumerate_patterns({2, 1, 0}, true);
  auto r = casimir_scalar_check(2, adj);
  CHECK(r.deviation < 1e-10);
  // independent value: sum_i m_i (m_i + N + 1 - 2i) for the chain Casimir
  CHECK(r.scalar == doctest::Approx(2 * (2 + 4 - 2) + 1 * (1 + 4 - 4)));
}

TEST_CASE("casimir_scalars_for_every_label") {
  double worst = 0.0;
  for (int N = 2; N <= 3; ++N)
    for (const auto& l : labels(N, -2, 3)) {
      auto b = enumerate_patterns(l, true);
      for (int beta = 1; beta <= N; ++beta) {
        auto r = casimir_scalar_check(beta, b);
        worst = std::max(worst, r.deviation);
      }
      double expect = 0.0;
      for (int i = 1; i <= N; ++i) expect += l[static_cast<std::size_t>(i - 1)] * (l[static_cast<std::size_t>(i - 1)] + N + 1 - 2 * i);
      CHECK(casimir_scalar_check(2, b).scalar == doctest::Approx(expect));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("schur_property_rejects_non_scalar") {
  auto b = enumerate_patterns({2, 1, 0}, true);
  SigmaOperators ops(b);
  DenseOperator z11(ops.Z(1, 1));
  bool commutes_with_all = true;
  for (int a = 1; a <= 3; ++a)
    for (int c = 1; c <= 3; ++c)
      if ((z11 * DenseOperator(ops.Z(a, c)) - DenseOperator(ops.Z(a, c)) * z11).cwiseAbs().maxCoeff() > 1e-10)
        commutes_with_all = false;
  CHECK_FALSE(commutes_with_all);
}

TEST_CASE("d1_closed_form") {
  CHECK(d1_closed_form({2, 1, -1}) == 4.0);
  CHECK(d1_closed_form({0, 0, 0}) == 0.0);
  auto d = d_eigenvalues({2, 1, -1}, 2);
  CHECK(d[0] == 4.0);
  CHECK_THROWS(d_eigenvalues({2, 1}, 2));
}

TEST_CASE("represented_first_casimir_is_label_sum") {
  // eta-contraction of the represented Z gives the plain sum of the label
  for (const IrrepLabel& l : {IrrepLabel{2, 1, -1}, IrrepLabel{1, 0}, IrrepLabel{3, 3, 0}}) {
    auto b = enumerate_nonunitary(l);
    auto r = casimir_scalar_check(1, b);
    CHECK(r.deviation < 1e-12);
    CHECK(r.scalar == doctest::Approx(std::accumulate(l.begin(), l.end(), 0)));
  }
}

TEST_CASE("nonunitary_relations_hold_exactly") {
  for (const IrrepLabel& l : {IrrepLabel{1, 0}, IrrepLabel{1, 0, 0}, IrrepLabel{2, 1, 0}, IrrepLabel{1, 1, -1}}) {
    auto b = enumerate_nonunitary(l);
    SigmaOperators ops(b);
    CHECK(relation_defect(ops, all_columns(b.size()), false) < 1e-12);
    CHECK(casimir_scalar_check(2, b).deviation < 1e-10);
  }
  // the noncompact direction is anti-Hermitian on a finite pattern set
  auto b = enumerate_nonunitary({1, 0});
  SigmaOperators ops(b);
  CHECK((SparseOperator(ops.Z(0, 1).adjoint()) + ops.Z(1, 0)).norm() < 1e-14);
}

TEST_CASE("windowed_relations_on_interior") {
  for (const IrrepLabel& l : {IrrepLabel{0, 0}, IrrepLabel{1, -1}, IrrepLabel{0, 0, 0}, IrrepLabel{1, 0, -1}}) {
    auto b = enumerate_patterns(l, false, l[0] + 6);
    SigmaOperators ops(b);
    auto interior = b.interior(2);
    CHECK(!interior.empty());
    CHECK(interior.size() < static_cast<std::size_t>(b.size()));
    CHECK(relation_defect(ops, interior, false) < 1e-10);
    // Z_ab^dagger = Z_ba on the interior block; the (1,0,-1) tower mixes radicand signs
    double pairing = 0.0;
    for (int a = 0; a < b.N(); ++a)
      for (int c = 0; c < b.N(); ++c) {
        DenseOperator d = restrict(ops.Z(a, c), interior).adjoint() - restrict(ops.Z(c, a), interior);
        pairing = std::max(pairing, d.cwiseAbs().maxCoeff());
      }
    if (l == IrrepLabel{1, 0, -1}) CHECK(pairing > 1.0);
    else CHECK(pairing < 1e-12);
  }
}

TEST_CASE("windowed_casimir_scalar_on_interior") {
  auto b = enumerate_patterns({1, 0, -1}, false, 8);
  auto r = casimir_scalar_check(2, b);
  CHECK(r.deviation < 1e-10);
  auto d1 = casimir_scalar_check(1, b);
  CHECK(d1.deviation < 1e-12);
}

}  // namespace gelfand_tests
