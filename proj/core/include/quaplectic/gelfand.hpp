#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "quaplectic/linalg.hpp"

namespace quaplectic {

using IrrepLabel = std::vector<int>;

struct GTPattern {
  // rows[0] is the top row (length N); rows[N - j] is level j
  std::vector<std::vector<int>> rows;

  int levels() const { return static_cast<int>(rows.size()); }
  // m_{i,j}, 1-based entry i of level j
  int m(int i, int level) const;
  int& m(int i, int level);
  std::vector<int> flat() const;
  auto operator<=>(const GTPattern&) const = default;
};

enum class GTKind {
  compact,     // u(N), indices 1..N
  windowed,    // u(1,n), unitary tower truncated at a window bound
  nonunitary,  // u(1,n) acting on a finite u(N) pattern set
};

struct GTBasis {
  IrrepLabel label;
  GTKind kind = GTKind::compact;
  std::optional<int> window;
  std::vector<GTPattern> patterns;
  std::map<std::vector<int>, int> lookup;

  int N() const { return static_cast<int>(label.size()); }
  int size() const { return static_cast<int>(patterns.size()); }
  bool compact() const { return kind == GTKind::compact; }
  // algebra index range: 1..N for compact, 0..N-1 otherwise
  int first_index() const { return compact() ? 1 : 0; }
  int last_index() const { return compact() ? N() : N() - 1; }
  int index(const GTPattern& p) const;
  // window bases: first level-n entry at least `margin` below the bound
  std::vector<int> interior(int margin = 2) const;
};

GTBasis enumerate_patterns(const IrrepLabel& label, bool compact, std::optional<int> window = {});
GTBasis enumerate_nonunitary(const IrrepLabel& label);

// level of the algebra index a (0 maps to the top level for u(1,n))
int gt_level(int a, const GTBasis& basis);

enum class Direction { raise, lower };

// sigma'(Z_{khat,khat}) for level k
SparseOperator sigma_diagonal(int k, const GTBasis& basis);
// sigma'(Z_{khat,(k+1)hat}) or sigma'(Z_{(k+1)hat,khat}) for level k
SparseOperator sigma_step(int k, Direction dir, const GTBasis& basis);

// every sigma'(Z_ab) of the basis, built once
class SigmaOperators {
 public:
  explicit SigmaOperators(const GTBasis& basis);
  const GTBasis& basis() const { return basis_; }
  const SparseOperator& Z(int a, int b) const;
  int dim() const { return basis_.size(); }

 private:
  GTBasis basis_;
  std::map<std::pair<int, int>, SparseOperator> level_ops_;
  std::map<std::pair<int, int>, SparseOperator> z_;
};

SparseOperator sigma_general(int a, int b, const GTBasis& basis);

// eta-contracted chain of beta sigma'(Z)
SparseOperator represented_unitary_casimir(int beta, const SigmaOperators& ops);

// first entry of the Casimir list uses the closed form sum_{i<N} m_i - m_N
double d1_closed_form(const IrrepLabel& label);
// (d1 closed form, d2 as the scalar of the represented D2 on the finite pattern set)
std::vector<double> d_eigenvalues(const IrrepLabel& label, int n);

struct CasimirCheck {
  double scalar = 0.0;
  double deviation = 0.0;
};

CasimirCheck casimir_scalar_check(int beta, const GTBasis& basis);

}  // namespace quaplectic
