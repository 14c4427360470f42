#pragma once

#include <map>
#include <vector>

#include "quaplectic/groups.hpp"
#include "quaplectic/linalg.hpp"

namespace quaplectic {

using FockIndex = std::vector<int>;

struct FockBasis {
  int n = 0;
  int nmax = 0;
  std::vector<FockIndex> states;
  std::map<FockIndex, int> lookup;

  int size() const { return static_cast<int>(states.size()); }
  // -1 when outside the truncation
  int index(const FockIndex& k) const;
  int degree(int i) const;
  // states of total degree <= nmax - margin
  std::vector<int> interior(int margin) const;
};

// graded by total degree, lexicographically descending inside each degree
FockBasis build_basis(int n, int nmax);

struct RepresentationParams {
  double c = 1.0;
  double s = 1.0;

  double a() const { return 1.0 - c / s; }
  void validate() const;
};

enum class Sign { plus, minus };

struct LadderEntry {
  int row;
  int col;
  long radicand;
};

// modes i >= 1: A+ raises with sqrt(k+1), A- lowers with sqrt(k); mode 0 reversed
std::vector<LadderEntry> ladder_entries(int mode, Sign sign, const FockBasis& basis);
SparseOperator ladder_op(int mode, Sign sign, const FockBasis& basis);
// (1/s) A+_a A-_b
SparseOperator rho_Z_op(int a, int b, const RepresentationParams& params, const FockBasis& basis);
// eta-contraction of rho_Z_op; equals (k - 1)/s on the diagonal
SparseOperator u_number_op(const RepresentationParams& params, const FockBasis& basis);

// k = -k_0 + sum k_i
int k_value(const FockIndex& k);
SparseOperator k_grading_op(const FockBasis& basis);
std::map<int, std::vector<int>> k_grading(const FockBasis& basis);

// Gauss-Hermite rule for weight exp(-x^2)
struct GaussHermite {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
GaussHermite gauss_hermite(int m);

enum class HermiteKind { x, d, x2, d2 };

// <eta_j| op |eta_k> for normalized Hermite functions, j, k <= kmax
Eigen::MatrixXd hermite_matrix(int kmax, HermiteKind kind);

// (x -+ eta_aa d/dx)/sqrt2 on mode a, from quadrature of Hermite functions
SparseOperator hermite_oracle_op(int mode, Sign sign, const FockBasis& basis);
// eta^{ab}(x_a x_b - d_a d_b) assembled from quadrature
SparseOperator oscillator_op(const FockBasis& basis);

// exp(i c sum_a (s_a u_a xhat_a) - sum_a v_a dhat_a) e^{i c iota}, w = (u, v);
// throws when columns of degree <= nmax/4 leak more than norm_bound into the top quarter
Eigen::MatrixXcd rep_group_element(const HeisenbergElement& g, const RepresentationParams& params,
                                   const FockBasis& basis, double norm_bound = 1e-6);

}  // namespace quaplectic
