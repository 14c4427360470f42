#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace quaplectic {

using cd = std::complex<double>;
using SparseOperator = Eigen::SparseMatrix<cd>;
using DenseOperator = Eigen::MatrixXcd;

SparseOperator sparse_identity(int dim);
SparseOperator commutator(const SparseOperator& x, const SparseOperator& y);
SparseOperator kron(const SparseOperator& x, const SparseOperator& y);

// largest |entry| among the given columns
double column_max_norm(const SparseOperator& op, const std::vector<int>& cols);
double column_max_norm(const DenseOperator& op, const std::vector<int>& cols);
// columns mapped to the same operator that keep row and column in `keep`
double hermiticity_defect(const SparseOperator& op, const std::vector<int>& keep);

DenseOperator restrict(const SparseOperator& op, const std::vector<int>& idx);

struct Cluster {
  double value = 0.0;
  int multiplicity = 0;
};

// sorted input, consecutive values within tol are merged
std::vector<Cluster> cluster_values(const std::vector<double>& sorted, double tol);

}  // namespace quaplectic
