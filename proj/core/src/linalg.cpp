#include "quaplectic/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace quaplectic {

SparseOperator sparse_identity(int dim) {
  SparseOperator id(dim, dim);
  id.setIdentity();
  return id;
}

SparseOperator commutator(const SparseOperator& x, const SparseOperator& y) {
  SparseOperator xy = x * y;
  SparseOperator yx = y * x;
  return xy - yx;
}

SparseOperator kron(const SparseOperator& x, const SparseOperator& y) {
  SparseOperator out;
  out = Eigen::kroneckerProduct(x, y);
  return out;
}

double column_max_norm(const SparseOperator& op, const std::vector<int>& cols) {
  double m = 0.0;
  for (int c : cols)
    for (SparseOperator::InnerIterator it(op, c); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

double column_max_norm(const DenseOperator& op, const std::vector<int>& cols) {
  double m = 0.0;
  for (int c : cols) m = std::max(m, op.col(c).cwiseAbs().maxCoeff());
  return m;
}

DenseOperator restrict(const SparseOperator& op, const std::vector<int>& idx) {
  const DenseOperator full(op);
  DenseOperator out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = full(idx[i], idx[j]);
  return out;
}

double hermiticity_defect(const SparseOperator& op, const std::vector<int>& keep) {
  const DenseOperator r = restrict(op, keep);
  return r.rows() == 0 ? 0.0 : (r - r.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<Cluster> cluster_values(const std::vector<double>& sorted, double tol) {
  std::vector<Cluster> out;
  for (double v : sorted) {
    if (!out.empty() && std::abs(v - out.back().value) <= tol) {
      auto& c = out.back();
      c.value = (c.value * c.multiplicity + v) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

}  // namespace quaplectic
