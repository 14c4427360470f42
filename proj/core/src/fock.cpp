#include "quaplectic/fock.hpp"

#include "quaplectic/lie_core.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace quaplectic {

int FockBasis::index(const FockIndex& k) const {
  auto it = lookup.find(k);
  return it == lookup.end() ? -1 : it->second;
}

int FockBasis::degree(int i) const {
  const auto& k = states[static_cast<std::size_t>(i)];
  return std::accumulate(k.begin(), k.end(), 0);
}

std::vector<int> FockBasis::interior(int margin) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (degree(i) <= nmax - margin) out.push_back(i);
  return out;
}

namespace {

void compositions(int remaining, std::size_t pos, FockIndex& cur, std::vector<FockIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions(remaining - v, pos + 1, cur, out);
  }
}

void check_mode(int mode, const FockBasis& basis) {
  if (mode < 0 || mode > basis.n) throw std::out_of_range("invalid mode");
}

SparseOperator from_triplets(int dim, const std::vector<Eigen::Triplet<cd>>& t) {
  SparseOperator m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

FockBasis build_basis(int n, int nmax) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (nmax < 0) throw std::invalid_argument("negative Nmax");
  FockBasis b;
  b.n = n;
  b.nmax = nmax;
  FockIndex cur(static_cast<std::size_t>(n + 1), 0);
  for (int d = 0; d <= nmax; ++d) compositions(d, 0, cur, b.states);
  for (int i = 0; i < b.size(); ++i) b.lookup.emplace(b.states[static_cast<std::size_t>(i)], i);
  return b;
}

void RepresentationParams::validate() const {
  if (c == 0.0) throw std::invalid_argument("c must be nonzero");
  if (s == 0.0) throw std::invalid_argument("s must be nonzero");
}

std::vector<LadderEntry> ladder_entries(int mode, Sign sign, const FockBasis& basis) {
  check_mode(mode, basis);
  const bool raise = (sign == Sign::plus) != (mode == 0);
  std::vector<LadderEntry> out;
  for (int col = 0; col < basis.size(); ++col) {
    FockIndex k = basis.states[static_cast<std::size_t>(col)];
    const int km = k[static_cast<std::size_t>(mode)];
    if (!raise && km == 0) continue;
    k[static_cast<std::size_t>(mode)] += raise ? 1 : -1;
    const int row = basis.index(k);
    if (row < 0) continue;
    out.push_back({row, col, raise ? km + 1 : km});
  }
  return out;
}

SparseOperator ladder_op(int mode, Sign sign, const FockBasis& basis) {
  std::vector<Eigen::Triplet<cd>> t;
  for (const auto& e : ladder_entries(mode, sign, basis))
    t.emplace_back(e.row, e.col, std::sqrt(static_cast<double>(e.radicand)));
  return from_triplets(basis.size(), t);
}

SparseOperator rho_Z_op(int a, int b, const RepresentationParams& params, const FockBasis& basis) {
  params.validate();
  SparseOperator p = ladder_op(a, Sign::plus, basis) * ladder_op(b, Sign::minus, basis);
  return p * cd(1.0 / params.s);
}

SparseOperator u_number_op(const RepresentationParams& params, const FockBasis& basis) {
  SparseOperator u(basis.size(), basis.size());
  for (int a = 0; a <= basis.n; ++a) u += rho_Z_op(a, a, params, basis) * cd(eta(a, a));
  return u;
}

int k_value(const FockIndex& k) {
  int v = -k[0];
  for (std::size_t i = 1; i < k.size(); ++i) v += k[i];
  return v;
}

SparseOperator k_grading_op(const FockBasis& basis) {
  std::vector<Eigen::Triplet<cd>> t;
  for (int i = 0; i < basis.size(); ++i) t.emplace_back(i, i, k_value(basis.states[static_cast<std::size_t>(i)]));
  return from_triplets(basis.size(), t);
}

std::map<int, std::vector<int>> k_grading(const FockBasis& basis) {
  std::map<int, std::vector<int>> out;
  for (int i = 0; i < basis.size(); ++i) out[k_value(basis.states[static_cast<std::size_t>(i)])].push_back(i);
  return out;
}

GaussHermite gauss_hermite(int m) {
  if (m < 1) throw std::invalid_argument("need at least one node");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussHermite gh;
  gh.nodes = es.eigenvalues();
  gh.weights.resize(m);
  // H_m(x) = 2x H_{m-1} - 2(m-1) H_{m-2}; weights from the closed form in H_{m-1}
  auto raw = [m](double x, double& hm, double& hm1) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (m == 1) {
      hm = h1;
      hm1 = h0;
      return;
    }
    for (int k = 1; k < m; ++k) {
      const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
      h0 = h1;
      h1 = h2;
    }
    hm = h1;
    hm1 = h0;
  };
  double log_const = (m - 1) * std::log(2.0) + std::lgamma(m + 1.0) + 0.5 * std::log(M_PI) - 2.0 * std::log(m);
  for (int i = 0; i < m; ++i) {
    double x = gh.nodes(i), hm = 0, hm1 = 0;
    for (int it = 0; it < 3; ++it) {
      raw(x, hm, hm1);
      x -= hm / (2.0 * m * hm1);
    }
    raw(x, hm, hm1);
    gh.nodes(i) = x;
    gh.weights(i) = std::exp(log_const - 2.0 * std::log(std::abs(hm1)));
  }
  return gh;
}

Eigen::MatrixXd hermite_matrix(int kmax, HermiteKind kind) {
  if (kmax < 0) throw std::invalid_argument("negative kmax");
  const int m = kmax + 4;
  const GaussHermite gh = gauss_hermite(m);
  const int K = kmax + 1;
  // raw Hermite values H_k(x_i)
  Eigen::MatrixXd H(m, K + 1);
  for (int i = 0; i < m; ++i) {
    const double x = gh.nodes(i);
    H(i, 0) = 1.0;
    if (K >= 1) H(i, 1) = 2.0 * x;
    for (int k = 1; k < K; ++k) H(i, k + 1) = 2.0 * x * H(i, k) - 2.0 * k * H(i, k - 1);
  }
  Eigen::VectorXd norm(K);
  for (int k = 0; k < K; ++k)
    norm(k) = std::exp(-0.5 * (0.5 * std::log(M_PI) + k * std::log(2.0) + std::lgamma(k + 1.0)));

  // f_k(x) e^{-x^2/2} N_k is op applied to eta_k
  Eigen::MatrixXd F(m, K);
  for (int i = 0; i < m; ++i) {
    const double x = gh.nodes(i);
    for (int k = 0; k < K; ++k) {
      const double h = H(i, k);
      const double dh = k >= 1 ? 2.0 * k * H(i, k - 1) : 0.0;
      const double ddh = k >= 2 ? 4.0 * k * (k - 1) * H(i, k - 2) : 0.0;
      double f = 0.0;
      switch (kind) {
        case HermiteKind::x: f = x * h; break;
        case HermiteKind::d: f = dh - x * h; break;
        case HermiteKind::x2: f = x * x * h; break;
        case HermiteKind::d2: f = ddh - 2.0 * x * dh + (x * x - 1.0) * h; break;
      }
      F(i, k) = norm(k) * f;
    }
  }
  Eigen::MatrixXd out(K, K);
  for (int j = 0; j < K; ++j)
    for (int k = 0; k < K; ++k) {
      double acc = 0.0;
      for (int i = 0; i < m; ++i) acc += gh.weights(i) * norm(j) * H(i, j) * F(i, k);
      out(j, k) = acc;
    }
  return out;
}

namespace {

// embed a single-mode matrix on `mode` into the truncated multi-mode basis
SparseOperator lift(const Eigen::MatrixXd& single, int mode, const FockBasis& basis) {
  std::vector<Eigen::Triplet<cd>> t;
  const int K = static_cast<int>(single.rows());
  for (int col = 0; col < basis.size(); ++col) {
    FockIndex k = basis.states[static_cast<std::size_t>(col)];
    const int km = k[static_cast<std::size_t>(mode)];
    for (int j = 0; j < K; ++j) {
      if (single(j, km) == 0.0) continue;
      k[static_cast<std::size_t>(mode)] = j;
      const int row = basis.index(k);
      if (row >= 0) t.emplace_back(row, col, single(j, km));
    }
  }
  return from_triplets(basis.size(), t);
}

}  // namespace

SparseOperator hermite_oracle_op(int mode, Sign sign, const FockBasis& basis) {
  check_mode(mode, basis);
  const Eigen::MatrixXd x = hermite_matrix(basis.nmax, HermiteKind::x);
  const Eigen::MatrixXd d = hermite_matrix(basis.nmax, HermiteKind::d);
  const double s = (sign == Sign::plus ? -1.0 : 1.0) * eta(mode, mode);
  return lift((x + s * d) / std::sqrt(2.0), mode, basis);
}

SparseOperator oscillator_op(const FockBasis& basis) {
  const Eigen::MatrixXd single =
      hermite_matrix(basis.nmax, HermiteKind::x2) - hermite_matrix(basis.nmax, HermiteKind::d2);
  SparseOperator out(basis.size(), basis.size());
  for (int a = 0; a <= basis.n; ++a) out += lift(single, a, basis) * cd(eta(a, a));
  return out;
}

Eigen::MatrixXcd rep_group_element(const HeisenbergElement& g, const RepresentationParams& params,
                                   const FockBasis& basis, double norm_bound) {
  params.validate();
  const int d = basis.n + 1;
  if (g.w.size() != 2 * d) throw std::invalid_argument("dimension mismatch");
  const double r2 = std::sqrt(2.0);
  SparseOperator gen(basis.size(), basis.size());
  for (int a = 0; a < d; ++a) {
    const SparseOperator lower = ladder_op(a, a == 0 ? Sign::plus : Sign::minus, basis);
    const SparseOperator raise = ladder_op(a, a == 0 ? Sign::minus : Sign::plus, basis);
    const SparseOperator xhat = (lower + raise) * cd(1.0 / r2);
    const SparseOperator dhat = (lower - raise) * cd(1.0 / r2);
    const double sa = g.form == MetricForm::hatted ? eta(a, a) : 1.0;
    gen += xhat * cd(0.0, params.c * sa * g.w(a));
    gen -= dhat * cd(g.w(d + a));
  }
  const Eigen::MatrixXcd dense(gen);
  Eigen::MatrixXcd U = dense.exp() * std::exp(cd(0.0, params.c * g.iota));
  // the truncated generator is anti-Hermitian, so leakage is measured as weight
  // carried from the lowest quarter of the basis into the top quarter
  const int edge = basis.nmax - basis.nmax / 4;
  double leak = 0.0;
  for (int col : basis.interior(basis.nmax - basis.nmax / 4)) {
    double w = 0.0;
    for (int row = 0; row < basis.size(); ++row)
      if (basis.degree(row) > edge) w += std::norm(U(row, col));
    leak = std::max(leak, std::sqrt(w));
  }
  if (leak > norm_bound) throw std::runtime_error("truncation dominates the group element");
  return U;
}

}  // namespace quaplectic
