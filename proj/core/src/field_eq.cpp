#include "quaplectic/field_eq.hpp"

#include <cmath>
#include <stdexcept>

namespace quaplectic {

FieldRepresentation::FieldRepresentation(const SigmaOperators& sigma, FockBasis fock, RepresentationParams params)
    : sigma_(sigma), fock_(std::move(fock)), params_(params) {
  params_.validate();
  const auto& sb = sigma_.basis();
  if (sb.compact() || sb.last_index() != fock_.n)
    throw std::invalid_argument("sigma must be a u(1,n) basis matching the Fock modes");
  const double r = std::sqrt(std::abs(params_.c));
  const bool swap = params_.c < 0;
  for (int a = 0; a <= fock_.n; ++a) {
    const SparseOperator up = ladder_op(a, Sign::plus, fock_) * cd(r);
    const SparseOperator down = ladder_op(a, Sign::minus, fock_) * cd(r);
    ladder_plus_.push_back(on_fock(swap ? down : up));
    ladder_minus_.push_back(on_fock(swap ? up : down));
  }
}

SparseOperator FieldRepresentation::on_fock(const SparseOperator& op) const {
  return kron(sparse_identity(sigma_.dim()), op);
}

SparseOperator FieldRepresentation::I() const { return sparse_identity(dim()) * cd(params_.c); }

SparseOperator FieldRepresentation::Aplus(int a) const {
  if (a < 0 || a > fock_.n) throw std::out_of_range("invalid mode");
  return ladder_plus_[static_cast<std::size_t>(a)];
}

SparseOperator FieldRepresentation::Aminus(int a) const {
  if (a < 0 || a > fock_.n) throw std::out_of_range("invalid mode");
  return ladder_minus_[static_cast<std::size_t>(a)];
}

SparseOperator FieldRepresentation::rho_Z(int a, int b) const {
  SparseOperator p = Aplus(a) * Aminus(b);
  return p * cd(1.0 / params_.s);
}

SparseOperator FieldRepresentation::sigma_part(int a, int b) const {
  return kron(sigma_.Z(a, b), sparse_identity(fock_.size()));
}

SparseOperator FieldRepresentation::Z(int a, int b) const { return sigma_part(a, b) + rho_Z(a, b); }

SparseOperator FieldRepresentation::represent(const AlgebraElement& x) const {
  if (x.n() != n()) throw std::invalid_argument("dimension mismatch");
  SparseOperator out(dim(), dim());
  const AlgebraElement cx = to_complex_basis(x);
  for (const auto& [g, c] : cx.terms()) {
    const cd k = c.to_complex();
    switch (g.kind) {
      case Kind::I: out += I() * k; break;
      case Kind::Z: out += Z(g.a, g.b) * k; break;
      case Kind::Aplus: out += Aplus(g.a) * k; break;
      case Kind::Aminus: out += Aminus(g.a) * k; break;
      default: throw std::logic_error("unexpected generator in complex basis");
    }
  }
  return out;
}

std::vector<int> FieldRepresentation::interior(int margin) const {
  std::vector<int> out;
  const auto fock_in = fock_.interior(margin);
  for (int s : sigma_.basis().interior())
    for (int f : fock_in) out.push_back(s * fock_.size() + f);
  return out;
}

SparseOperator W_op(int a, int b, const FieldRepresentation& rep, WPart part) {
  const double c = rep.params().c;
  SparseOperator ladder = rep.Aplus(a) * rep.Aminus(b);
  SparseOperator central = rep.Z(a, b) * cd(-c);
  switch (part) {
    case WPart::ladder_only: return ladder;
    case WPart::central_only: return central;
    case WPart::full: break;
  }
  return ladder + central;
}

SparseOperator W_reduced(int a, int b, const FieldRepresentation& rep) {
  const auto& fock = rep.fock();
  SparseOperator bare = ladder_op(a, Sign::plus, fock) * ladder_op(b, Sign::minus, fock);
  SparseOperator lifted = kron(sparse_identity(rep.sigma().dim()), bare);
  return rep.sigma_part(a, b) * cd(rep.params().c) + lifted * cd(rep.params().a());
}

FieldOperator rho_casimir_op(int beta, const FieldRepresentation& rep, WPart part) {
  const int n = rep.n();
  if (beta < 1 || beta > n + 1) throw std::out_of_range("beta out of range");
  std::map<std::pair<int, int>, SparseOperator> W;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) W[{a, b}] = W_op(a, b, rep, part);
  const int dim = rep.dim();
  SparseOperator total(dim, dim);
  for (int start = 0; start <= n; ++start) {
    std::map<int, SparseOperator> cur;
    for (int b = 0; b <= n; ++b) cur[b] = W.at({start, b}) * cd(eta(start, start));
    for (int step = 1; step < beta; ++step) {
      std::map<int, SparseOperator> next;
      for (int b = 0; b <= n; ++b) {
        SparseOperator acc(dim, dim);
        for (int m = 0; m <= n; ++m) acc += SparseOperator(cur.at(m) * W.at({m, b})) * cd(eta(m, m));
        next[b] = acc;
      }
      cur = std::move(next);
    }
    total += cur.at(start);
  }
  FieldOperator op;
  op.n = n;
  op.beta = beta;
  op.params = rep.params();
  op.matrix = total;
  op.interior = rep.interior(2 * beta);
  return op;
}

double coefficient_f(int beta, int kappa, int alpha, int n, double a, double c, const std::vector<double>& c_gamma) {
  if (a == 0.0) throw std::domain_error("coefficient functions have a pole at a = 0");
  if (c == 0.0) throw std::domain_error("c must be nonzero");
  auto cg = [&](std::size_t g) { return c_gamma.size() >= g ? c_gamma[g - 1] : 0.0; };
  const double c2 = cg(2), c4 = cg(4);
  if (beta == 1) {
    if (alpha == 1 && kappa == 0) return c2 / a;
    if (alpha == 1 && kappa == 1) return c / a;
    return 0.0;
  }
  if (beta == 2) {
    if (alpha == 1 && kappa == 0)
      return 0.5 * (c * n * (1.0 + n) - ((n + 1.0) / a + n - 1.0) * c2 + (c2 * c2 + c4) / (a * c));
    if (alpha == 1 && kappa == 1) return ((1.0 + a) * c * (1.0 + n) - 2.0 * c2) / (2.0 * a);
    if (alpha == 1 && kappa == 2) return c / (2.0 * a);
    if (alpha == 2 && kappa == 2) return c / (2.0 * a);
    return 0.0;
  }
  throw std::out_of_range("closed forms exist for beta = 1, 2");
}

double coefficient_f(int beta, int kappa, int alpha, int n, const RepresentationParams& params,
                     const std::vector<double>& c_gamma) {
  params.validate();
  return coefficient_f(beta, kappa, alpha, n, params.a(), params.c, c_gamma);
}

double f_hat(int beta, int n, double a, double c, const std::vector<double>& c_gamma,
             const std::vector<double>& d_alpha) {
  double total = 0.0;
  for (int alpha = 1; alpha <= beta; ++alpha) {
    const double d = d_alpha.size() >= static_cast<std::size_t>(alpha) ? d_alpha[static_cast<std::size_t>(alpha - 1)] : 0.0;
    for (int kappa = 0; kappa <= beta - alpha + 1; ++kappa) {
      const double f = coefficient_f(beta, kappa, alpha, n + 1, a, c, c_gamma);
      if (f != 0.0) total += f * std::pow(d, kappa);
    }
  }
  return total;
}

double f_hat(int beta, int n, const RepresentationParams& params, const std::vector<double>& c_gamma,
             const std::vector<double>& d_alpha) {
  params.validate();
  return f_hat(beta, n, params.a(), params.c, c_gamma, d_alpha);
}

SpectrumResult solve_spectrum(const DenseOperator& op, double cluster_tol, double herm_tol) {
  SpectrumResult r;
  r.dim = static_cast<int>(op.rows());
  if (r.dim == 0) return r;
  r.hermiticity_defect = (op - op.adjoint()).cwiseAbs().maxCoeff();
  if (r.hermiticity_defect > herm_tol) throw std::domain_error("operator is not Hermitian within tolerance");
  const DenseOperator h = (op + op.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
  for (int i = 0; i < r.dim; ++i) {
    const double lam = es.eigenvalues()(i);
    r.eigenvalues.push_back(lam);
    const double res = (op * es.eigenvectors().col(i) - lam * es.eigenvectors().col(i)).norm();
    r.residuals.push_back(res);
    r.max_residual = std::max(r.max_residual, res);
  }
  r.clusters = cluster_values(r.eigenvalues, cluster_tol);
  return r;
}

SpectrumResult solve_spectrum(const FieldOperator& op, bool interior_only, double cluster_tol) {
  std::vector<int> idx = op.interior;
  if (!interior_only) {
    idx.resize(static_cast<std::size_t>(op.matrix.rows()));
    for (int i = 0; i < op.matrix.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  }
  return solve_spectrum(restrict(op.matrix, idx), cluster_tol);
}

SpectrumResult oscillator_spectrum(int n, int nmax) {
  const FockBasis basis = build_basis(n, nmax);
  return solve_spectrum(DenseOperator(oscillator_op(basis)));
}

std::pair<double, double> quantization(double s) {
  if (s == 1.0) throw std::domain_error("quantization has a pole at s = 1");
  return {s / (2.0 * (s - 1.0)), s / (s - 1.0)};
}

std::pair<double, double> quantization_consistent(double s) {
  if (s == -2.0) throw std::domain_error("no solution at s = -2");
  if (s == 0.0) throw std::invalid_argument("s must be nonzero");
  return {s / (s + 2.0), 2.0 * s / (s + 2.0)};
}

CompactFieldProblem compact_field_operator(const GTBasis& sigma, int k, int beta, bool printed_pairing) {
  if (!sigma.compact()) throw std::invalid_argument("compact field equation needs a u(n) basis");
  if (k < 0) throw std::invalid_argument("negative k");
  const int n = sigma.N();
  if (beta < 1 || beta > n) throw std::out_of_range("beta out of range");
  CompactFieldProblem p;
  p.n = n;
  p.k = k;
  p.beta = beta;
  p.sigma = sigma;

  const FockBasis fock = build_basis(n, k);
  std::vector<int> block;
  for (int i = 0; i < fock.size(); ++i) {
    const auto& st = fock.states[static_cast<std::size_t>(i)];
    if (st[0] == 0 && fock.degree(i) == k) {
      block.push_back(i);
      p.fock_states.push_back(st);
    }
  }
  const int df = static_cast<int>(block.size());
  const int ds = sigma.size();
  auto xi = [&](int i, int j) {
    SparseOperator m = ladder_op(i, Sign::plus, fock) * ladder_op(j, Sign::minus, fock);
    return restrict(m, block);
  };

  const SigmaOperators ops(sigma);
  // Sigma^beta_{ij} as a chain of beta sigma'(Z)
  std::vector<std::vector<DenseOperator>> chain(static_cast<std::size_t>(n), std::vector<DenseOperator>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) chain[i - 1][j - 1] = DenseOperator(ops.Z(i, j));
  for (int step = 1; step < beta; ++step) {
    auto next = chain;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        DenseOperator acc = DenseOperator::Zero(ds, ds);
        for (int m = 1; m <= n; ++m) acc += chain[i - 1][m - 1] * DenseOperator(ops.Z(m, j));
        next[i - 1][j - 1] = acc;
      }
    chain = std::move(next);
  }

  auto dense_kron = [](const DenseOperator& x, const DenseOperator& y) {
    DenseOperator out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  };

  p.matrix = DenseOperator::Zero(ds * df, ds * df);
  p.total.assign(static_cast<std::size_t>(n), std::vector<DenseOperator>(static_cast<std::size_t>(n)));
  const DenseOperator id_s = DenseOperator::Identity(ds, ds), id_f = DenseOperator::Identity(df, df);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      p.matrix += dense_kron(chain[i - 1][j - 1], printed_pairing ? xi(i, j) : xi(j, i));
      p.total[i - 1][j - 1] = dense_kron(DenseOperator(ops.Z(i, j)), id_f) + dense_kron(id_s, xi(i, j));
    }
  }
  return p;
}

}  // namespace quaplectic
