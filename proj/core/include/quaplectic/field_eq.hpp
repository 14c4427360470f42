#pragma once

#include <utility>
#include <vector>

#include "quaplectic/fock.hpp"
#include "quaplectic/gelfand.hpp"
#include "quaplectic/lie_core.hpp"

namespace quaplectic {

// represented quaplectic generators on H^sigma (x) H^xi, sigma index major
class FieldRepresentation {
 public:
  FieldRepresentation(const SigmaOperators& sigma, FockBasis fock, RepresentationParams params);

  int n() const { return fock_.n; }
  int dim() const { return sigma_.dim() * fock_.size(); }
  const FockBasis& fock() const { return fock_; }
  const SigmaOperators& sigma() const { return sigma_; }
  const RepresentationParams& params() const { return params_; }

  SparseOperator I() const;
  SparseOperator Aplus(int a) const;
  SparseOperator Aminus(int a) const;
  // (1/s) A+_a A-_b with the dressed ladders
  SparseOperator rho_Z(int a, int b) const;
  // sigma'(Z_ab) (x) 1 + 1 (x) rho'(Z_ab)
  SparseOperator Z(int a, int b) const;
  SparseOperator sigma_part(int a, int b) const;
  // complex-basis linear combination, any alias accepted
  SparseOperator represent(const AlgebraElement& x) const;

  // product states whose Fock degree is at most nmax - margin
  std::vector<int> interior(int margin) const;

 private:
  SparseOperator on_fock(const SparseOperator& op) const;

  SigmaOperators sigma_;
  FockBasis fock_;
  RepresentationParams params_;
  std::vector<SparseOperator> ladder_plus_;
  std::vector<SparseOperator> ladder_minus_;
};

enum class WPart { full, ladder_only, central_only };

// A+_a A-_b - I Z_ab, or one of its two summands
SparseOperator W_op(int a, int b, const FieldRepresentation& rep, WPart part = WPart::full);
// c sigma'(Z_ab) (x) 1 + a 1 (x) L+_a L-_b with undressed ladders
SparseOperator W_reduced(int a, int b, const FieldRepresentation& rep);

struct FieldOperator {
  int n = 0;
  int beta = 1;
  RepresentationParams params;
  SparseOperator matrix;
  // columns where the assembled polynomial is free of truncation effects
  std::vector<int> interior;
};

FieldOperator rho_casimir_op(int beta, const FieldRepresentation& rep, WPart part = WPart::full);

// the closed forms treat a and c as independent; the params overloads use a = 1 - c/s
double coefficient_f(int beta, int kappa, int alpha, int n, double a, double c, const std::vector<double>& c_gamma);
double coefficient_f(int beta, int kappa, int alpha, int n, const RepresentationParams& params,
                     const std::vector<double>& c_gamma);
double f_hat(int beta, int n, double a, double c, const std::vector<double>& c_gamma,
             const std::vector<double>& d_alpha);
double f_hat(int beta, int n, const RepresentationParams& params, const std::vector<double>& c_gamma,
             const std::vector<double>& d_alpha);

struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<Cluster> clusters;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double hermiticity_defect = 0.0;
  int dim = 0;
};

SpectrumResult solve_spectrum(const DenseOperator& op, double cluster_tol = 1e-8, double herm_tol = 1e-10);
SpectrumResult solve_spectrum(const FieldOperator& op, bool interior_only, double cluster_tol = 1e-8);

SpectrumResult oscillator_spectrum(int n, int nmax);
// (a, c) = (s / (2(s-1)), s / (s-1))
std::pair<double, double> quantization(double s);
// c = 2a solved together with a = 1 - c/s: (s / (s+2), 2s / (s+2))
std::pair<double, double> quantization_consistent(double s);

// restriction to modes 1..n and the degree-k sector
struct CompactFieldProblem {
  int n = 0;
  int k = 0;
  int beta = 1;
  GTBasis sigma;
  std::vector<FockIndex> fock_states;
  DenseOperator matrix;
  // total u(n) action sigma'(Z_ij) (x) 1 + 1 (x) Xi_ij, i, j in 1..n
  std::vector<std::vector<DenseOperator>> total;
};

// sum_{ij} Sigma^beta_{ij} (x) Xi_{ji}; `printed_pairing` uses Xi_{ij} instead
CompactFieldProblem compact_field_operator(const GTBasis& sigma, int k, int beta, bool printed_pairing = false);

}  // namespace quaplectic
