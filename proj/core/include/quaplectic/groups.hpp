#pragma once

#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace quaplectic {

enum class MetricForm { canonical, hatted };

// symplectic metric of size 2(n+1)
Eigen::MatrixXd zeta_matrix(int n, MetricForm form);

struct HeisenbergElement {
  Eigen::VectorXd w;
  double iota = 0.0;
  MetricForm form = MetricForm::hatted;

  int n() const { return static_cast<int>(w.size()) / 2 - 1; }
  static HeisenbergElement identity(int n, MetricForm form = MetricForm::hatted);
};

// h(w~,i~) . h(w,i) = h(w + w~, i + i~ + w~ zeta w)
HeisenbergElement h_compose(const HeisenbergElement& lhs, const HeisenbergElement& rhs);
HeisenbergElement h_inverse(const HeisenbergElement& h);
double h_distance(const HeisenbergElement& x, const HeisenbergElement& y);

struct AutomorphismElement {
  Eigen::MatrixXd A;
  Eigen::VectorXd w;
  double iota = 0.0;
  double epsilon = 1.0;
  MetricForm form = MetricForm::hatted;

  int n() const { return static_cast<int>(w.size()) / 2 - 1; }
  static AutomorphismElement identity(int n, MetricForm form = MetricForm::hatted);
};

// h -> h(eps A w, eps^2 (iota + 2 w zeta w~))
HeisenbergElement aut_act(const AutomorphismElement& a, const HeisenbergElement& h);
AutomorphismElement aut_compose(const AutomorphismElement& lhs, const AutomorphismElement& rhs);
AutomorphismElement aut_inverse(const AutomorphismElement& a);
// faithful (2n+4)-square matrix realization, homomorphic to aut_compose
Eigen::MatrixXd aut_to_matrix(const AutomorphismElement& a);
double aut_distance(const AutomorphismElement& x, const AutomorphismElement& y);
// A^T zeta A - zeta, max norm
double symplectic_defect(const Eigen::MatrixXd& A, MetricForm form);

using cd = std::complex<double>;

struct QuaplecticElement {
  Eigen::MatrixXcd Upsilon;
  Eigen::VectorXcd z;
  double iota = 0.0;

  int n() const { return static_cast<int>(z.size()) - 1; }
  static QuaplecticElement identity(int n);
};

// (U~, z~, i~) . (U, z, i) = (U~ U, z~ + U~ z, i + i~ + Im(z~^* eta U~ z))
QuaplecticElement q_compose(const QuaplecticElement& lhs, const QuaplecticElement& rhs);
QuaplecticElement q_inverse(const QuaplecticElement& g);
// [[U, 0, z], [z^*, 1, iota], [0, 0, 1]]
Eigen::MatrixXcd q_to_matrix(const QuaplecticElement& g);
double q_distance(const QuaplecticElement& x, const QuaplecticElement& y);

struct MembershipReport {
  bool pseudo_unitary = false;
  bool symplectic = false;
  bool orthogonal = false;
  double pseudo_unitary_defect = 0.0;
  double symplectic_defect = 0.0;
  double orthogonal_defect = 0.0;
};

// [[Lambda, M], [-M, Lambda]] for Upsilon = Lambda + i M
Eigen::MatrixXd realify(const Eigen::MatrixXcd& Upsilon);
MembershipReport check_membership(const Eigen::MatrixXcd& Upsilon, double tol);

// seeded generators used by property suites
Eigen::MatrixXcd random_pseudo_unitary(int n, std::mt19937_64& rng, double scale = 0.5);
Eigen::MatrixXd random_symplectic(int n, MetricForm form, std::mt19937_64& rng, double scale = 0.5);
HeisenbergElement random_heisenberg(int n, MetricForm form, std::mt19937_64& rng);
AutomorphismElement random_automorphism(int n, MetricForm form, std::mt19937_64& rng);
QuaplecticElement random_quaplectic(int n, std::mt19937_64& rng);

std::string serialize(const QuaplecticElement& g);
QuaplecticElement deserialize_quaplectic(const std::string& text);

}  // namespace quaplectic
