#include "quaplectic/groups.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace quaplectic {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Eigen::VectorXd eta_vec(int n) {
  Eigen::VectorXd e = Eigen::VectorXd::Ones(n + 1);
  e(0) = -1.0;
  return e;
}

Eigen::VectorXd normal_vec(int size, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> nd(0.0, scale);
  Eigen::VectorXd v(size);
  for (int i = 0; i < size; ++i) v(i) = nd(rng);
  return v;
}

}  // namespace

Eigen::MatrixXd zeta_matrix(int n, MetricForm form) {
  const int d = n + 1;
  const Eigen::VectorXd e = eta_vec(n);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  for (int a = 0; a < d; ++a) {
    const double s = form == MetricForm::hatted ? e(a) : 1.0;
    z(a, d + a) = s;
    z(d + a, a) = -s;
  }
  return z;
}

HeisenbergElement HeisenbergElement::identity(int n, MetricForm form) {
  return {Eigen::VectorXd::Zero(2 * (n + 1)), 0.0, form};
}

HeisenbergElement h_compose(const HeisenbergElement& lhs, const HeisenbergElement& rhs) {
  require(lhs.w.size() == rhs.w.size(), "dimension mismatch");
  require(lhs.form == rhs.form, "metric form mismatch");
  const Eigen::MatrixXd z = zeta_matrix(lhs.n(), lhs.form);
  return {lhs.w + rhs.w, lhs.iota + rhs.iota + lhs.w.dot(z * rhs.w), lhs.form};
}

HeisenbergElement h_inverse(const HeisenbergElement& h) { return {-h.w, -h.iota, h.form}; }

double h_distance(const HeisenbergElement& x, const HeisenbergElement& y) {
  return std::max((x.w - y.w).cwiseAbs().maxCoeff(), std::abs(x.iota - y.iota));
}

AutomorphismElement AutomorphismElement::identity(int n, MetricForm form) {
  const int m = 2 * (n + 1);
  return {Eigen::MatrixXd::Identity(m, m), Eigen::VectorXd::Zero(m), 0.0, 1.0, form};
}

HeisenbergElement aut_act(const AutomorphismElement& a, const HeisenbergElement& h) {
  require(a.epsilon != 0.0, "epsilon must be nonzero");
  require(a.w.size() == h.w.size(), "dimension mismatch");
  require(a.form == h.form, "metric form mismatch");
  const Eigen::MatrixXd z = zeta_matrix(h.n(), h.form);
  const double e2 = a.epsilon * a.epsilon;
  return {a.epsilon * (a.A * h.w), e2 * (h.iota + 2.0 * h.w.dot(z * a.w)), h.form};
}

AutomorphismElement aut_compose(const AutomorphismElement& lhs, const AutomorphismElement& rhs) {
  require(lhs.epsilon != 0.0 && rhs.epsilon != 0.0, "epsilon must be nonzero");
  require(lhs.w.size() == rhs.w.size(), "dimension mismatch");
  require(lhs.form == rhs.form, "metric form mismatch");
  const Eigen::MatrixXd z = zeta_matrix(lhs.n(), lhs.form);
  const double e = rhs.epsilon;
  AutomorphismElement out;
  out.form = lhs.form;
  out.epsilon = lhs.epsilon * e;
  out.A = lhs.A * rhs.A;
  out.w = rhs.w + rhs.A.inverse() * lhs.w / e;
  out.iota = rhs.iota + lhs.iota / (e * e) + lhs.w.dot(z * rhs.A * rhs.w) / e;
  return out;
}

AutomorphismElement aut_inverse(const AutomorphismElement& a) {
  require(a.epsilon != 0.0, "epsilon must be nonzero");
  AutomorphismElement out;
  out.form = a.form;
  out.epsilon = 1.0 / a.epsilon;
  out.A = a.A.inverse();
  out.w = -a.epsilon * (a.A * a.w);
  out.iota = -a.epsilon * a.epsilon * a.iota;
  return out;
}

Eigen::MatrixXd aut_to_matrix(const AutomorphismElement& a) {
  require(a.epsilon != 0.0, "epsilon must be nonzero");
  const int m = static_cast<int>(a.w.size());
  const Eigen::MatrixXd z = zeta_matrix(a.n(), a.form);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m + 2, m + 2);
  out.topLeftCorner(m, m) = a.A;
  out.block(0, m + 1, m, 1) = a.A * a.w;
  out.block(m, 0, 1, m) = a.epsilon * (a.w.transpose() * z);
  out(m, m) = a.epsilon;
  out(m, m + 1) = a.epsilon * a.iota;
  out(m + 1, m + 1) = 1.0 / a.epsilon;
  return out;
}

double aut_distance(const AutomorphismElement& x, const AutomorphismElement& y) {
  double d = (x.A - y.A).cwiseAbs().maxCoeff();
  d = std::max(d, (x.w - y.w).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(x.iota - y.iota));
  return std::max(d, std::abs(x.epsilon - y.epsilon));
}

double symplectic_defect(const Eigen::MatrixXd& A, MetricForm form) {
  const int n = static_cast<int>(A.rows()) / 2 - 1;
  const Eigen::MatrixXd z = zeta_matrix(n, form);
  return (A.transpose() * z * A - z).cwiseAbs().maxCoeff();
}

QuaplecticElement QuaplecticElement::identity(int n) {
  return {Eigen::MatrixXcd::Identity(n + 1, n + 1), Eigen::VectorXcd::Zero(n + 1), 0.0};
}

QuaplecticElement q_compose(const QuaplecticElement& lhs, const QuaplecticElement& rhs) {
  require(lhs.z.size() == rhs.z.size(), "dimension mismatch");
  const Eigen::VectorXd e = eta_vec(lhs.n());
  const Eigen::VectorXcd moved = lhs.Upsilon * rhs.z;
  const cd cocycle = lhs.z.adjoint() * e.asDiagonal() * moved;
  return {lhs.Upsilon * rhs.Upsilon, lhs.z + moved, lhs.iota + rhs.iota + cocycle.imag()};
}

QuaplecticElement q_inverse(const QuaplecticElement& g) {
  const Eigen::MatrixXcd inv = g.Upsilon.inverse();
  return {inv, -(inv * g.z), -g.iota};
}

Eigen::MatrixXcd q_to_matrix(const QuaplecticElement& g) {
  const int d = static_cast<int>(g.z.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d + 2, d + 2);
  m.topLeftCorner(d, d) = g.Upsilon;
  m.block(0, d + 1, d, 1) = g.z;
  m.block(d, 0, 1, d) = g.z.adjoint();
  m(d, d) = 1.0;
  m(d, d + 1) = g.iota;
  m(d + 1, d + 1) = 1.0;
  return m;
}

double q_distance(const QuaplecticElement& x, const QuaplecticElement& y) {
  double d = (x.Upsilon - y.Upsilon).cwiseAbs().maxCoeff();
  d = std::max(d, (x.z - y.z).cwiseAbs().maxCoeff());
  return std::max(d, std::abs(x.iota - y.iota));
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& Upsilon) {
  const int d = static_cast<int>(Upsilon.rows());
  Eigen::MatrixXd A(2 * d, 2 * d);
  A << Upsilon.real(), Upsilon.imag(), -Upsilon.imag(), Upsilon.real();
  return A;
}

MembershipReport check_membership(const Eigen::MatrixXcd& Upsilon, double tol) {
  require(Upsilon.rows() == Upsilon.cols() && Upsilon.rows() > 0, "square matrix required");
  const int n = static_cast<int>(Upsilon.rows()) - 1;
  const Eigen::VectorXd e = eta_vec(n);
  const Eigen::MatrixXd eta_m = e.asDiagonal();
  const Eigen::MatrixXd A = realify(Upsilon);
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(2 * (n + 1), 2 * (n + 1));
  G.topLeftCorner(n + 1, n + 1) = eta_m;
  G.bottomRightCorner(n + 1, n + 1) = eta_m;

  MembershipReport r;
  r.pseudo_unitary_defect =
      (Upsilon.adjoint() * eta_m.cast<cd>() * Upsilon - eta_m.cast<cd>()).cwiseAbs().maxCoeff();
  r.symplectic_defect = symplectic_defect(A, MetricForm::hatted);
  r.orthogonal_defect = (A.transpose() * G * A - G).cwiseAbs().maxCoeff();
  r.pseudo_unitary = r.pseudo_unitary_defect <= tol;
  r.symplectic = r.symplectic_defect <= tol;
  r.orthogonal = r.orthogonal_defect <= tol;
  return r;
}

Eigen::MatrixXcd random_pseudo_unitary(int n, std::mt19937_64& rng, double scale) {
  const int d = n + 1;
  Eigen::MatrixXcd K(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) K(i, j) = cd(normal_vec(1, rng, scale)(0), normal_vec(1, rng, scale)(0));
  K = (K - K.adjoint().eval()) * 0.5;
  const Eigen::VectorXd e = eta_vec(n);
  const Eigen::MatrixXcd gen = e.cast<cd>().asDiagonal() * K;
  return gen.exp();
}

Eigen::MatrixXd random_symplectic(int n, MetricForm form, std::mt19937_64& rng, double scale) {
  const int m = 2 * (n + 1);
  Eigen::MatrixXd S(m, m);
  for (int i = 0; i < m; ++i) S.row(i) = normal_vec(m, rng, scale).transpose();
  S = (S + S.transpose().eval()) * 0.5;
  const Eigen::MatrixXd gen = zeta_matrix(n, form) * S;
  return gen.exp();
}

HeisenbergElement random_heisenberg(int n, MetricForm form, std::mt19937_64& rng) {
  return {normal_vec(2 * (n + 1), rng, 1.0), normal_vec(1, rng, 1.0)(0), form};
}

AutomorphismElement random_automorphism(int n, MetricForm form, std::mt19937_64& rng) {
  AutomorphismElement a;
  a.form = form;
  a.A = random_symplectic(n, form, rng);
  a.w = normal_vec(2 * (n + 1), rng, 1.0);
  a.iota = normal_vec(1, rng, 1.0)(0);
  std::uniform_real_distribution<double> ud(0.5, 2.0);
  a.epsilon = ud(rng);
  return a;
}

QuaplecticElement random_quaplectic(int n, std::mt19937_64& rng) {
  QuaplecticElement g;
  g.Upsilon = random_pseudo_unitary(n, rng);
  const Eigen::VectorXd re = normal_vec(n + 1, rng, 1.0), im = normal_vec(n + 1, rng, 1.0);
  g.z = re.cast<cd>() + cd(0, 1) * im.cast<cd>();
  g.iota = normal_vec(1, rng, 1.0)(0);
  return g;
}

std::string serialize(const QuaplecticElement& g) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "n=" << g.n() << "\nUpsilon=";
  for (int i = 0; i < g.Upsilon.rows(); ++i)
    for (int j = 0; j < g.Upsilon.cols(); ++j)
      os << (i || j ? " " : "") << g.Upsilon(i, j).real() << " " << g.Upsilon(i, j).imag();
  os << "\nz=";
  for (int i = 0; i < g.z.size(); ++i) os << (i ? " " : "") << g.z(i).real() << " " << g.z(i).imag();
  os << "\niota=" << g.iota << "\n";
  return os.str();
}

QuaplecticElement deserialize_quaplectic(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<double> ups, zs;
  double iota = 0.0;
  auto numbers = [](const std::string& s) {
    std::istringstream ls(s);
    std::vector<double> v;
    double x;
    while (ls >> x) v.push_back(x);
    return v;
  };
  while (std::getline(is, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "n") n = std::stoi(val);
    else if (key == "Upsilon") ups = numbers(val);
    else if (key == "z") zs = numbers(val);
    else if (key == "iota") iota = std::stod(val);
  }
  require(n >= 0, "missing n");
  const int d = n + 1;
  require(static_cast<int>(ups.size()) == 2 * d * d && static_cast<int>(zs.size()) == 2 * d,
          "malformed element");
  QuaplecticElement g;
  g.Upsilon.resize(d, d);
  g.z.resize(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.Upsilon(i, j) = cd(ups[2 * (i * d + j)], ups[2 * (i * d + j) + 1]);
  for (int i = 0; i < d; ++i) g.z(i) = cd(zs[2 * i], zs[2 * i + 1]);
  g.iota = iota;
  return g;
}

}  // namespace quaplectic
