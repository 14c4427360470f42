#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quaplectic/exact.hpp"

namespace quaplectic {

enum class Kind { I, L, M, X, Y, Z, Zhat, U, Aplus, Aminus, J, K, N, R, T, E, P, Q };

struct GeneratorId {
  Kind kind = Kind::I;
  int a = 0;
  int b = 0;

  auto operator<=>(const GeneratorId&) const = default;
};

namespace gen {
inline GeneratorId I() { return {Kind::I}; }
inline GeneratorId L(int a, int b) { return {Kind::L, a, b}; }
inline GeneratorId M(int a, int b) { return {Kind::M, a, b}; }
inline GeneratorId X(int a) { return {Kind::X, a}; }
inline GeneratorId Y(int a) { return {Kind::Y, a}; }
inline GeneratorId Z(int a, int b) { return {Kind::Z, a, b}; }
inline GeneratorId Zhat(int a, int b) { return {Kind::Zhat, a, b}; }
inline GeneratorId U() { return {Kind::U}; }
inline GeneratorId Aplus(int a) { return {Kind::Aplus, a}; }
inline GeneratorId Aminus(int a) { return {Kind::Aminus, a}; }
inline GeneratorId J(int i) { return {Kind::J, i}; }
inline GeneratorId K(int i) { return {Kind::K, i}; }
inline GeneratorId N(int i) { return {Kind::N, i}; }
inline GeneratorId R() { return {Kind::R}; }
inline GeneratorId T() { return {Kind::T}; }
inline GeneratorId E() { return {Kind::E}; }
inline GeneratorId P(int i) { return {Kind::P, i}; }
inline GeneratorId Q(int i) { return {Kind::Q, i}; }
}  // namespace gen

std::string to_string(const GeneratorId& g);
bool is_primitive(Kind k);
bool is_complex_basis(Kind k);

// eta = diag(-1, 1, ..., 1)
inline int eta(int a, int b) { return a != b ? 0 : (a == 0 ? -1 : 1); }

struct MetricTensor {
  int n = 1;
  Eigen::VectorXi eta;
  Eigen::MatrixXi zeta_canonical;
  Eigen::MatrixXi zeta_hat;
};

MetricTensor metric(int n);

class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 1) : n_(n) {}

  // validates indices; L(a,b) with a>b is stored as -L(b,a), M(a,b) as M(b,a)
  static AlgebraElement generator(int n, const GeneratorId& g, const Coeff& c = 1);

  int n() const { return n_; }
  const std::map<GeneratorId, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const GeneratorId& g) const;

  void add(const GeneratorId& g, const Coeff& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const Coeff& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<GeneratorId, Coeff> terms_;
};

// rewrite in the primitive basis {L, M, X, Y, I}
AlgebraElement resolve(const AlgebraElement& x);
// rewrite in the complex basis {Z(a,b), A+(a), A-(a), I}
AlgebraElement to_complex_basis(const AlgebraElement& x);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement bracket_complex(const AlgebraElement& x, const AlgebraElement& y);

enum class Basis { real, complex };

std::vector<GeneratorId> basis_generators(int n, Basis basis);

using StructureTable = std::map<std::pair<GeneratorId, GeneratorId>, AlgebraElement>;

// nonzero brackets only; keys range over ordered pairs of basis generators
StructureTable structure_constant_table(int n, Basis basis);

// one line per nonzero bracket: gen, gen, coefficient, gen
std::string export_table(const StructureTable& table);

AlgebraElement jacobiator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

enum class PoincareSet { velocity_EP, velocity_TQ, force_EQ, force_TP };

std::vector<GeneratorId> poincare_subalgebra(PoincareSet selector, int n = 3);
// brackets of all pairs stay inside span(set) + I
bool closes(const std::vector<GeneratorId>& set, int n);

// ---- enveloping algebra ------------------------------------------------

using Word = std::vector<GeneratorId>;

class EnvelopingPoly {
 public:
  explicit EnvelopingPoly(int n = 1) : n_(n) {}
  static EnvelopingPoly word(int n, Word w, const Coeff& c = 1);
  static EnvelopingPoly from_element(const AlgebraElement& x);

  int n() const { return n_; }
  const std::map<Word, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Coeff& c);
  EnvelopingPoly& operator+=(const EnvelopingPoly& o);
  EnvelopingPoly& operator-=(const EnvelopingPoly& o);
  friend EnvelopingPoly operator+(EnvelopingPoly x, const EnvelopingPoly& y) { return x += y; }
  friend EnvelopingPoly operator-(EnvelopingPoly x, const EnvelopingPoly& y) { return x -= y; }
  friend EnvelopingPoly operator*(const EnvelopingPoly& x, const EnvelopingPoly& y);
  friend EnvelopingPoly operator*(const Coeff& c, const EnvelopingPoly& x);
  friend bool operator==(const EnvelopingPoly& x, const EnvelopingPoly& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }

  std::string str() const;

 private:
  int n_;
  std::map<Word, Coeff> terms_;
};

// rank order I < Z < A+ < A-, then indices; letters must be in the complex basis
bool generator_less(const GeneratorId& x, const GeneratorId& y);
EnvelopingPoly normal_order(const EnvelopingPoly& p);
EnvelopingPoly commutator(const EnvelopingPoly& x, const EnvelopingPoly& y);

// W(a,b) = A+_a A-_b - I Z_ab
EnvelopingPoly w_element(int n, int a, int b);
// C_{2 beta}: eta-contracted chain of W, normal ordered
EnvelopingPoly casimir_element(int beta, int n);
// D_beta: eta-contracted chain of Z, normal ordered
EnvelopingPoly unitary_casimir_element(int beta, int n);

}  // namespace quaplectic
