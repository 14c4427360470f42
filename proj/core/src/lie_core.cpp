#include "quaplectic/lie_core.hpp"

#include <sstream>
#include <stdexcept>

namespace quaplectic {

namespace {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::I: return "I";
    case Kind::L: return "L";
    case Kind::M: return "M";
    case Kind::X: return "X";
    case Kind::Y: return "Y";
    case Kind::Z: return "Z";
    case Kind::Zhat: return "Zhat";
    case Kind::U: return "U";
    case Kind::Aplus: return "A+";
    case Kind::Aminus: return "A-";
    case Kind::J: return "J";
    case Kind::K: return "K";
    case Kind::N: return "N";
    case Kind::R: return "R";
    case Kind::T: return "T";
    case Kind::E: return "E";
    case Kind::P: return "P";
    case Kind::Q: return "Q";
  }
  return "?";
}

int index_count(Kind k) {
  switch (k) {
    case Kind::L:
    case Kind::M:
    case Kind::Z:
    case Kind::Zhat: return 2;
    case Kind::X:
    case Kind::Y:
    case Kind::Aplus:
    case Kind::Aminus:
    case Kind::J:
    case Kind::K:
    case Kind::N:
    case Kind::P:
    case Kind::Q: return 1;
    default: return 0;
  }
}

void check_index(int v, int lo, int hi) {
  if (v < lo || v > hi) throw std::out_of_range("generator index out of range");
}

void validate(int n, const GeneratorId& g) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  switch (g.kind) {
    case Kind::L:
    case Kind::M:
    case Kind::Z:
    case Kind::Zhat:
      check_index(g.a, 0, n);
      check_index(g.b, 0, n);
      break;
    case Kind::X:
    case Kind::Y:
    case Kind::Aplus:
    case Kind::Aminus: check_index(g.a, 0, n); break;
    case Kind::J:
      if (n != 3) throw std::invalid_argument("J is defined for n = 3");
      check_index(g.a, 1, 3);
      break;
    case Kind::K:
    case Kind::N:
    case Kind::P:
    case Kind::Q: check_index(g.a, 1, n); break;
    default: break;
  }
}

Coeff half_sqrt2() { return Coeff(GaussRational(), GaussRational(Rational(1, 2))); }

AlgebraElement Lg(int n, int a, int b, const Coeff& c = 1) {
  return AlgebraElement::generator(n, gen::L(a, b), c);
}
AlgebraElement Mg(int n, int a, int b, const Coeff& c = 1) {
  return AlgebraElement::generator(n, gen::M(a, b), c);
}
AlgebraElement Xg(int n, int a, const Coeff& c = 1) { return AlgebraElement::generator(n, gen::X(a), c); }
AlgebraElement Yg(int n, int a, const Coeff& c = 1) { return AlgebraElement::generator(n, gen::Y(a), c); }

AlgebraElement primitive_expansion(int n, const GeneratorId& g) {
  AlgebraElement out(n);
  switch (g.kind) {
    case Kind::I:
    case Kind::L:
    case Kind::M:
    case Kind::X:
    case Kind::Y: out.add(g, 1); break;
    case Kind::Z:
      out = Mg(n, g.a, g.b, Coeff::frac(1, 2)) + Lg(n, g.a, g.b, Coeff(GaussRational(0, Rational(-1, 2))));
      break;
    case Kind::U:
      for (int a = 0; a <= n; ++a) out += Mg(n, a, a, Coeff::frac(eta(a, a), 2));
      break;
    case Kind::Zhat:
      out = primitive_expansion(n, gen::Z(g.a, g.b));
      if (g.a == g.b) out -= Coeff(Rational(eta(g.a, g.a), n + 1)) * primitive_expansion(n, gen::U());
      break;
    case Kind::Aplus:
      out = Xg(n, g.a, half_sqrt2()) + Yg(n, g.a, -Coeff::i() * half_sqrt2());
      break;
    case Kind::Aminus:
      out = Xg(n, g.a, half_sqrt2()) + Yg(n, g.a, Coeff::i() * half_sqrt2());
      break;
    case Kind::J: {
      const int j = g.a % 3 + 1, k = (g.a + 1) % 3 + 1;
      out = Lg(n, j, k);
      break;
    }
    case Kind::K: out = Lg(n, 0, g.a); break;
    case Kind::N: out = Mg(n, 0, g.a); break;
    case Kind::R: out = Mg(n, 0, 0); break;
    case Kind::T: out = Xg(n, 0); break;
    case Kind::E: out = Yg(n, 0); break;
    case Kind::Q: out = Xg(n, g.a); break;
    case Kind::P: out = Yg(n, g.a); break;
  }
  return out;
}

AlgebraElement complex_expansion(int n, const GeneratorId& g) {
  AlgebraElement out(n);
  auto Zg = [n](int a, int b, const Coeff& c) { return AlgebraElement::generator(n, gen::Z(a, b), c); };
  switch (g.kind) {
    case Kind::I: out.add(g, 1); break;
    case Kind::X:
      out.add(gen::Aplus(g.a), half_sqrt2());
      out.add(gen::Aminus(g.a), half_sqrt2());
      break;
    case Kind::Y:
      out.add(gen::Aplus(g.a), Coeff::i() * half_sqrt2());
      out.add(gen::Aminus(g.a), -Coeff::i() * half_sqrt2());
      break;
    case Kind::M: out = Zg(g.a, g.b, 1) + Zg(g.b, g.a, 1); break;
    case Kind::L: out = Zg(g.a, g.b, Coeff::i()) + Zg(g.b, g.a, -Coeff::i()); break;
    default: throw std::logic_error("complex_expansion expects a primitive generator");
  }
  return out;
}

// real table on primitive generators, one ordered orientation per family
bool table_entry(int n, const GeneratorId& x, const GeneratorId& y, AlgebraElement& out) {
  const int a = x.a, b = x.b;
  const int c = y.a, d = y.b;
  out = AlgebraElement(n);
  if (x.kind == Kind::L && y.kind == Kind::L) {
    out += Lg(n, b, d, -eta(a, c));
    out += Lg(n, b, c, eta(a, d));
    out += Lg(n, a, d, eta(b, c));
    out += Lg(n, a, c, -eta(b, d));
    return true;
  }
  if (x.kind == Kind::L && y.kind == Kind::M) {
    out += Mg(n, b, d, -eta(a, c));
    out += Mg(n, b, c, -eta(a, d));
    out += Mg(n, a, d, eta(b, c));
    out += Mg(n, a, c, eta(b, d));
    return true;
  }
  if (x.kind == Kind::M && y.kind == Kind::M) {
    out += Lg(n, b, d, -eta(a, c));
    out += Lg(n, b, c, -eta(a, d));
    out += Lg(n, a, d, -eta(b, c));
    out += Lg(n, a, c, -eta(b, d));
    return true;
  }
  if (x.kind == Kind::L && y.kind == Kind::X) {
    out += Xg(n, b, -eta(a, c));
    out += Xg(n, a, eta(b, c));
    return true;
  }
  if (x.kind == Kind::L && y.kind == Kind::Y) {
    out += Yg(n, b, -eta(a, c));
    out += Yg(n, a, eta(b, c));
    return true;
  }
  if (x.kind == Kind::M && y.kind == Kind::X) {
    out += Yg(n, b, -eta(a, c));
    out += Yg(n, a, -eta(b, c));
    return true;
  }
  if (x.kind == Kind::M && y.kind == Kind::Y) {
    out += Xg(n, b, eta(a, c));
    out += Xg(n, a, eta(b, c));
    return true;
  }
  if (x.kind == Kind::X && y.kind == Kind::Y) {
    if (eta(a, c) != 0) out.add(gen::I(), eta(a, c));
    return true;
  }
  return false;
}

AlgebraElement primitive_bracket(int n, const GeneratorId& x, const GeneratorId& y) {
  AlgebraElement out(n);
  if (table_entry(n, x, y, out)) return out;
  if (table_entry(n, y, x, out)) return Coeff(-1) * out;
  return AlgebraElement(n);
}

void require_same_n(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

std::string to_string(const GeneratorId& g) {
  std::ostringstream os;
  os << kind_name(g.kind);
  const int k = index_count(g.kind);
  if (k == 1) os << "(" << g.a << ")";
  if (k == 2) os << "(" << g.a << "," << g.b << ")";
  return os.str();
}

bool is_primitive(Kind k) {
  return k == Kind::I || k == Kind::L || k == Kind::M || k == Kind::X || k == Kind::Y;
}

bool is_complex_basis(Kind k) {
  return k == Kind::I || k == Kind::Z || k == Kind::Aplus || k == Kind::Aminus;
}

MetricTensor metric(int n) {
  MetricTensor m;
  m.n = n;
  const int d = n + 1;
  m.eta = Eigen::VectorXi::Ones(d);
  m.eta(0) = -1;
  m.zeta_canonical = Eigen::MatrixXi::Zero(2 * d, 2 * d);
  m.zeta_hat = Eigen::MatrixXi::Zero(2 * d, 2 * d);
  for (int a = 0; a < d; ++a) {
    m.zeta_canonical(a, d + a) = 1;
    m.zeta_canonical(d + a, a) = -1;
    m.zeta_hat(a, d + a) = m.eta(a);
    m.zeta_hat(d + a, a) = -m.eta(a);
  }
  return m;
}

AlgebraElement AlgebraElement::generator(int n, const GeneratorId& g, const Coeff& c) {
  validate(n, g);
  AlgebraElement out(n);
  GeneratorId h = g;
  if (index_count(g.kind) != 2) h.b = 0;
  if (index_count(g.kind) == 0) h.a = 0;
  Coeff k = c;
  if (g.kind == Kind::L) {
    if (g.a == g.b) return out;
    if (g.a > g.b) {
      std::swap(h.a, h.b);
      k = -k;
    }
  }
  if (g.kind == Kind::M && g.a > g.b) std::swap(h.a, h.b);
  out.add(h, k);
  return out;
}

Coeff AlgebraElement::coeff(const GeneratorId& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Coeff() : it->second;
}

void AlgebraElement::add(const GeneratorId& g, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_n(*this, o);
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_n(*this, o);
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement operator*(const Coeff& c, const AlgebraElement& x) {
  AlgebraElement out(x.n());
  for (const auto& [g, v] : x.terms_) out.add(g, c * v);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << "*" << to_string(g);
    first = false;
  }
  return os.str();
}

AlgebraElement resolve(const AlgebraElement& x) {
  AlgebraElement out(x.n());
  for (const auto& [g, c] : x.terms()) out += c * primitive_expansion(x.n(), g);
  return out;
}

AlgebraElement to_complex_basis(const AlgebraElement& x) {
  AlgebraElement out(x.n());
  const AlgebraElement r = resolve(x);
  for (const auto& [g, c] : r.terms()) out += c * complex_expansion(x.n(), g);
  return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_n(x, y);
  const int n = x.n();
  const AlgebraElement rx = resolve(x), ry = resolve(y);
  AlgebraElement out(n);
  for (const auto& [gx, cx] : rx.terms())
    for (const auto& [gy, cy] : ry.terms()) out += (cx * cy) * primitive_bracket(n, gx, gy);
  return out;
}

AlgebraElement bracket_complex(const AlgebraElement& x, const AlgebraElement& y) {
  return to_complex_basis(bracket(x, y));
}

std::vector<GeneratorId> basis_generators(int n, Basis basis) {
  std::vector<GeneratorId> out;
  if (basis == Basis::real) {
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) out.push_back(gen::L(a, b));
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b) out.push_back(gen::M(a, b));
    for (int a = 0; a <= n; ++a) out.push_back(gen::X(a));
    for (int a = 0; a <= n; ++a) out.push_back(gen::Y(a));
  } else {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) out.push_back(gen::Z(a, b));
    for (int a = 0; a <= n; ++a) out.push_back(gen::Aplus(a));
    for (int a = 0; a <= n; ++a) out.push_back(gen::Aminus(a));
  }
  out.push_back(gen::I());
  return out;
}

StructureTable structure_constant_table(int n, Basis basis) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  StructureTable table;
  const auto gens = basis_generators(n, basis);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      const auto ex = AlgebraElement::generator(n, x);
      const auto ey = AlgebraElement::generator(n, y);
      auto r = basis == Basis::real ? bracket(ex, ey) : bracket_complex(ex, ey);
      if (!r.is_zero()) table.emplace(std::make_pair(x, y), std::move(r));
    }
  }
  return table;
}

std::string export_table(const StructureTable& table) {
  std::ostringstream os;
  for (const auto& [key, value] : table)
    for (const auto& [g, c] : value.terms())
      os << to_string(key.first) << "\t" << to_string(key.second) << "\t" << c.str() << "\t"
         << to_string(g) << "\n";
  return os.str();
}

AlgebraElement jacobiator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
}

std::vector<GeneratorId> poincare_subalgebra(PoincareSet selector, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<GeneratorId> out;
  if (n == 3) {
    for (int i = 1; i <= 3; ++i) out.push_back(gen::J(i));
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back(gen::L(i, j));
  }
  const bool boost_k = selector == PoincareSet::velocity_EP || selector == PoincareSet::velocity_TQ;
  const bool time_like_e = selector == PoincareSet::velocity_EP || selector == PoincareSet::force_EQ;
  const bool space_p = selector == PoincareSet::velocity_EP || selector == PoincareSet::force_TP;
  for (int i = 1; i <= n; ++i) out.push_back(boost_k ? gen::K(i) : gen::N(i));
  out.push_back(time_like_e ? gen::E() : gen::T());
  for (int i = 1; i <= n; ++i) out.push_back(space_p ? gen::P(i) : gen::Q(i));
  return out;
}

bool closes(const std::vector<GeneratorId>& set, int n) {
  // coordinates over the primitive basis; only rational coefficients appear here
  const auto prim = basis_generators(n, Basis::real);
  std::map<GeneratorId, int> pos;
  for (std::size_t i = 0; i < prim.size(); ++i) pos[prim[i]] = static_cast<int>(i);
  auto coords = [&](const AlgebraElement& x) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<int>(prim.size()));
    const AlgebraElement r = resolve(x);
    for (const auto& [g, c] : r.terms()) {
      const auto z = c.to_complex();
      if (std::abs(z.imag()) > 0) throw std::logic_error("closure check expects real elements");
      v(pos.at(g)) = z.real();
    }
    return v;
  };
  Eigen::MatrixXd span(static_cast<int>(prim.size()), static_cast<int>(set.size()) + 1);
  for (std::size_t i = 0; i < set.size(); ++i)
    span.col(static_cast<int>(i)) = coords(AlgebraElement::generator(n, set[i]));
  span.col(static_cast<int>(set.size())) = coords(AlgebraElement::generator(n, gen::I()));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
  for (const auto& x : set) {
    for (const auto& y : set) {
      const auto r = bracket(AlgebraElement::generator(n, x), AlgebraElement::generator(n, y));
      if (r.is_zero()) continue;
      const Eigen::VectorXd v = coords(r);
      const Eigen::VectorXd sol = qr.solve(v);
      if ((span * sol - v).norm() > 1e-12) return false;
    }
  }
  return true;
}

}  // namespace quaplectic
