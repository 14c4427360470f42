#include <sstream>
#include <stdexcept>
#include <tuple>

#include "quaplectic/lie_core.hpp"

namespace quaplectic {

namespace {

int rank(Kind k) {
  switch (k) {
    case Kind::I: return 0;
    case Kind::Z: return 1;
    case Kind::Aplus: return 2;
    case Kind::Aminus: return 3;
    default: throw std::invalid_argument("enveloping words use the complex basis");
  }
}

}  // namespace

bool generator_less(const GeneratorId& x, const GeneratorId& y) {
  return std::make_tuple(rank(x.kind), x.a, x.b) < std::make_tuple(rank(y.kind), y.a, y.b);
}

EnvelopingPoly EnvelopingPoly::word(int n, Word w, const Coeff& c) {
  for (const auto& g : w) rank(g.kind);
  EnvelopingPoly p(n);
  p.add(w, c);
  return p;
}

EnvelopingPoly EnvelopingPoly::from_element(const AlgebraElement& x) {
  EnvelopingPoly p(x.n());
  const AlgebraElement cx = to_complex_basis(x);
  for (const auto& [g, c] : cx.terms()) p.add({g}, c);
  return p;
}

void EnvelopingPoly::add(const Word& w, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EnvelopingPoly& EnvelopingPoly::operator+=(const EnvelopingPoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

EnvelopingPoly& EnvelopingPoly::operator-=(const EnvelopingPoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

EnvelopingPoly operator*(const EnvelopingPoly& x, const EnvelopingPoly& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch");
  EnvelopingPoly out(x.n_);
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add(w, cx * cy);
    }
  }
  return out;
}

EnvelopingPoly operator*(const Coeff& c, const EnvelopingPoly& x) {
  EnvelopingPoly out(x.n_);
  for (const auto& [w, v] : x.terms_) out.add(w, c * v);
  return out;
}

std::string EnvelopingPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << c.str();
    for (const auto& g : w) os << "*" << to_string(g);
    first = false;
  }
  return os.str();
}

EnvelopingPoly normal_order(const EnvelopingPoly& p) {
  const int n = p.n();
  std::map<std::pair<GeneratorId, GeneratorId>, AlgebraElement> cache;
  auto br = [&](const GeneratorId& x, const GeneratorId& y) -> const AlgebraElement& {
    auto key = std::make_pair(x, y);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, bracket_complex(AlgebraElement::generator(n, x),
                                              AlgebraElement::generator(n, y))).first;
    return it->second;
  };

  EnvelopingPoly out(n);
  std::vector<std::pair<Word, Coeff>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    while (i + 1 < w.size() && !generator_less(w[i + 1], w[i])) ++i;
    if (i + 1 >= w.size()) {
      out.add(w, c);
      continue;
    }
    // x y = y x + [x, y]
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(std::move(swapped), c);
    for (const auto& [g, k] : br(w[i], w[i + 1]).terms()) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(i));
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      work.emplace_back(std::move(shorter), c * k);
    }
  }
  return out;
}

EnvelopingPoly commutator(const EnvelopingPoly& x, const EnvelopingPoly& y) {
  return normal_order(x * y - y * x);
}

EnvelopingPoly w_element(int n, int a, int b) {
  EnvelopingPoly w = EnvelopingPoly::word(n, {gen::Aplus(a), gen::Aminus(b)});
  w.add({gen::I(), gen::Z(a, b)}, -1);
  return w;
}

namespace {

template <class Factor>
EnvelopingPoly eta_chain(int beta, int n, Factor factor) {
  if (beta < 1 || beta > n + 1) throw std::out_of_range("beta out of range");
  EnvelopingPoly total(n);
  std::vector<int> idx(static_cast<std::size_t>(beta), 0);
  while (true) {
    int sign = 1;
    for (int v : idx) sign *= eta(v, v);
    EnvelopingPoly term = EnvelopingPoly::word(n, {}, sign);
    for (int k = 0; k < beta; ++k) term = term * factor(idx[k], idx[(k + 1) % beta]);
    total += term;
    int k = 0;
    while (k < beta && ++idx[k] > n) idx[k++] = 0;
    if (k == beta) break;
  }
  return normal_order(total);
}

}  // namespace

EnvelopingPoly casimir_element(int beta, int n) {
  return eta_chain(beta, n, [n](int a, int b) { return w_element(n, a, b); });
}

EnvelopingPoly unitary_casimir_element(int beta, int n) {
  return eta_chain(beta, n, [n](int a, int b) { return EnvelopingPoly::word(n, {gen::Z(a, b)}); });
}

}  // namespace quaplectic
