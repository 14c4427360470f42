#include "quaplectic/gelfand.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "quaplectic/lie_core.hpp"

namespace quaplectic {

int GTPattern::m(int i, int level) const {
  return rows[static_cast<std::size_t>(levels() - level)][static_cast<std::size_t>(i - 1)];
}

int& GTPattern::m(int i, int level) {
  return rows[static_cast<std::size_t>(levels() - level)][static_cast<std::size_t>(i - 1)];
}

std::vector<int> GTPattern::flat() const {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

int GTBasis::index(const GTPattern& p) const {
  auto it = lookup.find(p.flat());
  return it == lookup.end() ? -1 : it->second;
}

std::vector<int> GTBasis::interior(int margin) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (kind != GTKind::windowed || N() < 2 || patterns[static_cast<std::size_t>(i)].m(1, N() - 1) <= *window - margin)
      out.push_back(i);
  }
  return out;
}

namespace {

void check_label(const IrrepLabel& label) {
  if (label.empty()) throw std::invalid_argument("empty label");
  for (std::size_t i = 1; i < label.size(); ++i)
    if (label[i] > label[i - 1]) throw std::invalid_argument("label must be non-increasing");
}

void enumerate(const IrrepLabel& label, std::optional<int> window, GTBasis& basis) {
  const int N = static_cast<int>(label.size());
  GTPattern cur;
  cur.rows.push_back(label);
  std::function<void()> rec = [&]() {
    const auto& up = cur.rows.back();
    const int j = static_cast<int>(up.size());
    if (j == 1) {
      basis.patterns.push_back(cur);
      return;
    }
    std::vector<int> lo(static_cast<std::size_t>(j - 1)), hi(static_cast<std::size_t>(j - 1));
    for (int i = 0; i < j - 1; ++i) {
      lo[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i + 1)];
      hi[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i)];
    }
    if (window && j == N) {
      lo[0] = up[0] + 1;
      hi[0] = *window;
    }
    std::vector<int> row(lo);
    while (true) {
      bool ordered = true;
      for (int i = 0; i + 1 < j - 1; ++i)
        if (row[static_cast<std::size_t>(i)] < row[static_cast<std::size_t>(i + 1)]) ordered = false;
      bool empty = false;
      for (int i = 0; i < j - 1; ++i)
        if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) empty = true;
      if (empty) return;
      if (ordered) {
        cur.rows.push_back(row);
        rec();
        cur.rows.pop_back();
      }
      int k = j - 2;
      while (k >= 0 && row[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) {
        row[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
        --k;
      }
      if (k < 0) break;
      ++row[static_cast<std::size_t>(k)];
    }
  };
  if (N == 1) {
    basis.patterns.push_back(cur);
  } else {
    rec();
  }
  std::sort(basis.patterns.begin(), basis.patterns.end(),
            [](const GTPattern& x, const GTPattern& y) { return x.flat() < y.flat(); });
  for (int i = 0; i < basis.size(); ++i) basis.lookup.emplace(basis.patterns[static_cast<std::size_t>(i)].flat(), i);
}

// l_{i,k} = m_{i,k} - i
long shifted(const GTPattern& p, int i, int k) { return p.m(i, k) - i; }

// squared amplitude of E_{k,k+1} shifting m_{i,k} up by one, evaluated at p
cd step_amplitude(const GTPattern& p, int i, int k) {
  const long li = shifted(p, i, k);
  long num = -1;
  for (int j = 1; j <= k + 1; ++j) num *= shifted(p, j, k + 1) - li;
  for (int j = 1; j <= k - 1; ++j) num *= shifted(p, j, k - 1) - li - 1;
  long den = 1;
  for (int j = 1; j <= k; ++j) {
    if (j == i) continue;
    const long lj = shifted(p, j, k);
    den *= (lj - li) * (lj - li - 1);
  }
  if (den == 0) throw std::logic_error("degenerate Gel'fand-Tsetlin amplitude");
  return std::sqrt(cd(static_cast<double>(num) / static_cast<double>(den), 0.0));
}

SparseOperator level_diagonal(int k, const GTBasis& basis) {
  std::vector<Eigen::Triplet<cd>> t;
  for (int a = 0; a < basis.size(); ++a) {
    const auto& p = basis.patterns[static_cast<std::size_t>(a)];
    double v = 0.0;
    for (int i = 1; i <= k; ++i) v += p.m(i, k);
    for (int i = 1; i <= k - 1; ++i) v -= p.m(i, k - 1);
    t.emplace_back(a, a, v);
  }
  SparseOperator out(basis.size(), basis.size());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseOperator level_step(int k, Direction dir, const GTBasis& basis) {
  std::vector<Eigen::Triplet<cd>> t;
  for (int a = 0; a < basis.size(); ++a) {
    const auto& p = basis.patterns[static_cast<std::size_t>(a)];
    for (int i = 1; i <= k; ++i) {
      GTPattern q = p;
      q.m(i, k) += dir == Direction::raise ? 1 : -1;
      const int b = basis.index(q);
      if (b < 0) continue;
      const cd amp = dir == Direction::raise ? step_amplitude(p, i, k) : step_amplitude(q, i, k);
      t.emplace_back(b, a, amp);
    }
  }
  SparseOperator out(basis.size(), basis.size());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

cd phi(int a, const GTBasis& basis) { return (!basis.compact() && a == 0) ? cd(0.0, 1.0) : cd(1.0, 0.0); }

int level_index(int level, const GTBasis& basis) {
  if (basis.compact()) return level;
  return level == basis.N() ? 0 : level;
}

void check_level(int k, int hi) {
  if (k < 1 || k > hi) throw std::out_of_range("invalid level");
}

}  // namespace

GTBasis enumerate_patterns(const IrrepLabel& label, bool compact, std::optional<int> window) {
  check_label(label);
  if (!compact && !window) throw std::invalid_argument("noncompact enumeration needs a window");
  GTBasis basis;
  basis.label = label;
  basis.kind = compact ? GTKind::compact : GTKind::windowed;
  if (!compact) basis.window = window;
  enumerate(label, compact ? std::nullopt : window, basis);
  return basis;
}

GTBasis enumerate_nonunitary(const IrrepLabel& label) {
  check_label(label);
  GTBasis basis;
  basis.label = label;
  basis.kind = GTKind::nonunitary;
  enumerate(label, std::nullopt, basis);
  return basis;
}

int gt_level(int a, const GTBasis& basis) {
  if (a < basis.first_index() || a > basis.last_index()) throw std::out_of_range("invalid index");
  if (basis.compact()) return a;
  return a == 0 ? basis.N() : a;
}

SparseOperator sigma_diagonal(int k, const GTBasis& basis) {
  check_level(k, basis.N());
  const int a = level_index(k, basis);
  return level_diagonal(k, basis) * (phi(a, basis) * phi(a, basis));
}

SparseOperator sigma_step(int k, Direction dir, const GTBasis& basis) {
  check_level(k, basis.N() - 1);
  const cd f = phi(level_index(k, basis), basis) * phi(level_index(k + 1, basis), basis);
  return level_step(k, dir, basis) * f;
}

SigmaOperators::SigmaOperators(const GTBasis& basis) : basis_(basis) {
  const int N = basis_.N();
  for (int k = 1; k <= N; ++k) level_ops_[{k, k}] = level_diagonal(k, basis_);
  for (int k = 1; k < N; ++k) {
    level_ops_[{k, k + 1}] = level_step(k, Direction::raise, basis_);
    level_ops_[{k + 1, k}] = level_step(k, Direction::lower, basis_);
  }
  for (int d = 2; d < N; ++d) {
    for (int k = 1; k + d <= N; ++k) {
      level_ops_[{k, k + d}] = commutator(level_ops_.at({k, k + 1}), level_ops_.at({k + 1, k + d}));
      level_ops_[{k + d, k}] = commutator(level_ops_.at({k + d, k + 1}), level_ops_.at({k + 1, k}));
    }
  }
  for (int a = basis_.first_index(); a <= basis_.last_index(); ++a)
    for (int b = basis_.first_index(); b <= basis_.last_index(); ++b)
      z_[{a, b}] = level_ops_.at({gt_level(a, basis_), gt_level(b, basis_)}) * (phi(a, basis_) * phi(b, basis_));
}

const SparseOperator& SigmaOperators::Z(int a, int b) const {
  auto it = z_.find({a, b});
  if (it == z_.end()) throw std::out_of_range("invalid index");
  return it->second;
}

SparseOperator sigma_general(int a, int b, const GTBasis& basis) { return SigmaOperators(basis).Z(a, b); }

SparseOperator represented_unitary_casimir(int beta, const SigmaOperators& ops) {
  const auto& basis = ops.basis();
  const int lo = basis.first_index(), hi = basis.last_index();
  if (beta < 1 || beta > hi - lo + 1) throw std::out_of_range("beta out of range");
  // chain[b] holds sum over paths of length k ending in column index b, starting anywhere, weighted by eta
  const int dim = ops.dim();
  SparseOperator total(dim, dim);
  for (int start = lo; start <= hi; ++start) {
    std::map<int, SparseOperator> cur;
    for (int b = lo; b <= hi; ++b) cur[b] = ops.Z(start, b) * cd(eta(start, start));
    for (int step = 1; step < beta; ++step) {
      std::map<int, SparseOperator> next;
      for (int b = lo; b <= hi; ++b) {
        SparseOperator acc(dim, dim);
        for (int m = lo; m <= hi; ++m) acc += SparseOperator(cur.at(m) * ops.Z(m, b)) * cd(eta(m, m));
        next[b] = acc;
      }
      cur = std::move(next);
    }
    total += cur.at(start);
  }
  return total;
}

double d1_closed_form(const IrrepLabel& label) {
  check_label(label);
  double d = 0.0;
  for (std::size_t i = 0; i + 1 < label.size(); ++i) d += label[i];
  return d - label.back();
}

std::vector<double> d_eigenvalues(const IrrepLabel& label, int n) {
  if (static_cast<int>(label.size()) != n + 1) throw std::invalid_argument("label length must be n+1");
  const GTBasis basis = enumerate_nonunitary(label);
  return {d1_closed_form(label), casimir_scalar_check(2, basis).scalar};
}

CasimirCheck casimir_scalar_check(int beta, const GTBasis& basis) {
  const SigmaOperators ops(basis);
  const DenseOperator D(represented_unitary_casimir(beta, ops));
  const std::vector<int> cols = basis.interior();
  CasimirCheck r;
  if (cols.empty()) return r;
  r.scalar = D(cols[0], cols[0]).real();
  DenseOperator dev = D - DenseOperator::Identity(D.rows(), D.cols()) * r.scalar;
  r.deviation = column_max_norm(dev, cols);
  return r;
}

}  // namespace quaplectic
