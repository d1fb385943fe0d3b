#include "loopalg/talalaev.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace loopalg {

namespace {

Rational binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// m! / (m - j)!
Rational falling(int m, int j) {
  Integer acc = 1;
  for (int i = 0; i < j; ++i) acc *= (m - i);
  return Rational(acc);
}

}  // namespace

DiffPoly DiffPoly::scalar(const Rational& c) {
  DiffPoly p;
  p.add(0, 0, PBWPoly::constant(c));
  return p;
}

DiffPoly DiffPoly::d_z(int power, const Rational& c) {
  DiffPoly p;
  p.add(power, 0, PBWPoly::constant(c));
  return p;
}

void DiffPoly::add(int d_power, int z_power, const PBWPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({d_power, z_power}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWPoly DiffPoly::coeff(int d_power, int z_power) const {
  auto it = terms_.find({d_power, z_power});
  return it == terms_.end() ? PBWPoly{} : it->second;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

DiffPoly diff_multiply(const NormalOrdering& ordering, const DiffPoly& a, const DiffPoly& b, int z_max,
                       bool* truncated) {
  DiffPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    const auto [p, n] = ka;
    for (const auto& [kb, cb] : b.terms()) {
      const auto [q, m] = kb;
      PBWPoly product;  // computed lazily, shared by all Leibniz terms
      for (int j = 0; j <= std::min(p, m); ++j) {
        const int z = n + m - j;
        if (z > z_max) {
          if (truncated) *truncated = true;
          continue;
        }
        if (product.is_zero()) product = ordering.multiply(ca, cb, Exec::serial);
        if (product.is_zero()) break;
        out.add(p + q - j, z, (binomial(p, j) * falling(m, j)) * product);
      }
    }
  }
  return out;
}

MatrixOperator::MatrixOperator(int rank, int factors) : rank_(rank), factors_(factors), size_(1) {
  if (rank < 1 || factors < 1) throw std::invalid_argument("matrix operator needs rank, factors >= 1");
  for (int i = 0; i < factors; ++i) size_ *= static_cast<std::size_t>(rank);
}

void MatrixOperator::add(std::size_t row, std::size_t col, const DiffPoly& value) {
  if (row >= size_ || col >= size_) throw std::out_of_range("matrix operator index out of range");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

DiffPoly MatrixOperator::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? DiffPoly{} : it->second;
}

std::vector<int> MatrixOperator::digits(std::size_t index) const {
  std::vector<int> d(factors_);
  for (int i = factors_ - 1; i >= 0; --i) {
    d[i] = static_cast<int>(index % rank_);
    index /= rank_;
  }
  return d;
}

std::size_t MatrixOperator::index_of(const std::vector<int>& digits) const {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * rank_ + static_cast<std::size_t>(d);
  return idx;
}

MatrixOperator build_L(const LieAlgebraSpec& spec, int cutoff) {
  if (spec.kind() != AlgebraKind::gl) throw std::invalid_argument("L(z) is built for gl_r");
  if (cutoff < 1) throw std::invalid_argument("z cutoff must be >= 1");
  const int r = spec.rank();
  MatrixOperator l(r, 1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      const int label = spec.find_label({i, j, false});
      DiffPoly entry;
      for (int n = 1; n <= cutoff; ++n) entry.add(0, n - 1, pbw_generator(spec, label, n));
      l.add(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1), entry);
    }
  return l;
}

MatrixOperator lift_factor(const MatrixOperator& x, int position, int factors) {
  if (x.factors() != 1) throw std::invalid_argument("lift_factor expects a single-factor operator");
  if (position < 1 || position > factors) throw std::invalid_argument("tensor position out of range");
  MatrixOperator out(x.rank(), factors);
  for (std::size_t other = 0; other < out.size(); ++other) {
    auto d = out.digits(other);
    if (d[position - 1] != 0) continue;  // enumerate the spectator digits once
    for (const auto& [idx, value] : x.entries()) {
      d[position - 1] = static_cast<int>(idx.first);
      const std::size_t row = out.index_of(d);
      d[position - 1] = static_cast<int>(idx.second);
      const std::size_t col = out.index_of(d);
      out.add(row, col, value);
    }
  }
  return out;
}

MatrixOperator minus_d_z(MatrixOperator x) {
  for (std::size_t i = 0; i < x.size(); ++i) x.add(i, i, DiffPoly::d_z(1, -1));
  return x;
}

MatrixOperator antisymmetrizer(int rank) {
  MatrixOperator a(rank, rank);
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  Integer fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  const Rational scale = Rational(1) / Rational(fact);
  do {
    int inversions = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (perm[i] > perm[j]) ++inversions;
    const Rational c = inversions % 2 == 0 ? scale : -scale;
    // P_sigma maps the basis vector with digits b to digits a, a_i = b_sigma(i).
    for (std::size_t col = 0; col < a.size(); ++col) {
      auto b = a.digits(col);
      std::vector<int> d(rank);
      for (int i = 0; i < rank; ++i) d[i] = b[perm[i]];
      a.add(a.index_of(d), col, DiffPoly::scalar(c));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a;
}

MatrixOperator op_multiply(const LieAlgebraSpec& spec, const MatrixOperator& a, const MatrixOperator& b, int z_max,
                           Exec exec) {
  if (a.factors() != b.factors() || a.rank() != b.rank())
    throw std::invalid_argument("operator factor counts differ");
  NormalOrdering ordering(spec, MajorRule::loop_depth);
  // Rows of b, and rows of a grouped for independent row jobs.
  std::vector<std::vector<std::pair<std::size_t, const DiffPoly*>>> b_rows(b.size()), a_rows(a.size());
  for (const auto& [idx, v] : b.entries()) b_rows[idx.first].emplace_back(idx.second, &v);
  for (const auto& [idx, v] : a.entries()) a_rows[idx.first].emplace_back(idx.second, &v);

  std::vector<std::map<std::size_t, DiffPoly>> rows(a.size());
  std::vector<char> truncated(a.size(), 0);
  for_each_index(a.size(), exec, [&](std::size_t i) {
    bool t = false;
    for (const auto& [k, av] : a_rows[i])
      for (const auto& [j, bv] : b_rows[k]) rows[i][j] += diff_multiply(ordering, *av, *bv, z_max, &t);
    truncated[i] = t ? 1 : 0;
  });

  MatrixOperator out(a.rank(), a.factors());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) out.add(i, j, v);
  if (a.truncated() || b.truncated() || std::any_of(truncated.begin(), truncated.end(), [](char c) { return c; }))
    out.mark_truncated();
  return out;
}

DiffPoly op_trace(const MatrixOperator& m) {
  DiffPoly t;
  for (const auto& [idx, v] : m.entries())
    if (idx.first == idx.second) t += v;
  return t;
}

DiffPoly trace_antisymmetrized_product(const LieAlgebraSpec& spec, const MatrixOperator& antisym,
                                       const std::vector<MatrixOperator>& factors, int z_max, Exec exec,
                                       bool* truncated) {
  if (factors.empty()) throw std::invalid_argument("empty operator product");
  for (const auto& f : factors)
    if (f.size() != antisym.size()) throw std::invalid_argument("operator sizes differ");
  NormalOrdering ordering(spec, MajorRule::loop_depth);

  // Tr(A P) = sum_{a,b} A[a][b] P[b][a]: only rows b that are columns of A.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> needed;  // b -> (a, A[a][b])
  for (const auto& [idx, v] : antisym.entries()) needed[idx.second].emplace_back(idx.first, v.coeff(0, 0).coeff(Word{}));

  std::vector<std::vector<std::vector<std::pair<std::size_t, const DiffPoly*>>>> rows_of(factors.size());
  for (std::size_t f = 0; f < factors.size(); ++f) {
    rows_of[f].resize(factors[f].size());
    for (const auto& [idx, v] : factors[f].entries()) rows_of[f][idx.first].emplace_back(idx.second, &v);
  }

  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> jobs(needed.begin(), needed.end());
  std::vector<DiffPoly> partial(jobs.size());
  std::vector<char> trunc(jobs.size(), 0);
  for_each_index(jobs.size(), exec, [&](std::size_t job) {
    bool t = false;
    // Row vector e_b propagated through F_1 ... F_r.
    std::map<std::size_t, DiffPoly> row;
    row[jobs[job].first] = DiffPoly::scalar(1);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      std::map<std::size_t, DiffPoly> next;
      for (const auto& [k, v] : row)
        for (const auto& [j, fv] : rows_of[f][k]) next[j] += diff_multiply(ordering, v, *fv, z_max, &t);
      row = std::move(next);
    }
    DiffPoly acc;
    for (const auto& [a, coeff] : jobs[job].second) {
      auto it = row.find(a);
      if (it == row.end()) continue;
      for (const auto& [key, c] : it->second.terms()) acc.add(key.first, key.second, coeff * c);
    }
    partial[job] = std::move(acc);
    trunc[job] = t ? 1 : 0;
  });
  DiffPoly total;
  for (const auto& p : partial) total += p;
  if (truncated && std::any_of(trunc.begin(), trunc.end(), [](char c) { return c; })) *truncated = true;
  return total;
}

DiffPoly compute_D(const LieAlgebraSpec& spec, int z_order, Exec exec, int extra_cutoff) {
  if (spec.kind() != AlgebraKind::gl) throw std::invalid_argument("the Q family is built for gl_r");
  if (z_order < 1) throw std::invalid_argument("z order must be >= 1");
  const int r = spec.rank();
  const int cutoff = z_order + r + extra_cutoff;
  // At most r-1 derivatives reach any L coefficient, so z-powers above
  // cutoff - 1 never fall back below z_order.
  const int z_max = cutoff - 1;
  MatrixOperator l = build_L(spec, cutoff);
  std::vector<MatrixOperator> factors;
  for (int i = 1; i <= r; ++i) factors.push_back(minus_d_z(lift_factor(l, i, r)));
  DiffPoly d = trace_antisymmetrized_product(spec, antisymmetrizer(r), factors, z_max, exec);
  if (r % 2 == 1) {
    DiffPoly negated;
    for (const auto& [key, c] : d.terms()) negated.add(key.first, key.second, -c);
    d = std::move(negated);
  }
  return d;
}

QFamily compute_Q(const LieAlgebraSpec& spec, int z_order, Exec exec, int extra_cutoff) {
  DiffPoly d = compute_D(spec, z_order, exec, extra_cutoff);
  const int r = spec.rank();
  for (const auto& [key, c] : d.terms()) {
    if (key.first > r) throw std::logic_error("operator has order above rank");
    if (key.first == r && !(key.second == 0 && c == PBWPoly::constant(1)))
      throw std::logic_error("operator is not monic in d_z");
  }
  QFamily q;
  q.rank = r;
  q.z_order = z_order;
  for (int n = 1; n <= z_order; ++n)
    for (int k = 1; k <= r; ++k) {
      PBWPoly coeff = d.coeff(r - k, n - 1);
      auto w = coeff.homogeneous_weight();
      if (!coeff.is_zero() && (!w || *w != static_cast<unsigned>(n + k - 1) || coeff.degree() > k))
        throw std::logic_error("Q coefficient violates weight/degree bookkeeping");
      q.q[{n, k}] = std::move(coeff);
    }
  return q;
}

CommuteReport check_pairwise_commute(const LieAlgebraSpec& spec, const QFamily& q, Exec exec) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  for (auto a = q.q.begin(); a != q.q.end(); ++a)
    for (auto b = a; b != q.q.end(); ++b) pairs.emplace_back(a->first, b->first);
  NormalOrdering ordering(spec, MajorRule::loop_depth);
  CommuteReport report;
  report.entries.resize(pairs.size());
  for_each_index(pairs.size(), exec, [&](std::size_t i) {
    const auto& [x, y] = pairs[i];
    const PBWPoly& u = q.q.at(x);
    const PBWPoly& v = q.q.at(y);
    PBWPoly c = ordering.commutator(u, v, Exec::serial);
    CommuteEntry& e = report.entries[i];
    e.n = x.first;
    e.k = x.second;
    e.m = y.first;
    e.l = y.second;
    e.products = u.size() * v.size();
    e.residual_terms = c.size();
    e.zero = c.is_zero();
  });
  for (const auto& e : report.entries) report.all_zero = report.all_zero && e.zero;
  return report;
}

SymbolReport identify_symbols(const LieAlgebraSpec& spec, const QFamily& q) {
  auto classical = classical_generators(spec, q.z_order);
  SymbolReport report;
  for (const auto& [key, poly] : q.q) {
    const auto [n, k] = key;
    SymbolEntry entry{n, k, 0};
    auto it = classical.find({k, n});
    if (it != classical.end() && !poly.is_zero()) {
      // Only top-degree terms count; the symbol has degree k.
      SymPoly symbol = gr_top(poly);
      if (symbol.homogeneous_degree() == std::optional<unsigned>(static_cast<unsigned>(k))) {
        if (symbol == it->second) entry.sign = 1;
        else if (symbol == -it->second) entry.sign = -1;
      }
    }
    report.entries.push_back(entry);
    auto [s, inserted] = report.sign_by_k.try_emplace(k, entry.sign);
    if (!inserted && s->second != entry.sign) s->second = 0;
  }
  for (const auto& [k, s] : report.sign_by_k) report.matches = report.matches && s != 0;
  return report;
}

}  // namespace loopalg
