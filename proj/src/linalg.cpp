#include "loopalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopalg {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& scalar) {
  for (auto& q : data_) q *= scalar;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

void SparseRationalMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (value == 0) return;
  auto& r = row_data_[row];
  auto [it, inserted] = r.try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  }
}

Rational SparseRationalMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("sparse matrix index out of range");
  auto it = row_data_[row].find(col);
  return it == row_data_[row].end() ? Rational(0) : it->second;
}

std::size_t SparseRationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row_data_) n += r.size();
  return n;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const RatMatrix& m) {
  SparseRationalMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.add(i, j, m(i, j));
  return s;
}

void SparseRationalMatrix::append_rows(const SparseRationalMatrix& below) {
  if (below.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  row_data_.insert(row_data_.end(), below.row_data_.begin(), below.row_data_.end());
  rows_ += below.rows_;
}

namespace {

// Sparse integer row, sorted by column.
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const std::map<std::size_t, Rational>& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer scaled = v.get_num() * (lcm / v.get_den());
    out.emplace_back(c, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

// row <- (lead/g) * row - (coeff/g) * pivot, g = gcd(lead, coeff); clears the
// column where row carries `coeff` and the pivot carries its leading entry.
void reduce_by(IntRow& row, const Integer& row_coeff, const IntRow& pivot) {
  const Integer& lead = pivot.front().second;
  Integer g = gcd(lead, row_coeff);
  Integer a = lead / g;
  Integer b = row_coeff / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

const Integer* find_col(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

EliminationResult eliminate(const SparseRationalMatrix& m) {
  // Sparsest rows first keeps fill-in down.
  std::vector<std::size_t> order(m.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });

  std::map<std::size_t, IntRow> pivots;  // leading column -> row
  for (std::size_t idx : order) {
    if (m.row(idx).empty()) continue;
    IntRow row = to_int_row(m.row(idx));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Integer coeff = row.front().second;
      reduce_by(row, coeff, it->second);
      make_primitive(row);
    }
    if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
  }

  // Back substitution to reduced echelon form, highest pivot first. Rows
  // already processed are reduced, so eliminating one entry never introduces
  // another pivot column.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    IntRow& row = it->second;
    std::vector<std::size_t> targets;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (pivots.count(row[k].first)) targets.push_back(row[k].first);
    for (std::size_t col : targets) {
      const IntRow& pivot = pivots.at(col);
      const Integer* entry = find_col(row, col);
      if (entry == nullptr) continue;
      Integer coeff = *entry;
      reduce_by(row, coeff, pivot);
      make_primitive(row);
    }
  }

  EliminationResult result;
  result.rank = pivots.size();
  for (const auto& [c, row] : pivots) result.pivot_columns.push_back(c);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : result.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (const auto& [c, row] : pivots) {
      const Integer* a = find_col(row, free);
      if (a == nullptr) continue;
      v[c] = Rational(-*a, row.front().second);
      v[c].canonicalize();
    }
    result.kernel.push_back(std::move(v));
  }
  return result;
}

std::vector<RationalVector> rational_kernel(const SparseRationalMatrix& m) { return eliminate(m).kernel; }

std::size_t rank(const SparseRationalMatrix& m) { return eliminate(m).rank; }

std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors, std::size_t length) {
  SparseRationalMatrix m(vectors.size(), length);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < length; ++j) m.add(i, j, vectors[i][j]);
  return rank(m);
}

std::optional<RationalVector> solve(const RatMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  // Gauss-Jordan on the augmented matrix.
  std::size_t n = a.rows(), m = a.cols();
  RatMatrix aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(i, j);
    aug(i, m) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j <= m; ++j) std::swap(aug(p, j), aug(row, j));
    Rational inv = 1 / aug(row, col);
    for (std::size_t j = 0; j <= m; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      Rational f = aug(i, col);
      for (std::size_t j = 0; j <= m; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (aug(i, m) != 0) return std::nullopt;
  RationalVector x(m);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug(i, m);
  return x;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(std::size_t power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatMatrix UniPoly::operator()(const RatMatrix& m) const {
  if (!m.square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  RatMatrix acc(m.rows(), m.cols());
  RatMatrix id = RatMatrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> v = coeffs_;
  Rational lc = leading();
  for (auto& c : v) c /= lc;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> quot(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() < 1) return out;
  UniPoly f = p.monic();
  UniPoly df = f.derivative();
  UniPoly a = UniPoly::gcd(f, df);
  UniPoly b = UniPoly::divmod(f, a).first;
  UniPoly c = UniPoly::divmod(df, a).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    UniPoly g = UniPoly::gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = UniPoly::divmod(b, g).first;
    c = UniPoly::divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UniPoly charpoly(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UniPoly::monomial(0);
  // Berkowitz: v holds coefficients of the characteristic polynomial of the
  // leading principal submatrix, highest degree first.
  std::vector<Rational> v{1, -m(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // Partition the (k+1)x(k+1) leading block as [[A, R], [C, a]] with A kxk.
    std::vector<Rational> col(k), row(k);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = m(i, k);
      row[i] = m(k, i);
    }
    // Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
    std::vector<Rational> t(k + 2);
    t[0] = 1;
    t[1] = -m(k, k);
    std::vector<Rational> power = col;  // A^j C
    for (std::size_t j = 0; j < k; ++j) {
      Rational dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += row[i] * power[i];
      t[j + 2] = -dot;
      std::vector<Rational> next(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l)
          if (m(i, l) != 0) next[i] += m(i, l) * power[l];
      power = std::move(next);
    }
    std::vector<Rational> w(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] += t[i - j] * v[j];
    v = std::move(w);
  }
  std::reverse(v.begin(), v.end());
  return UniPoly(std::move(v));
}

}  // namespace loopalg
