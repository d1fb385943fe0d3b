#pragma once

// Exact linear algebra over Q: dense matrices for representations, sparse
// matrices with fraction-free elimination for graded components, and
// univariate polynomials for characteristic polynomials.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "loopalg/rational.hpp"

namespace loopalg {

using RationalVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Rational trace() const;
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& scalar);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row-major sparse matrix; entries are kept nonzero.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Adds to the (row, col) entry; throws std::out_of_range for bad indices.
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, Rational>& row(std::size_t i) const { return row_data_[i]; }
  std::size_t nonzeros() const;

  static SparseRationalMatrix from_dense(const RatMatrix& m);
  // Stacks the rows of `below` under this matrix; column counts must agree.
  void append_rows(const SparseRationalMatrix& below);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> row_data_;
};

struct EliminationResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  // Kernel basis; one vector per free column, with a 1 in that column.
  std::vector<RationalVector> kernel;
};

// Fraction-free elimination with content removal. rank + kernel.size() always
// equals the column count.
EliminationResult eliminate(const SparseRationalMatrix& m);
std::vector<RationalVector> rational_kernel(const SparseRationalMatrix& m);
std::size_t rank(const SparseRationalMatrix& m);
// Rank of the span of the given vectors (all of the same length).
std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors, std::size_t length);

// Solves A x = b exactly; nullopt if inconsistent. Any solution is returned
// when the system is underdetermined (free variables set to zero).
std::optional<RationalVector> solve(const RatMatrix& a, const RationalVector& b);

// Dense polynomial in one variable; coeffs[i] multiplies x^i, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(std::size_t power, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  RatMatrix operator()(const RatMatrix& m) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  // Quotient and remainder; throws std::domain_error on a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Yun's algorithm: returns (factor, multiplicity) with squarefree, pairwise
// coprime, monic factors of positive degree.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// det(x I - m) by the division-free Berkowitz recursion.
UniPoly charpoly(const RatMatrix& m);

}  // namespace loopalg
