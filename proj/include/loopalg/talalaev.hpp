#pragma once

// The determinant-type generating operator for gl_r:
//
//   D = Tr A_r (L(z)^(1) - d_z) ... (L(z)^(r) - d_z),
//   L(z) = sum_{i,j} sum_n z^(n-1) e_ij[-n] (x) e_ji,
//
// normalized to be monic in d_z. Q_{n,k} is the coefficient of
// z^(n-1) d_z^(r-k).

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopalg/kernels.hpp"
#include "loopalg/lie.hpp"
#include "loopalg/loop_sym.hpp"
#include "loopalg/pbw.hpp"

namespace loopalg {

// Differential operator in z: (d_z-power, z-power) -> coefficient in U(g-),
// coefficient written to the left of z^n d_z^p.
class DiffPoly {
 public:
  using Key = std::pair<int, int>;  // (d-power, z-power)

  DiffPoly() = default;
  static DiffPoly scalar(const Rational& c);
  static DiffPoly d_z(int power = 1, const Rational& c = 1);

  void add(int d_power, int z_power, const PBWPoly& coeff);
  const std::map<Key, PBWPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PBWPoly coeff(int d_power, int z_power) const;

  DiffPoly& operator+=(const DiffPoly& other);
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  std::map<Key, PBWPoly> terms_;
};

// a * b using d_z^p z^m = sum_j C(p,j) m!/(m-j)! z^(m-j) d_z^(p-j). Terms with
// z-power above z_max are dropped and reported through `truncated`.
DiffPoly diff_multiply(const NormalOrdering& ordering, const DiffPoly& a, const DiffPoly& b, int z_max,
                       bool* truncated = nullptr);

// Square matrix of size rank^factors acting on (C^r)^{(x)factors}. Row and
// column indices encode multi-indices in base r, first factor most significant.
class MatrixOperator {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  MatrixOperator(int rank, int factors);

  int rank() const { return rank_; }
  int factors() const { return factors_; }
  std::size_t size() const { return size_; }

  void add(std::size_t row, std::size_t col, const DiffPoly& value);
  const std::map<Index, DiffPoly>& entries() const { return entries_; }
  DiffPoly at(std::size_t row, std::size_t col) const;

  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  std::vector<int> digits(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& digits) const;

 private:
  int rank_;
  int factors_;
  std::size_t size_;
  std::map<Index, DiffPoly> entries_;
  bool truncated_ = false;
};

// L(z) with n = 1..cutoff; the e_ji slot (row j, column i) carries
// sum_n z^(n-1) e_ij[-n]. Throws std::invalid_argument unless spec is gl_r.
MatrixOperator build_L(const LieAlgebraSpec& spec, int cutoff);
// X^(i): X acting on tensor factor i (1-based) of `factors`.
MatrixOperator lift_factor(const MatrixOperator& x, int position, int factors);
// X - d_z Id.
MatrixOperator minus_d_z(MatrixOperator x);
// (1/r!) sum_sigma sgn(sigma) P_sigma on (C^r)^{(x)r}.
MatrixOperator antisymmetrizer(int rank);

// Throws std::invalid_argument on factor-count or size mismatch.
MatrixOperator op_multiply(const LieAlgebraSpec& spec, const MatrixOperator& a, const MatrixOperator& b, int z_max,
                           Exec exec = Exec::parallel);
DiffPoly op_trace(const MatrixOperator& m);

// Tr(A_r F_1 ... F_r), computing only the rows of the product that meet the
// support of A_r.
DiffPoly trace_antisymmetrized_product(const LieAlgebraSpec& spec, const MatrixOperator& antisym,
                                       const std::vector<MatrixOperator>& factors, int z_max, Exec exec,
                                       bool* truncated = nullptr);

struct QFamily {
  int rank = 0;
  int z_order = 0;
  std::map<std::pair<int, int>, PBWPoly> q;  // (n, k)

  const PBWPoly& at(int n, int k) const { return q.at({n, k}); }
};

// Builds D with internal z-cutoff z_order + rank (+ extra_cutoff), checks
// monicity and the weight/degree invariants, and extracts Q_{n,k} for
// n <= z_order. Throws std::invalid_argument for z_order < 1 or a non-gl spec.
QFamily compute_Q(const LieAlgebraSpec& spec, int z_order, Exec exec = Exec::parallel, int extra_cutoff = 0);
// The full normalized operator for inspection (same cutoff rules).
DiffPoly compute_D(const LieAlgebraSpec& spec, int z_order, Exec exec = Exec::parallel, int extra_cutoff = 0);

struct CommuteEntry {
  int n = 0, k = 0, m = 0, l = 0;
  bool zero = true;
  std::size_t products = 0;       // term pairs multiplied
  std::size_t residual_terms = 0; // nonzero terms of the commutator
};

struct CommuteReport {
  std::vector<CommuteEntry> entries;
  bool all_zero = true;
};

// [Q_{n,k}, Q_{m,l}] for all (n,k) <= (m,l).
CommuteReport check_pairwise_commute(const LieAlgebraSpec& spec, const QFamily& q, Exec exec = Exec::parallel);

struct SymbolEntry {
  int n = 0, k = 0;
  int sign = 0;  // gr Q_{n,k} = sign * classical(k, n); 0 when no such sign
};

struct SymbolReport {
  std::vector<SymbolEntry> entries;
  std::map<int, int> sign_by_k;  // sign constant in n; 0 if inconsistent
  bool matches = true;
};

// Compares gr Q_{n,k} with the (k, n) determinant generator.
SymbolReport identify_symbols(const LieAlgebraSpec& spec, const QFamily& q);

}  // namespace loopalg
