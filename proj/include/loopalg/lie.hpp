#pragma once

// Type A Lie algebras gl_r and sl_r in the matrix-unit basis, with the trace
// form Tr(xy) as invariant bilinear form.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopalg/linalg.hpp"
#include "loopalg/rational.hpp"

namespace loopalg {

enum class AlgebraKind { gl, sl };

std::string to_string(AlgebraKind kind);

// E[row,col] or, for sl_r, the Cartan element H[row] = E[row,row] - E[row+1,row+1].
// Indices are 1-based.
struct BasisLabel {
  int row = 0;
  int col = 0;
  bool cartan = false;

  std::string token() const;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// One structure-constant term: coefficient times basis element `label`.
struct LabelTerm {
  int label;
  Rational coeff;
};

class LieElement {
 public:
  LieElement() = default;
  static LieElement basis(int label, const Rational& c = 1);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int label) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(int label, const Rational& c);
  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& c);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

class LieAlgebraSpec {
 public:
  // Throws std::invalid_argument for r < 1, or r < 2 with kind = sl.
  static LieAlgebraSpec build(AlgebraKind kind, int rank);

  AlgebraKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  std::string name() const;

  const BasisLabel& label(int a) const { return labels_.at(a); }
  // Index of E[i,j] (or H[i] when cartan); -1 if absent.
  int find_label(const BasisLabel& l) const;
  bool is_cartan(int a) const;
  // Diagonal weight eps_i - eps_j of E[i,j]; zero vector on Cartan elements.
  const std::vector<int>& cartan_weight(int a) const { return weights_.at(a); }

  // [x_a, x_b] in the basis; empty when the bracket vanishes.
  const std::vector<LabelTerm>& bracket_basis(int a, int b) const {
    return structure_[static_cast<std::size_t>(a) * labels_.size() + b];
  }
  const Rational& form(int a, int b) const { return form_(a, b); }
  const RatMatrix& form_matrix() const { return form_; }

  // r x r matrix of a basis element / Lie element in the defining representation.
  const RatMatrix& matrix(int a) const { return matrices_.at(a); }
  RatMatrix to_matrix(const LieElement& x) const;
  // Throws std::invalid_argument if m does not lie in the algebra (sl_r needs trace 0).
  LieElement from_matrix(const RatMatrix& m) const;

  void check_label(int a) const;
  void check_element(const LieElement& x) const;

  friend bool operator==(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

 private:
  AlgebraKind kind_ = AlgebraKind::gl;
  int rank_ = 0;
  std::vector<BasisLabel> labels_;
  std::vector<RatMatrix> matrices_;
  std::vector<std::vector<int>> weights_;
  std::vector<std::vector<LabelTerm>> structure_;
  RatMatrix form_;
};

inline LieAlgebraSpec build_algebra(AlgebraKind kind, int rank) { return LieAlgebraSpec::build(kind, rank); }

// Parses "gl2", "sl3", ... ; throws std::invalid_argument.
LieAlgebraSpec parse_algebra(const std::string& name);

LieElement bracket(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y);
Rational form(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y);
std::string to_string(const LieAlgebraSpec& spec, const LieElement& x);

// Pairs (x_a, x^a) with <x_a, x^b> = delta_ab, x_a running over the basis.
std::vector<std::pair<LieElement, LieElement>> dual_basis(const LieAlgebraSpec& spec);

struct PrincipalTriple {
  LieElement e, h, f;
  std::vector<LieElement> zf_basis;      // f, f^2, ..., f^(r-1)
  std::vector<LieElement> v_basis;       // ad_h-eigenvectors completing zf_basis
  std::vector<LieElement> cartan_basis;
  // coords[a] = coordinates of basis element a over zf_basis followed by v_basis.
  std::vector<RationalVector> coords;
  // pairing_f[a] = <x_a, f>.
  std::vector<Rational> pairing_f;
  // pairing_h[a] = <h, x_a>.
  std::vector<Rational> pairing_h;
};

// Throws std::invalid_argument unless spec.kind() == sl.
PrincipalTriple principal_triple(const LieAlgebraSpec& spec);

}  // namespace loopalg
