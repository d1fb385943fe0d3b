#include "loopalg/lie.hpp"

#include <regex>
#include <stdexcept>

namespace loopalg {

std::string to_string(AlgebraKind kind) { return kind == AlgebraKind::gl ? "gl" : "sl"; }

std::string BasisLabel::token() const {
  if (cartan) return "H[" + std::to_string(row) + "]";
  return "E[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

LieElement LieElement::basis(int label, const Rational& c) {
  LieElement x;
  x.add(label, c);
  return x;
}

Rational LieElement::coeff(int label) const {
  auto it = coeffs_.find(label);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LieElement::add(int label, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [a, c] : other.coeffs_) add(a, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [a, c] : other.coeffs_) add(a, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [a, v] : coeffs_) v *= c;
  return *this;
}

LieAlgebraSpec LieAlgebraSpec::build(AlgebraKind kind, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (kind == AlgebraKind::sl && rank < 2) throw std::invalid_argument("sl_r needs r >= 2");
  if (rank > 8) throw std::invalid_argument("rank above 8 is not supported");

  LieAlgebraSpec spec;
  spec.kind_ = kind;
  spec.rank_ = rank;
  const int r = rank;
  // Lexicographic on (row, col); for sl_r the Cartan element H[i] takes the
  // slot of E[i,i] and E[r,r] is dropped.
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i != j || kind == AlgebraKind::gl) {
        spec.labels_.push_back({i, j, false});
      } else if (i < r) {
        spec.labels_.push_back({i, i, true});
      }
    }

  for (const auto& l : spec.labels_) {
    RatMatrix m(r, r);
    std::vector<int> w(r, 0);
    if (l.cartan) {
      m(l.row - 1, l.row - 1) = 1;
      m(l.row, l.row) = -1;
    } else {
      m(l.row - 1, l.col - 1) = 1;
      w[l.row - 1] += 1;
      w[l.col - 1] -= 1;
    }
    spec.matrices_.push_back(std::move(m));
    spec.weights_.push_back(std::move(w));
  }

  const int n = spec.dim();
  spec.structure_.resize(static_cast<std::size_t>(n) * n);
  spec.form_ = RatMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const RatMatrix& ma = spec.matrices_[a];
      const RatMatrix& mb = spec.matrices_[b];
      RatMatrix comm = ma * mb - mb * ma;
      LieElement x = spec.from_matrix(comm);
      auto& terms = spec.structure_[static_cast<std::size_t>(a) * n + b];
      for (const auto& [c, v] : x.coeffs()) terms.push_back({c, v});
      spec.form_(a, b) = (ma * mb).trace();
    }
  return spec;
}

std::string LieAlgebraSpec::name() const { return to_string(kind_) + std::to_string(rank_); }

int LieAlgebraSpec::find_label(const BasisLabel& l) const {
  for (int a = 0; a < dim(); ++a)
    if (labels_[a] == l) return a;
  return -1;
}

bool LieAlgebraSpec::is_cartan(int a) const {
  const auto& l = labels_.at(a);
  return l.cartan || l.row == l.col;
}

void LieAlgebraSpec::check_label(int a) const {
  if (a < 0 || a >= dim()) throw std::invalid_argument("basis label out of range for " + name());
}

void LieAlgebraSpec::check_element(const LieElement& x) const {
  for (const auto& [a, c] : x.coeffs()) check_label(a);
}

RatMatrix LieAlgebraSpec::to_matrix(const LieElement& x) const {
  check_element(x);
  RatMatrix m(rank_, rank_);
  for (const auto& [a, c] : x.coeffs()) m += matrices_[a] * c;
  return m;
}

LieElement LieAlgebraSpec::from_matrix(const RatMatrix& m) const {
  if (m.rows() != static_cast<std::size_t>(rank_) || m.cols() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("matrix size does not match the algebra");
  LieElement x;
  const int r = rank_;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) x.add(find_label({i + 1, j + 1, false}), m(i, j));
  if (kind_ == AlgebraKind::gl) {
    for (int i = 0; i < r; ++i) x.add(find_label({i + 1, i + 1, false}), m(i, i));
    return x;
  }
  if (m.trace() != 0) throw std::invalid_argument("matrix is not traceless");
  Rational partial = 0;
  for (int i = 0; i + 1 < r; ++i) {
    partial += m(i, i);
    x.add(find_label({i + 1, i + 1, true}), partial);
  }
  return x;
}

LieAlgebraSpec parse_algebra(const std::string& name) {
  static const std::regex pattern("^(gl|sl)_?([0-9]+)$");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) throw std::invalid_argument("unknown algebra: " + name);
  AlgebraKind kind = match[1] == "gl" ? AlgebraKind::gl : AlgebraKind::sl;
  return LieAlgebraSpec::build(kind, std::stoi(match[2]));
}

LieElement bracket(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y) {
  spec.check_element(x);
  spec.check_element(y);
  LieElement out;
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs())
      for (const auto& t : spec.bracket_basis(a, b)) out.add(t.label, ca * cb * t.coeff);
  return out;
}

Rational form(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y) {
  spec.check_element(x);
  spec.check_element(y);
  Rational acc = 0;
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs()) acc += ca * cb * spec.form(a, b);
  return acc;
}

std::string to_string(const LieAlgebraSpec& spec, const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [a, c] : x.coeffs()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * " + spec.label(a).token();
  }
  return out;
}

std::vector<std::pair<LieElement, LieElement>> dual_basis(const LieAlgebraSpec& spec) {
  const int n = spec.dim();
  std::vector<std::pair<LieElement, LieElement>> pairs;
  for (int a = 0; a < n; ++a) {
    // <x_b, x^a> = delta_ab, i.e. G c = e_a with G the form matrix.
    RationalVector rhs(n);
    rhs[a] = 1;
    auto c = solve(spec.form_matrix(), rhs);
    if (!c) throw std::domain_error("bilinear form is degenerate");
    LieElement dual;
    for (int b = 0; b < n; ++b) dual.add(b, (*c)[b]);
    pairs.emplace_back(LieElement::basis(a), std::move(dual));
  }
  return pairs;
}

PrincipalTriple principal_triple(const LieAlgebraSpec& spec) {
  if (spec.kind() != AlgebraKind::sl) throw std::invalid_argument("principal triple needs sl_r");
  const int r = spec.rank();
  PrincipalTriple t;
  RatMatrix e(r, r), f(r, r), h(r, r);
  for (int i = 0; i + 1 < r; ++i) {
    e(i, i + 1) = 1;
    f(i + 1, i) = (i + 1) * (r - i - 1);
  }
  for (int i = 0; i < r; ++i) h(i, i) = r - 1 - 2 * i;
  t.e = spec.from_matrix(e);
  t.f = spec.from_matrix(f);
  t.h = spec.from_matrix(h);

  RatMatrix power = f;
  for (int k = 1; k < r; ++k) {
    t.zf_basis.push_back(spec.from_matrix(power));
    power = power * f;
  }

  const int n = spec.dim();
  auto coords_of = [&](const LieElement& x) {
    RationalVector v(n);
    for (const auto& [a, c] : x.coeffs()) v[a] = c;
    return v;
  };
  std::vector<RationalVector> span;
  for (const auto& z : t.zf_basis) span.push_back(coords_of(z));
  // Every basis element is an ad_h-eigenvector, so extending by basis
  // elements in label order gives an h-invariant complement.
  for (int a = 0; a < n && static_cast<int>(span.size()) < n; ++a) {
    span.push_back(coords_of(LieElement::basis(a)));
    if (rank_of_vectors(span, n) < span.size()) {
      span.pop_back();
    } else {
      t.v_basis.push_back(LieElement::basis(a));
    }
  }
  for (int a = 0; a < n; ++a)
    if (spec.is_cartan(a)) t.cartan_basis.push_back(LieElement::basis(a));

  // Change of basis: columns are zf_basis then v_basis.
  RatMatrix basis(n, n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) basis(row, col) = span[col][row];
  for (int a = 0; a < n; ++a) {
    RationalVector rhs(n);
    rhs[a] = 1;
    auto c = solve(basis, rhs);
    if (!c) throw std::logic_error("zf_basis and v_basis do not span the algebra");
    t.coords.push_back(std::move(*c));
    t.pairing_f.push_back(form(spec, LieElement::basis(a), t.f));
    t.pairing_h.push_back(form(spec, t.h, LieElement::basis(a)));
  }
  return t;
}

}  // namespace loopalg
