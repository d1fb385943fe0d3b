#include "loopalg/gaudin.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace loopalg {

SiteConfig::SiteConfig(std::vector<Rational> pts) : points(std::move(pts)) {
  if (points.empty()) throw std::invalid_argument("at least one site is required");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == 0) throw std::invalid_argument("site points must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("site points must be pairwise distinct");
  }
}

TensorPoly site_generator(const LieAlgebraSpec& spec, int label, int site) {
  spec.check_label(label);
  if (site < 1) throw std::invalid_argument("sites are 1-based");
  return TensorPoly::monomial(Word{make_gen(static_cast<unsigned>(site), static_cast<unsigned>(label))});
}

TensorPoly site_element(const LieAlgebraSpec& spec, const LieElement& x, int site) {
  TensorPoly t;
  for (const auto& [a, c] : x.coeffs()) t += c * site_generator(spec, a, site);
  return t;
}

TensorPoly diagonal_element(const LieAlgebraSpec& spec, const LieElement& x, int sites) {
  TensorPoly t;
  for (int i = 1; i <= sites; ++i) t += site_element(spec, x, i);
  return t;
}

TensorPoly tensor_product(const LieAlgebraSpec& spec, const TensorPoly& a, const TensorPoly& b, Exec exec) {
  return NormalOrdering(spec, MajorRule::tensor_site).multiply(a, b, exec);
}

TensorPoly tensor_commutator(const LieAlgebraSpec& spec, const TensorPoly& a, const TensorPoly& b, Exec exec) {
  return NormalOrdering(spec, MajorRule::tensor_site).commutator(a, b, exec);
}

TensorPoly evaluate(const LieAlgebraSpec& spec, const PBWPoly& u, const SiteConfig& cfg, Exec exec) {
  NormalOrdering ordering(spec, MajorRule::tensor_site);
  auto terms = term_pointers(u);
  return TensorPoly(accumulate(terms.size(), exec, [&](std::size_t t, TermMap& out) {
    const auto& [w, c] = *terms[t];
    TermMap acc;
    acc.emplace(Word{}, c);
    for (Gen g : w) {
      const unsigned m = gen_major(g);
      const unsigned label = gen_label(g);
      TermMap next;
      for (int i = 1; i <= cfg.sites(); ++i) {
        Rational weight = 1;
        for (unsigned k = 0; k < m; ++k) weight /= cfg.points[i - 1];
        const Gen site_gen = make_gen(static_cast<unsigned>(i), label);
        for (const auto& [aw, ac] : acc) ordering.right_multiply(aw, site_gen, ac * weight, next);
      }
      acc = std::move(next);
    }
    merge_into(out, acc);
  }));
}

TensorPoly quadratic_hamiltonian(const LieAlgebraSpec& spec, const SiteConfig& cfg, int i) {
  const int n = cfg.sites();
  if (n < 2) throw std::invalid_argument("quadratic Hamiltonians need at least two sites");
  if (i < 1 || i > n) throw std::invalid_argument("site index out of range");
  const auto pairs = dual_basis(spec);
  TensorPoly h;
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    const Rational scale = 1 / (cfg.points[i - 1] - cfg.points[k - 1]);
    for (const auto& [x, dual] : pairs)
      h += scale * tensor_product(spec, site_element(spec, x, i), site_element(spec, dual, k), Exec::serial);
  }
  return h;
}

namespace {

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace

RatMatrix rep_matrix(const LieAlgebraSpec& spec, const TensorPoly& t, int sites, std::size_t max_dim) {
  if (sites < 1) throw std::invalid_argument("sites must be >= 1");
  const std::size_t r = static_cast<std::size_t>(spec.rank());
  std::size_t dim = 1;
  for (int i = 0; i < sites; ++i) {
    dim *= r;
    if (dim > max_dim) throw std::length_error("representation dimension exceeds the configured bound");
  }
  RatMatrix out(dim, dim);
  for (const auto& [w, c] : t.terms()) {
    std::vector<RatMatrix> per_site(sites, RatMatrix::identity(r));
    for (Gen g : w) {
      const int site = static_cast<int>(gen_major(g));
      if (site < 1 || site > sites) throw std::invalid_argument("tensor generator site out of range");
      per_site[site - 1] = per_site[site - 1] * spec.matrix(static_cast<int>(gen_label(g)));
    }
    RatMatrix term = per_site[0];
    for (int i = 1; i < sites; ++i) term = kronecker(term, per_site[i]);
    out += term * c;
  }
  return out;
}

namespace {

std::vector<std::complex<double>> numeric_roots(const UniPoly& monic) {
  const int d = monic.degree();
  if (d < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -monic.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

// Leading coefficient of the primitive integer multiple of p.
Integer integer_leading(const UniPoly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational lead = p.leading() * lcm / g;
  return abs(lead.get_num());
}

}  // namespace

SpectrumReport spectrum(const RatMatrix& m) {
  SpectrumReport report;
  report.charpoly = charpoly(m);
  UniPoly squarefree = UniPoly::monomial(0);
  for (auto [factor, mult] : squarefree_decomposition(report.charpoly)) {
    squarefree = squarefree * factor;
    UniPoly rest = factor;
    const Integer lead = integer_leading(factor);
    for (const auto& root : numeric_roots(factor)) {
      if (std::abs(root.imag()) > 1e-6 * (1 + std::abs(root.real()))) continue;
      const double scaled = root.real() * lead.get_d();
      Rational candidate(Integer(static_cast<long>(std::llround(scaled))), lead);
      candidate.canonicalize();
      if (rest.degree() >= 1 && rest(candidate) == 0) {
        rest = UniPoly::divmod(rest, UniPoly({-candidate, Rational(1)})).first;
        report.rational.push_back({candidate, mult});
      }
    }
    for (const auto& root : numeric_roots(rest.monic()))
      report.approximate.push_back({root.real(), root.imag(), mult});
  }
  std::sort(report.rational.begin(), report.rational.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  std::sort(report.approximate.begin(), report.approximate.end(), [](const auto& a, const auto& b) {
    return a.real != b.real ? a.real < b.real : a.imag < b.imag;
  });
  report.diagonalizable = squarefree(m).is_zero();
  return report;
}

JointDiagonalization joint_diagonalization(const std::vector<RatMatrix>& family) {
  JointDiagonalization out;
  if (family.empty()) return out;
  const std::size_t n = family.front().rows();
  out.commuting = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!(family[i] * family[j] == family[j] * family[i])) out.commuting = false;

  std::vector<SpectrumReport> spectra;
  out.each_diagonalizable = true;
  bool all_rational = true;
  for (const auto& m : family) {
    spectra.push_back(spectrum(m));
    out.each_diagonalizable = out.each_diagonalizable && spectra.back().diagonalizable;
    all_rational = all_rational && spectra.back().approximate.empty();
  }
  // Commuting diagonalizable matrices are simultaneously diagonalizable.
  out.jointly_diagonalizable = out.commuting && out.each_diagonalizable;
  if (!out.commuting || !all_rational) return out;

  // Refine the whole space by the eigenspaces of each matrix in turn. Each
  // subspace is stored as a basis matrix B (columns); the restriction C of M
  // satisfies M B = B C.
  struct Piece {
    RatMatrix basis;
    std::vector<Rational> eigenvalues;
  };
  std::vector<Piece> pieces{{RatMatrix::identity(n), {}}};
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const RatMatrix& m = family[idx];
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      const std::size_t k = piece.basis.cols();
      RatMatrix mb = m * piece.basis;
      RatMatrix c(k, k);
      for (std::size_t col = 0; col < k; ++col) {
        RationalVector rhs(n);
        for (std::size_t row = 0; row < n; ++row) rhs[row] = mb(row, col);
        auto x = solve(piece.basis, rhs);
        if (!x) throw std::logic_error("subspace is not invariant under a commuting matrix");
        for (std::size_t row = 0; row < k; ++row) c(row, col) = (*x)[row];
      }
      for (const auto& ev : spectra[idx].rational) {
        RatMatrix shifted = c - RatMatrix::identity(k) * ev.value;
        auto kernel = rational_kernel(SparseRationalMatrix::from_dense(shifted));
        if (kernel.empty()) continue;
        RatMatrix sub(n, kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j)
          for (std::size_t row = 0; row < n; ++row) {
            Rational acc = 0;
            for (std::size_t l = 0; l < k; ++l) acc += piece.basis(row, l) * kernel[j][l];
            sub(row, j) = acc;
          }
        Piece p{std::move(sub), piece.eigenvalues};
        p.eigenvalues.push_back(ev.value);
        next.push_back(std::move(p));
      }
    }
    pieces = std::move(next);
  }
  std::vector<JointEigenspace> spaces;
  std::size_t total = 0;
  for (const auto& p : pieces) {
    spaces.push_back({p.eigenvalues, p.basis.cols()});
    total += p.basis.cols();
  }
  out.eigenspaces = std::move(spaces);
  out.jointly_diagonalizable = out.jointly_diagonalizable && total == n;
  return out;
}

}  // namespace loopalg
