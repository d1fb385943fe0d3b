#pragma once

// Specialization U(g-) -> U(g)^{(x)n} at site points, quadratic Gaudin
// Hamiltonians, and exact matrices on (C^r)^{(x)n}.
//
// Tensor generators are packed as make_gen(site, label) with 1-based sites.

#include <cstddef>
#include <optional>
#include <vector>

#include "loopalg/kernels.hpp"
#include "loopalg/lie.hpp"
#include "loopalg/linalg.hpp"
#include "loopalg/pbw.hpp"

namespace loopalg {

struct SiteConfig {
  std::vector<Rational> points;

  // Throws std::invalid_argument unless points are nonzero and pairwise distinct.
  explicit SiteConfig(std::vector<Rational> pts);
  int sites() const { return static_cast<int>(points.size()); }
};

TensorPoly site_generator(const LieAlgebraSpec& spec, int label, int site);
TensorPoly site_element(const LieAlgebraSpec& spec, const LieElement& x, int site);
// Delta(x) = sum_i x^(i).
TensorPoly diagonal_element(const LieAlgebraSpec& spec, const LieElement& x, int sites);

TensorPoly tensor_product(const LieAlgebraSpec& spec, const TensorPoly& a, const TensorPoly& b,
                          Exec exec = Exec::parallel);
TensorPoly tensor_commutator(const LieAlgebraSpec& spec, const TensorPoly& a, const TensorPoly& b,
                             Exec exec = Exec::parallel);

// Algebra map with x[-m] -> sum_i z_i^(-m) x^(i).
TensorPoly evaluate(const LieAlgebraSpec& spec, const PBWPoly& u, const SiteConfig& cfg, Exec exec = Exec::parallel);

// H_i = sum_{k != i} sum_a x_a^(i) x^{a,(k)} / (z_i - z_k), i 1-based.
// Throws std::invalid_argument for fewer than two sites or i out of range.
TensorPoly quadratic_hamiltonian(const LieAlgebraSpec& spec, const SiteConfig& cfg, int i);

// Defining representation on each site; throws std::length_error when
// r^sites exceeds max_dim.
RatMatrix rep_matrix(const LieAlgebraSpec& spec, const TensorPoly& t, int sites, std::size_t max_dim = 4096);

struct RationalEigenvalue {
  Rational value;
  int multiplicity = 0;
};

struct ApproxEigenvalue {
  double real = 0;
  double imag = 0;
  int multiplicity = 0;
};

struct SpectrumReport {
  UniPoly charpoly;
  std::vector<RationalEigenvalue> rational;     // ascending
  std::vector<ApproxEigenvalue> approximate;    // roots not in Q
  bool diagonalizable = false;                  // squarefree part annihilates the matrix
};

SpectrumReport spectrum(const RatMatrix& m);

struct JointEigenspace {
  std::vector<Rational> eigenvalues;  // one per matrix
  std::size_t dimension = 0;
};

struct JointDiagonalization {
  bool commuting = false;
  bool each_diagonalizable = false;
  bool jointly_diagonalizable = false;
  // Exact joint eigenspaces, present when every eigenvalue is rational.
  std::optional<std::vector<JointEigenspace>> eigenspaces;
};

JointDiagonalization joint_diagonalization(const std::vector<RatMatrix>& family);

}  // namespace loopalg
