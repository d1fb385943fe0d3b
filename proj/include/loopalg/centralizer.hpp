#pragma once

// Centralizers and invariants on finite graded pieces.
//
// Classical components S_{d,w} are spanned by monomials of exactly d
// generators with depth sum w; quantum components U_{<=d,w} by PBW monomials
// of degree 1..d and depth sum w.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loopalg/kernels.hpp"
#include "loopalg/lie.hpp"
#include "loopalg/loop_sym.hpp"
#include "loopalg/pbw.hpp"

namespace loopalg {

struct ComponentIndex {
  int degree = 0;
  int weight = 0;
  friend bool operator==(const ComponentIndex&, const ComponentIndex&) = default;
};

struct ComponentReport {
  ComponentIndex index;
  std::size_t columns = 0;
  std::size_t kernel_dim = 0;
  std::size_t expected_dim = 0;
  std::vector<SymPoly> classical_kernel;
  std::vector<PBWPoly> quantum_kernel;
  bool verdict = false;  // kernel_dim == expected_dim
  // Cross-checks, filled by run_centralizer for some targets.
  std::optional<bool> kernel_commutes;
  std::optional<bool> kernel_in_subalgebra;

  bool pass() const {
    return verdict && kernel_commutes.value_or(true) && kernel_in_subalgebra.value_or(true);
  }
};

// S-bar_1 = sum_a x_a[-1] x^a[-1] in S(g-), and its PBW counterpart S_1.
SymPoly s1_bar(const LieAlgebraSpec& spec);
PBWPoly s1_quantum(const LieAlgebraSpec& spec);

// Generators of A with weight <= max_weight: the nonzero determinant
// coefficients (k, n).
std::vector<SymPoly> subalgebra_generators(const LieAlgebraSpec& spec, int max_weight);

struct SpanReport {
  std::size_t dimension = 0;
  std::vector<SymPoly> basis;  // independent products
};

// Span of all products of generators in S_{d,w}. Throws std::invalid_argument
// for a generator that is not homogeneous in degree and weight.
SpanReport subalgebra_dim(const std::vector<SymPoly>& generators, ComponentIndex idx);

// Kernel of {b, .} on S_{d,w}. Blocks by Cartan weight when b has weight zero.
ComponentReport ad_kernel_classical(const LieAlgebraSpec& spec, const SymPoly& b, ComponentIndex idx,
                                    std::size_t expected_dim, Exec exec = Exec::parallel);

// Kernel of [b, .] on U_{<=d,w}.
ComponentReport ad_kernel_quantum(const LieAlgebraSpec& spec, const PBWPoly& b, ComponentIndex idx,
                                  std::size_t expected_dim, Exec exec = Exec::parallel);

// x.(y[-m]) = [x, y][-m] extended to S(g-) as a derivation.
SymPoly sym_adjoint_action(const LieAlgebraSpec& spec, const LieElement& x, const SymPoly& p);

struct InvariantReport {
  ComponentIndex index;
  std::size_t dimension = 0;
  std::vector<PBWPoly> basis;
  std::size_t expected_dim = 0;  // sum over d' <= d of dim S(g-)^g_{d',w}
  bool verdict = false;
};

// Joint kernel of the adjoint action of all basis elements on U_{<=d,w}.
InvariantReport invariant_subspace(const LieAlgebraSpec& spec, ComponentIndex idx, Exec exec = Exec::parallel);
// Dimension of S(g-)^g_{d,w}.
std::size_t classical_invariant_dim(const LieAlgebraSpec& spec, ComponentIndex idx, Exec exec = Exec::parallel);

enum class CentralizerTarget { s1bar, h1, s1_quantum, invariants };

std::string to_string(CentralizerTarget t);
// Accepts s1bar, h1, S1quantum, invariants; throws std::invalid_argument.
CentralizerTarget parse_target(const std::string& name);

struct CentralizerRun {
  CentralizerTarget target = CentralizerTarget::s1bar;
  std::vector<ComponentReport> rows;
  std::vector<InvariantReport> invariant_rows;
  bool pass = true;
};

// All components with 1 <= d <= max_degree, d <= w <= max_weight (quantum
// and invariant targets: 1 <= w <= max_weight), ordered by (d, w).
// s1bar, h1 and s1_quantum need sl_r. Throws std::invalid_argument otherwise.
CentralizerRun run_centralizer(const LieAlgebraSpec& spec, CentralizerTarget target, int max_degree, int max_weight,
                               Exec exec = Exec::parallel);

struct PiSpanRow {
  ComponentIndex index;
  std::size_t span_dim = 0;    // dim of pi(A) meet S(z_g(f)-)_{d,w}
  std::size_t target_dim = 0;  // dim S(z_g(f)-)_{d,w}
  bool verdict = false;
};

struct PiGradeRow {
  int grade = 0;
  std::size_t products = 0;    // multisets of A-generators
  std::size_t image_rank = 0;
  std::size_t target_dim = 0;  // monomials of S(z_g(f)-) in this grade
  bool verdict = false;
};

struct PsiRow {
  int k = 0;  // invariant index, degree k
  int z_power = 0;
  bool verdict = false;
};

struct Section3Report {
  bool phi_s_identity = false;  // phi_s(S-bar_1) = S-bar_1 + 2s h[-1] + s^2 <h,h>
  bool phi1_at_h = false;       // s^2 coefficient equals Phi_1(h)
  Rational h_norm;              // <h, h>
  bool pi_s1bar = false;        // pi(S-bar_1) = 2 f[-1]
  bool pi_dt_commute = false;
  std::size_t pi_dt_checked = 0;
  std::vector<PiGradeRow> pi_grades;
  std::vector<PiSpanRow> pi_span;
  std::vector<PsiRow> psi;
  bool pass = false;
};

// Throws std::invalid_argument unless spec is sl_r.
Section3Report verify_section3(const LieAlgebraSpec& spec, int max_degree = 3, int max_weight = 6, int dt_depth = 5,
                               int z_order = 3, Exec exec = Exec::parallel);

// Grade of a generator of S(z_g(f)-) or of A: depth minus half the ad_h
// eigenvalue, so f^j[-m] has grade m + j.
int twisted_grade(const Word& zf_word);

// Values of the coordinate functions <., x_a> substituted into a polynomial on g.
Rational evaluate_on_pairing(const SymPoly& phi, const std::vector<Rational>& pairing);

}  // namespace loopalg
