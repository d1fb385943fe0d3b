#pragma once

// The Poisson algebra S(g-) of the negative loop algebra g (x) t^-1 C[t^-1].
//
// Generators x_a[-m] are packed as make_gen(m, a). Polynomials on g itself
// (invariants, Casimirs) reuse SymPoly with major index 0.

#include <map>
#include <utility>
#include <vector>

#include "loopalg/kernels.hpp"
#include "loopalg/lie.hpp"
#include "loopalg/poly.hpp"

namespace loopalg {

// Throws std::invalid_argument for depth < 1 or a label outside the algebra.
Gen loop_gen(const LieAlgebraSpec& spec, int label, int depth);

SymPoly sym_generator(const LieAlgebraSpec& spec, int label, int depth);
// x[-m] for a Lie element x.
SymPoly sym_element(const LieAlgebraSpec& spec, const LieElement& x, int depth);
// Element of S(g): the coordinate of basis label a, with major index 0.
SymPoly g_coordinate(int label);

SymPoly sym_multiply(const SymPoly& p, const SymPoly& q, Exec exec = Exec::parallel);
SymPoly sym_power(const SymPoly& p, int k);

// {x_a[-m], x_b[-l]} = [x_a, x_b][-(m+l)], extended by Leibniz.
SymPoly poisson_bracket(const LieAlgebraSpec& spec, const SymPoly& p, const SymPoly& q,
                        Exec exec = Exec::parallel);

// Derivation with d_t(x[-m]) = -m x[-m-1].
SymPoly d_t(const SymPoly& p);
SymPoly d_t_power(const SymPoly& p, int n);

// Quadratic Casimir sum_a x_a x^a of S(g) for the trace form.
SymPoly casimir_invariant(const LieAlgebraSpec& spec);
// Coefficients of det(u - X) on g, X = sum_a x_a M(x^a): entry k-1 is the
// coefficient of u^(r-k), homogeneous of degree k.
std::vector<SymPoly> charpoly_invariants(const LieAlgebraSpec& spec);

// Coefficients of z^0 ... z^(M-1) of i(z)(phi), where i(z) maps g to
// sum_k z^(k-1) g[-k]. phi is a polynomial on g (major index 0).
std::vector<SymPoly> embed_iz(const SymPoly& phi, int cutoff);
// i_{-1}: g -> g[-1].
SymPoly embed_minus_one(const SymPoly& phi);

// Coefficient of u^(r-k) z^(n-1) in det(u - Lambda(z)), Lambda(z) the
// commutative matrix sum_a x_a(z) M(x^a) with x(z) = sum_n z^(n-1) x[-n].
// Keys are (k, n), n = 1..M; identically vanishing families are omitted
// (k = 1 for sl_r).
std::map<std::pair<int, int>, SymPoly> classical_generators(const LieAlgebraSpec& spec, int cutoff);

// phi_s(x[-k]) = x[-k] + s delta_{1k} <h, x>; entry j is the coefficient of s^j.
std::vector<SymPoly> apply_phi_s(const LieAlgebraSpec& spec, const SymPoly& p, const PrincipalTriple& triple);

// pi: S(g-) -> S(z_g(f)-). Output labels index triple.zf_basis.
SymPoly project_pi(const LieAlgebraSpec& spec, const SymPoly& p, const PrincipalTriple& triple);
// pi on a single generator x_a[-m].
SymPoly project_pi_generator(const LieAlgebraSpec& spec, int label, int depth, const PrincipalTriple& triple);

// psi: kills root-space generators, keeps Cartan ones. Also serves as the
// restriction to the Cartan subalgebra for polynomials on g.
SymPoly project_psi(const LieAlgebraSpec& spec, const SymPoly& p);

// All sorted words of exactly `degree` generators with labels from `labels`
// and depths summing to `weight`, in canonical order.
std::vector<Word> graded_basis(const std::vector<int>& labels, int degree, int weight);
std::vector<Word> graded_basis(const LieAlgebraSpec& spec, int degree, int weight);
std::vector<int> all_labels(const LieAlgebraSpec& spec);
std::vector<int> cartan_labels(const LieAlgebraSpec& spec);

// Sum of the diagonal weights of the factors; the adjoint action of a
// Cartan-weight-zero element preserves it.
std::vector<int> word_cartan_weight(const LieAlgebraSpec& spec, const Word& w);

}  // namespace loopalg
