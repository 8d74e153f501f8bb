// Independent oracles used to pin down derived values before the main
// implementation exists: each computes the same quantity as a library routine
// by a structurally different method, so agreement is evidence and
// disagreement is a hard failure.  Shared by the test suite and the CLI
// selftest battery; grows with the modules it checks.
#pragma once

#include "twistfold/qsymbols.h"
#include "twistfold/tangle.h"

#include <vector>

namespace twistfold::oracles {

// Quantum binomial via the Pascal recurrence
//   {h \ k} = q^k {h-1 \ k} + q^{k-h} {h-1 \ k-1},  {h \ 0} = 1,
// valid for 0 <= k <= h; no division involved.
QLaurent pascal_quantum_binomial(int h, int k);

// Ordinary binomial coefficient C(h, k) for 0 <= k <= h.
Int binomial(int h, int k);

// Reduced colored invariant of the Hopf link at rank N with colors (i, j):
//   sum_{k=0..j} q^{k(2+N)} {N-i \ k} {i \ j-k},
// built on the Pascal-recurrence binomial.
QLaurent hopf_reduced_formula(int N, int i, int j);

// The whole closure pipeline collapsed to q = 1 (so a = s = 1, t = -1) in
// plain integer arithmetic: fold the twist word over an integer weight
// vector with coefficients (-1)^h C(h,k) (top) and (-1)^h C(j-h,k-h)
// (right), then pair with the closure counts of the final configuration.
// Equals any colored_homfly output evaluated at q = 1 with its removed
// sign and monomial restored.
Int closure_sum_at_one(const RationalTangle& tangle, int i, int j, int N,
                       Config start, bool reduced);

// Kauffman bracket of the 2-bridge diagram built from a continued fraction
// by the flip-and-add construction (each group adds horizontal crossings,
// the partial tangle is flipped about the diagonal between groups), closed
// by the denominator closure and divided by one unknot loop.  Returned in
// the engine variable q = A^{-2}; an odd global A-shift is absorbed, so the
// result is one representative of the up-to-monomial Jones class of the
// same link that colored_homfly(cf, 1, 1, 2, ...) evaluates.
QLaurent two_bridge_jones(const std::vector<int>& cf);

// z * P of the right-handed (2, m) torus link, where P is the HOMFLY
// polynomial reduced by one unknot and z = q - q^{-1}, evaluated at
// a = q^N.  Chebyshev-style skein recursion U_m = a z U_{m-1} + a^2 U_{m-2}
// from U_0 = q^{-N} - q^N (z * unknot value) and U_1 = z.
QLaurent torus_zp(int m, int N);

// z * P at a = q^N for the figure-eight knot: P = a^{-2} - 1 + a^2 - z^2.
QLaurent figure_eight_zp(int N);

// z * P at a = q^N for the (right-handed) 5_2 knot:
// P = a^2 + a^4 - a^6 + (a^2 + a^4) z^2.
QLaurent five_two_zp(int N);

// Quantum dimension of the irreducible sl_N representation with partition
// lambda, from the hook-content formula prod [N + col - row] / [hook].
QLaurent quantum_dimension(const std::vector<int>& lambda, int N);

// Unreduced Lambda^i-colored invariant of the (2, m) torus knot or link by
// the cabling-eigenvalue (Rosso-Jones) expansion: the braiding acts on the
// component lambda_c = (2^c 1^{2i-2c}) of Lambda^i (x) Lambda^i with
// eigenvalue sign (-1)^{i-c} and ribbon power kappa(lambda_c)/2, kappa(nu) =
// sum_r nu_r (nu_r + N + 1 - 2r), so the closure evaluates to
//   sum_{c=0..i} (-1)^{m(i-c)} q^{m kappa(lambda_c)/2} dim_q(lambda_c)
// up to one global monomial.  Mirror image of the colored_homfly convention.
QLaurent rosso_jones_two_strand(int m, int i, int N);

// A crossing of a knot diagram in planar-diagram form: the four incident
// arc labels counterclockwise starting from the incoming under-strand arc.
// Arcs are labeled 1..2n in order of traversal.
struct PDCrossing {
  int a, b, c, d;
};

// Jones polynomial of a knot from the Kauffman bracket state sum: bracket
// over all 2^n smoothings, writhe from the arc numbering, result in q with
// q = A^{-4}.  Throws arithmetic_error on malformed codes or when the
// normalized bracket does not live on the knot exponent grid.
QLaurent kauffman_jones(const std::vector<PDCrossing>& code);

// The standard 3-crossing planar diagram of the trefoil.
std::vector<PDCrossing> trefoil_pd();

}  // namespace twistfold::oracles
