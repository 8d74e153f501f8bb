// The core recursion: the twelve twist rules transform a weight-indexed
// Poincaré polynomial as top or right twists are added to a positive rational
// tangle, yielding the Poincaré polynomial of its colored complex.  A state
// holds, for each weight k = 0..j, the coefficient polynomial of the basic
// object X_k in the variables a, q, s, t.
#pragma once

#include "twistfold/qsymbols.h"
#include "twistfold/tangle.h"

#include <vector>

namespace twistfold {

struct ComplexState {
  int color_j = 0;
  Config config = Config::UP;
  std::vector<LaurentPoly4> coeffs;  // indexed by weight, size color_j + 1

  friend bool operator==(const ComplexState&, const ComplexState&) = default;
};

// The start state: X_0 with coefficient 1, all higher weights 0.
ComplexState initial_state(int j, Config start);

// One twist move: new X_h = Σ_k rule_coefficient(config, m, j, k, h) · old
// X_k, with the config stepped by the automaton.  T-rules populate weights
// h >= k, R-rules h <= k.
ComplexState apply_twist(const ComplexState& state, Move m);

ComplexState fold_word(ComplexState state, const TwistWord& word);

// Folds the tangle's twist word over the start state.
ComplexState poincare_polynomial(const RationalTangle& tangle, int j,
                                 Config start);

// Per-weight generator counts: each coefficient evaluated at a=q=s=t=1.
std::vector<Int> generator_count(const ComplexState& state);

// ---------------------------------------------------------------------------
// The rule laws themselves, exposed for the closure derivations and the
// structure tests.  The coefficient of old X_k in new X_h is
//   monomial(rule_monomial(source, m, j, k, h)) × B
// where B = {h \ k}^+ for a top twist and {j-h \ k-h}^- for a right twist.
// The monomial exponents are affine in h for fixed k (the slide direction),
// which the tests assert rather than tabulate.

ExpVec rule_monomial(Config source, Move m, int j, int k, int h);
LaurentPoly4 rule_coefficient(Config source, Move m, int j, int k, int h);

// Negative-control hook for the selftest battery: when enabled, exactly one
// rule coefficient (top twist from UP, k=0, h=1) is multiplied by q, which
// must make the battery's exact checks fail.
void set_rule_corruption(bool enabled);
bool rule_corruption_enabled();

}  // namespace twistfold
