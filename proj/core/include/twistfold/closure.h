// Denominator-closure evaluation: the closed-up basic webs as ground-ring
// elements (rank-N and stable forms) and the assembly of colored HOMFLY
// polynomials of 2-bridge links from a folded twist state at t = -1.
#pragma once

#include "twistfold/qsymbols.h"
#include "twistfold/tangle.h"
#include "twistfold/twist.h"

#include <stdexcept>
#include <string>

namespace twistfold {

class closure_error : public std::runtime_error {
 public:
  explicit closure_error(const std::string& what) : std::runtime_error(what) {}
};

// Closure value of the weight-k basic web in the UP family at rank N with
// colors j <= i <= N:  {N-k \ i} {j \ k} {N \ j}.
// Throws closure_error unless 0 <= k <= j <= i <= N.
QLaurent closed_up_value(int i, int j, int k, int N);

// Closure value for any boundary configuration, a product of quantum
// binomials.  Three distinct tables exist (UP, OP, and RI, the quarter-turn
// of UP with the weight read from the other end); a star on the
// configuration records the parity of the twist word on the boundary, not a
// different closed diagram, so each starred family shares its partner's
// table at the same weight.
QLaurent closed_web_value(Config c, int i, int j, int k, int N);

// Closure value divided by {N \ i}, the invariant of the i-colored unknot;
// always a genuine Laurent polynomial.
QLaurent reduced_closed_web_value(Config c, int i, int j, int k, int N);

// Reduced stable closure of the UP family:
//   {-k \ j-k}_a prod_{l=1..k} (a s^-1 q^{-j-l+1} - a^-1 s q^{j+l-1})
//                            / (q^l - q^-l).
// Specializing a = q^N, s = q^{i-j} gives {N-k \ j-k} {N-i \ k}.
StablePoly reduced_stable_closure(int j, int k);

// Reduced stable closure for any boundary configuration; specializing at
// a = q^N, s = q^{i-j} reproduces reduced_closed_web_value.
StablePoly reduced_stable_web(Config c, int j, int k);

// Up-to-(+/- monomial) class representative: lowest exponent zero, positive
// leading coefficient.  raw == sign * q^shift * value.
struct LinkValue {
  QLaurent value;
  int shift = 0;
  int sign = 1;

  friend bool operator==(const LinkValue&, const LinkValue&) = default;
};

LinkValue normalize_link_value(const QLaurent& raw);

// Colored HOMFLY polynomial of the denominator closure of the tangle with
// colors (i, j) and rank N: fold the twist state of the odd-length
// continued-fraction expansion from the start configuration, set t = -1,
// a = q^N, s = q^{i-j}, and pair the weight coefficients with the closure
// values of the final configuration.  The two expansions of one fraction
// therefore give identical values.  The start configuration selects the
// boundary orientation; for a knot b(p, q') presented by the odd expansion
// of p/q (so q * q' = 1 mod p), UP is the coherent start when q' is odd and
// OP when q' is even.
LinkValue colored_homfly(const RationalTangle& tangle, int i, int j, int N,
                         Config start, bool reduced);

// Color-stable HOMFLY polynomial: the same pipeline with a and s kept
// symbolic against the reduced stable closure family.
// raw == a^shift_a s^shift_s * value; no q- or sign-normalization applied.
struct StableValue {
  StablePoly value;
  int shift_a = 0;
  int shift_s = 0;

  friend bool operator==(const StableValue&, const StableValue&) = default;
};

StableValue color_stable_homfly(const RationalTangle& tangle, int j,
                                Config start);

}  // namespace twistfold
