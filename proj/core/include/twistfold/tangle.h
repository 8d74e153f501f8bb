// Positive rational tangles: continued-fraction descriptors, the twist-word
// construction that builds T(p,q) by alternating groups of top and right
// twists, per-prefix fraction/crossing-count bookkeeping, and the six-state
// boundary-configuration automaton acted on by the two twist moves.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistfold {

// Invalid user-supplied tangle data (CLI exit code 2).
struct tangle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Continued fractions [a_1,...,a_r], all parts >= 1, value
// a_1 + 1/(a_2 + 1/(... + 1/a_r)) = p/q > 1 with gcd(p,q) = 1.

using Fraction = std::pair<long long, long long>;  // (p, q)

Fraction cf_to_fraction(const std::vector<int>& cf);

// Euclidean expansion; inverse of cf_to_fraction on its canonical image.
// Requires p > q >= 1 and gcd(p,q) = 1.
std::vector<int> fraction_to_cf(long long p, long long q);

// The unique odd-length expansion of the same value: [a_1..a_r] if r is odd,
// otherwise [a_1 .. a_r - 1, 1] (with the a_r = 1 case re-normalized first).
std::vector<int> canonical_odd_cf(const std::vector<int>& cf);

// ---------------------------------------------------------------------------
// Twist words.  Building T(p/q = [a_1,...,a_r]) starts from the trivial
// diagram and applies a_r top twists, then a_{r-1} right twists, alternating,
// ending with the a_1 group (top twists exactly when r is odd).

enum class Move { TopTwist, RightTwist };
using TwistWord = std::vector<Move>;

TwistWord twist_word(const std::vector<int>& cf);

// Crossing counts of the two twist regions, folded over the word from the
// trivial diagram's (left, right) = (0, 1): a top twist sets left += right, a
// right twist sets right += left.  For a word from an odd-length cf the result
// is (p, q); for even length it is (q, p).
std::pair<long long, long long> crossing_counts(const TwistWord& word);

// Fraction of the tangle built by the word: x starts at 0/1, every twist adds
// 1, and x inverts at each direction switch.  Equals cf_to_fraction of the
// generating cf for complete words, and is defined on every prefix.
Fraction word_fraction(const TwistWord& word);

// ---------------------------------------------------------------------------
// Tangle descriptor.

struct RationalTangle {
  std::vector<int> cf;  // empty only for the trivial tangle
  long long p = 0;
  long long q = 1;
  TwistWord word;
};

RationalTangle make_tangle_from_cf(const std::vector<int>& cf);
RationalTangle make_tangle_from_fraction(long long p, long long q);
RationalTangle trivial_tangle();  // T(0,1): empty word

// ---------------------------------------------------------------------------
// Boundary configurations.  The two twist moves act on the six configurations
// by the fixed-point-free involutions
//   TopTwist:   UP <-> UPs,  OP <-> RIs,  RI <-> OPs
//   RightTwist: UP <-> OP,   UPs <-> OPs, RI <-> RIs
// generating a simply transitive S_3 action.

enum class Config { UP, UPs, OP, OPs, RI, RIs };

const char* config_name(Config c);
Config parse_config(const std::string& name);  // throws tangle_error
Config config_step(Config c, Move m);
Config config_walk(Config start, const TwistWord& word);

// Labels of the three marked boundary points, listed (left, mid, right).
// TopTwist swaps the left and mid labels; RightTwist swaps mid and right.
enum class Special { Y, Xminus, Xplus };

const char* special_name(Special s);
std::array<Special, 3> special_points(Config c);

// Permutation parity relative to UP (= twist-word length mod 2): 0 for the
// even class {UP, OPs, RIs}, 1 for the odd class {UPs, OP, RI}.
int config_parity(Config c);

}  // namespace twistfold
