#include "twistfold/twist.h"

#include <atomic>
#include <map>
#include <tuple>

namespace twistfold {

namespace {

std::atomic<bool> g_corrupt_rules{false};

}  // namespace

void set_rule_corruption(bool enabled) { g_corrupt_rules = enabled; }
bool rule_corruption_enabled() { return g_corrupt_rules; }

ExpVec rule_monomial(Config source, Move m, int j, int k, int h) {
  // Exponent vectors {a, q, s, t}.
  if (m == Move::TopTwist) {
    switch (source) {
      case Config::UP:  return {0, k * k + h, k, -h};
      case Config::UPs: return {0, k * k + h, h, -h};
      case Config::OPs: return {k, k * (k - 2 * j) + h, h - k, -h};
      case Config::OP:  return {k, k * (k - 2 * j) + h, -k, -h};
      case Config::RI:  return {h, k * k + h * (1 - 2 * j), k - h, -h};
      case Config::RIs: return {h, k * k + h * (1 - 2 * j), -h, -h};
    }
  } else {
    switch (source) {
      case Config::UP:  return {h, k * (2 * j - k) + h * (1 - 2 * j), k - h, -h};
      case Config::UPs: return {h, k * (2 * j - k) + h * (1 - 2 * j), -h, -h};
      case Config::OP:  return {k, -k * k + h, h - k, -h};
      case Config::OPs: return {k, -k * k + h, -k, -h};
      case Config::RI:  return {0, -k * (k - 2 * j) + h, k, -h};
      case Config::RIs: return {0, -k * (k - 2 * j) + h, h, -h};
    }
  }
  throw arithmetic_error("invalid twist rule");
}

LaurentPoly4 rule_coefficient(Config source, Move m, int j, int k, int h) {
  // Memo keyed by (corruption, rule, j, k, h); rule ids are dense.
  using Key = std::tuple<bool, int, int, int, int>;
  thread_local std::map<Key, LaurentPoly4> memo;
  const int rule_id =
      static_cast<int>(source) * 2 + (m == Move::RightTwist ? 1 : 0);
  const Key key{g_corrupt_rules.load(), rule_id, j, k, h};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  QLaurent binom = (m == Move::TopTwist) ? quantum_binomial_plus(h, k)
                                         : quantum_binomial_minus(j - h, k - h);
  ExpVec mono = rule_monomial(source, m, j, k, h);
  LaurentPoly4 coeff;
  for (const auto& [e, c] : binom.terms())
    coeff.add_term(mono + ExpVec{0, e, 0, 0}, c);
  if (g_corrupt_rules && m == Move::TopTwist && source == Config::UP &&
      k == 0 && h == 1)
    coeff = coeff.shifted(ExpVec{0, 1, 0, 0});
  memo.emplace(key, coeff);
  return coeff;
}

ComplexState initial_state(int j, Config start) {
  if (j < 1) throw tangle_error("color j must be >= 1");
  ComplexState s;
  s.color_j = j;
  s.config = start;
  s.coeffs.assign(static_cast<std::size_t>(j) + 1, LaurentPoly4());
  s.coeffs[0] = LaurentPoly4(Int(1));
  return s;
}

ComplexState apply_twist(const ComplexState& state, Move m) {
  const int j = state.color_j;
  ComplexState out;
  out.color_j = j;
  out.config = config_step(state.config, m);
  out.coeffs.assign(static_cast<std::size_t>(j) + 1, LaurentPoly4());
  for (int k = 0; k <= j; ++k) {
    const LaurentPoly4& xk = state.coeffs[static_cast<std::size_t>(k)];
    if (xk.is_zero()) continue;
    const int h_lo = (m == Move::TopTwist) ? k : 0;
    const int h_hi = (m == Move::TopTwist) ? j : k;
    for (int h = h_lo; h <= h_hi; ++h)
      out.coeffs[static_cast<std::size_t>(h)] +=
          xk * rule_coefficient(state.config, m, j, k, h);
  }
  return out;
}

ComplexState fold_word(ComplexState state, const TwistWord& word) {
  for (Move m : word) state = apply_twist(state, m);
  return state;
}

ComplexState poincare_polynomial(const RationalTangle& tangle, int j,
                                 Config start) {
  return fold_word(initial_state(j, start), tangle.word);
}

std::vector<Int> generator_count(const ComplexState& state) {
  std::vector<Int> counts;
  counts.reserve(state.coeffs.size());
  for (const auto& c : state.coeffs) counts.push_back(c.eval_at_ones());
  return counts;
}

}  // namespace twistfold
