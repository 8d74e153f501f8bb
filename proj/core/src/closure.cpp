// Closure tables for the six boundary configurations and the colored HOMFLY
// assembly.  Three closed diagrams exist: the UP product, the OP product and
// the RI product (RI is the quarter-turn of UP, reading the weight from the
// other end: its reduced table is the UP table at j - k).  A star on the
// configuration records the parity of the twist word acting on the boundary,
// not a different closed diagram, so each starred family pairs with its
// partner's table at the same weight: UPs with UP, OPs with OP, RIs with RI.
#include "twistfold/closure.h"

#include <map>
#include <tuple>
#include <utility>

namespace twistfold {

namespace {

void check_closure_args(int i, int j, int k, int N) {
  if (k < 0) throw closure_error("closure weight k must be nonnegative");
  if (!(0 <= j && j <= i && i <= N))
    throw closure_error("closure colors must satisfy 0 <= j <= i <= N");
}

// (q^l - q^-l)
QLaurent q_diff(int l) {
  QLaurent p;
  p.add_term(l, 1);
  p.add_term(-l, -1);
  return p;
}

StablePoly reduced_stable_web_uncached(Config c, int j, int k) {
  switch (c) {
    case Config::UP:
    case Config::UPs:
      return reduced_stable_closure(j, k);
    case Config::RI:
    case Config::RIs:
      return reduced_stable_closure(j, j - k);
    case Config::OP:
    case Config::OPs: {
      // {-k \ j-k}_a prod_{l=1..k} (s q^{j-l+1} - s^-1 q^{l-1-j})/(q^l-q^-l)
      StablePoly r = a_binomial(-k, j - k);
      for (int l = 1; l <= k; ++l) {
        StablePoly f = StablePoly::monomial(
            QRational(QLaurent::monomial(1, j - l + 1)), 0, 1);
        f += StablePoly::monomial(
            QRational(QLaurent::monomial(-1, l - 1 - j)), 0, -1);
        r *= f;
        r *= StablePoly(QRational(QLaurent(Int(1)), q_diff(l)));
      }
      return r;
    }
  }
  throw closure_error("unknown boundary configuration");
}

// Both assemblies fold the odd-length expansion of the continued fraction:
// the word of an even-length expansion reverses into the expansion of the
// mirror-image link, so folding it directly would compute the mirror value.
ComplexState folded_state(const RationalTangle& tangle, int j, Config start) {
  if (!tangle.cf.empty() && tangle.cf.size() % 2 == 0) {
    RationalTangle odd = make_tangle_from_cf(canonical_odd_cf(tangle.cf));
    return poincare_polynomial(odd, j, start);
  }
  return poincare_polynomial(tangle, j, start);
}

}  // namespace

QLaurent closed_up_value(int i, int j, int k, int N) {
  check_closure_args(i, j, k, N);
  if (k > j) return QLaurent();
  return quantum_binomial(N - k, i) * quantum_binomial(j, k) *
         quantum_binomial(N, j);
}

QLaurent closed_web_value(Config c, int i, int j, int k, int N) {
  check_closure_args(i, j, k, N);
  if (k > j) return QLaurent();
  switch (c) {
    case Config::UP:
    case Config::UPs:
      return closed_up_value(i, j, k, N);
    case Config::OP:
    case Config::OPs:
      return quantum_binomial(N - k, N - j) * quantum_binomial(i, k) *
             quantum_binomial(N, i);
    case Config::RI:
    case Config::RIs:
      return quantum_binomial(N - j + k, k) * quantum_binomial(N - j + k, i) *
             quantum_binomial(N, N - j + k);
  }
  throw closure_error("unknown boundary configuration");
}

QLaurent reduced_closed_web_value(Config c, int i, int j, int k, int N) {
  check_closure_args(i, j, k, N);
  if (k > j) return QLaurent();
  switch (c) {
    case Config::UP:
    case Config::UPs:
      return quantum_binomial(N - k, j - k) * quantum_binomial(N - i, k);
    case Config::OP:
    case Config::OPs:
      return quantum_binomial(N - k, j - k) * quantum_binomial(i, k);
    case Config::RI:
    case Config::RIs:
      return quantum_binomial(N - j + k, k) * quantum_binomial(N - i, j - k);
  }
  throw closure_error("unknown boundary configuration");
}

StablePoly reduced_stable_closure(int j, int k) {
  if (!(0 <= k && k <= j))
    throw closure_error("reduced stable closure requires 0 <= k <= j");
  StablePoly r = a_binomial(-k, j - k);
  for (int l = 1; l <= k; ++l) {
    StablePoly f = StablePoly::monomial(
        QRational(QLaurent::monomial(1, -j - l + 1)), 1, -1);
    f += StablePoly::monomial(
        QRational(QLaurent::monomial(-1, j + l - 1)), -1, 1);
    r *= f;
    r *= StablePoly(QRational(QLaurent(Int(1)), q_diff(l)));
  }
  return r;
}

StablePoly reduced_stable_web(Config c, int j, int k) {
  if (!(0 <= k && k <= j))
    throw closure_error("reduced stable closure requires 0 <= k <= j");
  thread_local std::map<std::tuple<Config, int, int>, StablePoly> cache;
  auto key = std::make_tuple(c, j, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  StablePoly r = reduced_stable_web_uncached(c, j, k);
  cache.emplace(key, r);
  return r;
}

LinkValue normalize_link_value(const QLaurent& raw) {
  if (raw.is_zero()) return LinkValue{raw, 0, 1};
  auto [value, shift] = normalize_up_to_monomial(raw);
  int sign = 1;
  if (value.leading_coeff() < 0) {
    value = -value;
    sign = -1;
  }
  return LinkValue{std::move(value), shift, sign};
}

LinkValue colored_homfly(const RationalTangle& tangle, int i, int j, int N,
                         Config start, bool reduced) {
  if (!(1 <= j && j <= i && i <= N))
    throw closure_error("colored HOMFLY requires colors 1 <= j <= i <= N");
  ComplexState state = folded_state(tangle, j, start);
  QLaurent value;
  for (int k = 0; k <= j; ++k) {
    QLaurent c_k = to_qlaurent(substitute_t_sign(
        substitute_s_qpow(substitute_a_qpow(state.coeffs[k], N), i - j), -1));
    if (c_k.is_zero()) continue;
    value += c_k * (reduced
                        ? reduced_closed_web_value(state.config, i, j, k, N)
                        : closed_web_value(state.config, i, j, k, N));
  }
  return normalize_link_value(value);
}

StableValue color_stable_homfly(const RationalTangle& tangle, int j,
                                Config start) {
  if (j < 1) throw closure_error("stable HOMFLY requires color j >= 1");
  ComplexState state = folded_state(tangle, j, start);
  StablePoly value;
  for (int k = 0; k <= j; ++k) {
    LaurentPoly4 c_k = substitute_t_sign(state.coeffs[k], -1);
    StablePoly s_k;
    for (const auto& [e, coeff] : c_k.terms())
      s_k.add_term({e.a, e.s}, QRational(QLaurent::monomial(coeff, e.q)));
    value += s_k * reduced_stable_web(state.config, j, k);
  }
  auto [normalized, shift] = value.normalize_as();
  return StableValue{std::move(normalized), shift.first, shift.second};
}

}  // namespace twistfold
