#include "twistfold/tangle.h"

#include <numeric>
#include <tuple>

namespace twistfold {

namespace {

void check_cf(const std::vector<int>& cf) {
  if (cf.empty()) throw tangle_error("continued fraction must be nonempty");
  for (int a : cf)
    if (a < 1) throw tangle_error("continued fraction parts must be >= 1");
  if (cf.size() == 1 && cf[0] == 1)
    throw tangle_error("continued fraction must evaluate to p/q > 1");
}

}  // namespace

Fraction cf_to_fraction(const std::vector<int>& cf) {
  check_cf(cf);
  long long p = cf.back(), q = 1;
  for (auto it = std::next(cf.rbegin()); it != cf.rend(); ++it) {
    // a + 1/(p/q) = (a p + q)/p
    long long np = *it * p + q;
    q = p;
    p = np;
  }
  return {p, q};
}

std::vector<int> fraction_to_cf(long long p, long long q) {
  if (q < 1 || p <= q) throw tangle_error("fraction must satisfy p > q >= 1");
  if (std::gcd(p, q) != 1) throw tangle_error("fraction must be in lowest terms");
  std::vector<int> cf;
  while (q > 0) {
    cf.push_back(static_cast<int>(p / q));
    long long r = p % q;
    p = q;
    q = r;
  }
  return cf;
}

std::vector<int> canonical_odd_cf(const std::vector<int>& cf) {
  auto [p, q] = cf_to_fraction(cf);
  std::vector<int> e = fraction_to_cf(p, q);  // Euclidean: last part >= 2
  if (e.size() % 2 == 0) {
    e.back() -= 1;
    e.push_back(1);
  }
  return e;
}

TwistWord twist_word(const std::vector<int>& cf) {
  check_cf(cf);
  const int r = static_cast<int>(cf.size());
  TwistWord w;
  for (int i = r; i >= 1; --i) {
    Move m = ((r - i) % 2 == 0) ? Move::TopTwist : Move::RightTwist;
    for (int n = 0; n < cf[static_cast<std::size_t>(i - 1)]; ++n)
      w.push_back(m);
  }
  return w;
}

std::pair<long long, long long> crossing_counts(const TwistWord& word) {
  long long left = 0, right = 1;
  for (Move m : word) {
    if (m == Move::TopTwist)
      left += right;
    else
      right += left;
  }
  return {left, right};
}

Fraction word_fraction(const TwistWord& word) {
  long long p = 0, q = 1;
  bool have_prev = false;
  Move prev = Move::TopTwist;
  for (Move m : word) {
    if (have_prev && m != prev) std::swap(p, q);
    p += q;
    have_prev = true;
    prev = m;
  }
  return {p, q};
}

RationalTangle make_tangle_from_cf(const std::vector<int>& cf) {
  RationalTangle t;
  t.cf = cf;
  std::tie(t.p, t.q) = cf_to_fraction(cf);
  t.word = twist_word(cf);
  return t;
}

RationalTangle make_tangle_from_fraction(long long p, long long q) {
  return make_tangle_from_cf(fraction_to_cf(p, q));
}

RationalTangle trivial_tangle() { return RationalTangle{}; }

// ---------------------------------------------------------------------------
// Configuration automaton.

const char* config_name(Config c) {
  switch (c) {
    case Config::UP: return "UP";
    case Config::UPs: return "UPs";
    case Config::OP: return "OP";
    case Config::OPs: return "OPs";
    case Config::RI: return "RI";
    case Config::RIs: return "RIs";
  }
  throw tangle_error("invalid configuration");
}

Config parse_config(const std::string& name) {
  if (name == "UP") return Config::UP;
  if (name == "UPs") return Config::UPs;
  if (name == "OP") return Config::OP;
  if (name == "OPs") return Config::OPs;
  if (name == "RI") return Config::RI;
  if (name == "RIs") return Config::RIs;
  throw tangle_error("unknown configuration name: " + name);
}

Config config_step(Config c, Move m) {
  if (m == Move::TopTwist) {
    switch (c) {
      case Config::UP: return Config::UPs;
      case Config::UPs: return Config::UP;
      case Config::OP: return Config::RIs;
      case Config::RIs: return Config::OP;
      case Config::RI: return Config::OPs;
      case Config::OPs: return Config::RI;
    }
  } else {
    switch (c) {
      case Config::UP: return Config::OP;
      case Config::OP: return Config::UP;
      case Config::UPs: return Config::OPs;
      case Config::OPs: return Config::UPs;
      case Config::RI: return Config::RIs;
      case Config::RIs: return Config::RI;
    }
  }
  throw tangle_error("invalid configuration");
}

Config config_walk(Config start, const TwistWord& word) {
  Config c = start;
  for (Move m : word) c = config_step(c, m);
  return c;
}

const char* special_name(Special s) {
  switch (s) {
    case Special::Y: return "Y";
    case Special::Xminus: return "X-";
    case Special::Xplus: return "X+";
  }
  throw tangle_error("invalid special point");
}

std::array<Special, 3> special_points(Config c) {
  using S = Special;
  switch (c) {
    case Config::UP: return {S::Y, S::Xminus, S::Xplus};
    case Config::UPs: return {S::Xminus, S::Y, S::Xplus};
    case Config::OP: return {S::Y, S::Xplus, S::Xminus};
    case Config::OPs: return {S::Xminus, S::Xplus, S::Y};
    case Config::RI: return {S::Xplus, S::Xminus, S::Y};
    case Config::RIs: return {S::Xplus, S::Y, S::Xminus};
  }
  throw tangle_error("invalid configuration");
}

int config_parity(Config c) {
  switch (c) {
    case Config::UP:
    case Config::OPs:
    case Config::RIs:
      return 0;
    default:
      return 1;
  }
}

}  // namespace twistfold
