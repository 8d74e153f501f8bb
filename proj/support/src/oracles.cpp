#include "twistfold_support/oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace twistfold::oracles {

QLaurent pascal_quantum_binomial(int h, int k) {
  if (k < 0 || k > h) return QLaurent();
  // Row-by-row Pascal table up to row h.
  std::map<int, QLaurent> row;  // k -> {row \ k}
  row[0] = QLaurent(Int(1));
  for (int n = 1; n <= h; ++n) {
    std::map<int, QLaurent> next;
    next[0] = QLaurent(Int(1));
    for (int m = 1; m <= std::min(n, k); ++m) {
      QLaurent val;
      if (auto it = row.find(m); it != row.end()) val += it->second.shifted(m);
      if (auto it = row.find(m - 1); it != row.end())
        val += it->second.shifted(m - n);
      next[m] = std::move(val);
    }
    row = std::move(next);
  }
  auto it = row.find(k);
  return it == row.end() ? QLaurent() : it->second;
}

Int binomial(int h, int k) {
  if (k < 0 || k > h) return Int(0);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= h - k + i;
    r /= i;
  }
  return r;
}

QLaurent hopf_reduced_formula(int N, int i, int j) {
  QLaurent r;
  for (int k = 0; k <= j; ++k) {
    QLaurent term =
        pascal_quantum_binomial(N - i, k) * pascal_quantum_binomial(i, j - k);
    r += term.shifted(k * (2 + N));
  }
  return r;
}

namespace {

Int sign_pow(int h) { return h % 2 == 0 ? Int(1) : Int(-1); }

Int closed_count(Config c, int i, int j, int k, int N, bool reduced) {
  switch (c) {
    case Config::UP:
    case Config::UPs:
      return reduced ? binomial(N - k, j - k) * binomial(N - i, k)
                     : binomial(N - k, i) * binomial(j, k) * binomial(N, j);
    case Config::OP:
    case Config::OPs:
      return reduced
                 ? binomial(N - k, j - k) * binomial(i, k)
                 : binomial(N - k, N - j) * binomial(i, k) * binomial(N, i);
    case Config::RI:
    case Config::RIs:
      return reduced ? binomial(N - j + k, k) * binomial(N - i, j - k)
                     : binomial(N - j + k, k) * binomial(N - j + k, i) *
                           binomial(N, N - j + k);
  }
  return Int(0);
}

}  // namespace

Int closure_sum_at_one(const RationalTangle& tangle, int i, int j, int N,
                       Config start, bool reduced) {
  // Same odd-length normalization as the library assembly.
  TwistWord word = tangle.word;
  if (!tangle.cf.empty() && tangle.cf.size() % 2 == 0)
    word = twist_word(canonical_odd_cf(tangle.cf));
  std::vector<Int> x(j + 1, Int(0));
  x[0] = 1;
  Config cfg = start;
  for (Move m : word) {
    std::vector<Int> y(j + 1, Int(0));
    for (int h = 0; h <= j; ++h) {
      Int acc = 0;
      if (m == Move::TopTwist) {
        for (int k = 0; k <= h; ++k) acc += binomial(h, k) * x[k];
      } else {
        for (int k = h; k <= j; ++k) acc += binomial(j - h, k - h) * x[k];
      }
      y[h] = sign_pow(h) * acc;
    }
    x = std::move(y);
    cfg = config_step(cfg, m);
  }
  Int total = 0;
  for (int k = 0; k <= j; ++k)
    total += x[k] * closed_count(cfg, i, j, k, N, reduced);
  return total;
}

namespace {

// Bracket state of a partial 2-bridge tangle: coefficients of the two
// crossingless tangles (u = vertical arcs, v = horizontal arcs) in A.
struct Bracket {
  QLaurent u, v;
};

QLaurent bracket_delta() {
  QLaurent d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

// Append one horizontal crossing with the A^{-1}-first smoothing weights.
Bracket add_crossing(const Bracket& b) {
  QLaurent ah = QLaurent::monomial(1, -1);
  QLaurent av = QLaurent::monomial(1, 1);
  Bracket r;
  r.v = av * b.v;
  r.u = ah * b.v + (av + ah * bracket_delta()) * b.u;
  return r;
}

// Diagonal flip: swaps the two arc patterns and mirrors every crossing
// already present (A -> A^{-1}).
Bracket flip_diag(const Bracket& b) {
  return Bracket{b.v.reversed(), b.u.reversed()};
}

}  // namespace

QLaurent two_bridge_jones(const std::vector<int>& cf) {
  Bracket b;
  b.v = QLaurent(Int(1));  // the trivial tangle is the horizontal pattern
  for (size_t done = 0; done < cf.size(); ++done) {
    if (done != 0) b = flip_diag(b);
    for (int n = 0; n < cf[cf.size() - 1 - done]; ++n) b = add_crossing(b);
  }
  QLaurent raw = b.u + b.v * bracket_delta();
  // Engine variable q = A^{-2}; absorb a global odd A-shift first.
  if (raw.is_zero()) return raw;
  int shift = (raw.min_exp() % 2 + 2) % 2;
  QLaurent out;
  for (const auto& [e, c] : raw.terms()) {
    if ((e + shift) % 2 != 0)
      throw arithmetic_error("mixed A-exponent parity in bracket fold");
    out.add_term(-(e + shift) / 2, c);
  }
  return out;
}

namespace {

QLaurent z_poly() {
  QLaurent z;
  z.add_term(1, 1);
  z.add_term(-1, -1);
  return z;
}

}  // namespace

QLaurent torus_zp(int m, int N) {
  QLaurent a = QLaurent::monomial(1, N);
  QLaurent a2 = QLaurent::monomial(1, 2 * N);
  QLaurent z = z_poly();
  QLaurent prev = QLaurent::monomial(1, -N) - QLaurent::monomial(1, N);
  if (m == 0) return prev;
  QLaurent cur = z;
  for (int k = 2; k <= m; ++k) {
    QLaurent next = a * z * cur + a2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QLaurent figure_eight_zp(int N) {
  QLaurent z = z_poly();
  QLaurent p = QLaurent::monomial(1, -2 * N) - QLaurent(Int(1)) +
               QLaurent::monomial(1, 2 * N) - z * z;
  return p * z;
}

QLaurent five_two_zp(int N) {
  QLaurent z = z_poly();
  QLaurent a2 = QLaurent::monomial(1, 2 * N);
  QLaurent a4 = QLaurent::monomial(1, 4 * N);
  QLaurent a6 = QLaurent::monomial(1, 6 * N);
  return (a2 + a4 - a6 + (a2 + a4) * z * z) * z;
}

QLaurent quantum_dimension(const std::vector<int>& lambda, int N) {
  QLaurent num(Int(1));
  QLaurent den(Int(1));
  const int rows = static_cast<int>(lambda.size());
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= lambda[r - 1]; ++c) {
      QLaurent factor = quantum_integer(N + c - r);
      if (factor.is_zero()) return QLaurent();
      num *= factor;
      int col_height = 0;
      for (int s = 1; s <= rows; ++s)
        if (lambda[s - 1] >= c) ++col_height;
      den *= quantum_integer(lambda[r - 1] - c + col_height - r + 1);
    }
  return divide_exact(num, den);
}

QLaurent rosso_jones_two_strand(int m, int i, int N) {
  QLaurent r;
  for (int c = 0; c <= i; ++c) {
    std::vector<int> lambda(c, 2);
    lambda.insert(lambda.end(), 2 * (i - c), 1);
    QLaurent dim = quantum_dimension(lambda, N);
    if (dim.is_zero()) continue;
    long long kappa = 0;
    for (size_t row = 0; row < lambda.size(); ++row)
      kappa +=
          static_cast<long long>(lambda[row]) *
          (lambda[row] + N + 1 - 2 * (static_cast<long long>(row) + 1));
    if (kappa % 2 != 0) throw arithmetic_error("odd ribbon exponent");
    QLaurent term = dim.shifted(static_cast<int>(m * (kappa / 2)));
    if ((m * (i - c)) % 2 != 0) term = -term;
    r += term;
  }
  return r;
}

namespace {

// Union-find over arc labels 1..2n.
struct ArcSets {
  std::vector<int> parent;
  explicit ArcSets(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

QLaurent kauffman_jones(const std::vector<PDCrossing>& code) {
  const int n = static_cast<int>(code.size());
  const int arcs = 2 * n;
  auto succ = [arcs](int x) { return x % arcs + 1; };

  int writhe = 0;
  for (const PDCrossing& x : code) {
    if (x.c != succ(x.a))
      throw arithmetic_error("PD under-strand arcs not consecutive");
    if (x.b == succ(x.d))
      ++writhe;  // over strand runs d -> b
    else if (x.d == succ(x.b))
      --writhe;  // over strand runs b -> d
    else
      throw arithmetic_error("PD over-strand arcs not consecutive");
  }

  // Bracket state sum in the variable A: smoothing 0 joins (a,b) and (c,d)
  // and contributes A; smoothing 1 joins (a,d) and (b,c) and contributes
  // A^{-1}; each state weighs (-A^2 - A^-2)^{loops - 1}.
  QLaurent delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  QLaurent bracket;
  for (int state = 0; state < (1 << n); ++state) {
    ArcSets sets(arcs);
    int exponent = 0;
    for (int c = 0; c < n; ++c) {
      const PDCrossing& x = code[c];
      if (state >> c & 1) {
        sets.join(x.a, x.d);
        sets.join(x.b, x.c);
        exponent -= 1;
      } else {
        sets.join(x.a, x.b);
        sets.join(x.c, x.d);
        exponent += 1;
      }
    }
    int loops = 0;
    for (int arc = 1; arc <= arcs; ++arc)
      if (sets.find(arc) == arc) ++loops;
    QLaurent weight = QLaurent::monomial(1, exponent);
    for (int l = 1; l < loops; ++l) weight *= delta;
    bracket += weight;
  }

  // Normalize by the writhe and pass to q = A^{-4}.
  QLaurent f = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) f = -f;
  QLaurent jones;
  for (const auto& [e, coeff] : f.terms()) {
    if (e % 4 != 0)
      throw arithmetic_error("normalized bracket off the knot exponent grid");
    jones.add_term(-e / 4, coeff);
  }
  return jones;
}

std::vector<PDCrossing> trefoil_pd() {
  return {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
}

}  // namespace twistfold::oracles
