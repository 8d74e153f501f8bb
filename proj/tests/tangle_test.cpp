// Continued fractions, twist words, crossing-count and fraction bookkeeping,
// and the six-state configuration automaton.
#include "twistfold/tangle.h"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace twistfold;

namespace {

std::vector<int> random_cf(std::mt19937_64& rng, int max_len = 8,
                           int max_part = 6) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> part(1, max_part);
  for (;;) {
    std::vector<int> cf(static_cast<std::size_t>(len(rng)));
    for (int& a : cf) a = part(rng);
    if (!(cf.size() == 1 && cf[0] == 1)) return cf;
  }
}

}  // namespace

TEST_CASE("continued fraction evaluation") {
  CHECK(cf_to_fraction({3, 2}) == Fraction{7, 2});
  CHECK(cf_to_fraction({2}) == Fraction{2, 1});
  CHECK(cf_to_fraction({1, 1, 1}) == Fraction{3, 2});
  CHECK(cf_to_fraction({2, 2}) == Fraction{5, 2});
  CHECK(cf_to_fraction({2, 1, 2}) == Fraction{8, 3});
  CHECK_THROWS_AS(cf_to_fraction({}), tangle_error);
  CHECK_THROWS_AS(cf_to_fraction({1}), tangle_error);
  CHECK_THROWS_AS(cf_to_fraction({2, 0}), tangle_error);
  CHECK_THROWS_AS(cf_to_fraction({3, -1}), tangle_error);
}

TEST_CASE("fraction to continued fraction") {
  CHECK(fraction_to_cf(7, 2) == std::vector<int>{3, 2});
  CHECK(fraction_to_cf(2, 1) == std::vector<int>{2});
  CHECK(fraction_to_cf(5, 2) == std::vector<int>{2, 2});
  CHECK_THROWS_AS(fraction_to_cf(4, 2), tangle_error);
  CHECK_THROWS_AS(fraction_to_cf(2, 3), tangle_error);
  CHECK_THROWS_AS(fraction_to_cf(3, 0), tangle_error);
}

TEST_CASE("cf round-trips and canonical odd form, randomized") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> cf = random_cf(rng);
    auto [p, q] = cf_to_fraction(cf);
    CHECK(p > q);
    CHECK(q >= 1);
    CHECK(std::gcd(p, q) == 1);
    CHECK(cf_to_fraction(fraction_to_cf(p, q)) == Fraction{p, q});

    std::vector<int> odd = canonical_odd_cf(cf);
    CHECK(odd.size() % 2 == 1);
    CHECK(cf_to_fraction(odd) == Fraction{p, q});
    // Canonical: same value always yields the same odd expansion.
    CHECK(canonical_odd_cf(fraction_to_cf(p, q)) == odd);
  }
  CHECK(canonical_odd_cf({2, 2}) == std::vector<int>{2, 1, 1});
  CHECK(canonical_odd_cf({3}) == std::vector<int>{3});
}

TEST_CASE("twist word construction") {
  using enum Move;
  // [3]: three top twists.
  CHECK(twist_word({3}) == TwistWord{TopTwist, TopTwist, TopTwist});
  // [2,2]: the a_2 group (top) is applied first, then the a_1 group (right).
  CHECK(twist_word({2, 2}) ==
        TwistWord{TopTwist, TopTwist, RightTwist, RightTwist});
  // [2,1,2]: groups a_3=2 top, a_2=1 right, a_1=2 top.
  CHECK(twist_word({2, 1, 2}) ==
        TwistWord{TopTwist, TopTwist, RightTwist, TopTwist, TopTwist});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> cf = random_cf(rng);
    TwistWord w = twist_word(cf);
    CHECK(w.size() == static_cast<std::size_t>(
                          std::accumulate(cf.begin(), cf.end(), 0)));
    CHECK(w.front() == Move::TopTwist);  // the a_r group is always top
    // The final group is top twists exactly when the length is odd.
    CHECK((w.back() == Move::TopTwist) == (cf.size() % 2 == 1));
  }
}

TEST_CASE("crossing counts and word fraction") {
  CHECK(crossing_counts(twist_word({3})) == std::pair<long long, long long>{3, 1});
  CHECK(crossing_counts(twist_word({2, 2})) ==
        std::pair<long long, long long>{2, 5});
  CHECK(crossing_counts(twist_word({2, 1, 1})) ==
        std::pair<long long, long long>{5, 2});
  CHECK(word_fraction(twist_word({3})) == Fraction{3, 1});
  CHECK(word_fraction(twist_word({2, 2})) == Fraction{5, 2});
  CHECK(word_fraction(twist_word({2, 1, 2})) == Fraction{8, 3});

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> cf = random_cf(rng);
    auto [p, q] = cf_to_fraction(cf);
    TwistWord w = twist_word(cf);
    CHECK(word_fraction(w) == Fraction{p, q});
    auto [left, right] = crossing_counts(w);
    if (cf.size() % 2 == 1) {
      CHECK(left == p);
      CHECK(right == q);
    } else {
      CHECK(left == q);
      CHECK(right == p);
    }
    // Prefix consistency: after every prefix, the crossing counts are the
    // word fraction, transposed while the current group is a right group.
    TwistWord prefix;
    for (Move m : w) {
      prefix.push_back(m);
      auto [pp, pq] = word_fraction(prefix);
      auto [cl, cr] = crossing_counts(prefix);
      if (m == Move::TopTwist) {
        CHECK(cl == pp);
        CHECK(cr == pq);
      } else {
        CHECK(cl == pq);
        CHECK(cr == pp);
      }
    }
  }
}

TEST_CASE("tangle descriptors") {
  RationalTangle t = make_tangle_from_cf({3, 2});
  CHECK(t.p == 7);
  CHECK(t.q == 2);
  CHECK(t.word == twist_word({3, 2}));
  RationalTangle u = make_tangle_from_fraction(7, 2);
  CHECK(u.cf == std::vector<int>{3, 2});
  RationalTangle triv = trivial_tangle();
  CHECK(triv.word.empty());
  CHECK(triv.p == 0);
  CHECK(triv.q == 1);
}

TEST_CASE("configuration automaton structure") {
  using enum Config;
  const Config all[] = {UP, UPs, OP, OPs, RI, RIs};
  for (Config c : all) {
    // Both moves are involutions with no fixed points.
    for (Move m : {Move::TopTwist, Move::RightTwist}) {
      CHECK(config_step(c, m) != c);
      CHECK(config_step(config_step(c, m), m) == c);
    }
    CHECK(parse_config(config_name(c)) == c);
    // Moves flip the parity class.
    CHECK(config_parity(config_step(c, Move::TopTwist)) ==
          1 - config_parity(c));
    CHECK(config_parity(config_step(c, Move::RightTwist)) ==
          1 - config_parity(c));
  }
  CHECK_THROWS_AS(parse_config("XX"), tangle_error);

  // TR has order 3, so <T, R> is the full symmetric group S_3 and the action
  // is simply transitive: the six words {e, T, R, TR, RT, TRT} hit all six
  // configurations from any start.
  for (Config start : all) {
    std::set<Config> seen;
    const std::vector<TwistWord> words = {
        {},
        {Move::TopTwist},
        {Move::RightTwist},
        {Move::TopTwist, Move::RightTwist},
        {Move::RightTwist, Move::TopTwist},
        {Move::TopTwist, Move::RightTwist, Move::TopTwist}};
    for (const auto& w : words) seen.insert(config_walk(start, w));
    CHECK(seen.size() == 6);
    // TRT = RTR (the braid relation for adjacent transpositions).
    CHECK(config_walk(start, {Move::TopTwist, Move::RightTwist,
                              Move::TopTwist}) ==
          config_walk(start, {Move::RightTwist, Move::TopTwist,
                              Move::RightTwist}));
  }
}

TEST_CASE("special point labels") {
  using S = Special;
  CHECK(special_points(Config::UP) ==
        std::array<S, 3>{S::Y, S::Xminus, S::Xplus});
  CHECK(special_points(Config::RI) ==
        std::array<S, 3>{S::Xplus, S::Xminus, S::Y});
  const Config all[] = {Config::UP,  Config::UPs, Config::OP,
                        Config::OPs, Config::RI,  Config::RIs};
  for (Config c : all) {
    auto sp = special_points(c);
    // Each label appears exactly once.
    CHECK(sp[0] != sp[1]);
    CHECK(sp[1] != sp[2]);
    CHECK(sp[0] != sp[2]);
    // TopTwist swaps (left, mid); RightTwist swaps (mid, right).
    auto st = special_points(config_step(c, Move::TopTwist));
    CHECK(st == std::array<S, 3>{sp[1], sp[0], sp[2]});
    auto sr = special_points(config_step(c, Move::RightTwist));
    CHECK(sr == std::array<S, 3>{sp[0], sp[2], sp[1]});
  }
  CHECK(std::string(special_name(S::Y)) == "Y");
  CHECK(std::string(special_name(S::Xplus)) == "X+");
  CHECK(std::string(special_name(S::Xminus)) == "X-");
  CHECK(std::string(config_name(Config::UPs)) == "UPs");
}
