// Exact arithmetic for the graded invariants: Laurent polynomials in the
// variables a, q, s, t with big-integer coefficients, single-variable q-Laurent
// polynomials and rational functions, quantum integers / factorials / binomials
// with their one-sided renormalizations, the a-deformed binomial, stable
// (a,s)-polynomials with rational q-coefficients, two-variable (u,v) Laurent
// polynomials for Alexander invariants, and Fox calculus on words in u^{±2},
// v^{±2}.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistfold {

using Int = boost::multiprecision::cpp_int;

// Thrown when an operation that must be exact (division, substitution,
// normalization) does not hold; indicates a logic error, never bad user input.
struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Exponent vector for monomials a^a q^q s^s t^t.  Ordered by (t, a, s, q) so
// that map iteration yields the canonical printing order.
struct ExpVec {
  int a = 0;
  int q = 0;
  int s = 0;
  int t = 0;

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec& x, const ExpVec& y) {
    if (auto c = x.t <=> y.t; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    if (auto c = x.s <=> y.s; c != 0) return c;
    return x.q <=> y.q;
  }
  ExpVec operator+(const ExpVec& o) const {
    return {a + o.a, q + o.q, s + o.s, t + o.t};
  }
  ExpVec operator-(const ExpVec& o) const {
    return {a - o.a, q - o.q, s - o.s, t - o.t};
  }
  ExpVec operator-() const { return {-a, -q, -s, -t}; }
};

// ---------------------------------------------------------------------------
// Sparse Laurent polynomial in a, q, s, t.  Invariant: no zero coefficients.
class LaurentPoly4 {
 public:
  using Terms = std::map<ExpVec, Int>;

  LaurentPoly4() = default;
  explicit LaurentPoly4(Int c) {
    if (c != 0) terms_[ExpVec{}] = std::move(c);
  }
  static LaurentPoly4 monomial(Int c, ExpVec e) {
    LaurentPoly4 p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const ExpVec& e, const Int& c);

  LaurentPoly4& operator+=(const LaurentPoly4& o);
  LaurentPoly4& operator-=(const LaurentPoly4& o);
  friend LaurentPoly4 operator+(LaurentPoly4 x, const LaurentPoly4& y) {
    x += y;
    return x;
  }
  friend LaurentPoly4 operator-(LaurentPoly4 x, const LaurentPoly4& y) {
    x -= y;
    return x;
  }
  friend LaurentPoly4 operator*(const LaurentPoly4& x, const LaurentPoly4& y);
  LaurentPoly4& operator*=(const LaurentPoly4& o) {
    *this = *this * o;
    return *this;
  }
  LaurentPoly4 operator-() const;
  friend bool operator==(const LaurentPoly4&, const LaurentPoly4&) = default;

  // Componentwise minimum of exponents over all terms; zero polynomial -> 0.
  ExpVec min_exponents() const;
  // Multiplies by the monomial q^... with the given exponent vector.
  LaurentPoly4 shifted(const ExpVec& by) const;
  Int eval_at_ones() const;  // all variables set to 1

  std::string str() const;  // canonical text form (see io.h grammar)

 private:
  Terms terms_;
};

// Divides all exponents down so each variable's minimum exponent is 0.
// Returns the normalized polynomial and the monomial shift that was removed,
// i.e. input == result.first shifted by result.second.
std::pair<LaurentPoly4, ExpVec> normalize_up_to_monomial(const LaurentPoly4& p);

// True if p and q agree after normalization; with allow_sign also accepts a
// global factor -1.
bool equal_up_to_monomial(const LaurentPoly4& p, const LaurentPoly4& q,
                          bool allow_sign = true);

// ---------------------------------------------------------------------------
// Sparse Laurent polynomial in the single variable q.
class QLaurent {
 public:
  using Terms = std::map<int, Int>;

  QLaurent() = default;
  explicit QLaurent(Int c) {
    if (c != 0) terms_[0] = std::move(c);
  }
  static QLaurent monomial(Int c, int e) {
    QLaurent p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(int e, const Int& c);

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent x, const QLaurent& y) {
    x += y;
    return x;
  }
  friend QLaurent operator-(QLaurent x, const QLaurent& y) {
    x -= y;
    return x;
  }
  friend QLaurent operator*(const QLaurent& x, const QLaurent& y);
  QLaurent& operator*=(const QLaurent& o) {
    *this = *this * o;
    return *this;
  }
  QLaurent operator-() const;
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  QLaurent shifted(int by) const;
  QLaurent reversed() const;  // q -> q^{-1}
  Int eval_at_one() const;
  Int leading_coeff() const;  // coefficient of max_exp; requires nonzero
  Int trailing_coeff() const;

  std::string str() const;

 private:
  Terms terms_;
};

// Exact division; throws arithmetic_error if the division leaves a remainder.
QLaurent divide_exact(const QLaurent& num, const QLaurent& den);

std::pair<QLaurent, int> normalize_up_to_monomial(const QLaurent& p);
bool equal_up_to_monomial(const QLaurent& p, const QLaurent& q,
                          bool allow_sign = true);

// ---------------------------------------------------------------------------
// Rational function in q, kept in canonical form: numerator and denominator
// share no nonunit factor, the denominator's lowest exponent is 0 and its
// lowest nonzero coefficient is positive.
class QRational {
 public:
  QRational() : num_(), den_(Int(1)) {}
  explicit QRational(QLaurent n) : num_(std::move(n)), den_(Int(1)) {}
  QRational(QLaurent n, QLaurent d);

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const {
    return den_ == QLaurent(Int(1));
  }
  // Requires is_polynomial().
  const QLaurent& as_polynomial() const;

  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  friend QRational operator+(QRational x, const QRational& y) {
    x += y;
    return x;
  }
  friend QRational operator-(QRational x, const QRational& y) {
    x -= y;
    return x;
  }
  friend QRational operator*(QRational x, const QRational& y) {
    x *= y;
    return x;
  }
  friend QRational operator/(QRational x, const QRational& y) {
    x /= y;
    return x;
  }
  QRational operator-() const;
  friend bool operator==(const QRational&, const QRational&) = default;

  std::string str() const;

 private:
  void canonicalize();
  QLaurent num_;
  QLaurent den_;
};

// Greatest common divisor in Z[q] of the shifted-to-degree-0 polynomials
// (primitive pseudo-remainder sequence; exposed for tests).
QLaurent poly_gcd(const QLaurent& x, const QLaurent& y);

// ---------------------------------------------------------------------------
// Quantum symbols.  [n] = (q^n - q^-n)/(q - q^-1), [-n] = -[n];
// [n]! = [1][2]...[n], [-n]! = (-1)^n [n]!;
// {h \ k} = [h][h-1]...[h-k+1] / [k]!  (balanced; palindromic for h >= k >= 0);
// {h \ k}+ = q^{k(h-k)} {h \ k}  (lowest degree 0);
// {h \ k}- = q^{-k(h-k)} {h \ k}  (highest degree 0).
QLaurent quantum_integer(int n);
QLaurent quantum_factorial(int n);
QLaurent quantum_binomial(int h, int k);
QLaurent quantum_binomial_plus(int h, int k);
QLaurent quantum_binomial_minus(int h, int k);

// ---------------------------------------------------------------------------
// Polynomial in a and s whose coefficients are rational functions of q; the
// home of stable (large-rank) invariants and of the a-deformed binomial.
class StablePoly {
 public:
  using Key = std::pair<int, int>;  // (a exponent, s exponent)
  using Terms = std::map<Key, QRational>;

  StablePoly() = default;
  explicit StablePoly(QRational c) {
    if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
  }
  static StablePoly monomial(QRational c, int ea, int es) {
    StablePoly p;
    if (!c.is_zero()) p.terms_[{ea, es}] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Key k, const QRational& c);

  StablePoly& operator+=(const StablePoly& o);
  StablePoly& operator-=(const StablePoly& o);
  friend StablePoly operator+(StablePoly x, const StablePoly& y) {
    x += y;
    return x;
  }
  friend StablePoly operator-(StablePoly x, const StablePoly& y) {
    x -= y;
    return x;
  }
  friend StablePoly operator*(const StablePoly& x, const StablePoly& y);
  StablePoly& operator*=(const StablePoly& o) {
    *this = *this * o;
    return *this;
  }
  friend bool operator==(const StablePoly&, const StablePoly&) = default;

  // Substitutes a = q^N, s = q^m; requires the result to be a Laurent
  // polynomial (throws arithmetic_error otherwise).
  QLaurent specialize(int N, int m) const;

  // Substitutes a = 1, s = u/v, q = v; returns u-exponent -> rational in v.
  // u and v exponents track s and q exponents directly.
  std::map<int, QRational> specialize_uv() const;

  // Shifts so both minimum exponents are 0; returns (normalized, (ea, es)).
  std::pair<StablePoly, Key> normalize_as() const;

  std::string str() const;

 private:
  Terms terms_;
};

// a-deformed binomial {b \ c}_a =
//   prod_{k=1..c} (a q^{b-k+1} - a^-1 q^{-b+k-1}) / (q^k - q^-k).
// Specializing a = q^N gives {N+b \ c}.
StablePoly a_binomial(int b, int c);

// ---------------------------------------------------------------------------
// Substitutions on LaurentPoly4.
LaurentPoly4 substitute_a_qpow(const LaurentPoly4& p, int N);   // a -> q^N
LaurentPoly4 substitute_s_qpow(const LaurentPoly4& p, int m);   // s -> q^m
LaurentPoly4 substitute_t_sign(const LaurentPoly4& p, int sgn); // t -> ±1
// Requires all a, s, t exponents to be zero.
QLaurent to_qlaurent(const LaurentPoly4& p);
LaurentPoly4 from_qlaurent(const QLaurent& p);

// ---------------------------------------------------------------------------
// Two-variable Laurent polynomials in u, v (multivariable Alexander values).
class MVAPoly {
 public:
  using Key = std::pair<int, int>;  // (u exponent, v exponent)
  using Terms = std::map<Key, Int>;

  MVAPoly() = default;
  explicit MVAPoly(Int c) {
    if (c != 0) terms_[{0, 0}] = std::move(c);
  }
  static MVAPoly monomial(Int c, int eu, int ev) {
    MVAPoly p;
    if (c != 0) p.terms_[{eu, ev}] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Key k, const Int& c);

  MVAPoly& operator+=(const MVAPoly& o);
  MVAPoly& operator-=(const MVAPoly& o);
  friend MVAPoly operator+(MVAPoly x, const MVAPoly& y) {
    x += y;
    return x;
  }
  friend MVAPoly operator-(MVAPoly x, const MVAPoly& y) {
    x -= y;
    return x;
  }
  friend MVAPoly operator*(const MVAPoly& x, const MVAPoly& y);
  MVAPoly operator-() const;
  friend bool operator==(const MVAPoly&, const MVAPoly&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

// Exact division by (1 - u^2); throws arithmetic_error on nonzero remainder.
MVAPoly divide_exact_one_minus_u2(const MVAPoly& p);

std::pair<MVAPoly, MVAPoly::Key> normalize_up_to_monomial(const MVAPoly& p);
bool equal_up_to_monomial(const MVAPoly& p, const MVAPoly& q,
                          bool allow_sign = true);

// ---------------------------------------------------------------------------
// Words in the letters u^{±2}, v^{±2} and their Fox derivatives.
struct GroupLetter {
  enum class Gen { U, V };
  Gen gen;
  int sign;  // +1 for x^{+2}, -1 for x^{-2}
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

struct GroupWord {
  std::vector<GroupLetter> letters;

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& x, const GroupWord& y);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  std::string str() const;
};

// Abelianization: the monomial u^{2·(sum of U signs)} v^{2·(sum of V signs)}.
MVAPoly abelianize(const GroupWord& w);

// Fox derivative with respect to the generator u^2 or v^2, abelianized:
// d(xy) = dx + ab(x) dy, d(g) = 1, d(g^{-1}) = -ab(g^{-1}) for the chosen
// generator g, zero on the other generator.
MVAPoly fox_derivative(const GroupWord& w, GroupLetter::Gen gen);

}  // namespace twistfold
