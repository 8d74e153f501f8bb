#include "twistfold/qsymbols.h"

#include <algorithm>

namespace twistfold {

// ---------------------------------------------------------------------------
// LaurentPoly4

void LaurentPoly4::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly4& LaurentPoly4::operator+=(const LaurentPoly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly4& LaurentPoly4::operator-=(const LaurentPoly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly4 operator*(const LaurentPoly4& x, const LaurentPoly4& y) {
  LaurentPoly4 r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
  return r;
}

LaurentPoly4 LaurentPoly4::operator-() const {
  LaurentPoly4 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ExpVec LaurentPoly4::min_exponents() const {
  if (terms_.empty()) return {};
  auto it = terms_.begin();
  ExpVec m = it->first;
  for (++it; it != terms_.end(); ++it) {
    m.a = std::min(m.a, it->first.a);
    m.q = std::min(m.q, it->first.q);
    m.s = std::min(m.s, it->first.s);
    m.t = std::min(m.t, it->first.t);
  }
  return m;
}

LaurentPoly4 LaurentPoly4::shifted(const ExpVec& by) const {
  LaurentPoly4 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
  return r;
}

Int LaurentPoly4::eval_at_ones() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::pair<LaurentPoly4, ExpVec> normalize_up_to_monomial(const LaurentPoly4& p) {
  if (p.is_zero()) return {p, ExpVec{}};
  ExpVec m = p.min_exponents();
  return {p.shifted(-m), m};
}

bool equal_up_to_monomial(const LaurentPoly4& p, const LaurentPoly4& q,
                          bool allow_sign) {
  LaurentPoly4 pn = normalize_up_to_monomial(p).first;
  LaurentPoly4 qn = normalize_up_to_monomial(q).first;
  if (pn == qn) return true;
  if (allow_sign && pn == -qn) return true;
  return false;
}

// ---------------------------------------------------------------------------
// QLaurent

void QLaurent::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& x, const QLaurent& y) {
  QLaurent r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

int QLaurent::min_exp() const {
  if (terms_.empty()) throw arithmetic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int QLaurent::max_exp() const {
  if (terms_.empty()) throw arithmetic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

QLaurent QLaurent::shifted(int by) const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
  return r;
}

QLaurent QLaurent::reversed() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Int QLaurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Int QLaurent::leading_coeff() const {
  if (terms_.empty()) throw arithmetic_error("leading_coeff of zero");
  return terms_.rbegin()->second;
}

Int QLaurent::trailing_coeff() const {
  if (terms_.empty()) throw arithmetic_error("trailing_coeff of zero");
  return terms_.begin()->second;
}

QLaurent divide_exact(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero()) throw arithmetic_error("division by zero polynomial");
  if (num.is_zero()) return QLaurent();
  QLaurent rem = num;
  QLaurent quot;
  const int dmax = den.max_exp();
  const Int dlead = den.leading_coeff();
  // An exact quotient spans [num.min - den.min, num.max - den.max]; once the
  // working exponent drops below that floor the division cannot be exact
  // (otherwise Laurent division would continue into an infinite series).
  const int e_floor = num.min_exp() - den.min_exp();
  while (!rem.is_zero()) {
    const int rmax = rem.max_exp();
    const Int rlead = rem.leading_coeff();
    Int c = rlead / dlead;
    if (c * dlead != rlead)
      throw arithmetic_error("inexact coefficient in polynomial division");
    const int e = rmax - dmax;
    if (e < e_floor)
      throw arithmetic_error("nonzero remainder in polynomial division");
    quot.add_term(e, c);
    rem -= den * QLaurent::monomial(c, e);
    if (!rem.is_zero() && rem.max_exp() >= rmax)
      throw arithmetic_error("polynomial division failed to reduce degree");
  }
  return quot;
}

std::pair<QLaurent, int> normalize_up_to_monomial(const QLaurent& p) {
  if (p.is_zero()) return {p, 0};
  int m = p.min_exp();
  return {p.shifted(-m), m};
}

bool equal_up_to_monomial(const QLaurent& p, const QLaurent& q,
                          bool allow_sign) {
  QLaurent pn = normalize_up_to_monomial(p).first;
  QLaurent qn = normalize_up_to_monomial(q).first;
  if (pn == qn) return true;
  if (allow_sign && pn == -qn) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial gcd (primitive pseudo-remainder sequence on Z[q]).

namespace {

Int int_content(const QLaurent& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
  return g;  // nonnegative
}

QLaurent divide_by_int(const QLaurent& p, const Int& g) {
  QLaurent r;
  for (const auto& [e, c] : p.terms()) {
    Int d = c / g;
    if (d * g != c) throw arithmetic_error("inexact content division");
    r.add_term(e, d);
  }
  return r;
}

QLaurent primitive_part(const QLaurent& p) {
  if (p.is_zero()) return p;
  Int g = int_content(p);
  return divide_by_int(p, g);
}

// Pseudo-remainder of x by y (both ordinary polynomials, min exp >= 0).
QLaurent pseudo_rem(QLaurent x, const QLaurent& y) {
  const int dy = y.max_exp();
  const Int ly = y.leading_coeff();
  while (!x.is_zero() && x.max_exp() >= dy) {
    const int dx = x.max_exp();
    const Int lx = x.leading_coeff();
    // Scale x by ly so the leading term cancels exactly.
    x = x * QLaurent(ly) - y * QLaurent::monomial(lx, dx - dy);
    if (!x.is_zero() && x.max_exp() >= dx)
      throw arithmetic_error("pseudo-remainder failed to reduce degree");
  }
  return x;
}

}  // namespace

QLaurent poly_gcd(const QLaurent& x, const QLaurent& y) {
  if (x.is_zero()) return y.is_zero() ? y : primitive_part(y.shifted(-y.min_exp()));
  if (y.is_zero()) return primitive_part(x.shifted(-x.min_exp()));
  QLaurent a = primitive_part(x.shifted(-x.min_exp()));
  QLaurent b = primitive_part(y.shifted(-y.min_exp()));
  if (a.max_exp() < b.max_exp()) std::swap(a, b);
  while (!b.is_zero()) {
    QLaurent r = pseudo_rem(a, b);
    a = b;
    b = r.is_zero() ? r : primitive_part(r.shifted(-r.min_exp()));
    if (!b.is_zero() && a.max_exp() < b.max_exp()) std::swap(a, b);
  }
  // Normalize sign: positive leading coefficient.
  if (a.leading_coeff() < 0) a = -a;
  return a;
}

// ---------------------------------------------------------------------------
// QRational

QRational::QRational(QLaurent n, QLaurent d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw arithmetic_error("rational with zero denominator");
  canonicalize();
}

void QRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = QLaurent(Int(1));
    return;
  }
  // Peel off powers of q: work with min-exponent-0 polynomials and keep the
  // net shift on the numerator so the denominator's lowest exponent is 0.
  const int ns = num_.min_exp();
  const int ds = den_.min_exp();
  QLaurent n0 = num_.shifted(-ns);
  QLaurent d0 = den_.shifted(-ds);
  // Integer content.
  Int cn = int_content(n0);
  Int cd = int_content(d0);
  Int cg = boost::multiprecision::gcd(cn, cd);
  if (cg > 1) {
    n0 = divide_by_int(n0, cg);
    d0 = divide_by_int(d0, cg);
  }
  // Polynomial part.
  QLaurent g = poly_gcd(n0, d0);
  if (!(g == QLaurent(Int(1)))) {
    n0 = divide_exact(n0, g);
    d0 = divide_exact(d0, g);
    if (d0.min_exp() != 0) {  // re-anchor after division
      n0 = n0.shifted(-d0.min_exp());
      d0 = d0.shifted(-d0.min_exp());
    }
  }
  // Sign: lowest nonzero denominator coefficient positive.
  if (d0.trailing_coeff() < 0) {
    n0 = -n0;
    d0 = -d0;
  }
  num_ = n0.shifted(ns - ds);
  den_ = d0;
}

const QLaurent& QRational::as_polynomial() const {
  if (!is_polynomial())
    throw arithmetic_error("rational value is not a Laurent polynomial: (" +
                           num_.str() + ")/(" + den_.str() + ")");
  return num_;
}

QRational& QRational::operator+=(const QRational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QRational& QRational::operator*=(const QRational& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

QRational& QRational::operator/=(const QRational& o) {
  if (o.is_zero()) throw arithmetic_error("division by zero rational");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

// ---------------------------------------------------------------------------
// Quantum symbols

QLaurent quantum_integer(int n) {
  QLaurent r;
  const int m = n < 0 ? -n : n;
  const Int c = n < 0 ? Int(-1) : Int(1);
  for (int e = m - 1; e >= 1 - m; e -= 2) r.add_term(e, c);
  return r;
}

QLaurent quantum_factorial(int n) {
  if (n < 0) {
    QLaurent r = quantum_factorial(-n);
    return (-n) % 2 == 0 ? r : -r;
  }
  QLaurent r{Int(1)};
  for (int m = 2; m <= n; ++m) r *= quantum_integer(m);
  return r;
}

QLaurent quantum_binomial(int h, int k) {
  if (k < 0) return QLaurent();
  if (h >= 0 && k > h) return QLaurent();
  QLaurent numer{Int(1)};
  for (int l = 0; l < k; ++l) numer *= quantum_integer(h - l);
  return divide_exact(numer, quantum_factorial(k));
}

QLaurent quantum_binomial_plus(int h, int k) {
  return quantum_binomial(h, k).shifted(k * (h - k));
}

QLaurent quantum_binomial_minus(int h, int k) {
  return quantum_binomial(h, k).shifted(-k * (h - k));
}

// ---------------------------------------------------------------------------
// StablePoly

void StablePoly::add_term(Key k, const QRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StablePoly& StablePoly::operator+=(const StablePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

StablePoly& StablePoly::operator-=(const StablePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

StablePoly operator*(const StablePoly& x, const StablePoly& y) {
  StablePoly r;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      r.add_term({kx.first + ky.first, kx.second + ky.second}, cx * cy);
  return r;
}

QLaurent StablePoly::specialize(int N, int m) const {
  QRational acc;
  for (const auto& [k, c] : terms_) {
    QRational mono(QLaurent::monomial(Int(1), k.first * N + k.second * m));
    acc += mono * c;
  }
  return acc.as_polynomial();
}

std::map<int, QRational> StablePoly::specialize_uv() const {
  // a = 1, s = u/v, q = v: the s-exponent becomes the u-exponent and
  // contributes v^{-es}; q-exponents stay in the rational part.
  std::map<int, QRational> r;
  for (const auto& [k, c] : terms_) {
    const int es = k.second;
    QRational v = c * QRational(QLaurent::monomial(Int(1), -es));
    auto it = r.find(es);
    if (it == r.end()) {
      if (!v.is_zero()) r.emplace(es, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

std::pair<StablePoly, StablePoly::Key> StablePoly::normalize_as() const {
  if (terms_.empty()) return {*this, {0, 0}};
  int ma = terms_.begin()->first.first;
  int ms = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) {
    ma = std::min(ma, k.first);
    ms = std::min(ms, k.second);
  }
  StablePoly r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(Key{k.first - ma, k.second - ms}, c);
  return {r, {ma, ms}};
}

StablePoly a_binomial(int b, int c) {
  StablePoly r{QRational(QLaurent(Int(1)))};
  for (int k = 1; k <= c; ++k) {
    StablePoly factor;
    // (a q^{b-k+1} - a^{-1} q^{-b+k-1}) / (q^k - q^{-k})
    QLaurent dk;
    dk.add_term(k, Int(1));
    dk.add_term(-k, Int(-1));
    QRational inv(QLaurent(Int(1)), dk);
    factor.add_term({1, 0}, inv * QRational(QLaurent::monomial(Int(1), b - k + 1)));
    factor.add_term({-1, 0}, inv * QRational(QLaurent::monomial(Int(-1), -b + k - 1)));
    r *= factor;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Substitutions

LaurentPoly4 substitute_a_qpow(const LaurentPoly4& p, int N) {
  LaurentPoly4 r;
  for (const auto& [e, c] : p.terms())
    r.add_term(ExpVec{0, e.q + N * e.a, e.s, e.t}, c);
  return r;
}

LaurentPoly4 substitute_s_qpow(const LaurentPoly4& p, int m) {
  LaurentPoly4 r;
  for (const auto& [e, c] : p.terms())
    r.add_term(ExpVec{e.a, e.q + m * e.s, 0, e.t}, c);
  return r;
}

LaurentPoly4 substitute_t_sign(const LaurentPoly4& p, int sgn) {
  if (sgn != 1 && sgn != -1)
    throw arithmetic_error("t substitution must be +1 or -1");
  LaurentPoly4 r;
  for (const auto& [e, c] : p.terms()) {
    Int cc = (sgn == -1 && (e.t % 2 != 0)) ? Int(-c) : c;
    r.add_term(ExpVec{e.a, e.q, e.s, 0}, cc);
  }
  return r;
}

QLaurent to_qlaurent(const LaurentPoly4& p) {
  QLaurent r;
  for (const auto& [e, c] : p.terms()) {
    if (e.a != 0 || e.s != 0 || e.t != 0)
      throw arithmetic_error("polynomial depends on variables other than q");
    r.add_term(e.q, c);
  }
  return r;
}

LaurentPoly4 from_qlaurent(const QLaurent& p) {
  LaurentPoly4 r;
  for (const auto& [e, c] : p.terms()) r.add_term(ExpVec{0, e, 0, 0}, c);
  return r;
}

// ---------------------------------------------------------------------------
// MVAPoly

void MVAPoly::add_term(Key k, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MVAPoly& MVAPoly::operator+=(const MVAPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MVAPoly& MVAPoly::operator-=(const MVAPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MVAPoly operator*(const MVAPoly& x, const MVAPoly& y) {
  MVAPoly r;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      r.add_term({kx.first + ky.first, kx.second + ky.second}, cx * cy);
  return r;
}

MVAPoly MVAPoly::operator-() const {
  MVAPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

MVAPoly divide_exact_one_minus_u2(const MVAPoly& p) {
  // Per v-exponent the u-Laurent part must divide exactly by (1 - u^2).
  std::map<int, QLaurent> rows;
  for (const auto& [k, c] : p.terms()) rows[k.second].add_term(k.first, c);
  MVAPoly r;
  QLaurent den;
  den.add_term(0, Int(1));
  den.add_term(2, Int(-1));
  for (const auto& [ev, row] : rows) {
    QLaurent quot = divide_exact(row, den);
    for (const auto& [eu, c] : quot.terms()) r.add_term({eu, ev}, c);
  }
  return r;
}

std::pair<MVAPoly, MVAPoly::Key> normalize_up_to_monomial(const MVAPoly& p) {
  if (p.is_zero()) return {p, {0, 0}};
  int mu = p.terms().begin()->first.first;
  int mv = p.terms().begin()->first.second;
  for (const auto& [k, c] : p.terms()) {
    mu = std::min(mu, k.first);
    mv = std::min(mv, k.second);
  }
  MVAPoly r;
  for (const auto& [k, c] : p.terms())
    r.add_term({k.first - mu, k.second - mv}, c);
  return {r, {mu, mv}};
}

bool equal_up_to_monomial(const MVAPoly& p, const MVAPoly& q, bool allow_sign) {
  MVAPoly pn = normalize_up_to_monomial(p).first;
  MVAPoly qn = normalize_up_to_monomial(q).first;
  if (pn == qn) return true;
  if (allow_sign && pn == -qn) return true;
  return false;
}

// ---------------------------------------------------------------------------
// GroupWord and Fox calculus

GroupWord GroupWord::inverse() const {
  GroupWord r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back({it->gen, -it->sign});
  return r;
}

GroupWord operator*(const GroupWord& x, const GroupWord& y) {
  GroupWord r = x;
  r.letters.insert(r.letters.end(), y.letters.begin(), y.letters.end());
  return r;
}

MVAPoly abelianize(const GroupWord& w) {
  int eu = 0, ev = 0;
  for (const auto& l : w.letters) {
    if (l.gen == GroupLetter::Gen::U)
      eu += 2 * l.sign;
    else
      ev += 2 * l.sign;
  }
  return MVAPoly::monomial(Int(1), eu, ev);
}

MVAPoly fox_derivative(const GroupWord& w, GroupLetter::Gen gen) {
  MVAPoly result;
  int eu = 0, ev = 0;  // abelianized prefix
  for (const auto& l : w.letters) {
    if (l.gen == gen) {
      if (l.sign > 0) {
        // d(g) = 1, attached to the prefix.
        result.add_term({eu, ev}, Int(1));
      } else {
        // d(g^{-1}) = -g^{-1}; prefix * g^{-1} is the prefix after the letter.
        int du = eu + (l.gen == GroupLetter::Gen::U ? 2 * l.sign : 0);
        int dv = ev + (l.gen == GroupLetter::Gen::V ? 2 * l.sign : 0);
        result.add_term({du, dv}, Int(-1));
      }
    }
    if (l.gen == GroupLetter::Gen::U)
      eu += 2 * l.sign;
    else
      ev += 2 * l.sign;
  }
  return result;
}

}  // namespace twistfold
