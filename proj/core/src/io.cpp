#include "twistfold/io.h"

#include <sstream>

namespace twistfold {

std::string render_term(
    const Int& coeff,
    const std::vector<std::pair<const char*, int>>& vars) {
  std::ostringstream out;
  out << coeff;
  for (const auto& [name, exp] : vars) {
    if (exp == 0) continue;
    out << '*' << name << '^' << exp;
  }
  return out.str();
}

namespace {

template <typename Terms, typename VarsOf>
std::string render_poly(const Terms& terms, VarsOf vars_of) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) out += " + ";
    first = false;
    out += render_term(c, vars_of(e));
  }
  return out;
}

}  // namespace

std::string LaurentPoly4::str() const {
  return render_poly(terms_, [](const ExpVec& e) {
    return std::vector<std::pair<const char*, int>>{
        {"a", e.a}, {"q", e.q}, {"s", e.s}, {"t", e.t}};
  });
}

std::string QLaurent::str() const {
  return render_poly(terms_, [](int e) {
    return std::vector<std::pair<const char*, int>>{{"q", e}};
  });
}

std::string QRational::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string StablePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string coeff = c.str();
    // Parenthesize multi-term or rational coefficients.
    if (!c.is_polynomial() || c.num().terms().size() > 1 ||
        (!c.num().is_zero() && c.num().min_exp() != 0))
      coeff = "(" + coeff + ")";
    out += coeff;
    if (k.first != 0) out += "*a^" + std::to_string(k.first);
    if (k.second != 0) out += "*s^" + std::to_string(k.second);
  }
  return out;
}

std::string MVAPoly::str() const {
  return render_poly(terms_, [](const Key& k) {
    return std::vector<std::pair<const char*, int>>{{"u", k.first},
                                                    {"v", k.second}};
  });
}

std::string GroupWord::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    out += (l.gen == GroupLetter::Gen::U) ? 'u' : 'v';
    out += (l.sign > 0) ? "^2" : "^-2";
  }
  return out;
}

}  // namespace twistfold
