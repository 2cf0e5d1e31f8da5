#include "yinv/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace yinv {

LaurentPoly LaurentPoly::monomial(const mpz_class& c, long exp) {
  LaurentPoly p;
  p.set(exp, c);
  return p;
}

LaurentPoly LaurentPoly::delta() {
  LaurentPoly p;
  p.set(2, mpz_class(-1));
  p.set(-2, mpz_class(-1));
  return p;
}

LaurentPoly LaurentPoly::alpha() { return monomial(mpz_class(-1), 3); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const mpz_class& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

mpz_class LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::set(long exp, const mpz_class& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.terms_) {
    mpz_class s = coeff(e) + c;
    set(e, s);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      mpz_class s = r.coeff(e1 + e2) + c1 * c2;
      r.set(e1 + e2, s);
    }
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e == 0) return one();
  if (e < 0) {
    if (!is_unit())
      throw std::domain_error("negative power of a non-unit Laurent polynomial");
    long exp = terms_.begin()->first;
    const mpz_class& c = terms_.begin()->second;
    // (c A^k)^e with c = +-1
    mpz_class cc = (c == -1 && (e % 2 != 0)) ? mpz_class(-1) : mpz_class(1);
    return monomial(cc, exp * e);
  }
  LaurentPoly r = one(), base = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    mpz_class a = abs(c);
    long e = it->first;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace yinv
