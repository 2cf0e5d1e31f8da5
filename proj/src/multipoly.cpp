#include "yinv/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yinv {

MultiPoly MultiPoly::term(const mpq_class& c, const Monomial& m) {
  MultiPoly p;
  p.set(m, c);
  return p;
}

MultiPoly MultiPoly::var(Var v, int exp) {
  Monomial m;
  m.e[v] = exp;
  return term(mpq_class(1), m);
}

mpq_class MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::set(const Monomial& m, const mpq_class& c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const mpq_class& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) {
    mpq_class s = coeff(m) + c;
    set(m, s);
  }
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      Monomial m = m1 * m2;
      mpq_class s = r.coeff(m) + c1 * c2;
      r.set(m, s);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

namespace {

// Display order: total degree descending, ties by lex on (A,B,x,y).
// This matches the worked normal forms such as
// -B^2*y^2 - A*y^2 + B^2*y + A*y + 1.
bool display_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = 0; i < 4; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, mpq_class>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](auto& a, auto& b) { return display_before(a.first, b.first); });
  static const char* names[4] = {"A", "B", "x", "y"};
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : ts) {
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    mpq_class a = abs(c);
    bool constant = m.degree() == 0;
    if (a != 1 || constant) {
      os << a.get_str();
      if (!constant) os << "*";
    }
    bool started = false;
    for (int i = 0; i < 4; ++i) {
      if (m.e[i] == 0) continue;
      if (started) os << "*";
      os << names[i];
      if (m.e[i] != 1) os << "^" << m.e[i];
      started = true;
    }
  }
  return os.str();
}

MultiPoly laurent_to_AB(const LaurentPoly& p) {
  MultiPoly r;
  for (auto& [e, c] : p.terms()) {
    Monomial m;
    if (e >= 0)
      m.e[VA] = static_cast<int>(e);
    else
      m.e[VB] = static_cast<int>(-e);
    mpq_class s = r.coeff(m) + mpq_class(c);
    r.set(m, s);
  }
  return r;
}

}  // namespace yinv
