#include "yinv/bracketpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace yinv {

BracketPoly BracketPoly::term(const LaurentPoly& c, int xdeg, int ydeg) {
  if (xdeg < 0 || ydeg < 0) throw std::domain_error("negative x/y degree");
  BracketPoly p;
  p.add(xdeg, ydeg, c);
  return p;
}

LaurentPoly BracketPoly::coeff(int xdeg, int ydeg) const {
  auto it = terms_.find({xdeg, ydeg});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void BracketPoly::add(int xdeg, int ydeg, const LaurentPoly& c) {
  auto it = terms_.find({xdeg, ydeg});
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(Key{xdeg, ydeg}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& o) {
  for (auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

BracketPoly BracketPoly::operator+(const BracketPoly& o) const {
  BracketPoly r = *this;
  r += o;
  return r;
}

BracketPoly BracketPoly::operator*(const BracketPoly& o) const {
  BracketPoly r;
  for (auto& [k1, c1] : terms_)
    for (auto& [k2, c2] : o.terms_)
      r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

BracketPoly BracketPoly::scalar_mul(const LaurentPoly& c) const {
  BracketPoly r;
  if (c.is_zero()) return r;
  for (auto& [k, c0] : terms_) r.add(k.first, k.second, c0 * c);
  return r;
}

std::string BracketPoly::str() const {
  if (terms_.empty()) return "0";
  // (x,y)-degree graded, x-degree descending within a degree.
  std::vector<std::pair<Key, LaurentPoly>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : ts) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool simple = c.terms().size() == 1 && c.terms().begin()->second > 0;
    bool unit = c.is_one();
    bool constant = k.first == 0 && k.second == 0;
    if (constant) {
      os << (c.terms().size() > 1 ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) {
      os << (simple ? cs : "(" + cs + ")") << "*";
    }
    if (k.first > 0) {
      os << "x";
      if (k.first != 1) os << "^" << k.first;
      if (k.second > 0) os << "*";
    }
    if (k.second > 0) {
      os << "y";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

MultiPoly to_multipoly(const BracketPoly& p) {
  MultiPoly r;
  for (auto& [k, c] : p.terms()) {
    Monomial xy;
    xy.e[VX] = k.first;
    xy.e[VY] = k.second;
    r += laurent_to_AB(c) * MultiPoly::term(mpq_class(1), xy);
  }
  return r;
}

}  // namespace yinv
