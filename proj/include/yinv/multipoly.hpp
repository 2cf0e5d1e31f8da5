#ifndef YINV_MULTIPOLY_HPP
#define YINV_MULTIPOLY_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "yinv/laurent.hpp"

namespace yinv {

// Variables of the 4-variable ring Q[A,B,x,y], in precedence order.
enum Var { VA = 0, VB = 1, VX = 2, VY = 3 };

struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < 4; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  // Quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
};

// Graded reverse lexicographic order with precedence A > B > x > y.
// a < b iff deg a < deg b, or degrees tie and the rightmost differing
// exponent of a is larger.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 3; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

struct MonomialOrder {
  enum Kind { Grevlex } kind = Grevlex;
};

// Polynomial in Q[A,B,x,y] stored sparsely under the grevlex order.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(const mpq_class& c) { set(Monomial{}, c); }
  explicit MultiPoly(long c) { set(Monomial{}, mpq_class(c)); }

  static MultiPoly term(const mpq_class& c, const Monomial& m);
  static MultiPoly var(Var v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpq_class, GrevlexLess>& terms() const {
    return terms_;
  }
  mpq_class coeff(const Monomial& m) const;
  void set(const Monomial& m, const mpq_class& c);

  // Leading term under grevlex; polynomial must be nonzero.
  const Monomial& leading_monomial() const;
  const mpq_class& leading_coeff() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly scaled(const mpq_class& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Canonical rendering: terms by total degree descending, ties broken
  // lexicographically on (A,B,x,y); e.g. "-2*A^2*x*y". Part of the golden
  // test contract.
  std::string str() const;

private:
  std::map<Monomial, mpq_class, GrevlexLess> terms_;
};

// Substitutes B for A^-1: c*A^k maps to c*A^k (k>=0) or c*B^-k (k<0).
MultiPoly laurent_to_AB(const LaurentPoly& p);

}  // namespace yinv

#endif
