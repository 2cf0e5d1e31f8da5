#ifndef YINV_BRACKETPOLY_HPP
#define YINV_BRACKETPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "yinv/laurent.hpp"
#include "yinv/multipoly.hpp"

namespace yinv {

// Polynomial in commuting variables x, y with LaurentPoly coefficients.
// Houses [[D]], <<D>> and <<D>>_N; x,y degrees are non-negative.
class BracketPoly {
public:
  using Key = std::pair<int, int>;  // (x-degree, y-degree)

  BracketPoly() = default;

  static BracketPoly term(const LaurentPoly& c, int xdeg, int ydeg);
  static BracketPoly constant(const LaurentPoly& c) { return term(c, 0, 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(int xdeg, int ydeg) const;
  void add(int xdeg, int ydeg, const LaurentPoly& c);

  BracketPoly operator+(const BracketPoly& o) const;
  BracketPoly operator*(const BracketPoly& o) const;
  BracketPoly& operator+=(const BracketPoly& o);
  BracketPoly scalar_mul(const LaurentPoly& c) const;
  bool operator==(const BracketPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BracketPoly& o) const { return !(*this == o); }

  // e.g. "x^2 + (-2*A^2 - 2*A^-2)*x*y + y^2"
  std::string str() const;

private:
  std::map<Key, LaurentPoly> terms_;
};

// Applies laurent_to_AB coefficient-wise into Q[A,B,x,y].
MultiPoly to_multipoly(const BracketPoly& p);

}  // namespace yinv

#endif
