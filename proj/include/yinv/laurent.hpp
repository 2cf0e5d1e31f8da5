#ifndef YINV_LAURENT_HPP
#define YINV_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace yinv {

// Laurent polynomial in one variable A with integer coefficients.
// Zero coefficients are never stored; equality is map equality.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) { set(0, mpz_class(c)); }
  explicit LaurentPoly(const mpz_class& c) { set(0, c); }

  static LaurentPoly monomial(const mpz_class& c, long exp);
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(1); }
  // delta = -A^2 - A^-2, the circle factor of the Kauffman bracket.
  static LaurentPoly delta();
  // alpha = -A^3, the curl factor.
  static LaurentPoly alpha();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Units of Z[A^{+-1}] are +-A^k.
  bool is_unit() const;

  const std::map<long, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(long exp) const;
  void set(long exp, const mpz_class& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact power. Negative exponents require the base to be a unit.
  LaurentPoly pow(long e) const;

  // Terms with exponent descending, e.g. "-A^16 + A^12 + A^4" or "1 - A^-4".
  std::string str() const;

private:
  std::map<long, mpz_class> terms_;
};

}  // namespace yinv

#endif
