#ifndef YINV_EVALRING_HPP
#define YINV_EVALRING_HPP

#include <gmpxx.h>

#include <array>
#include <string>

#include "yinv/bracketpoly.hpp"
#include "yinv/diagram.hpp"

namespace yinv {

// Basis of the extension ring over Q(i): 1, s1, s2, s1*s2 with
// s1^2 = 1 + 1/t and s2^2 = 3 - 1/t.
enum ExtBasis { E1 = 0, ES1 = 1, ES2 = 2, ES12 = 3 };

// Exact element a + b*i with a,b in Q[s1,s2]/(s1^2-..., s2^2-...); the
// parameter t rides along so the relations are always recomputed from it.
class ExtScalar {
 public:
  ExtScalar() = default;
  explicit ExtScalar(const mpq_class& t) : t_(t) {}

  static ExtScalar from_rational(const mpq_class& t, const mpq_class& v);
  static ExtScalar basis(const mpq_class& t, ExtBasis b, bool imaginary,
                         const mpq_class& coeff = 1);

  const mpq_class& t() const { return t_; }
  // Real / imaginary coefficient on a basis element.
  const mpq_class& re(ExtBasis b) const { return re_[b]; }
  const mpq_class& im(ExtBasis b) const { return im_[b]; }
  mpq_class& re(ExtBasis b) { return re_[b]; }
  mpq_class& im(ExtBasis b) { return im_[b]; }

  bool is_zero() const;
  bool is_rational() const;

  ExtScalar operator-() const;
  ExtScalar operator+(const ExtScalar& o) const;
  ExtScalar operator-(const ExtScalar& o) const;
  ExtScalar operator*(const ExtScalar& o) const;
  ExtScalar& operator+=(const ExtScalar& o);
  bool operator==(const ExtScalar& o) const;
  bool operator!=(const ExtScalar& o) const { return !(*this == o); }

  // Complex conjugation: i -> -i, fixing s1 and s2. A ring involution.
  ExtScalar conj() const;
  // Exact integer power. Negative powers need a rational or a unit-modulus
  // element (v * conj(v) = 1), where the inverse is the conjugate.
  ExtScalar int_power(long e) const;

  // e.g. "47/16 + 33/32*i*s1*s2"; "0" when zero.
  std::string str() const;

 private:
  mpq_class t_ = 0;
  std::array<mpq_class, 4> re_{};  // coefficients on 1, s1, s2, s1*s2
  std::array<mpq_class, 4> im_{};
  void check_compatible(const ExtScalar& o) const;
};

struct SignPair {
  int eps1 = 1, eps2 = 1;
};

// z_eps(t) = (eps1*sqrt(3-1/t) + eps2*i*sqrt(1+1/t)) / 2; z(t) for (1,1).
ExtScalar z_of(const mpq_class& t, SignPair eps = {});

// Substitutes A -> z_eps(t), A^-1 -> conj(z_eps(t)), x -> t, y -> t.
ExtScalar eval_phi(const BracketPoly& p, const mpq_class& t, SignPair eps = {});

enum class KMode { Unoriented, Oriented };
// K(D;t) = phi <<D>> (unoriented) or K(D;t)_N = phi <<D>>_N (oriented).
ExtScalar K_invariant(const MarkedGraphDiagram& d, const mpq_class& t,
                      KMode mode, SignPair eps = {});

// Image of an ExtScalar with t = n in the ring over Z/(2n-1): every
// rational coefficient p/q is folded to p * q^-1 mod 2n-1 (in particular
// 2^-1 = n and n^-1 = 2); s1, s2 stay formal basis symbols.
class ModExtScalar {
 public:
  ModExtScalar() = default;
  ModExtScalar(long modulus, const std::array<long, 8>& residues);

  long modulus() const { return modulus_; }
  // Residues in basis order 1, i, s1, i*s1, s2, i*s2, s1*s2, i*s1*s2.
  const std::array<long, 8>& residues() const { return residues_; }

  bool operator==(const ModExtScalar& o) const {
    return modulus_ == o.modulus_ && residues_ == o.residues_;
  }
  bool operator!=(const ModExtScalar& o) const { return !(*this == o); }
  bool is_zero() const;

  // Ring structure with the relations folded: s1^2 = 3, s2^2 = 1 (from
  // 1 + n^-1 = 1+2 and 3 - n^-1 = 3-2 mod 2n-1).
  ModExtScalar operator+(const ModExtScalar& o) const;
  ModExtScalar operator*(const ModExtScalar& o) const;

 private:
  long modulus_ = 0;
  std::array<long, 8> residues_{};
};

// Requires v.t == n exactly and every denominator coprime to 2n-1.
ModExtScalar reduce_mod(const ExtScalar& v, long n);
// Canonical fold of an exact rational into Z/(2n-1).
long fold_rational_mod(const mpq_class& q, long n);

// "[r0] + [r1] i + [r2] s1 + ..." omitting zero terms; "[0]" when zero.
std::string format_modular(const ModExtScalar& v);

}  // namespace yinv

#endif
