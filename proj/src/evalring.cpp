#include "yinv/evalring.hpp"

#include <sstream>
#include <stdexcept>

#include "yinv/bracket.hpp"

namespace yinv {

ExtScalar ExtScalar::from_rational(const mpq_class& t, const mpq_class& v) {
  ExtScalar r(t);
  r.re_[E1] = v;
  return r;
}

ExtScalar ExtScalar::basis(const mpq_class& t, ExtBasis b, bool imaginary,
                           const mpq_class& coeff) {
  ExtScalar r(t);
  (imaginary ? r.im_[b] : r.re_[b]) = coeff;
  return r;
}

bool ExtScalar::is_zero() const {
  for (int i = 0; i < 4; ++i)
    if (re_[i] != 0 || im_[i] != 0) return false;
  return true;
}

bool ExtScalar::is_rational() const {
  for (int i = 0; i < 4; ++i) {
    if (im_[i] != 0) return false;
    if (i != E1 && re_[i] != 0) return false;
  }
  return true;
}

void ExtScalar::check_compatible(const ExtScalar& o) const {
  if (is_zero() || o.is_zero()) return;
  if (t_ != o.t_)
    throw std::invalid_argument("mixing extension scalars over different t");
}

ExtScalar ExtScalar::operator-() const {
  ExtScalar r = *this;
  for (int i = 0; i < 4; ++i) {
    r.re_[i] = -r.re_[i];
    r.im_[i] = -r.im_[i];
  }
  return r;
}

ExtScalar ExtScalar::operator+(const ExtScalar& o) const {
  ExtScalar r = *this;
  r += o;
  return r;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  check_compatible(o);
  if (is_zero()) t_ = o.t_;
  for (int i = 0; i < 4; ++i) {
    re_[i] += o.re_[i];
    im_[i] += o.im_[i];
  }
  return *this;
}

ExtScalar ExtScalar::operator-(const ExtScalar& o) const {
  return *this + (-o);
}

ExtScalar ExtScalar::operator*(const ExtScalar& o) const {
  check_compatible(o);
  const mpq_class& t = is_zero() ? o.t_ : t_;
  if (t == 0) throw std::domain_error("extension ring needs t != 0");
  mpq_class u = 1 + 1 / t;  // s1^2
  mpq_class v = 3 - 1 / t;  // s2^2
  // Structure constants: basis_a * basis_b = scale * basis_{tab}.
  static const int tab[4][4] = {
      {E1, ES1, ES2, ES12},
      {ES1, E1, ES12, ES2},
      {ES2, ES12, E1, ES1},
      {ES12, ES2, ES1, E1},
  };
  auto scale = [&](int a, int b) -> mpq_class {
    // Product of s1-exponents and s2-exponents folded by the relations.
    int s1 = (a == ES1 || a == ES12 ? 1 : 0) + (b == ES1 || b == ES12 ? 1 : 0);
    int s2 = (a == ES2 || a == ES12 ? 1 : 0) + (b == ES2 || b == ES12 ? 1 : 0);
    mpq_class r = 1;
    if (s1 == 2) r *= u;
    if (s2 == 2) r *= v;
    return r;
  };
  ExtScalar out(t);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      mpq_class s = scale(a, b);
      if (s == 0) continue;
      int c = tab[a][b];
      // (x + iy)(x' + iy') componentwise on the a,b basis pair.
      out.re_[c] += s * (re_[a] * o.re_[b] - im_[a] * o.im_[b]);
      out.im_[c] += s * (re_[a] * o.im_[b] + im_[a] * o.re_[b]);
    }
  return out;
}

bool ExtScalar::operator==(const ExtScalar& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (is_zero() != o.is_zero()) return false;
  return t_ == o.t_ && re_ == o.re_ && im_ == o.im_;
}

ExtScalar ExtScalar::conj() const {
  ExtScalar r = *this;
  for (int i = 0; i < 4; ++i) r.im_[i] = -r.im_[i];
  return r;
}

ExtScalar ExtScalar::int_power(long e) const {
  if (e == 0) return from_rational(t_ == 0 ? mpq_class(1) : t_, 1);
  ExtScalar base = *this;
  if (e < 0) {
    if (is_rational()) {
      if (re_[E1] == 0) throw std::domain_error("inverse of zero");
      base = from_rational(t_, 1 / re_[E1]);
    } else if ((*this * conj()) == from_rational(t_, 1)) {
      base = conj();
    } else {
      throw std::domain_error("negative power of a non-invertible element");
    }
    e = -e;
  }
  ExtScalar r = from_rational(base.t(), 1);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string ExtScalar::str() const {
  if (is_zero()) return "0";
  static const char* names[4] = {"", "s1", "s2", "s1*s2"};
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const mpq_class& c, bool imag, int b) {
    if (c == 0) return;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    mpq_class a = abs(c);
    bool plain = !imag && b == E1;
    if (a != 1 || plain) {
      os << a.get_str();
      if (!plain) os << "*";
    }
    if (imag) {
      os << "i";
      if (b != E1) os << "*";
    }
    os << names[b];
  };
  for (int b = 0; b < 4; ++b) {
    emit(re_[b], false, b);
    emit(im_[b], true, b);
  }
  return os.str();
}

ExtScalar z_of(const mpq_class& t, SignPair eps) {
  if (t == 0) throw std::domain_error("z(t) needs t != 0");
  if ((eps.eps1 != 1 && eps.eps1 != -1) || (eps.eps2 != 1 && eps.eps2 != -1))
    throw std::invalid_argument("sign pair components must be +-1");
  ExtScalar r(t);
  r.re(ES2) = mpq_class(eps.eps1, 2);
  r.im(ES1) = mpq_class(eps.eps2, 2);
  return r;
}

ExtScalar eval_phi(const BracketPoly& p, const mpq_class& t, SignPair eps) {
  ExtScalar z = z_of(t, eps);
  ExtScalar zbar = z.conj();
  ExtScalar out(t);
  for (auto& [key, laurent] : p.terms()) {
    ExtScalar coeff(t);
    for (auto& [e, c] : laurent.terms()) {
      ExtScalar zp = e >= 0 ? z.int_power(e) : zbar.int_power(-e);
      coeff += zp * ExtScalar::from_rational(t, mpq_class(c));
    }
    mpq_class tpow = 1;
    for (int i = 0; i < key.first + key.second; ++i) tpow *= t;
    out += coeff * ExtScalar::from_rational(t, tpow);
  }
  return out;
}

ExtScalar K_invariant(const MarkedGraphDiagram& d, const mpq_class& t,
                      KMode mode, SignPair eps) {
  BracketPoly p = mode == KMode::Oriented ? ll_normalized(d)
                                          : ll(d, kauffman_evaluator());
  return eval_phi(p, t, eps);
}

// ---------------------------------------------------------------------------
// modular reduction

ModExtScalar::ModExtScalar(long modulus, const std::array<long, 8>& residues)
    : modulus_(modulus), residues_(residues) {
  for (auto& r : residues_) r = ((r % modulus_) + modulus_) % modulus_;
}

bool ModExtScalar::is_zero() const {
  for (long r : residues_)
    if (r != 0) return false;
  return true;
}

ModExtScalar ModExtScalar::operator+(const ModExtScalar& o) const {
  if (modulus_ != o.modulus_)
    throw std::invalid_argument("modulus mismatch");
  std::array<long, 8> r{};
  for (int i = 0; i < 8; ++i) r[i] = (residues_[i] + o.residues_[i]) % modulus_;
  return ModExtScalar(modulus_, r);
}

ModExtScalar ModExtScalar::operator*(const ModExtScalar& o) const {
  if (modulus_ != o.modulus_)
    throw std::invalid_argument("modulus mismatch");
  // Index = basis (0..3) + 4*imag; i^2 = -1, s1^2 = 3, s2^2 = 1 mod 2n-1.
  static const int tab[4][4] = {
      {E1, ES1, ES2, ES12},
      {ES1, E1, ES12, ES2},
      {ES2, ES12, E1, ES1},
      {ES12, ES2, ES1, E1},
  };
  auto scale = [&](int a, int b) -> long {
    int s1 = (a == ES1 || a == ES12 ? 1 : 0) + (b == ES1 || b == ES12 ? 1 : 0);
    int s2 = (a == ES2 || a == ES12 ? 1 : 0) + (b == ES2 || b == ES12 ? 1 : 0);
    long r = 1;
    if (s1 == 2) r *= 3;
    if (s2 == 2) r *= 1;
    return r;
  };
  std::array<long, 8> out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      long s = scale(a, b) % modulus_;
      int c = tab[a][b];
      long ra = residues_[a], ia = residues_[a + 4];
      long rb = o.residues_[b], ib = o.residues_[b + 4];
      out[c] = (out[c] + s * (ra * rb % modulus_ - ia * ib % modulus_)) %
               modulus_;
      out[c + 4] =
          (out[c + 4] + s * (ra * ib % modulus_ + ia * rb % modulus_)) %
          modulus_;
    }
  return ModExtScalar(modulus_, out);
}

namespace {

long mod_inverse(long a, long m) {
  long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("denominator not coprime to 2n-1");
  return ((t % m) + m) % m;
}

}  // namespace

long fold_rational_mod(const mpq_class& q, long n) {
  if (n < 2) throw std::domain_error("reduce_mod needs n >= 2");
  long m = 2 * n - 1;
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class nm = num % m;
  long p = nm.get_si();
  mpz_class dm = den % m;
  long d = dm.get_si();
  long inv = mod_inverse(d, m);
  return (((p % m) * inv) % m + m) % m;
}

ModExtScalar reduce_mod(const ExtScalar& v, long n) {
  if (n < 2) throw std::domain_error("reduce_mod needs n >= 2");
  if (!v.is_zero() && v.t() != mpq_class(n))
    throw std::domain_error("reduce_mod requires the scalar's t to equal n");
  long m = 2 * n - 1;
  std::array<long, 8> r{};
  for (int b = 0; b < 4; ++b) {
    r[b] = fold_rational_mod(v.re(static_cast<ExtBasis>(b)), n);
    r[b + 4] = fold_rational_mod(v.im(static_cast<ExtBasis>(b)), n);
  }
  return ModExtScalar(m, r);
}

std::string format_modular(const ModExtScalar& v) {
  static const char* names[8] = {"",   "i",    "s1",    "i s1",
                                 "s2", "i s2", "s1 s2", "i s1 s2"};
  // Display order: 1, i, s1, i s1, s2, ...
  static const int order[8] = {0, 4, 1, 5, 2, 6, 3, 7};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    int idx = order[k];
    long r = v.residues()[idx];
    if (r == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << r << "]";
    if (names[k][0] != '\0') os << " " << names[k];
  }
  if (first) return "[0]";
  return os.str();
}

}  // namespace yinv
