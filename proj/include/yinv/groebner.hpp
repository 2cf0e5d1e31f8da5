#ifndef YINV_GROEBNER_HPP
#define YINV_GROEBNER_HPP

#include <vector>

#include "yinv/bracket.hpp"
#include "yinv/multipoly.hpp"

namespace yinv {

struct Ideal {
  std::vector<MultiPoly> generators;
};

// Remainder of f on division by the listed polynomials: no term of the
// result is divisible by any of their leading terms, and f minus the result
// lies in the generated ideal. Deterministic for a fixed listing.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& g,
                 const MonomialOrder& ord = {});

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const MonomialOrder& ord = {});

// Buchberger's algorithm with the coprime-head and chain criteria.
std::vector<MultiPoly> buchberger(const Ideal& ideal,
                                  const MonomialOrder& ord = {});

// The unique reduced monic Groebner basis, sorted by leading monomial
// ascending. Throws if the input is not a Groebner basis.
std::vector<MultiPoly> reduce_basis(const std::vector<MultiPoly>& g,
                                    const MonomialOrder& ord = {});

// True when every S-polynomial of the list reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& g,
                       const MonomialOrder& ord = {});

// Generators {(-A^2-B^2)x+y-1, x+(-A^2-B^2)y-1, (A^4+1+B^4)xy, AB-1}.
Ideal kauffman_ideal();
// Reduced grevlex basis of the Kauffman ideal (computed once and cached).
const std::vector<MultiPoly>& kauffman_basis();

// Normal form of <<D>> (unoriented) or <<D>>_N (oriented) modulo the
// Kauffman bracket ideal; an invariant of the presented surface-link.
enum class NormalFormMode { Unoriented, Oriented };
MultiPoly normal_form_invariant(const MarkedGraphDiagram& d,
                                NormalFormMode mode);

}  // namespace yinv

#endif
