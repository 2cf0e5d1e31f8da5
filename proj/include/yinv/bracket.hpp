#ifndef YINV_BRACKET_HPP
#define YINV_BRACKET_HPP

#include <functional>
#include <string>

#include "yinv/bracketpoly.hpp"
#include "yinv/diagram.hpp"
#include "yinv/laurent.hpp"

namespace yinv {

// A regular or ambient isotopy invariant of link diagrams valued in
// Z[A^{+-1}], together with its curl factor alpha (a unit) and circle
// factor delta. The state sums below are generic over this interface.
struct LinkEvaluator {
  enum class Normalization { SelfWrithe, Writhe, None };

  std::string name;
  LaurentPoly alpha;
  LaurentPoly delta;
  Normalization normalization;
  std::function<LaurentPoly(const LinkDiagram&)> eval;
};

// Kauffman bracket: axioms (B1)-(B3), alpha = -A^3, delta = -A^2-A^-2.
const LinkEvaluator& kauffman_evaluator();
// Component counter [K] = A^{#components - 1}, alpha = 1, delta = A.
const LinkEvaluator& component_count_evaluator();

// Sum over all crossing smoothings; virtual crossings are transparent.
LaurentPoly kauffman_bracket(const LinkDiagram& d);
// Memoized skein recursion implementing (B3) directly; differential-test
// oracle for the state sum.
LaurentPoly kauffman_bracket_skein(const LinkDiagram& d);
// (-A^3)^{-w(L)} <L without orientation>.
LaurentPoly normalized_bracket(const LinkDiagram& d);

// [[D]](x,y): sum over marked-vertex states of eval(D_sigma) x^i y^j.
BracketPoly double_bracket(const MarkedGraphDiagram& d,
                           const LinkEvaluator& ev = kauffman_evaluator());
// <<D>> = alpha^{-sw(D)} [[D]]; errors on a half-integer self-writhe.
BracketPoly ll(const MarkedGraphDiagram& d,
               const LinkEvaluator& ev = kauffman_evaluator());
// <<D>>_N = (-A^3)^{-w(D)} sum_sigma <D_sigma~> x^i y^j (Kauffman bracket).
BracketPoly ll_normalized(const MarkedGraphDiagram& d);

// Thread cap for the state-sum enumeration (YINV_THREADS, default 1..4).
int state_sum_threads();

}  // namespace yinv

#endif
