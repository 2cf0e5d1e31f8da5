// Scratch validation of catalog transcriptions against the golden values.
#include <iostream>
#include "yinv/bracket.hpp"
#include "yinv/catalog.hpp"
#include "yinv/groebner.hpp"

using namespace yinv;

int main() {
  // Groebner basis first.
  try {
    auto& basis = kauffman_basis();
    std::cout << "basis:\n";
    for (auto& g : basis) std::cout << "  " << g.str() << "\n";
  } catch (const std::exception& ex) {
    std::cout << "groebner failed: " << ex.what() << "\n";
  }
  for (auto& e : catalog()) {
    std::cout << "== " << e.name << "\n";
    try {
      if (e.is_classical()) {
        LinkDiagram L(e.diagram);
        LaurentPoly got = normalized_bracket(L);
        std::cout << "  <.>_N got    " << got.str() << "\n";
        std::cout << "  <.>_N golden " << e.bracket_golden->str() << "\n";
        std::cout << (got == *e.bracket_golden ? "  OK" : "  MISMATCH") << "\n";
        continue;
      }
      if (e.ll_golden) {
        BracketPoly got = e.ll_is_normalized ? ll_normalized(e.diagram)
                                             : ll(e.diagram);
        std::cout << "  ll got    " << got.str() << "\n";
        std::cout << "  ll golden " << e.ll_golden->str() << "\n";
        std::cout << (got == *e.ll_golden ? "  OK" : "  MISMATCH") << "\n";
      }
      if (e.k_golden) {
        mpq_class t(3);
        ExtScalar got = K_invariant(
            e.diagram, t, e.k_is_normalized ? KMode::Oriented : KMode::Unoriented);
        ExtScalar want = e.k_golden(t);
        std::cout << "  K(3) got    " << got.str() << "\n";
        std::cout << "  K(3) golden " << want.str() << "\n";
        std::cout << (got == want ? "  K OK" : "  K MISMATCH") << "\n";
      }
    } catch (const std::exception& ex) {
      std::cout << "  ERROR: " << ex.what() << "\n";
    }
  }
  return 0;
}
