#include <iostream>
#include "yinv/bracket.hpp"
#include "yinv/evalring.hpp"
#include "yinv/groebner.hpp"
#include "yinv/moves.hpp"

using namespace yinv;

int main() {
  for (auto& p : catalog_move_pairs()) {
    MarkedGraphDiagram b = p.before, a = p.after;
    b.orientation.clear(); a.orientation.clear();
    BracketPoly lb = ll(b), la = ll(a);
    std::cout << p.move_id << ": ll equal=" << (lb == la)
              << "  before=" << lb.str() << "\n";
    if (lb != la) std::cout << "   after=" << la.str() << "\n";
    // orientability of the pairs
    auto ob = try_orient(p.before), oa = try_orient(p.after);
    std::cout << "   orientable: before=" << (bool)ob << " after=" << (bool)oa << "\n";
  }
  // K-level difference for gamma8 should be divisible by 2t-1 but nonzero
  auto pairs = catalog_move_pairs();
  for (auto& p : pairs) {
    if (p.move_id != "gamma7" && p.move_id != "gamma8") continue;
    MarkedGraphDiagram b = p.before, a = p.after;
    b.orientation.clear(); a.orientation.clear();
    ExtScalar kb = K_invariant(b, mpq_class(2), KMode::Unoriented);
    ExtScalar ka = K_invariant(a, mpq_class(2), KMode::Unoriented);
    std::cout << p.move_id << " K(2) before=" << kb.str() << " after=" << ka.str() << "\n";
  }
}
