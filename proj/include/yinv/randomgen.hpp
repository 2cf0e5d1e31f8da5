#ifndef YINV_RANDOMGEN_HPP
#define YINV_RANDOMGEN_HPP

#include <cstdint>
#include <random>

#include "yinv/diagram.hpp"
#include "yinv/moves.hpp"

namespace yinv {

// Closure of a random braid word: always a valid, orientable diagram with
// every strand flowing upward. Crossing count is at most max_crossings.
MarkedGraphDiagram random_braid_closure(std::mt19937& rng, int max_crossings,
                                        int max_strands = 4);

// A random applicable insertion move (or an R3 where a triangle matches).
MoveSite random_move_site(std::mt19937& rng, const MarkedGraphDiagram& d,
                          bool allow_gamma6);

}  // namespace yinv

#endif
