#ifndef YINV_MOVES_HPP
#define YINV_MOVES_HPP

#include <string>
#include <vector>

#include "yinv/diagram.hpp"

namespace yinv {

// Local rewrites used to generate move-equivalent diagrams for the
// invariance property tests.
struct MoveSite {
  enum class Kind {
    R1Plus,          // positive kink on an edge
    R1Minus,         // negative kink on an edge
    R2,              // poke: first edge passes under the second
    R3,              // triangle slide at three crossings
    Gamma6,          // marked kink, multiplies <<.>>_N by (delta x + y)
    Gamma6Prime,     // marked kink, multiplies <<.>>_N by (x + delta y)
    DisjointCircle,  // adds a free loop
  };
  Kind kind;
  std::vector<int> edges;  // target edges for insertions
  std::vector<int> nodes;  // crossing triple for R3
};

// Insertion moves (R1, R2, Gamma6, Gamma6', disjoint circle); fresh edge
// labels, orientation extended when present.
MarkedGraphDiagram apply_insertion(const MarkedGraphDiagram& d,
                                   const MoveSite& site);

// Slides a strand across a crossing triangle; the three nodes must match
// the triangle pattern or the call fails.
MarkedGraphDiagram apply_r3(const MarkedGraphDiagram& d, const MoveSite& site);

MarkedGraphDiagram apply_move(const MarkedGraphDiagram& d,
                              const MoveSite& site);

// All node triples of d where apply_r3 would succeed.
std::vector<MoveSite> find_r3_sites(const MarkedGraphDiagram& d);

// Hand-transcribed before/after diagram pairs for the moves that are not
// generic rewrites.
struct MovePair {
  std::string move_id;  // "gamma4", "gamma4p", "gamma5", "gamma7", "gamma8"
  MarkedGraphDiagram before;
  MarkedGraphDiagram after;
};
std::vector<MovePair> catalog_move_pairs();

// Text form: one move per line, e.g. "r1+ edge 3", "r2 edges 3 5",
// "r3 nodes 0 1 2", "g6 edge 4", "g6' edge 1", "circle".
std::vector<MoveSite> parse_move_script(const std::string& text);

}  // namespace yinv

#endif
