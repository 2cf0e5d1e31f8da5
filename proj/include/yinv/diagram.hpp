#ifndef YINV_DIAGRAM_HPP
#define YINV_DIAGRAM_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace yinv {

enum class NodeKind { Crossing, Virtual, Marked };

// Slots are listed counterclockwise around the node. At a Crossing the
// strand slots[0]-slots[2] passes under slots[1]-slots[3]. At a Marked
// vertex the marker separates {slots[0],slots[1]} from {slots[2],slots[3]};
// the positive (T_infinity) smoothing joins 0-1 and 2-3, the negative (T_0)
// smoothing joins 0-3 and 1-2.
struct Node {
  NodeKind kind;
  std::array<int, 4> slots;
};

// One end of an edge: node index and slot position.
struct SlotRef {
  int node = -1;
  int slot = -1;
  bool operator==(const SlotRef& o) const {
    return node == o.node && slot == o.slot;
  }
  bool operator<(const SlotRef& o) const {
    return node != o.node ? node < o.node : slot < o.slot;
  }
};

struct MarkedGraphDiagram {
  std::vector<Node> nodes;
  int free_loops = 0;
  // Edge label -> the occurrence it flows into (its head). Empty map means
  // the diagram is unoriented; a diagram with no edges is trivially oriented.
  std::map<int, SlotRef> orientation;

  bool is_oriented() const;
  int max_label() const;
  // Edge label -> its occurrences in slot order of discovery.
  std::map<int, std::vector<SlotRef>> edge_occurrences() const;
};

// A diagram with no marked vertices (the resolutions live here).
struct LinkDiagram : MarkedGraphDiagram {
  LinkDiagram() = default;
  explicit LinkDiagram(const MarkedGraphDiagram& d);
};

// Total assignment of T_infinity (true) or T_0 (false) per marked vertex,
// keyed by node index.
struct State {
  std::map<int, bool> assign;
  int count_infinity() const;
  int count_zero() const;
};

enum class Resolution { Positive, Negative };

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) +
                           ", col " + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// Diagram-code text format: whitespace-separated atoms X[a,b,c,d],
// V[a,b,c,d], M[a,b,c,d], O; '#' comments; optional trailing
// "orient: e->NODEIDXSLOT, ..." block (slot letter a..d names the head).
// A leading '{' switches to the JSON equivalent.
MarkedGraphDiagram parse_diagram(const std::string& text);
std::string to_text(const MarkedGraphDiagram& d);
std::string to_json(const MarkedGraphDiagram& d);

// Empty result means all invariants hold.
std::vector<std::string> validate(const MarkedGraphDiagram& d);

// Replaces every marked vertex by the r-smoothing, merging edge labels and
// carrying orientation through.
LinkDiagram resolve(const MarkedGraphDiagram& d, Resolution r);
LinkDiagram resolve_state(const MarkedGraphDiagram& d, const State& s);
// Smooths a single marked vertex, leaving the others in place.
MarkedGraphDiagram smooth_vertex(const MarkedGraphDiagram& d, int node,
                                 Resolution r);

struct Components {
  std::vector<std::vector<int>> strands;  // edge labels per component
  int free_loops = 0;
  int count() const { return static_cast<int>(strands.size()) + free_loops; }
};
Components components(const LinkDiagram& d);

// Sum of crossing signs; marked and virtual nodes contribute 0. Requires a
// valid orientation.
long writhe(const MarkedGraphDiagram& d);
// Sign of the crossing at node index i under the diagram's orientation.
int crossing_sign(const MarkedGraphDiagram& d, int i);

// Sum of self-crossing signs of a link diagram under deterministic
// per-component orientations. Components listed in flip are traversed
// in the reverse direction (the result must not depend on this).
long link_self_writhe(const LinkDiagram& d, const std::vector<int>& flip = {});
// (sw(L+) + sw(L-)) / 2, exact; may be a half-integer.
mpq_class self_writhe(const MarkedGraphDiagram& d);

// Searches for a valid orientation, optionally one with the given writhe.
// Returns std::nullopt if the diagram is nonorientable or no assignment
// reaches the target.
std::optional<std::map<int, SlotRef>> try_orient(
    const MarkedGraphDiagram& d,
    std::optional<long> target_writhe = std::nullopt);

enum class Admissibility { Yes, No, Unknown };
// Necessary test only: "No" is definitive, "Yes" needs crossing-free
// resolutions, anything else is "Unknown".
Admissibility is_admissible_heuristic(const MarkedGraphDiagram& d);

}  // namespace yinv

#endif
