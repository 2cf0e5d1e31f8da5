#include "yinv/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace yinv {

namespace {

// Plain union-find over a contiguous index range.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool MarkedGraphDiagram::is_oriented() const {
  return !orientation.empty() || nodes.empty();
}

int MarkedGraphDiagram::max_label() const {
  int m = 0;
  for (auto& n : nodes)
    for (int s : n.slots) m = std::max(m, s);
  return m;
}

std::map<int, std::vector<SlotRef>> MarkedGraphDiagram::edge_occurrences()
    const {
  std::map<int, std::vector<SlotRef>> occ;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    for (int s = 0; s < 4; ++s)
      occ[nodes[i].slots[s]].push_back(SlotRef{i, s});
  return occ;
}

LinkDiagram::LinkDiagram(const MarkedGraphDiagram& d) {
  for (auto& n : d.nodes)
    if (n.kind == NodeKind::Marked)
      throw std::invalid_argument("link diagram contains a marked vertex");
  nodes = d.nodes;
  free_loops = d.free_loops;
  orientation = d.orientation;
}

int State::count_infinity() const {
  int k = 0;
  for (auto& [_, v] : assign) k += v ? 1 : 0;
  return k;
}

int State::count_zero() const {
  return static_cast<int>(assign.size()) - count_infinity();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Scanner(const std::string& text) : s(text) {}

  void advance() {
    if (i < s.size()) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  }
  int peek() const { return i < s.size() ? s[i] : -1; }
  void skip_ws() {
    while (i < s.size()) {
      if (s[i] == '#') {
        while (i < s.size() && s[i] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(s[i]))) {
        advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  int read_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    if (!std::isdigit(peek())) fail("expected integer");
    long v = 0;
    while (std::isdigit(peek())) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    return static_cast<int>(neg ? -v : v);
  }
};

MarkedGraphDiagram parse_json_diagram(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  MarkedGraphDiagram d;
  for (auto& jn : j.value("nodes", nlohmann::json::array())) {
    std::string k = jn.at("kind").get<std::string>();
    Node n;
    if (k == "X")
      n.kind = NodeKind::Crossing;
    else if (k == "V")
      n.kind = NodeKind::Virtual;
    else if (k == "M")
      n.kind = NodeKind::Marked;
    else
      throw ParseError("unknown node kind '" + k + "'", 1, 1);
    auto sl = jn.at("slots");
    if (!sl.is_array() || sl.size() != 4)
      throw ParseError("slots must have 4 entries", 1, 1);
    for (int s = 0; s < 4; ++s) n.slots[s] = sl[s].get<int>();
    d.nodes.push_back(n);
  }
  d.free_loops = j.value("free_loops", 0);
  if (j.contains("orient")) {
    for (auto& [key, val] : j.at("orient").items()) {
      int edge = std::stoi(key);
      std::string v = val.get<std::string>();
      if (v.size() < 2) throw ParseError("bad orient entry '" + v + "'", 1, 1);
      char letter = v.back();
      if (letter < 'a' || letter > 'd')
        throw ParseError("bad slot letter in orient entry", 1, 1);
      int node = std::stoi(v.substr(0, v.size() - 1));
      d.orientation[edge] = SlotRef{node, letter - 'a'};
    }
  }
  return d;
}

}  // namespace

MarkedGraphDiagram parse_diagram(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_json_diagram(text);

  Scanner sc(text);
  MarkedGraphDiagram d;
  while (true) {
    sc.skip_ws();
    int c = sc.peek();
    if (c == -1) break;
    if (c == 'O') {
      sc.advance();
      d.free_loops++;
      continue;
    }
    if (c == 'X' || c == 'V' || c == 'M') {
      Node n;
      n.kind = c == 'X'   ? NodeKind::Crossing
               : c == 'V' ? NodeKind::Virtual
                          : NodeKind::Marked;
      sc.advance();
      sc.skip_ws();
      sc.expect('[');
      for (int s = 0; s < 4; ++s) {
        n.slots[s] = sc.read_int();
        if (n.slots[s] <= 0) sc.fail("edge labels must be positive");
        sc.skip_ws();
        if (s < 3)
          sc.expect(',');
        else
          sc.expect(']');
      }
      d.nodes.push_back(n);
      continue;
    }
    if (c == 'o') {
      static const std::string kw = "orient";
      for (char ch : kw) {
        if (sc.peek() != ch) sc.fail("unexpected token");
        sc.advance();
      }
      sc.skip_ws();
      sc.expect(':');
      while (true) {
        int edge = sc.read_int();
        sc.skip_ws();
        sc.expect('-');
        sc.expect('>');
        int node = sc.read_int();
        int letter = sc.peek();
        if (letter < 'a' || letter > 'd') sc.fail("expected slot letter a..d");
        sc.advance();
        d.orientation[edge] = SlotRef{node, letter - 'a'};
        sc.skip_ws();
        if (sc.peek() == ',') {
          sc.advance();
          continue;
        }
        break;
      }
      continue;
    }
    sc.fail("unexpected character");
  }
  return d;
}

std::string to_text(const MarkedGraphDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (auto& n : d.nodes) {
    if (!first) os << " ";
    first = false;
    os << (n.kind == NodeKind::Crossing  ? 'X'
           : n.kind == NodeKind::Virtual ? 'V'
                                         : 'M');
    os << "[" << n.slots[0] << "," << n.slots[1] << "," << n.slots[2] << ","
       << n.slots[3] << "]";
  }
  for (int i = 0; i < d.free_loops; ++i) {
    if (!first) os << " ";
    first = false;
    os << "O";
  }
  if (!d.orientation.empty()) {
    os << "\norient: ";
    bool f2 = true;
    for (auto& [e, head] : d.orientation) {
      if (!f2) os << ", ";
      f2 = false;
      os << e << "->" << head.node << static_cast<char>('a' + head.slot);
    }
  }
  return os.str();
}

std::string to_json(const MarkedGraphDiagram& d) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (auto& n : d.nodes) {
    nlohmann::json jn;
    jn["kind"] = n.kind == NodeKind::Crossing  ? "X"
                 : n.kind == NodeKind::Virtual ? "V"
                                               : "M";
    jn["slots"] = n.slots;
    j["nodes"].push_back(jn);
  }
  j["free_loops"] = d.free_loops;
  if (!d.orientation.empty()) {
    nlohmann::json jo = nlohmann::json::object();
    for (auto& [e, head] : d.orientation)
      jo[std::to_string(e)] =
          std::to_string(head.node) + static_cast<char>('a' + head.slot);
    j["orient"] = jo;
  }
  return j.dump();
}

// ---------------------------------------------------------------------------
// validation

namespace {

// in-flow flag of the occurrence (n,s); requires the edge to be oriented.
bool inflow(const MarkedGraphDiagram& d, int n, int s) {
  int e = d.nodes[n].slots[s];
  return d.orientation.at(e) == SlotRef{n, s};
}

}  // namespace

std::vector<std::string> validate(const MarkedGraphDiagram& d) {
  std::vector<std::string> errs;
  if (d.free_loops < 0) errs.push_back("negative free loop count");
  auto occ = d.edge_occurrences();
  for (auto& [e, places] : occ) {
    if (e <= 0) errs.push_back("edge " + std::to_string(e) + " is not positive");
    if (places.size() != 2)
      errs.push_back("edge " + std::to_string(e) + " occurs " +
                     std::to_string(places.size()) +
                     (places.size() == 1 ? " time" : " times"));
  }
  if (!errs.empty() || d.orientation.empty()) return errs;

  for (auto& [e, head] : d.orientation) {
    auto it = occ.find(e);
    bool ok = it != occ.end() &&
              (it->second[0] == head || it->second[1] == head);
    if (!ok)
      errs.push_back("orientation names a missing occurrence of edge " +
                     std::to_string(e));
  }
  for (auto& [e, _] : occ)
    if (!d.orientation.count(e))
      errs.push_back("edge " + std::to_string(e) + " has no orientation");
  if (!errs.empty()) return errs;

  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
    const Node& n = d.nodes[i];
    bool in0 = inflow(d, i, 0), in1 = inflow(d, i, 1), in2 = inflow(d, i, 2),
         in3 = inflow(d, i, 3);
    if (n.kind == NodeKind::Marked) {
      // Admitted oriented vertex patterns: diagonally opposite arms flow in,
      // the other two flow out, so both smoothings stay coherently oriented.
      if (!(in0 == in2 && in1 == in3 && in0 != in1))
        errs.push_back("orientation pattern violation at marked vertex " +
                       std::to_string(i));
    } else {
      if (in0 == in2)
        errs.push_back("strand through node " + std::to_string(i) +
                       " has no coherent direction (slots a/c)");
      if (in1 == in3)
        errs.push_back("strand through node " + std::to_string(i) +
                       " has no coherent direction (slots b/d)");
    }
  }
  return errs;
}

// ---------------------------------------------------------------------------
// resolutions

namespace {

// Core smoothing machinery: replaces the given marked vertices by joins,
// merging the affected edge labels and counting closed-off circles.
MarkedGraphDiagram smooth_vertices(const MarkedGraphDiagram& d,
                                   const std::map<int, bool>& smoothing) {
  int maxl = d.max_label();
  UnionFind uf(maxl + 1);
  std::vector<std::pair<int, int>> joints;  // pairs of edge labels
  for (auto& [v, tinf] : smoothing) {
    const auto& sl = d.nodes[v].slots;
    if (tinf) {
      joints.push_back({sl[0], sl[1]});
      joints.push_back({sl[2], sl[3]});
    } else {
      joints.push_back({sl[0], sl[3]});
      joints.push_back({sl[1], sl[2]});
    }
  }
  for (auto& [a, b] : joints) uf.merge(a, b);

  std::set<int> present;
  for (auto& n : d.nodes)
    for (int s : n.slots) present.insert(s);

  std::map<int, int> class_size, class_joints;
  for (int e : present) class_size[uf.find(e)]++;
  for (auto& [a, b] : joints) class_joints[uf.find(a)]++;

  MarkedGraphDiagram out;
  out.free_loops = d.free_loops;
  std::vector<int> new_index(d.nodes.size(), -1);
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
    if (smoothing.count(i)) continue;
    Node n = d.nodes[i];
    for (int s = 0; s < 4; ++s) n.slots[s] = uf.find(n.slots[s]);
    new_index[i] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(n);
  }
  // A class whose ends were all consumed by joints closed into a circle.
  for (auto& [root, size] : class_size) {
    int ends = 2 * size - 2 * class_joints[root];
    if (ends == 0) out.free_loops++;
  }

  if (!d.orientation.empty()) {
    // The surviving ends of a merged chain are one inflow and one outflow;
    // the head of the new edge is the surviving inflow occurrence.
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
      if (smoothing.count(i)) continue;
      for (int s = 0; s < 4; ++s) {
        int e = d.nodes[i].slots[s];
        if (d.orientation.at(e) == SlotRef{i, s})
          out.orientation[uf.find(e)] = SlotRef{new_index[i], s};
      }
    }
  }
  return out;
}

std::map<int, bool> all_vertices(const MarkedGraphDiagram& d, bool tinf) {
  std::map<int, bool> sm;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    if (d.nodes[i].kind == NodeKind::Marked) sm[i] = tinf;
  return sm;
}

}  // namespace

LinkDiagram resolve(const MarkedGraphDiagram& d, Resolution r) {
  return LinkDiagram(
      smooth_vertices(d, all_vertices(d, r == Resolution::Positive)));
}

LinkDiagram resolve_state(const MarkedGraphDiagram& d, const State& s) {
  auto vs = all_vertices(d, true);
  if (vs.size() != s.assign.size())
    throw std::invalid_argument("state is not total over the marked vertices");
  for (auto& [v, tinf] : s.assign) {
    auto it = vs.find(v);
    if (it == vs.end())
      throw std::invalid_argument("state names node " + std::to_string(v) +
                                  " which is not a marked vertex");
    it->second = tinf;
  }
  return LinkDiagram(smooth_vertices(d, vs));
}

MarkedGraphDiagram smooth_vertex(const MarkedGraphDiagram& d, int node,
                                 Resolution r) {
  if (node < 0 || node >= static_cast<int>(d.nodes.size()) ||
      d.nodes[node].kind != NodeKind::Marked)
    throw std::invalid_argument("not a marked vertex");
  std::map<int, bool> sm{{node, r == Resolution::Positive}};
  return smooth_vertices(d, sm);
}

Components components(const LinkDiagram& d) {
  int maxl = d.max_label();
  UnionFind uf(maxl + 1);
  for (auto& n : d.nodes) {
    uf.merge(n.slots[0], n.slots[2]);
    uf.merge(n.slots[1], n.slots[3]);
  }
  std::map<int, std::vector<int>> by_root;
  auto occ = d.edge_occurrences();
  for (auto& [e, _] : occ) by_root[uf.find(e)].push_back(e);
  Components c;
  c.free_loops = d.free_loops;
  for (auto& [_, edges] : by_root) c.strands.push_back(edges);
  return c;
}

// ---------------------------------------------------------------------------
// writhe / self-writhe

int crossing_sign(const MarkedGraphDiagram& d, int i) {
  const Node& n = d.nodes[i];
  if (n.kind != NodeKind::Crossing)
    throw std::invalid_argument("node is not a classical crossing");
  bool in0 = inflow(d, i, 0), in1 = inflow(d, i, 1), in2 = inflow(d, i, 2),
       in3 = inflow(d, i, 3);
  if ((in0 && in3) || (in2 && in1)) return 1;
  if ((in0 && in1) || (in2 && in3)) return -1;
  throw std::invalid_argument("invalid orientation at crossing");
}

long writhe(const MarkedGraphDiagram& d) {
  if (!d.is_oriented())
    throw std::domain_error("writhe requires an orientation");
  auto errs = validate(d);
  if (!errs.empty()) throw std::domain_error("invalid diagram: " + errs[0]);
  long w = 0;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    if (d.nodes[i].kind == NodeKind::Crossing) w += crossing_sign(d, i);
  return w;
}

namespace {

// Deterministic traversal orientation: each component starts from its
// smallest edge label, flowing toward that label's first-listed occurrence.
std::map<int, SlotRef> deterministic_orientation(const LinkDiagram& d,
                                                 const std::vector<int>& flip) {
  auto occ = d.edge_occurrences();
  Components comps = components(d);
  std::map<int, SlotRef> orient;
  for (int ci = 0; ci < static_cast<int>(comps.strands.size()); ++ci) {
    auto& edges = comps.strands[ci];
    int e0 = *std::min_element(edges.begin(), edges.end());
    bool reversed = std::find(flip.begin(), flip.end(), ci) != flip.end();
    SlotRef head = reversed ? occ[e0][1] : occ[e0][0];
    int e = e0;
    // Walk the strand: enter a node at the head slot, leave at the opposite
    // slot, repeat until the loop closes.
    while (true) {
      orient[e] = head;
      int n = head.node;
      int out_slot = (head.slot + 2) % 4;
      int enext = d.nodes[n].slots[out_slot];
      SlotRef other;
      auto& up = occ[enext];
      if (up[0] == SlotRef{n, out_slot} && up[1] == SlotRef{n, out_slot})
        other = up[0];  // can't happen: distinct occurrences
      else
        other = (up[0] == SlotRef{n, out_slot}) ? up[1] : up[0];
      if (enext == e0 && other == orient[e0]) break;
      e = enext;
      head = other;
      if (orient.count(e) && orient[e] == head) break;  // safety
    }
  }
  return orient;
}

}  // namespace

long link_self_writhe(const LinkDiagram& d, const std::vector<int>& flip) {
  LinkDiagram t = d;
  t.orientation = deterministic_orientation(d, flip);
  // Component id per edge.
  Components comps = components(d);
  std::map<int, int> comp_of;
  for (int ci = 0; ci < static_cast<int>(comps.strands.size()); ++ci)
    for (int e : comps.strands[ci]) comp_of[e] = ci;
  long sw = 0;
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const Node& n = t.nodes[i];
    if (n.kind != NodeKind::Crossing) continue;
    if (comp_of[n.slots[0]] != comp_of[n.slots[1]]) continue;
    sw += crossing_sign(t, i);
  }
  return sw;
}

mpq_class self_writhe(const MarkedGraphDiagram& d) {
  long p = link_self_writhe(resolve(d, Resolution::Positive));
  long m = link_self_writhe(resolve(d, Resolution::Negative));
  mpq_class r(p + m, 2);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// orientation search

namespace {

// Union-find with parity: rel[x] is the XOR of x's variable with its root's.
class ParityUF {
 public:
  explicit ParityUF(int n) : parent_(n), rel_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, p] = find(parent_[x]);
    parent_[x] = root;
    rel_[x] ^= p;
    return {root, rel_[x]};
  }
  // Imposes xa ^ xb == parity; returns false on contradiction.
  bool merge(int a, int b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[ra] = rb;
    rel_[ra] = pa ^ pb ^ parity;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rel_;
};

}  // namespace

std::optional<std::map<int, SlotRef>> try_orient(
    const MarkedGraphDiagram& d, std::optional<long> target_writhe) {
  auto occ = d.edge_occurrences();
  for (auto& [e, places] : occ)
    if (places.size() != 2) return std::nullopt;
  if (occ.empty()) {
    if (!target_writhe || *target_writhe == 0)
      return std::map<int, SlotRef>{};
    return std::nullopt;
  }

  std::map<int, int> idx;
  std::vector<int> labels;
  for (auto& [e, _] : occ) {
    idx[e] = static_cast<int>(labels.size());
    labels.push_back(e);
  }
  int ne = static_cast<int>(labels.size());
  ParityUF uf(ne);

  // Variable x_e is 1 when edge e flows into its second-listed occurrence;
  // inflow(n,s) = x_e XOR [occurrence (n,s) is first-listed].
  auto first_bit = [&](int n, int s) {
    int e = d.nodes[n].slots[s];
    return occ[e][0] == SlotRef{n, s} ? 1 : 0;
  };
  auto constrain = [&](int n, int s1, int s2, int want_diff) {
    int e1 = d.nodes[n].slots[s1], e2 = d.nodes[n].slots[s2];
    int a1 = first_bit(n, s1), a2 = first_bit(n, s2);
    if (e1 == e2) {
      // Same edge at both slots: in(s1) != in(s2) automatically.
      return want_diff == 1;
    }
    return uf.merge(idx[e1], idx[e2], want_diff ^ a1 ^ a2);
  };
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
    const Node& n = d.nodes[i];
    bool ok;
    if (n.kind == NodeKind::Marked) {
      ok = constrain(i, 0, 2, 0) && constrain(i, 1, 3, 0) &&
           constrain(i, 0, 1, 1);
    } else {
      ok = constrain(i, 0, 2, 1) && constrain(i, 1, 3, 1);
    }
    if (!ok) return std::nullopt;
  }

  std::vector<int> roots;
  for (int i = 0; i < ne; ++i)
    if (uf.find(i).first == i) roots.push_back(i);
  if (roots.size() > 20)
    throw std::domain_error("orientation search space too large");

  std::map<int, int> root_pos;
  for (int i = 0; i < static_cast<int>(roots.size()); ++i)
    root_pos[roots[i]] = i;

  for (unsigned long mask = 0; mask < (1ul << roots.size()); ++mask) {
    std::map<int, SlotRef> orient;
    for (int i = 0; i < ne; ++i) {
      auto [r, p] = uf.find(i);
      int x = ((mask >> root_pos[r]) & 1) ^ p;
      orient[labels[i]] = occ[labels[i]][x];
    }
    MarkedGraphDiagram t = d;
    t.orientation = orient;
    if (!validate(t).empty()) continue;
    if (target_writhe && writhe(t) != *target_writhe) continue;
    return orient;
  }
  return std::nullopt;
}

}  // namespace yinv
