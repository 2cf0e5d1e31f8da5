#include "yinv/moves.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace yinv {

namespace {

struct EdgeEnds {
  SlotRef first, second;
};

EdgeEnds ends_of(const MarkedGraphDiagram& d, int e) {
  auto occ = d.edge_occurrences();
  auto it = occ.find(e);
  if (it == occ.end() || it->second.size() != 2)
    throw std::invalid_argument("move site references a bad edge");
  return {it->second[0], it->second[1]};
}

// Splits edge e at its second occurrence: that slot is relabeled to a fresh
// label g, so e keeps its first end and g takes over the second.
int split_edge(MarkedGraphDiagram& d, int e, int fresh) {
  EdgeEnds ee = ends_of(d, e);
  d.nodes[ee.second.node].slots[ee.second.slot] = fresh;
  return fresh;
}

bool head_was_second(const MarkedGraphDiagram& d, int e) {
  EdgeEnds ee = ends_of(d, e);
  return d.orientation.at(e) == ee.second;
}

}  // namespace

MarkedGraphDiagram apply_insertion(const MarkedGraphDiagram& d,
                                   const MoveSite& site) {
  MarkedGraphDiagram out = d;
  bool oriented = !d.orientation.empty();
  int fresh = d.max_label();

  switch (site.kind) {
    case MoveSite::Kind::DisjointCircle:
      out.free_loops++;
      return out;

    case MoveSite::Kind::R1Plus:
    case MoveSite::Kind::R1Minus: {
      if (site.edges.size() != 1)
        throw std::invalid_argument("kink insertion needs one edge");
      int e = site.edges[0];
      bool fwd = oriented && head_was_second(d, e);
      SlotRef old_head = ends_of(d, e).second;
      int g = fresh + 1, f = fresh + 2;
      split_edge(out, e, g);
      int n = static_cast<int>(out.nodes.size());
      bool plus = site.kind == MoveSite::Kind::R1Plus;
      // Positive kink: X[e,g,f,f]; negative kink: X[e,f,f,g].
      out.nodes.push_back(Node{NodeKind::Crossing,
                               plus ? std::array<int, 4>{e, g, f, f}
                                    : std::array<int, 4>{e, f, f, g}});
      if (oriented) {
        if (plus) {
          if (fwd) {
            out.orientation[e] = SlotRef{n, 0};
            out.orientation[f] = SlotRef{n, 3};
            out.orientation[g] = old_head;
          } else {
            out.orientation[g] = SlotRef{n, 1};
            out.orientation[f] = SlotRef{n, 2};
          }
        } else {
          if (fwd) {
            out.orientation[e] = SlotRef{n, 0};
            out.orientation[f] = SlotRef{n, 1};
            out.orientation[g] = old_head;
          } else {
            out.orientation[g] = SlotRef{n, 3};
            out.orientation[f] = SlotRef{n, 2};
          }
        }
      }
      return out;
    }

    case MoveSite::Kind::R2: {
      if (site.edges.size() != 2 || site.edges[0] == site.edges[1])
        throw std::invalid_argument("poke needs two distinct edges");
      int e1 = site.edges[0], e2 = site.edges[1];
      bool fwd1 = oriented && head_was_second(d, e1);
      bool fwd2 = oriented && head_was_second(d, e2);
      SlotRef head1 = ends_of(d, e1).second, head2 = ends_of(d, e2).second;
      int m = fresh + 1, n = fresh + 2, g1 = fresh + 3, g2 = fresh + 4;
      split_edge(out, e1, g1);
      split_edge(out, e2, g2);
      int c1 = static_cast<int>(out.nodes.size());
      int c2 = c1 + 1;
      out.nodes.push_back(
          Node{NodeKind::Crossing, std::array<int, 4>{e1, e2, m, n}});
      out.nodes.push_back(
          Node{NodeKind::Crossing, std::array<int, 4>{m, g2, g1, n}});
      if (oriented) {
        if (fwd1) {
          out.orientation[e1] = SlotRef{c1, 0};
          out.orientation[m] = SlotRef{c2, 0};
          out.orientation[g1] = head1;
        } else {
          out.orientation[g1] = SlotRef{c2, 2};
          out.orientation[m] = SlotRef{c1, 2};
        }
        if (fwd2) {
          out.orientation[e2] = SlotRef{c1, 1};
          out.orientation[n] = SlotRef{c2, 3};
          out.orientation[g2] = head2;
        } else {
          out.orientation[g2] = SlotRef{c2, 1};
          out.orientation[n] = SlotRef{c1, 3};
        }
      }
      return out;
    }

    case MoveSite::Kind::Gamma6:
    case MoveSite::Kind::Gamma6Prime: {
      if (site.edges.size() != 1)
        throw std::invalid_argument("marked kink insertion needs one edge");
      int e = site.edges[0];
      bool fwd = oriented && head_was_second(d, e);
      SlotRef old_head = ends_of(d, e).second;
      int g = fresh + 1, f = fresh + 2;
      split_edge(out, e, g);
      int n = static_cast<int>(out.nodes.size());
      bool g6 = site.kind == MoveSite::Kind::Gamma6;
      // Gamma6: M[e,g,f,f] (factor delta*x + y);
      // Gamma6': M[f,e,g,f] (factor x + delta*y).
      out.nodes.push_back(Node{NodeKind::Marked,
                               g6 ? std::array<int, 4>{e, g, f, f}
                                  : std::array<int, 4>{f, e, g, f}});
      if (oriented) {
        if (g6) {
          if (fwd) {
            out.orientation[e] = SlotRef{n, 0};
            out.orientation[f] = SlotRef{n, 2};
            out.orientation[g] = old_head;
          } else {
            out.orientation[g] = SlotRef{n, 1};
            out.orientation[f] = SlotRef{n, 3};
          }
        } else {
          if (fwd) {
            out.orientation[e] = SlotRef{n, 1};
            out.orientation[f] = SlotRef{n, 3};
            out.orientation[g] = old_head;
          } else {
            out.orientation[g] = SlotRef{n, 2};
            out.orientation[f] = SlotRef{n, 0};
          }
        }
      }
      return out;
    }

    case MoveSite::Kind::R3:
      throw std::invalid_argument("R3 is not an insertion move");
  }
  throw std::invalid_argument("unknown move");
}

// ---------------------------------------------------------------------------
// R3

namespace {

struct R3Match {
  int c1, c2, c3;  // node indices in template roles
  // Template edges: c1 = X[q,t2,m2,p], c2 = X[b1,t1,r,p], c3 = X[r,m1,b2,q].
  int p, q, r, t1, t2, m1, m2, b1, b2;
};

// A crossing code is fixed only up to rotating (a,b,c,d) to (c,d,a,b).
std::array<int, 4> rotated(const std::array<int, 4>& s, bool rot) {
  return rot ? std::array<int, 4>{s[2], s[3], s[0], s[1]} : s;
}

std::optional<R3Match> match_r3(const MarkedGraphDiagram& d, int n1, int n2,
                                int n3) {
  std::array<int, 3> nodes{n1, n2, n3};
  for (int i : nodes) {
    if (i < 0 || i >= static_cast<int>(d.nodes.size())) return std::nullopt;
    if (d.nodes[i].kind != NodeKind::Crossing) return std::nullopt;
  }
  std::sort(nodes.begin(), nodes.end());
  do {
    for (int rot1 = 0; rot1 < 2; ++rot1)
      for (int rot2 = 0; rot2 < 2; ++rot2)
        for (int rot3 = 0; rot3 < 2; ++rot3) {
          auto s1 = rotated(d.nodes[nodes[0]].slots, rot1);
          auto s2 = rotated(d.nodes[nodes[1]].slots, rot2);
          auto s3 = rotated(d.nodes[nodes[2]].slots, rot3);
          // c1 = X[q,t2,m2,p], c2 = X[b1,t1,r,p], c3 = X[r,m1,b2,q]
          if (s1[3] != s2[3]) continue;        // p
          if (s1[0] != s3[3]) continue;        // q
          if (s2[2] != s3[0]) continue;        // r
          R3Match m;
          m.c1 = nodes[0];
          m.c2 = nodes[1];
          m.c3 = nodes[2];
          m.p = s1[3];
          m.q = s1[0];
          m.r = s2[2];
          m.t2 = s1[1];
          m.m2 = s1[2];
          m.b1 = s2[0];
          m.t1 = s2[1];
          m.m1 = s3[1];
          m.b2 = s3[2];
          std::array<int, 9> all{m.p,  m.q,  m.r,  m.t1, m.t2,
                                 m.m1, m.m2, m.b1, m.b2};
          std::sort(all.begin(), all.end());
          if (std::adjacent_find(all.begin(), all.end()) != all.end())
            continue;  // require a clean embedding
          return m;
        }
  } while (std::next_permutation(nodes.begin(), nodes.end()));
  return std::nullopt;
}

}  // namespace

std::vector<MoveSite> find_r3_sites(const MarkedGraphDiagram& d) {
  std::vector<MoveSite> sites;
  int n = static_cast<int>(d.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (match_r3(d, i, j, k))
          sites.push_back(MoveSite{MoveSite::Kind::R3, {}, {i, j, k}});
  return sites;
}

MarkedGraphDiagram apply_r3(const MarkedGraphDiagram& d, const MoveSite& site) {
  if (site.nodes.size() != 3)
    throw std::invalid_argument("R3 needs three crossing indices");
  auto m = match_r3(d, site.nodes[0], site.nodes[1], site.nodes[2]);
  if (!m) throw std::invalid_argument("R3 pattern not present at site");

  MarkedGraphDiagram out = d;
  out.nodes[m->c1] =
      Node{NodeKind::Crossing, std::array<int, 4>{m->m1, m->p, m->q, m->t1}};
  out.nodes[m->c2] =
      Node{NodeKind::Crossing, std::array<int, 4>{m->r, m->p, m->b2, m->t2}};
  out.nodes[m->c3] =
      Node{NodeKind::Crossing, std::array<int, 4>{m->b1, m->q, m->r, m->m2}};

  if (!d.orientation.empty()) {
    auto old_occ = d.edge_occurrences();
    auto head_in_triangle = [&](int e, int node) {
      for (auto& o : old_occ[e])
        if (o.node == node && d.orientation.at(e) == o) return true;
      return false;
    };
    // Strand T: t1 -> p -> t2 when t1 flowed into c2.
    if (head_in_triangle(m->t1, m->c2)) {
      out.orientation[m->t1] = SlotRef{m->c1, 3};
      out.orientation[m->p] = SlotRef{m->c2, 1};
    } else {
      out.orientation[m->t2] = SlotRef{m->c2, 3};
      out.orientation[m->p] = SlotRef{m->c1, 1};
    }
    // Strand M: m1 -> q -> m2 when m1 flowed into c3.
    if (head_in_triangle(m->m1, m->c3)) {
      out.orientation[m->m1] = SlotRef{m->c1, 0};
      out.orientation[m->q] = SlotRef{m->c3, 1};
    } else {
      out.orientation[m->m2] = SlotRef{m->c3, 3};
      out.orientation[m->q] = SlotRef{m->c1, 2};
    }
    // Strand B: b1 -> r -> b2 when b1 flowed into c2.
    if (head_in_triangle(m->b1, m->c2)) {
      out.orientation[m->b1] = SlotRef{m->c3, 0};
      out.orientation[m->r] = SlotRef{m->c2, 0};
    } else {
      out.orientation[m->b2] = SlotRef{m->c2, 2};
      out.orientation[m->r] = SlotRef{m->c3, 2};
    }
  }
  return out;
}

MarkedGraphDiagram apply_move(const MarkedGraphDiagram& d,
                              const MoveSite& site) {
  return site.kind == MoveSite::Kind::R3 ? apply_r3(d, site)
                                         : apply_insertion(d, site);
}

// ---------------------------------------------------------------------------
// transcribed pairs

namespace {

MarkedGraphDiagram build(const std::string& code) {
  MarkedGraphDiagram d = parse_diagram(code);
  auto errs = validate(d);
  if (!errs.empty())
    throw std::logic_error("bad transcribed move pair: " + errs[0]);
  return d;
}

}  // namespace

std::vector<MovePair> catalog_move_pairs() {
  std::vector<MovePair> pairs;
  // Gamma4: a strand slides over a marked vertex (over both lower arms
  // before, over both upper arms after).
  pairs.push_back(MovePair{"gamma4",
                           build("M[1,1,2,5] X[2,3,3,4] X[5,4,6,6]"),
                           build("M[5,2,3,6] X[2,4,1,3] X[5,6,1,4]")});
  // Gamma4': the same slide with the strand under.
  pairs.push_back(MovePair{"gamma4p",
                           build("M[1,1,2,5] X[3,3,4,2] X[4,6,6,5]"),
                           build("M[5,2,3,6] X[3,2,4,1] X[4,5,6,1]")});
  // Gamma5: a crossing slides through a marked vertex.
  pairs.push_back(MovePair{"gamma5", build("X[1,1,2,3] M[4,3,2,4]"),
                           build("M[3,1,1,2] X[3,2,4,4]")});
  // Gamma7: the two-vertex tangle swap, closed with a clasp so the two
  // sides have different <<.>> but equal normal forms.
  pairs.push_back(
      MovePair{"gamma7",
               build("M[1,3,4,8] M[7,7,8,6] X[2,4,3,5] X[5,1,6,2]"),
               build("M[1,3,8,7] M[7,8,4,6] X[2,4,3,5] X[5,1,6,2]")});
  // Gamma8: the four-crossing two-vertex tangle swap with the same clasped
  // closure.
  pairs.push_back(MovePair{
      "gamma8",
      build("M[8,12,1,9] M[3,14,4,15] X[1,5,2,4] X[2,16,3,15] "
            "X[13,11,14,16] X[12,6,13,5] X[7,10,8,9] X[10,7,11,6]"),
      build("M[8,15,4,9] M[3,14,1,12] X[1,4,2,5] X[2,15,6,16] "
            "X[13,16,11,14] X[12,5,13,3] X[7,10,8,9] X[10,7,11,6]")});
  return pairs;
}

std::vector<MoveSite> parse_move_script(const std::string& text) {
  std::vector<MoveSite> sites;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    MoveSite site;
    std::string word;
    auto read_ints = [&](std::vector<int>& dst) {
      int v;
      while (ls >> word) {
        try {
          v = std::stoi(word);
        } catch (...) {
          continue;
        }
        dst.push_back(v);
      }
    };
    if (op == "r1+") {
      site.kind = MoveSite::Kind::R1Plus;
      read_ints(site.edges);
    } else if (op == "r1-") {
      site.kind = MoveSite::Kind::R1Minus;
      read_ints(site.edges);
    } else if (op == "r2") {
      site.kind = MoveSite::Kind::R2;
      read_ints(site.edges);
    } else if (op == "r3") {
      site.kind = MoveSite::Kind::R3;
      read_ints(site.nodes);
    } else if (op == "g6") {
      site.kind = MoveSite::Kind::Gamma6;
      read_ints(site.edges);
    } else if (op == "g6'" || op == "g6p") {
      site.kind = MoveSite::Kind::Gamma6Prime;
      read_ints(site.edges);
    } else if (op == "circle") {
      site.kind = MoveSite::Kind::DisjointCircle;
    } else {
      throw std::invalid_argument("unknown move '" + op + "' in script");
    }
    sites.push_back(site);
  }
  return sites;
}

}  // namespace yinv
