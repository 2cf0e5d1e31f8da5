#include "yinv/bracket.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

namespace yinv {

namespace {

struct FlatUF {
  std::vector<int> parent;
  explicit FlatUF(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

// Compressed view of a diagram for the inner state-sum loop.
struct FlatDiagram {
  int edge_count = 0;
  int free_loops = 0;
  // Per node: kind and the four slot edges as dense indices.
  std::vector<NodeKind> kinds;
  std::vector<std::array<int, 4>> slots;
  std::vector<int> crossings;  // node indices
  std::vector<int> vertices;   // node indices

  explicit FlatDiagram(const MarkedGraphDiagram& d) {
    std::map<int, int> dense;
    free_loops = d.free_loops;
    for (auto& n : d.nodes) {
      kinds.push_back(n.kind);
      std::array<int, 4> sl;
      for (int s = 0; s < 4; ++s) {
        auto it = dense.find(n.slots[s]);
        if (it == dense.end())
          it = dense.emplace(n.slots[s], edge_count++).first;
        sl[s] = it->second;
      }
      slots.push_back(sl);
    }
    for (int i = 0; i < static_cast<int>(kinds.size()); ++i) {
      if (kinds[i] == NodeKind::Crossing) crossings.push_back(i);
      if (kinds[i] == NodeKind::Marked) vertices.push_back(i);
    }
  }

  // Number of loops after smoothing every crossing and vertex by the given
  // bitmasks (bit set: A-smoothing at a crossing, T_infinity at a vertex).
  int loops(unsigned long cmask, unsigned long vmask) const {
    FlatUF uf(edge_count);
    for (size_t k = 0; k < crossings.size(); ++k) {
      auto& sl = slots[crossings[k]];
      if ((cmask >> k) & 1) {
        uf.merge(sl[0], sl[1]);
        uf.merge(sl[2], sl[3]);
      } else {
        uf.merge(sl[0], sl[3]);
        uf.merge(sl[1], sl[2]);
      }
    }
    for (size_t k = 0; k < vertices.size(); ++k) {
      auto& sl = slots[vertices[k]];
      if ((vmask >> k) & 1) {
        uf.merge(sl[0], sl[1]);
        uf.merge(sl[2], sl[3]);
      } else {
        uf.merge(sl[0], sl[3]);
        uf.merge(sl[1], sl[2]);
      }
    }
    for (size_t i = 0; i < slots.size(); ++i)
      if (kinds[i] == NodeKind::Virtual) {
        uf.merge(slots[i][0], slots[i][2]);
        uf.merge(slots[i][1], slots[i][3]);
      }
    int count = 0;
    for (int e = 0; e < edge_count; ++e)
      if (uf.find(e) == e) ++count;
    return count + free_loops;
  }
};

void check_valid(const MarkedGraphDiagram& d) {
  auto errs = validate(d);
  if (!errs.empty()) throw std::domain_error("invalid diagram: " + errs[0]);
}

LaurentPoly delta_power(int k) {
  // delta^k with k >= -1; delta^-1 only arises for the empty diagram.
  if (k < 0) throw std::domain_error("bracket of an empty diagram");
  return LaurentPoly::delta().pow(k);
}

// Kauffman state sum over crossings for a fixed vertex state.
LaurentPoly crossing_state_sum(const FlatDiagram& fd, unsigned long vmask) {
  size_t c = fd.crossings.size();
  LaurentPoly total;
  for (unsigned long cmask = 0; cmask < (1ul << c); ++cmask) {
    int a = __builtin_popcountl(cmask);
    int b = static_cast<int>(c) - a;
    int loops = fd.loops(cmask, vmask);
    total += LaurentPoly::monomial(1, a - b) * delta_power(loops - 1);
  }
  return total;
}

}  // namespace

int state_sum_threads() {
  if (const char* env = std::getenv("YINV_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(hw == 0 ? 1u : hw, 4u));
}

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  check_valid(d);
  FlatDiagram fd(d);
  return crossing_state_sum(fd, 0);
}

LaurentPoly normalized_bracket(const LinkDiagram& d) {
  long w = writhe(d);
  return LaurentPoly::alpha().pow(-w) * kauffman_bracket(d);
}

namespace {

std::string canonical_key(const LinkDiagram& d) {
  // Relabel edges by first appearance; nodes keep their order.
  std::map<int, int> relabel;
  std::string key = std::to_string(d.free_loops) + ";";
  for (auto& n : d.nodes) {
    key += n.kind == NodeKind::Crossing ? 'X' : 'V';
    for (int s : n.slots) {
      auto it = relabel.find(s);
      if (it == relabel.end())
        it = relabel.emplace(s, static_cast<int>(relabel.size())).first;
      key += std::to_string(it->second) + ",";
    }
  }
  return key;
}

LaurentPoly skein_rec(const LinkDiagram& d,
                      std::map<std::string, LaurentPoly>& memo) {
  int cross = -1;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    if (d.nodes[i].kind == NodeKind::Crossing) {
      cross = i;
      break;
    }
  if (cross < 0) {
    int loops = components(d).count();
    return delta_power(loops - 1);
  }
  std::string key = canonical_key(d);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // Smooth the crossing both ways by borrowing the vertex machinery: a
  // crossing relabeled as a marked vertex smooths with the same joins.
  MarkedGraphDiagram one = d;
  one.orientation.clear();
  one.nodes[cross].kind = NodeKind::Marked;
  LinkDiagram da(smooth_vertex(one, cross, Resolution::Positive));
  LinkDiagram db(smooth_vertex(one, cross, Resolution::Negative));
  LaurentPoly r = LaurentPoly::monomial(1, 1) * skein_rec(da, memo) +
                  LaurentPoly::monomial(1, -1) * skein_rec(db, memo);
  memo.emplace(key, r);
  return r;
}

}  // namespace

LaurentPoly kauffman_bracket_skein(const LinkDiagram& d) {
  check_valid(d);
  std::map<std::string, LaurentPoly> memo;
  LinkDiagram t = d;
  t.orientation.clear();
  return skein_rec(t, memo);
}

const LinkEvaluator& kauffman_evaluator() {
  static const LinkEvaluator ev{
      "kauffman", LaurentPoly::alpha(), LaurentPoly::delta(),
      LinkEvaluator::Normalization::SelfWrithe,
      [](const LinkDiagram& d) { return kauffman_bracket(d); }};
  return ev;
}

const LinkEvaluator& component_count_evaluator() {
  static const LinkEvaluator ev{
      "component-count", LaurentPoly::one(), LaurentPoly::monomial(1, 1),
      LinkEvaluator::Normalization::None, [](const LinkDiagram& d) {
        check_valid(d);
        int k = components(d).count();
        return LaurentPoly::monomial(1, k - 1);
      }};
  return ev;
}

namespace {

// Fast path: combined 2^{c+m} enumeration for the Kauffman evaluator, with
// an optional deterministic parallel split over the vertex states.
BracketPoly double_bracket_kauffman(const MarkedGraphDiagram& d) {
  FlatDiagram fd(d);
  size_t m = fd.vertices.size();
  unsigned long total = 1ul << m;

  auto run_range = [&](unsigned long lo, unsigned long hi) {
    BracketPoly acc;
    for (unsigned long vmask = lo; vmask < hi; ++vmask) {
      int inf = __builtin_popcountl(vmask);
      int zero = static_cast<int>(m) - inf;
      acc.add(inf, zero, crossing_state_sum(fd, vmask));
    }
    return acc;
  };

  int threads = state_sum_threads();
  if (threads <= 1 || total < 64) return run_range(0, total);

  int nt = static_cast<int>(
      std::min<unsigned long>(static_cast<unsigned long>(threads), total));
  std::vector<BracketPoly> parts(nt);
  std::vector<std::thread> pool;
  unsigned long chunk = (total + nt - 1) / nt;
  for (int i = 0; i < nt; ++i) {
    unsigned long lo = i * chunk, hi = std::min(total, (i + 1) * chunk);
    pool.emplace_back([&, i, lo, hi] { parts[i] = run_range(lo, hi); });
  }
  for (auto& th : pool) th.join();
  BracketPoly acc;
  for (auto& p : parts) acc += p;  // exact addition: order-independent
  return acc;
}

}  // namespace

BracketPoly double_bracket(const MarkedGraphDiagram& d,
                           const LinkEvaluator& ev) {
  check_valid(d);
  if (ev.name == "kauffman") return double_bracket_kauffman(d);

  std::vector<int> verts;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    if (d.nodes[i].kind == NodeKind::Marked) verts.push_back(i);
  BracketPoly out;
  MarkedGraphDiagram plain = d;
  plain.orientation.clear();
  for (unsigned long mask = 0; mask < (1ul << verts.size()); ++mask) {
    State s;
    for (size_t k = 0; k < verts.size(); ++k)
      s.assign[verts[k]] = (mask >> k) & 1;
    LinkDiagram ds = resolve_state(plain, s);
    out.add(s.count_infinity(), s.count_zero(), ev.eval(ds));
  }
  return out;
}

BracketPoly ll(const MarkedGraphDiagram& d, const LinkEvaluator& ev) {
  check_valid(d);
  mpq_class sw = self_writhe(d);
  if (sw.get_den() != 1)
    throw std::domain_error(
        "half-integer self-writhe: fractional power of the curl factor");
  long swi = sw.get_num().get_si();
  return double_bracket(d, ev).scalar_mul(ev.alpha.pow(-swi));
}

BracketPoly ll_normalized(const MarkedGraphDiagram& d) {
  if (!d.is_oriented())
    throw std::domain_error("<<D>>_N requires an oriented diagram");
  long w = writhe(d);
  MarkedGraphDiagram plain = d;
  plain.orientation.clear();
  return double_bracket(plain, kauffman_evaluator())
      .scalar_mul(LaurentPoly::alpha().pow(-w));
}

Admissibility is_admissible_heuristic(const MarkedGraphDiagram& d) {
  check_valid(d);
  bool crossing_free = true;
  for (Resolution r : {Resolution::Positive, Resolution::Negative}) {
    LinkDiagram L = resolve(d, r);
    L.orientation.clear();
    int crossings = 0;
    for (auto& n : L.nodes)
      if (n.kind == NodeKind::Crossing) ++crossings;
    if (crossings > 0) crossing_free = false;
    int k = components(L).count();
    // Regular-isotopy-normalized bracket of a k-component trivial link.
    LaurentPoly got = LaurentPoly::alpha().pow(-link_self_writhe(L)) *
                      kauffman_bracket(L);
    if (got != LaurentPoly::delta().pow(k - 1)) return Admissibility::No;
  }
  return crossing_free ? Admissibility::Yes : Admissibility::Unknown;
}

}  // namespace yinv
