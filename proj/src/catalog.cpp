#include "yinv/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "yinv/bracket.hpp"

namespace yinv {

namespace {

LaurentPoly lp(std::initializer_list<std::pair<long, long>> coeff_exp) {
  LaurentPoly p;
  for (auto& [c, e] : coeff_exp) p.set(e, p.coeff(e) + c);
  return p;
}

BracketPoly bp(
    std::initializer_list<std::tuple<int, int, LaurentPoly>> terms) {
  BracketPoly p;
  for (auto& [i, j, c] : terms) p.add(i, j, c);
  return p;
}

// Exact rational polynomial evaluation: sum of c*t^e over the given terms,
// divided by 2^half * t^tpow.
mpq_class ratpoly(const mpq_class& t,
                  std::initializer_list<std::pair<long, long>> terms, int half,
                  int tpow) {
  mpq_class num = 0;
  for (auto& [c, e] : terms) {
    mpq_class tp = 1;
    for (long k = 0; k < e; ++k) tp *= t;
    num += c * tp;
  }
  mpq_class den = 1;
  for (int k = 0; k < half; ++k) den *= 2;
  for (int k = 0; k < tpow; ++k) den *= t;
  return num / den;
}

// ---------------------------------------------------------------------------
// Shared template for the surface-link table diagrams: a central column of
// marked vertices fed by left/right crossing chains, with optional top kink
// and an optional lower column. Slot conventions per diagram.hpp.

enum class TopNode { Vertex, KinkCrossing };
enum class Bottom { Plain, CrossColumn, VertexColumn };

MarkedGraphDiagram build_template(int side, bool top_curl, TopNode top,
                                  Bottom bottom, bool inner_virtual) {
  MarkedGraphDiagram d;
  int next = 0;
  auto fresh = [&] { return ++next; };

  // Central column edges.
  int eTopL = fresh(), eTopR = fresh();   // top node to the side chains
  int eTV2L = fresh(), eTV2R = fresh();   // top node to V2
  int eV2Cl = fresh(), eV2Cr = fresh();   // V2 arms over the inner crossings
  int eClL = fresh(), eClL2 = fresh();    // Cl to innermost left crossing
  int eCrR = fresh(), eCrR2 = fresh();    // Cr to innermost right crossing

  int eKL = 0, eKR = 0, eTK1 = 0, eTK2 = 0;
  if (top_curl) {
    eTK1 = fresh();
    eTK2 = fresh();
    eKL = fresh();
    eKR = fresh();
  }

  int eW = 0;                                  // bottom V (plain variant)
  int eMd1 = 0, eMd2 = 0, eMdCl = 0, eMdCr = 0, eV3L = 0, eV3R = 0;
  if (bottom == Bottom::Plain) {
    eW = fresh();
  } else {
    eMd1 = fresh();   // V3.NW - middle node
    eMd2 = fresh();   // V3.NE - middle node
    eMdCl = fresh();  // middle node - under Cl - left chain
    eMdCr = fresh();  // middle node - under Cr - right chain
    eV3L = fresh();
    eV3R = fresh();
  }
  int eBot = bottom == Bottom::Plain ? fresh() : 0;

  std::vector<int> eLa(side), eLb(side), eRa(side), eRb(side);
  for (int i = 0; i + 1 < side; ++i) {
    eLa[i] = fresh();
    eLb[i] = fresh();
    eRa[i] = fresh();
    eRb[i] = fresh();
  }

  // Top section.
  if (top_curl) {
    // Kink between the top vertex arms and the borders.
    d.nodes.push_back(
        Node{NodeKind::Crossing, std::array<int, 4>{eTK1, eTK2, eKR, eKL}});
    d.nodes.push_back(
        Node{NodeKind::Marked, std::array<int, 4>{eTK1, eTV2L, eTV2R, eTK2}});
  } else if (top == TopNode::Vertex) {
    d.nodes.push_back(
        Node{NodeKind::Marked, std::array<int, 4>{eTopL, eTV2L, eTV2R, eTopR}});
  } else {
    // Kink crossing in place of the top vertex.
    d.nodes.push_back(
        Node{NodeKind::Crossing, std::array<int, 4>{eTV2L, eTV2R, eTopR, eTopL}});
  }
  int borderL = top_curl ? eKL : eTopL;
  int borderR = top_curl ? eKR : eTopR;

  // V2.
  d.nodes.push_back(
      Node{NodeKind::Marked, std::array<int, 4>{eTV2R, eTV2L, eV2Cl, eV2Cr}});

  // Inner crossings.
  NodeKind inner = inner_virtual ? NodeKind::Virtual : NodeKind::Crossing;
  int clUnder = bottom == Bottom::Plain ? eW : eMdCl;
  int crUnder = bottom == Bottom::Plain ? eW : eMdCr;
  d.nodes.push_back(Node{inner, std::array<int, 4>{clUnder, eV2Cl, eClL, eClL2}});
  d.nodes.push_back(Node{inner, std::array<int, 4>{crUnder, eCrR2, eCrR, eV2Cr}});

  // Bottom column.
  int botL = eBot, botR = eBot;
  if (bottom != Bottom::Plain) {
    botL = eV3L;
    botR = eV3R;
    if (bottom == Bottom::CrossColumn) {
      d.nodes.push_back(Node{NodeKind::Crossing,
                             std::array<int, 4>{eMd2, eMdCr, eMdCl, eMd1}});
    } else {
      d.nodes.push_back(
          Node{NodeKind::Marked, std::array<int, 4>{eMdCl, eMd1, eMd2, eMdCr}});
    }
    d.nodes.push_back(
        Node{NodeKind::Marked, std::array<int, 4>{eMd2, eMd1, eV3L, eV3R}});
  }

  // Left chain, outermost to innermost: under NW-SE, over SW-NE.
  for (int i = 0; i < side; ++i) {
    int a = i == 0 ? borderL : eLa[i - 1];
    int b = i == 0 ? botL : eLb[i - 1];
    int c = i == side - 1 ? eClL2 : eLb[i];
    int e = i == side - 1 ? eClL : eLa[i];
    d.nodes.push_back(Node{NodeKind::Crossing, std::array<int, 4>{a, b, c, e}});
  }
  // Right chain: under NE-SW, over SE-NW.
  for (int i = 0; i < side; ++i) {
    int a = i == 0 ? borderR : eRa[i - 1];
    int b = i == side - 1 ? eCrR : eRa[i];
    int c = i == side - 1 ? eCrR2 : eRb[i];
    int e = i == 0 ? botR : eRb[i - 1];
    d.nodes.push_back(Node{NodeKind::Crossing, std::array<int, 4>{a, b, c, e}});
  }
  return d;
}

MarkedGraphDiagram parse_or_die(const std::string& code) {
  MarkedGraphDiagram d = parse_diagram(code);
  auto errs = validate(d);
  if (!errs.empty()) throw std::logic_error("catalog code invalid: " + errs[0]);
  return d;
}

void orient_to(MarkedGraphDiagram& d, long target_writhe) {
  auto orient = try_orient(d, target_writhe);
  if (!orient)
    throw std::logic_error("catalog diagram cannot reach writhe " +
                           std::to_string(target_writhe));
  d.orientation = *orient;
}

// Orientation with writhe equal to the (integral) self-writhe, so that
// <<D>>_N coincides with <<D~>>.
void orient_sw(MarkedGraphDiagram& d) {
  mpq_class sw = self_writhe(d);
  if (sw.get_den() != 1) throw std::logic_error("half-integer self-writhe");
  orient_to(d, sw.get_num().get_si());
}

ExtScalar rational_k(const mpq_class& t, const mpq_class& v) {
  return ExtScalar::from_rational(t, v);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  LaurentPoly delta = LaurentPoly::delta();
  LaurentPoly one = LaurentPoly::one();
  MultiPoly nf_one(1);

  {
    CatalogEntry e;
    e.name = "0_1";
    e.description = "unknotted sphere, one marked vertex";
    e.diagram = parse_or_die("M[1,2,2,1]");
    e.orientable = true;
    orient_to(e.diagram, 0);
    e.ll_golden = bp({{1, 0, one}, {0, 1, delta}});
    e.nf_golden = nf_one;
    e.k_golden = [](const mpq_class& t) { return rational_k(t, 1); };
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "2^1_1";
    e.description = "unknotted torus, two marked vertices";
    e.diagram = parse_or_die("M[1,3,4,2] M[4,3,1,2]");
    e.orientable = true;
    orient_sw(e.diagram);
    e.ll_golden = bp({{2, 0, one},
                      {1, 1, lp({{-2, 2}, {-2, -2}})},
                      {0, 2, one}});
    e.nf_golden = nf_one;
    e.k_golden = [](const mpq_class& t) { return rational_k(t, 2 * t); };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "2^-1_1";
    e.description = "positive projective plane, nonorientable";
    e.diagram = parse_or_die("X[1,2,4,3] M[2,1,3,4]");
    e.ll_golden = bp({{1, 0, lp({{-1, 3}})}, {0, 1, lp({{-1, -3}})}});
    MultiPoly nf = MultiPoly::var(VA) + MultiPoly::var(VB);
    e.nf_golden = nf;
    e.k_golden = [](const mpq_class& t) {
      return ExtScalar::basis(t, ES2, false);
    };
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "2^-1*_1";
    e.description = "negative projective plane, nonorientable";
    e.diagram = parse_or_die("X[2,4,3,1] M[2,1,3,4]");
    e.ll_golden = bp({{1, 0, lp({{-1, -3}})}, {0, 1, lp({{-1, 3}})}});
    e.nf_golden = MultiPoly::var(VA) + MultiPoly::var(VB);
    e.k_golden = [](const mpq_class& t) {
      return ExtScalar::basis(t, ES2, false);
    };
    cat.push_back(e);
  }

  // Classical link diagrams used by the normalized-bracket goldens.
  auto classical = [&](const std::string& name, const std::string& code,
                       std::optional<long> w, const LaurentPoly& golden,
                       const std::string& desc) {
    CatalogEntry e;
    e.name = name;
    e.description = desc;
    e.diagram = parse_or_die(code);
    e.orientable = true;
    if (w)
      orient_to(e.diagram, *w);
    else
      e.diagram.orientation = *try_orient(e.diagram);
    e.bracket_golden = golden;
    cat.push_back(e);
  };
  classical("2^2_1", "X[1,3,4,2] X[3,1,2,4]", -2,
            lp({{-1, 10}, {-1, 2}}), "Hopf link, negative orientation");
  classical("2^2*_1", "X[1,3,4,2] X[3,1,2,4]", 2,
            lp({{-1, -10}, {-1, -2}}), "Hopf link, positive orientation");
  classical("3_1", "X[1,3,4,2] X[3,5,6,4] X[5,1,2,6]", std::nullopt,
            lp({{-1, -16}, {1, -12}, {1, -4}}), "trefoil");
  classical("3_1*", "X[3,4,2,1] X[5,6,4,3] X[1,2,6,5]", std::nullopt,
            lp({{-1, 16}, {1, 12}, {1, 4}}), "mirror trefoil");
  classical("4_1", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", std::nullopt,
            lp({{1, -8}, {-1, -4}, {1, 0}, {-1, 4}, {1, 8}}), "figure eight");
  classical("4^2_1", "X[1,3,4,2] X[3,5,6,4] X[5,7,8,6] X[7,1,2,8]", -4,
            lp({{-1, 18}, {-1, 10}, {1, 6}, {-1, 2}}), "(2,4) torus link");
  classical("2^2_1#3_1",
            "X[1,3,4,2] X[3,1,6,4] X[5,7,8,2] X[7,9,10,8] X[9,5,6,10]", 1,
            lp({{-1, 10}, {-1, 2}}) * lp({{-1, -16}, {1, -12}, {1, -4}}),
            "Hopf link # trefoil");
  classical("3_1*#3_1",
            "X[3,4,2,1] X[5,6,4,3] X[1,8,6,5] X[7,9,10,2] X[9,11,12,10] "
            "X[11,7,8,12]",
            0,
            lp({{1, 16}, {-1, 12}, {-1, 4}}) * lp({{1, -16}, {-1, -12}, {-1, -4}}),
            "granny connected sum");

  // Surface-link table entries sharing the column template.
  {
    CatalogEntry e;
    e.name = "6^{0,1}_1";
    e.description = "orientable 2-component surface-link";
    e.diagram =
        build_template(1, false, TopNode::Vertex, Bottom::Plain, false);
    e.orientable = true;
    orient_sw(e.diagram);
    e.ll_golden =
        bp({{2, 0, delta},
            {0, 2, delta},
            {1, 1, lp({{1, 8}, {1, 4}, {4, 0}, {1, -4}, {1, -8}})}});
    e.ll_is_normalized = true;
    e.nf_golden = nf_one;
    e.k_golden = [](const mpq_class& t) {
      return rational_k(t,
                        ratpoly(t, {{4, 3}, {3, 2}, {-4, 1}, {1, 0}}, 0, 2));
    };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "7^{0,-2}_1";
    e.description = "nonorientable 2-component surface-link";
    e.diagram = build_template(1, true, TopNode::Vertex, Bottom::Plain, false);
    e.ll_golden = bp(
        {{2, 0, delta}, {0, 2, delta}, {1, 1, lp({{3, 0}, {-1, -12}})}});
    e.nf_golden = nf_one;
    e.k_golden = [](const mpq_class& t) {
      ExtScalar r = rational_k(
          t, ratpoly(t, {{4, 5}, {12, 4}, {-4, 3}, {-9, 2}, {6, 1}, {-1, 0}},
                     1, 4));
      r += ExtScalar::basis(
          t, ES12, true,
          ratpoly(t, {{4, 4}, {-2, 3}, {-6, 2}, {5, 1}, {-1, 0}}, 1, 3));
      return r;
    };
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "8_1";
    e.description = "spun 2-knot of the trefoil";
    e.diagram =
        build_template(2, false, TopNode::Vertex, Bottom::Plain, false);
    e.orientable = true;
    orient_sw(e.diagram);
    e.ll_golden =
        bp({{2, 0, delta},
            {0, 2, delta},
            {1, 1, lp({{-1, 12}, {1, 8}, {5, 0}, {1, -8}, {-1, -12}})}});
    e.ll_is_normalized = true;
    e.nf_golden = nf_one;
    e.k_golden = [](const mpq_class& t) {
      return rational_k(
          t,
          ratpoly(t, {{6, 5}, {14, 4}, {-8, 3}, {-8, 2}, {6, 1}, {-1, 0}}, 0,
                  4));
    };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "9_1";
    e.description = "ribbon 2-knot associated with the knot 6_1";
    e.diagram = build_template(2, true, TopNode::Vertex, Bottom::Plain, false);
    e.orientable = true;
    orient_sw(e.diagram);
    e.ll_golden = bp({{2, 0, delta},
                      {0, 2, delta},
                      {1, 1, lp({{1, 8},
                                 {4, 0},
                                 {-1, -4},
                                 {1, -8},
                                 {-1, -12},
                                 {1, -16}})}});
    e.ll_is_normalized = true;
    e.nf_golden = nf_one;
    e.k_golden = [](const mpq_class& t) {
      ExtScalar r = rational_k(
          t, ratpoly(t,
                     {{6, 7}, {27, 6}, {12, 5}, {-37, 4}, {-2, 3}, {19, 2},
                      {-8, 1}, {1, 0}},
                     1, 6));
      r += ExtScalar::basis(
          t, ES12, true,
          ratpoly(t, {{6, 6}, {7, 5}, {-21, 4}, {14, 2}, {-7, 1}, {1, 0}}, 1,
                  5));
      return r;
    };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "10_2";
    e.description = "2-twist spun 2-knot of the trefoil";
    e.diagram = build_template(2, false, TopNode::KinkCrossing,
                               Bottom::CrossColumn, false);
    e.orientable = true;
    orient_sw(e.diagram);
    e.ll_golden = bp({{2, 0, delta},
                      {0, 2, delta},
                      {1, 1, lp({{1, 16},
                                 {-1, 12},
                                 {2, 8},
                                 {-3, 4},
                                 {4, 0},
                                 {-3, -4},
                                 {2, -8},
                                 {-1, -12},
                                 {1, -16}})}});
    e.ll_is_normalized = true;
    e.k_golden = [](const mpq_class& t) {
      return rational_k(
          t, ratpoly(t,
                     {{8, 7}, {25, 6}, {12, 5}, {-37, 4}, {-2, 3}, {19, 2},
                      {-8, 1}, {1, 0}},
                     0, 6));
    };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "8^{-1,-1}_1";
    e.description = "nonorientable 2-component surface-link";
    e.diagram = build_template(1, false, TopNode::KinkCrossing,
                               Bottom::CrossColumn, false);
    e.ll_golden = bp({{2, 0, delta},
                      {0, 2, delta},
                      {1, 1, lp({{-1, 12},
                                 {-2, 4},
                                 {2, 0},
                                 {-2, -4},
                                 {-1, -12}})}});
    e.k_golden = [](const mpq_class& t) {
      return rational_k(
          t,
          ratpoly(t, {{6, 5}, {10, 4}, {-4, 3}, {-9, 2}, {6, 1}, {-1, 0}}, 0,
                  4));
    };
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "8^{1,1}_1";
    e.description = "two torus components, four marked vertices";
    e.diagram = build_template(1, false, TopNode::Vertex,
                               Bottom::VertexColumn, false);
    e.orientable = true;
    orient_sw(e.diagram);
    e.k_golden = [](const mpq_class& t) {
      return rational_k(
          t, ratpoly(t, {{6, 4}, {15, 3}, {3, 2}, {-11, 1}, {3, 0}}, 0, 1));
    };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "10^1_1";
    e.description = "spun torus of the trefoil";
    e.diagram = build_template(2, false, TopNode::Vertex,
                               Bottom::VertexColumn, false);
    e.orientable = true;
    orient_sw(e.diagram);
    e.k_golden = [](const mpq_class& t) {
      return rational_k(
          t, ratpoly(t,
                     {{8, 6}, {32, 5}, {32, 4}, {-32, 3}, {-18, 2}, {17, 1},
                      {-3, 0}},
                     0, 3));
    };
    e.k_is_normalized = true;
    e.in_table1 = true;
    cat.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "virtual_ex5_5";
    e.description = "oriented virtual 2-knot with nontrivial normal form";
    e.diagram =
        build_template(2, false, TopNode::Vertex, Bottom::Plain, true);
    e.orientable = true;
    orient_to(e.diagram, 0);
    e.ll_golden = bp(
        {{2, 0, delta},
         {0, 2, delta},
         {1, 1, lp({{1, 4}, {1, 1}, {3, 0}, {1, -2}, {1, -4}})}});
    e.ll_is_normalized = true;
    // -B^2 y^2 - A y^2 + B^2 y + A y + 1
    MultiPoly A = MultiPoly::var(VA), B2 = MultiPoly::var(VB, 2),
              y = MultiPoly::var(VY), y2 = MultiPoly::var(VY, 2);
    e.nf_golden = MultiPoly(1) + (B2 + A) * y - (B2 + A) * y2;
    cat.push_back(e);
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (auto& e : catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

}  // namespace yinv
