#include "yinv/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace yinv {

namespace {

void require_grevlex(const MonomialOrder& ord) {
  if (ord.kind != MonomialOrder::Grevlex)
    throw std::invalid_argument("unsupported monomial order");
}

}  // namespace

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& g,
                 const MonomialOrder& ord) {
  require_grevlex(ord);
  for (auto& p : g)
    if (p.is_zero()) throw std::invalid_argument("zero divisor polynomial");
  MultiPoly work = f, remainder;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const mpq_class& lc = work.leading_coeff();
    bool divided = false;
    for (auto& p : g) {
      const Monomial& plm = p.leading_monomial();
      if (!plm.divides(lm)) continue;
      mpq_class factor = lc / p.leading_coeff();
      work = work - p.scaled(factor) * MultiPoly::term(mpq_class(1), lm / plm);
      divided = true;
      break;
    }
    if (!divided) {
      remainder += MultiPoly::term(lc, lm);
      work.set(lm, mpq_class(0));
    }
  }
  return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const MonomialOrder& ord) {
  require_grevlex(ord);
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of zero polynomial");
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly a = f.scaled(mpq_class(1) / f.leading_coeff()) *
                MultiPoly::term(mpq_class(1), l / f.leading_monomial());
  MultiPoly b = g.scaled(mpq_class(1) / g.leading_coeff()) *
                MultiPoly::term(mpq_class(1), l / g.leading_monomial());
  return a - b;
}

std::vector<MultiPoly> buchberger(const Ideal& ideal, const MonomialOrder& ord) {
  require_grevlex(ord);
  std::vector<MultiPoly> g;
  for (auto& p : ideal.generators) {
    if (p.is_zero()) throw std::invalid_argument("zero ideal generator");
    g.push_back(p);
  }
  if (g.empty()) return g;

  std::set<std::pair<int, int>> pending, done;
  auto add_pairs = [&](int upto) {
    for (int i = 0; i < upto; ++i) pending.insert({i, upto});
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) add_pairs(j);

  while (!pending.empty()) {
    // Normal selection: smallest lcm total degree first.
    auto best = pending.begin();
    int best_deg =
        Monomial::lcm(g[best->first].leading_monomial(),
                      g[best->second].leading_monomial())
            .degree();
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      int deg = Monomial::lcm(g[it->first].leading_monomial(),
                              g[it->second].leading_monomial())
                    .degree();
      if (deg < best_deg) {
        best = it;
        best_deg = deg;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    done.insert({i, j});

    const Monomial &li = g[i].leading_monomial(), &lj = g[j].leading_monomial();
    Monomial l = Monomial::lcm(li, lj);
    // Coprime-head criterion.
    if (l.degree() == li.degree() + lj.degree()) continue;
    // Chain criterion: some k with LT(g_k) | lcm and both pairs handled.
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!g[k].leading_monomial().divides(l)) continue;
      auto key = [&](int a, int b) {
        return std::pair<int, int>{std::min(a, b), std::max(a, b)};
      };
      if (done.count(key(i, k)) && done.count(key(j, k))) chained = true;
    }
    if (chained) continue;

    MultiPoly s = reduce(s_polynomial(g[i], g[j], ord), g, ord);
    if (!s.is_zero()) {
      g.push_back(s);
      add_pairs(static_cast<int>(g.size()) - 1);
    }
  }
  return g;
}

bool is_groebner_basis(const std::vector<MultiPoly>& g,
                       const MonomialOrder& ord) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!reduce(s_polynomial(g[i], g[j], ord), g, ord).is_zero())
        return false;
  return true;
}

std::vector<MultiPoly> reduce_basis(const std::vector<MultiPoly>& g,
                                    const MonomialOrder& ord) {
  require_grevlex(ord);
  if (!is_groebner_basis(g, ord))
    throw std::invalid_argument("input is not a Groebner basis");

  // Minimalize: drop generators whose head is divisible by another head.
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &li = g[i].leading_monomial(),
                     &lj = g[j].leading_monomial();
      if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Inter-reduce tails and make monic.
  std::vector<MultiPoly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> rest;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) rest.push_back(minimal[j]);
    MultiPoly r = reduce(minimal[i], rest, ord);
    out.push_back(r.scaled(mpq_class(1) / r.leading_coeff()));
  }
  std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return GrevlexLess{}(a.leading_monomial(), b.leading_monomial());
  });
  return out;
}

Ideal kauffman_ideal() {
  MultiPoly A = MultiPoly::var(VA), B = MultiPoly::var(VB),
            x = MultiPoly::var(VX), y = MultiPoly::var(VY);
  MultiPoly one(1);
  MultiPoly dAB = -(A * A) - B * B;  // image of delta under B = A^-1
  Ideal ideal;
  ideal.generators.push_back(dAB * x + y - one);
  ideal.generators.push_back(x + dAB * y - one);
  ideal.generators.push_back(
      (MultiPoly::var(VA, 4) + one + MultiPoly::var(VB, 4)) * x * y);
  ideal.generators.push_back(A * B - one);
  return ideal;
}

const std::vector<MultiPoly>& kauffman_basis() {
  static const std::vector<MultiPoly> basis =
      reduce_basis(buchberger(kauffman_ideal()));
  return basis;
}

MultiPoly normal_form_invariant(const MarkedGraphDiagram& d,
                                NormalFormMode mode) {
  BracketPoly p = mode == NormalFormMode::Oriented ? ll_normalized(d)
                                                   : ll(d, kauffman_evaluator());
  return reduce(to_multipoly(p), kauffman_basis());
}

}  // namespace yinv
