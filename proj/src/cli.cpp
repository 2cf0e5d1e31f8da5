#include "yinv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "yinv/bracket.hpp"
#include "yinv/catalog.hpp"
#include "yinv/evalring.hpp"
#include "yinv/groebner.hpp"
#include "yinv/moves.hpp"
#include "yinv/randomgen.hpp"

namespace yinv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (...) {
    throw UsageError("cannot parse rational '" + s + "'");
  }
}

MarkedGraphDiagram load_diagram(const std::string& file,
                                const std::string& cat) {
  if (!cat.empty()) return catalog_entry(cat).diagram;
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

SignPair parse_epsilon(const std::string& s) {
  if (s == "pp") return {1, 1};
  if (s == "pm") return {1, -1};
  if (s == "mp") return {-1, 1};
  if (s == "mm") return {-1, -1};
  throw UsageError("epsilon must be one of pp, pm, mp, mm");
}

void emit_report(std::ostream& out, const std::string& format,
                 const std::string& invariant, const std::string& result,
                 const nlohmann::json& inputs, double ms) {
  if (format == "json") {
    nlohmann::json j;
    j["inputs"] = inputs;
    j["invariant"] = invariant;
    j["result"] = result;
    j["timing_ms"] = ms;
    out << j.dump() << "\n";
  } else {
    out << result << "\n";
  }
}

int cmd_eval(const std::string& file, const std::string& cat,
             const std::string& invariant, long n, const std::string& t_str,
             bool oriented, const std::string& eps_str,
             const std::string& evaluator, const std::string& format,
             std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  MarkedGraphDiagram d = load_diagram(file, cat);
  auto errs = validate(d);
  if (!errs.empty()) {
    err << "validation error: " << errs[0] << "\n";
    return 3;
  }
  if (oriented && !d.is_oriented())
    throw std::domain_error("diagram carries no orientation");
  if (!oriented) d.orientation.clear();

  const LinkEvaluator& ev = evaluator == "component-count"
                                ? component_count_evaluator()
                                : kauffman_evaluator();
  SignPair eps = parse_epsilon(eps_str);
  mpq_class t = t_str.empty() ? mpq_class(n) : parse_rational(t_str);

  std::string result;
  if (invariant == "bracket") {
    LinkDiagram L(d);
    result = oriented ? normalized_bracket(L).str() : ev.eval(L).str();
  } else if (invariant == "double") {
    result = double_bracket(d, ev).str();
  } else if (invariant == "ll") {
    result = ll(d, ev).str();
  } else if (invariant == "ll-normalized") {
    result = ll_normalized(d).str();
  } else if (invariant == "normal-form") {
    result = normal_form_invariant(d, oriented ? NormalFormMode::Oriented
                                               : NormalFormMode::Unoriented)
                 .str();
  } else if (invariant == "K") {
    result = K_invariant(d, t, oriented ? KMode::Oriented : KMode::Unoriented,
                         eps)
                 .str();
  } else if (invariant == "K-mod") {
    ExtScalar v = K_invariant(
        d, mpq_class(n), oriented ? KMode::Oriented : KMode::Unoriented, eps);
    ModExtScalar r = reduce_mod(v, n);
    result = format_modular(r) + " (mod " + std::to_string(2 * n - 1) + ")";
  } else {
    throw UsageError("unknown invariant '" + invariant + "'");
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  nlohmann::json inputs;
  inputs["source"] = cat.empty() ? file : cat;
  inputs["oriented"] = oriented;
  inputs["evaluator"] = ev.name;
  if (invariant == "K" || invariant == "K-mod") {
    inputs["t"] = t.get_str();
    inputs["epsilon"] = eps_str;
    if (invariant == "K-mod") inputs["n"] = n;
  }
  emit_report(out, format, invariant, result, inputs, ms);
  return 0;
}

int cmd_catalog(const std::string& action, const std::string& name,
                std::ostream& out) {
  if (action == "list") {
    for (auto& e : catalog()) {
      out << e.name;
      if (!e.description.empty()) out << "  " << e.description;
      if (!e.orientable) out << " (nonorientable)";
      out << "\n";
    }
    return 0;
  }
  if (action == "show") {
    out << to_text(catalog_entry(name).diagram) << "\n";
    return 0;
  }
  if (action == "dump") {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& e : catalog()) {
      nlohmann::json j;
      j["name"] = e.name;
      j["description"] = e.description;
      j["orientable"] = e.orientable;
      j["diagram"] = nlohmann::json::parse(to_json(e.diagram));
      nlohmann::json g;
      if (e.bracket_golden) g["bracket_normalized"] = e.bracket_golden->str();
      if (e.ll_golden)
        g[e.ll_is_normalized ? "ll_normalized" : "ll"] = e.ll_golden->str();
      if (e.nf_golden) g["normal_form"] = e.nf_golden->str();
      if (e.k_golden) {
        nlohmann::json ks;
        for (long n = 2; n <= 5; ++n)
          ks[std::to_string(n)] = e.k_golden(mpq_class(n)).str();
        g[e.k_is_normalized ? "K_normalized" : "K"] = ks;
      }
      j["golden"] = g;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  throw UsageError("catalog action must be list, show or dump");
}

// ---------------------------------------------------------------------------
// verify

bool report(std::ostream& out, const std::string& what, bool ok,
            const std::string& detail = "") {
  out << (ok ? "PASS " : "FAIL ") << what;
  if (!ok && !detail.empty()) out << ": " << detail;
  out << "\n";
  return ok;
}

bool verify_groebner(std::ostream& out) {
  bool all = true;
  auto& basis = kauffman_basis();
  MultiPoly A = MultiPoly::var(VA), B = MultiPoly::var(VB),
            x = MultiPoly::var(VX), y = MultiPoly::var(VY), one(1);
  std::vector<MultiPoly> expected = {
      x + y - one, A * B - one, A * A + B * B + one,
      MultiPoly::var(VB, 3) + A + B};
  bool same = basis.size() == expected.size();
  for (size_t i = 0; same && i < basis.size(); ++i)
    same = basis[i] == expected[i];
  std::string shown;
  for (auto& g : basis) shown += "{" + g.str() + "} ";
  all &= report(out, "groebner reduced basis = " + shown, same);
  all &= report(out, "groebner basis audit (S-polynomials reduce to 0)",
                is_groebner_basis(basis));
  return all;
}

bool verify_golden(std::ostream& out) {
  bool all = true;
  for (auto& e : catalog()) {
    std::ostringstream detail;
    bool ok = true;
    try {
      if (e.bracket_golden) {
        LaurentPoly got = normalized_bracket(LinkDiagram(e.diagram));
        if (got != *e.bracket_golden) {
          ok = false;
          detail << "bracket got " << got.str();
        }
      }
      if (e.ll_golden) {
        BracketPoly got =
            e.ll_is_normalized ? ll_normalized(e.diagram) : ll(e.diagram);
        if (got != *e.ll_golden) {
          ok = false;
          detail << " <<.>> got " << got.str();
        }
      }
      if (e.nf_golden) {
        MultiPoly got = normal_form_invariant(
            e.diagram, e.ll_is_normalized ? NormalFormMode::Oriented
                                          : NormalFormMode::Unoriented);
        if (got != *e.nf_golden) {
          ok = false;
          detail << " normal form got " << got.str();
        }
      }
      if (e.k_golden) {
        for (long n = 2; n <= 5; ++n) {
          mpq_class t(n);
          ExtScalar got = K_invariant(
              e.diagram, t,
              e.k_is_normalized ? KMode::Oriented : KMode::Unoriented);
          if (got != e.k_golden(t)) {
            ok = false;
            detail << " K(" << n << ") got " << got.str();
          }
        }
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail << "error: " << ex.what();
    }
    all &= report(out, "golden " + e.name, ok, detail.str());
  }
  return all;
}

bool verify_moves(std::ostream& out, unsigned seed) {
  bool all = true;
  std::mt19937 rng(seed);
  // Insertion sequences must preserve the normal form and K_mod.
  const char* names[] = {"2^1_1", "2^-1_1", "6^{0,1}_1"};
  for (const char* nm : names) {
    const CatalogEntry& e = catalog_entry(nm);
    MarkedGraphDiagram d = e.diagram;
    d.orientation.clear();
    MultiPoly nf0 = normal_form_invariant(d, NormalFormMode::Unoriented);
    ModExtScalar k0 = reduce_mod(
        K_invariant(d, mpq_class(2), KMode::Unoriented), 2);
    bool ok = true;
    std::string step;
    for (int i = 0; i < 6 && ok; ++i) {
      MoveSite site = random_move_site(rng, d, true);
      d = apply_move(d, site);
      if (!validate(d).empty()) {
        ok = false;
        step = "invalid diagram after move";
        break;
      }
      if (normal_form_invariant(d, NormalFormMode::Unoriented) != nf0) {
        ok = false;
        step = "normal form changed";
      }
      if (reduce_mod(K_invariant(d, mpq_class(2), KMode::Unoriented), 2) !=
          k0) {
        ok = false;
        step = "K_3 changed";
      }
    }
    all &= report(out, std::string("move sequence invariance on ") + nm, ok,
                  step);
  }
  // Transcribed pairs.
  for (auto& pair : catalog_move_pairs()) {
    bool ok = true;
    std::string detail;
    try {
      MarkedGraphDiagram b = pair.before, a = pair.after;
      b.orientation.clear();
      a.orientation.clear();
      if (pair.move_id == "gamma7" || pair.move_id == "gamma8") {
        ok = normal_form_invariant(b, NormalFormMode::Unoriented) ==
             normal_form_invariant(a, NormalFormMode::Unoriented);
        if (!ok) detail = "normal forms differ";
        for (long n = 2; n <= 5 && ok; ++n) {
          ExtScalar kb = K_invariant(b, mpq_class(n), KMode::Unoriented);
          ExtScalar ka = K_invariant(a, mpq_class(n), KMode::Unoriented);
          if (!reduce_mod(kb - ka, n).is_zero()) {
            ok = false;
            detail = "K difference nonzero mod " + std::to_string(2 * n - 1);
          }
        }
      } else {
        ok = ll(b) == ll(a);
        if (!ok) detail = "<<.>> differs";
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    all &= report(out, "pair invariance " + pair.move_id, ok, detail);
  }
  return all;
}

int cmd_verify(const std::string& suite, unsigned seed, std::ostream& out) {
  bool ok = true;
  if (suite == "groebner" || suite == "all") ok &= verify_groebner(out);
  if (suite == "golden" || suite == "all") ok &= verify_golden(out);
  if (suite == "moves" || suite == "all") ok &= verify_moves(out, seed);
  return ok ? 0 : 1;
}

int cmd_moves_check(const std::string& diagram_file,
                    const std::string& script_file, long n,
                    std::ostream& out) {
  std::ifstream in(diagram_file);
  if (!in) throw UsageError("cannot open '" + diagram_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  MarkedGraphDiagram d = parse_diagram(buf.str());
  auto errs = validate(d);
  if (!errs.empty()) throw std::domain_error("invalid diagram: " + errs[0]);

  std::ifstream sin(script_file);
  if (!sin) throw UsageError("cannot open '" + script_file + "'");
  std::stringstream sbuf;
  sbuf << sin.rdbuf();
  auto sites = parse_move_script(sbuf.str());

  MarkedGraphDiagram unoriented = d;
  unoriented.orientation.clear();
  BracketPoly ll0 = ll(unoriented);
  MultiPoly nf0 = normal_form_invariant(unoriented, NormalFormMode::Unoriented);
  ModExtScalar k0 =
      reduce_mod(K_invariant(unoriented, mpq_class(n), KMode::Unoriented), n);

  for (size_t i = 0; i < sites.size(); ++i) {
    d = apply_move(d, sites[i]);
    auto verrs = validate(d);
    if (!verrs.empty())
      throw std::domain_error("move " + std::to_string(i) +
                              " produced an invalid diagram: " + verrs[0]);
  }
  MarkedGraphDiagram after = d;
  after.orientation.clear();
  BracketPoly ll1 = ll(after);
  MultiPoly nf1 = normal_form_invariant(after, NormalFormMode::Unoriented);
  ModExtScalar k1 =
      reduce_mod(K_invariant(after, mpq_class(n), KMode::Unoriented), n);

  out << "moves applied: " << sites.size() << "\n";
  out << "<<.>>        " << (ll1 == ll0 ? "unchanged" : "changed") << "\n";
  out << "normal form  " << (nf1 == nf0 ? "unchanged" : "changed") << " ("
      << nf1.str() << ")\n";
  out << "K_" << 2 * n - 1 << "         "
      << (k1 == k0 ? "unchanged" : "changed") << " (" << format_modular(k1)
      << ")\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"invariants of surface-links from marked graph diagrams"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate an invariant");
  std::string file, cat, invariant, t_str, eps = "pp", evaluator = "kauffman",
                    format = "text";
  long n = 2;
  bool oriented = false;
  eval->add_option("--diagram", file, "diagram file (text or JSON)");
  eval->add_option("--catalog", cat, "catalog entry name");
  eval->add_option("--invariant", invariant,
                   "bracket|double|ll|ll-normalized|normal-form|K|K-mod")
      ->required();
  eval->add_option("--n", n, "integer parameter for K-mod (t = n)");
  eval->add_option("--t", t_str, "rational parameter for K");
  eval->add_flag("--oriented", oriented, "use the stored orientation");
  eval->add_option("--epsilon", eps, "sign pair: pp|pm|mp|mm");
  eval->add_option("--evaluator", evaluator, "kauffman|component-count");
  eval->add_option("--format", format, "text|json");

  auto* catc = app.add_subcommand("catalog", "list or dump catalog entries");
  std::string action = "list", name;
  catc->add_option("action", action, "list|show|dump");
  catc->add_option("name", name, "entry name for show");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  unsigned seed = 7;
  ver->add_option("suite", suite, "groebner|golden|moves|all");
  ver->add_option("--seed", seed, "seed for the move suite");

  auto* mv = app.add_subcommand("moves", "apply a move script");
  std::string mv_action = "check", mv_diagram, mv_script;
  long mv_n = 2;
  mv->add_option("action", mv_action, "check");
  mv->add_option("diagram", mv_diagram, "diagram file")->required();
  mv->add_option("--script", mv_script, "move script file")->required();
  mv->add_option("--n", mv_n, "modulus parameter");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) {
      if (file.empty() == cat.empty())
        throw UsageError("give exactly one of --diagram or --catalog");
      return cmd_eval(file, cat, invariant, n, t_str, oriented, eps, evaluator,
                      format, out, err);
    }
    if (catc->parsed()) return cmd_catalog(action, name, out);
    if (ver->parsed()) return cmd_verify(suite, seed, out);
    if (mv->parsed()) {
      if (mv_action != "check") throw UsageError("moves action must be check");
      return cmd_moves_check(mv_diagram, mv_script, mv_n, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

}  // namespace yinv::cli
