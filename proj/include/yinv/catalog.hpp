#ifndef YINV_CATALOG_HPP
#define YINV_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "yinv/bracketpoly.hpp"
#include "yinv/diagram.hpp"
#include "yinv/evalring.hpp"
#include "yinv/multipoly.hpp"

namespace yinv {

// A named diagram with its recorded golden values. Catalog codes are
// transcribed from the standard table figures; their correctness criterion
// is reproducing the published polynomials, which the golden tests enforce.
struct CatalogEntry {
  std::string name;
  std::string description;
  MarkedGraphDiagram diagram;  // carries an orientation when orientable
  bool orientable = false;
  // Classical link diagrams (no marked vertices) record <L>_N instead of a
  // state-sum polynomial.
  std::optional<LaurentPoly> bracket_golden;
  std::optional<BracketPoly> ll_golden;
  bool ll_is_normalized = false;
  std::optional<MultiPoly> nf_golden;
  // Exact closed form of K(D;t) (or K(D;t)_N when k_is_normalized).
  std::function<ExtScalar(const mpq_class&)> k_golden;
  bool k_is_normalized = false;
  bool in_table1 = false;

  bool is_classical() const { return bracket_golden.has_value(); }
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace yinv

#endif
