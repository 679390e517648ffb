// ============================================================================
// edgepat/catalog.hpp: pattern/scope formulas with edge-based conditions
// ============================================================================
//
// 5 patterns x 5 scopes x 4 combinations, minus Universality over edge
// conditions, gives 90 cells.  Combination codes:
//
//   0  P,S states     Q,R states
//   1  P,S states     Q,R up edges
//   2  P,S up edges   Q,R states
//   3  P,S up edges   Q,R up edges
//
// Templates are kept as text (src/catalog_data.cpp) and parsed on first use.
// A few cells carry both a corrected text (the default) and the text as
// originally printed; Variant::AsPrinted selects the latter.
// ============================================================================

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "edgepat/formula.hpp"
#include "edgepat/trace.hpp"

namespace edgepat {

enum class PatternId { Absence, Existence, Universality, Precedence, Response };
enum class ScopeId { Globally, BeforeR, AfterQ, BetweenQandR, AfterQUntilR };

struct Combination {
  int code = 0;
  explicit Combination(int c);
  bool conditions_are_edges() const noexcept { return code >= 2; }
  bool bounds_are_edges() const noexcept { return code % 2 == 1; }
  friend bool operator==(Combination, Combination) = default;
};

struct CellId {
  PatternId pattern = PatternId::Absence;
  ScopeId scope = ScopeId::Globally;
  Combination combo{0};
  friend bool operator==(const CellId&, const CellId&) = default;
};

enum class Variant { Corrected, AsPrinted };

class UnsupportedCell : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  CellId id;
  std::string text;          // corrected (default) template
  std::string printed_text;  // as originally printed; equals text when no fix
  std::string notes;
  bool has_correction() const { return text != printed_text; }
};

std::string_view pattern_key(PatternId p);
std::string_view scope_key(ScopeId s);
std::optional<PatternId> pattern_from_key(std::string_view key);
std::optional<ScopeId> scope_from_key(std::string_view key);

// "absence.between.1"
std::string cell_key(const CellId& id);
// Throws UnsupportedCell on malformed or unknown keys.
CellId parse_cell_key(std::string_view key);

// The 90 cells, ordered by pattern, scope, combination.
std::vector<CellId> all_cells();
const CatalogEntry& entry(const CellId& id);

// The cell's formula over placeholder atoms P, S, Q, R.  Throws
// UnsupportedCell for Universality with combination 2 or 3; a ParseError
// escapes for printed texts that are not well formed.
Formula template_of(const CellId& id, Variant v = Variant::Corrected);

// Placeholders the template mentions, in P, S, Q, R order.
std::vector<std::string> placeholders(const CellId& id, Variant v = Variant::Corrected);

struct PatternInstance {
  CellId cell;
  std::map<std::string, Formula> bindings;
};

// Throws BindingError when the bindings miss or exceed the placeholders.
Formula instantiate(const PatternInstance& inst, Variant v = Variant::Corrected);

// Replaces every up edge by a down edge.
Formula to_down_edges(const Formula& f);

// [{pattern, scope, combo, template_text, corrected, notes}, ...]
nlohmann::json catalog_to_json(Variant v = Variant::Corrected);

// Each intermediate of the step-by-step construction of the Between-scope
// Absence formula, paired with the final formula and a trace on which the
// two disagree at position 0.
struct DerivationFixture {
  std::string name;
  std::string failure_mode;
  Formula buggy;
  Formula final_formula;
  Formula failure_condition;  // holds at 0 on the witness
  LassoTrace witness;
  bool buggy_value = false;
  bool final_value = false;
};

// Witnesses come from exhaustive search over P, Q, R at bounds (3,2).
const std::vector<DerivationFixture>& derivation_fixtures();

namespace catalog_data {
struct Row {
  const char* key;
  const char* text;
  const char* printed;  // nullptr when identical to text
};
const std::vector<Row>& rows();
}  // namespace catalog_data

}  // namespace edgepat
