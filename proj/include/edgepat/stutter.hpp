// ============================================================================
// edgepat/stutter.hpp: closure under stuttering
// ============================================================================
//
// A formula is closed under stuttering (CUS) when repeating any single state
// of any state sequence leaves its value at position 0 unchanged.
//
// check_syntactic() proves CUS from the rule set: propositional formulas are
// CUS; CUS is preserved by the boolean connectives, [], <> and U; and a
// table of validated schemas (see schemas()) covers formulas with X and edge
// operators.  falsify() searches exhaustively for a stuttering witness.
// ============================================================================

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edgepat/formula.hpp"
#include "edgepat/trace.hpp"

namespace edgepat {

struct Bounds {
  std::size_t max_prefix = 3;
  std::size_t max_loop = 2;
};

struct Counterexample {
  LassoTrace trace;
  std::size_t stutter_index = 0;
  bool original = false;   // value of f at 0 on trace
  bool stuttered = false;  // value of f at 0 on stutter_at(trace, stutter_index)
};

struct ProofStep {
  std::string rule;
  Formula formula;
};

class CusVerdict {
 public:
  enum class Kind { Proved, Refuted, Unknown };

  static CusVerdict proved(std::vector<ProofStep> steps);
  static CusVerdict refuted(Counterexample cex);
  static CusVerdict unknown();

  Kind kind() const noexcept { return kind_; }
  bool is_proved() const noexcept { return kind_ == Kind::Proved; }
  bool is_refuted() const noexcept { return kind_ == Kind::Refuted; }
  bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }

  const std::vector<ProofStep>& derivation() const noexcept { return steps_; }
  // Rule names of the derivation, in application order.
  std::vector<std::string> rules() const;
  const std::optional<Counterexample>& counterexample() const noexcept { return cex_; }

 private:
  Kind kind_ = Kind::Unknown;
  std::vector<ProofStep> steps_;
  std::optional<Counterexample> cex_;
};

std::string_view verdict_name(CusVerdict::Kind k);

// {"verdict": ..., "rules": [...], "counterexample": {trace, stutter_index} | null}
nlohmann::json verdict_to_json(const CusVerdict& v);

// ── Prover ──────────────────────────────────────────────────────────────────

// Proved or Unknown, never Refuted.
CusVerdict check_syntactic(const Formula& f);

struct RuleSchema {
  std::string name;
  std::string template_text;  // atoms are metavariables
  std::string description;
};

// The active schema table, in the order the prover tries them.
const std::vector<RuleSchema>& schemas();
// A schema that is not CUS, used to exercise validate_schemas().
RuleSchema broken_schema();

// ── Falsifier ───────────────────────────────────────────────────────────────

// Refuted with the first witness in enumeration order (trace index, then
// stutter index), or Unknown.  workers <= 0 uses the OpenMP default; the
// result does not depend on the worker count.
CusVerdict falsify(const Formula& f, const Alphabet& alphabet, Bounds bounds, int workers = 0);
// Alphabet = atoms of f in name order.
CusVerdict falsify(const Formula& f, Bounds bounds, int workers = 0);

// Single-threaded, built on LassoTrace, stutter_at and the reference
// evaluator; slow but independent of the mask kernel.
CusVerdict falsify_reference(const Formula& f, const Alphabet& alphabet, Bounds bounds);

// Sorted atom names of f.
Alphabet default_alphabet(const Formula& f);

struct CheckOptions {
  Bounds bounds;
  int workers = 0;
  std::optional<Alphabet> alphabet;
};

// Prover first; the falsifier only runs when the prover gives Unknown.
CusVerdict check(const Formula& f, const CheckOptions& options = {});

// ── Schema validation ───────────────────────────────────────────────────────

struct SchemaReport {
  std::string name;
  std::string template_text;
  std::uint64_t instantiations = 0;    // literal assignments covered
  std::uint64_t representatives = 0;   // assignments actually falsified
  std::chrono::milliseconds elapsed{0};
  std::optional<Formula> failing_instance;
  std::optional<Counterexample> counterexample;
  bool passed() const { return !counterexample.has_value(); }
};

// Instantiates every metavariable with an atom or negated atom over three
// atoms and falsifies each instance.  Renaming atoms and flipping the
// polarity of an atom everywhere map CUS formulas to CUS formulas, so one
// representative per orbit is checked; `instantiations` counts the full set.
SchemaReport validate_schema(const RuleSchema& schema, Bounds bounds = {}, int workers = 0);
std::vector<SchemaReport> validate_schemas(Bounds bounds = {}, int workers = 0);

}  // namespace edgepat
