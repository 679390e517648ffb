// ============================================================================
// edgepat/laws.hpp: edge identities and a rewriter built on them
// ============================================================================
//
// Each law is an equivalence between two templates over metavariables A, B.
// verify_law() instantiates A, B with atoms and compares both sides at every
// position of every trace within the bounds.  simplify() uses the laws left
// to right as rewrite rules; every rule pushes an edge inward, removes it,
// or yields a constant, so rewriting terminates.
// ============================================================================

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edgepat/formula.hpp"
#include "edgepat/stutter.hpp"
#include "edgepat/trace.hpp"

namespace edgepat {

struct Law {
  std::string name;
  std::string left_text;
  std::string right_text;
  Formula left;
  Formula right;
  bool rewrite = true;         // used by simplify()
  bool compound_only = false;  // rewrite only when A is not an atom
};

// The 23 laws, in a stable order.
const std::vector<Law>& law_list();
const Law* find_law(const std::string& name);
// Builds a law from text; used for ad hoc and deliberately wrong laws.
Law make_law(std::string name, std::string left_text, std::string right_text);

struct LawWitness {
  LassoTrace trace;
  std::size_t position = 0;
  bool left = false;
  bool right = false;
};

struct LawResult {
  std::string name;
  std::uint64_t traces = 0;
  std::optional<LawWitness> witness;  // first differing (trace, position)
  bool passed() const { return !witness.has_value(); }
};

// Metavariables are bound to atoms of the same name; the default alphabet is
// A, B plus any other atom the law mentions.
LawResult verify_law(const Law& law, Bounds bounds = {}, int workers = 0);
LawResult verify_law(const Law& law, const Alphabet& alphabet, Bounds bounds, int workers = 0);

struct SimplifyResult {
  Formula formula;
  std::size_t steps = 0;
  std::vector<std::string> applied;  // law names, in application order
};

class RewriteLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws RewriteLimit after max_steps rewrites.
SimplifyResult simplify_traced(const Formula& f, std::size_t max_steps = 100000);
Formula simplify(const Formula& f);

// [{name, left_text, right_text}, ...]
nlohmann::json laws_to_json();

}  // namespace edgepat
