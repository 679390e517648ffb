#include <chrono>
#include <map>
#include <functional>

#include "edgepat/stutter.hpp"
#include "edgepat/syntax.hpp"
#include "edgepat/trace_json.hpp"

namespace edgepat {

nlohmann::json verdict_to_json(const CusVerdict& v) {
  nlohmann::json j;
  j["verdict"] = verdict_name(v.kind());
  j["rules"] = v.rules();
  if (const auto& c = v.counterexample()) {
    j["counterexample"] = {{"trace", trace_to_json(c->trace)},
                           {"stutter_index", c->stutter_index},
                           {"original", c->original},
                           {"stuttered", c->stuttered}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

namespace {

constexpr int kAtoms = 3;
const char* const kAtomNames[kAtoms] = {"a", "b", "c"};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Calls visit(atom_index, negated) vectors: atom indices form a
// restricted-growth string and each atom's first occurrence is positive.
void orbit_representatives(std::size_t k,
                           const std::function<void(const std::vector<int>&, const std::vector<bool>&)>& visit) {
  std::vector<int> atom(k);
  std::vector<bool> neg(k);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == k) {
      visit(atom, neg);
      return;
    }
    for (int a = 0; a <= used && a < kAtoms; ++a) {
      atom[i] = a;
      if (a == used) {
        neg[i] = false;
        rec(i + 1, used + 1);
      } else {
        for (bool n : {false, true}) {
          neg[i] = n;
          rec(i + 1, used);
        }
      }
    }
  };
  rec(0, 0);
}

}  // namespace

SchemaReport validate_schema(const RuleSchema& schema, Bounds bounds, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const Formula pattern = parse(schema.template_text);
  const auto metavars = atoms_of(pattern);
  SchemaReport r;
  r.name = schema.name;
  r.template_text = schema.template_text;
  r.instantiations = ipow(2 * kAtoms, metavars.size());
  orbit_representatives(metavars.size(), [&](const std::vector<int>& atom, const std::vector<bool>& neg) {
    if (r.counterexample) return;
    std::map<std::string, Formula> binding;
    for (std::size_t i = 0; i < metavars.size(); ++i) {
      Formula a = Formula::atom(kAtomNames[atom[i]]);
      binding.emplace(metavars[i], neg[i] ? Formula::negation(a) : a);
    }
    const Formula inst = substitute(pattern, binding);
    ++r.representatives;
    CusVerdict v = falsify(inst, bounds, workers);
    if (v.is_refuted()) {
      r.failing_instance = inst;
      r.counterexample = v.counterexample();
    }
  });
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

std::vector<SchemaReport> validate_schemas(Bounds bounds, int workers) {
  std::vector<SchemaReport> out;
  for (const auto& s : schemas()) out.push_back(validate_schema(s, bounds, workers));
  return out;
}

}  // namespace edgepat
