#include "edgepat/catalog.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <unordered_map>

#include "edgepat/eval.hpp"
#include "edgepat/syntax.hpp"

namespace edgepat {

namespace {

constexpr std::array<std::string_view, 5> kPatternKeys = {"absence", "existence", "universality",
                                                          "precedence", "response"};
constexpr std::array<std::string_view, 5> kScopeKeys = {"globally", "before", "after", "between",
                                                        "after_until"};
constexpr std::array<std::string_view, 4> kPlaceholders = {"P", "S", "Q", "R"};

std::string correction_note(const std::string& key) {
  static const std::unordered_map<std::string, std::string> notes = {
      {"precedence.between.1", "printed text lacks && before X <>up(R)"},
      {"precedence.between.3", "printed text lacks && before X <>up(R)"},
      {"response.before.1", "printed closing conjunct reads (P -> Q); Q is not a condition here, read as (P -> S)"},
      {"response.between.1", "printed closing conjunct reads (P -> Q); Q is not a condition here, read as (P -> S)"},
      {"response.after_until.1", "printed closing conjunct reads (P -> Q); Q is not a condition here, read as (P -> S)"},
      {"response.before.2",
       "printed !R U up(S) accepts an S edge leaving an R state, which stuttering breaks; the edge must occur while !R"},
      {"response.between.2",
       "printed !R U up(S) accepts an S edge leaving an R state, which stuttering breaks; the edge must occur while !R"},
      {"response.after_until.2",
       "printed text guards with up(Q) although Q is state-based here; printed !R U up(S) is not closed under "
       "stuttering, the edge must occur while !R"},
  };
  auto it = notes.find(key);
  return it == notes.end() ? std::string() : it->second;
}

std::string notes_for(const CellId& id, bool corrected) {
  std::string n;
  if (id.pattern == PatternId::Precedence) n = "P and S exclusive";
  if (id.pattern == PatternId::Response) n = "P and S inclusive";
  if (corrected) {
    if (!n.empty()) n += "; ";
    n += correction_note(cell_key(id));
  }
  return n;
}

struct Loaded {
  std::vector<CatalogEntry> entries;
  std::unordered_map<std::string, std::size_t> by_key;
};

const Loaded& loaded() {
  static const Loaded data = [] {
    Loaded l;
    for (const auto& row : catalog_data::rows()) {
      CatalogEntry e;
      e.id = parse_cell_key(row.key);
      e.text = row.text;
      e.printed_text = row.printed ? row.printed : row.text;
      e.notes = notes_for(e.id, e.has_correction());
      l.by_key.emplace(row.key, l.entries.size());
      l.entries.push_back(std::move(e));
    }
    return l;
  }();
  return data;
}

}  // namespace

Combination::Combination(int c) : code(c) {
  if (c < 0 || c > 3) throw UnsupportedCell("combination must be 0..3, got " + std::to_string(c));
}

std::string_view pattern_key(PatternId p) { return kPatternKeys[static_cast<std::size_t>(p)]; }
std::string_view scope_key(ScopeId s) { return kScopeKeys[static_cast<std::size_t>(s)]; }

std::optional<PatternId> pattern_from_key(std::string_view key) {
  for (std::size_t i = 0; i < kPatternKeys.size(); ++i)
    if (kPatternKeys[i] == key) return static_cast<PatternId>(i);
  return std::nullopt;
}

std::optional<ScopeId> scope_from_key(std::string_view key) {
  for (std::size_t i = 0; i < kScopeKeys.size(); ++i)
    if (kScopeKeys[i] == key) return static_cast<ScopeId>(i);
  return std::nullopt;
}

std::string cell_key(const CellId& id) {
  return std::string(pattern_key(id.pattern)) + "." + std::string(scope_key(id.scope)) + "." +
         std::to_string(id.combo.code);
}

CellId parse_cell_key(std::string_view key) {
  const auto d1 = key.find('.');
  const auto d2 = key.rfind('.');
  if (d1 == std::string_view::npos || d1 == d2)
    throw UnsupportedCell("cell key must look like pattern.scope.combo: '" + std::string(key) + "'");
  const auto p = pattern_from_key(key.substr(0, d1));
  const auto s = scope_from_key(key.substr(d1 + 1, d2 - d1 - 1));
  const auto c = key.substr(d2 + 1);
  if (!p) throw UnsupportedCell("unknown pattern in '" + std::string(key) + "'");
  if (!s) throw UnsupportedCell("unknown scope in '" + std::string(key) + "'");
  if (c.size() != 1 || c[0] < '0' || c[0] > '3')
    throw UnsupportedCell("combination must be 0..3 in '" + std::string(key) + "'");
  return CellId{*p, *s, Combination(c[0] - '0')};
}

std::vector<CellId> all_cells() {
  std::vector<CellId> out;
  for (const auto& e : loaded().entries) out.push_back(e.id);
  return out;
}

const CatalogEntry& entry(const CellId& id) {
  const auto& l = loaded();
  auto it = l.by_key.find(cell_key(id));
  if (it == l.by_key.end()) {
    if (id.pattern == PatternId::Universality && id.combo.conditions_are_edges())
      throw UnsupportedCell("universality has no edge-condition formulas: an edge cannot hold in every state");
    throw UnsupportedCell("no catalog cell " + cell_key(id));
  }
  return l.entries[it->second];
}

Formula template_of(const CellId& id, Variant v) {
  static std::mutex mu;
  static std::unordered_map<std::string, Formula> cache;
  const CatalogEntry& e = entry(id);
  const std::string& text = v == Variant::AsPrinted ? e.printed_text : e.text;
  std::lock_guard lock(mu);
  auto it = cache.find(text);
  if (it != cache.end()) return it->second;
  Formula f = parse(text);
  cache.emplace(text, f);
  return f;
}

std::vector<std::string> placeholders(const CellId& id, Variant v) {
  const auto present = atoms_of(template_of(id, v));
  std::vector<std::string> out;
  for (auto ph : kPlaceholders)
    if (std::find(present.begin(), present.end(), ph) != present.end()) out.emplace_back(ph);
  return out;
}

Formula instantiate(const PatternInstance& inst, Variant v) {
  const Formula t = template_of(inst.cell, v);
  const auto needed = placeholders(inst.cell, v);
  for (const auto& n : needed)
    if (!inst.bindings.count(n))
      throw BindingError("missing binding for " + n + " in " + cell_key(inst.cell));
  for (const auto& [k, _] : inst.bindings)
    if (std::find(needed.begin(), needed.end(), k) == needed.end())
      throw BindingError("cell " + cell_key(inst.cell) + " has no placeholder " + k);
  return substitute(t, inst.bindings);
}

Formula to_down_edges(const Formula& f) {
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  for (const auto& k : f.children()) kids.push_back(to_down_edges(k));
  return Formula::make(f.is(Op::EdgeUp) ? Op::EdgeDown : f.op(), std::move(kids));
}

nlohmann::json catalog_to_json(Variant v) {
  auto out = nlohmann::json::array();
  for (const auto& e : loaded().entries) {
    const bool printed = v == Variant::AsPrinted;
    out.push_back({{"pattern", pattern_key(e.id.pattern)},
                   {"scope", scope_key(e.id.scope)},
                   {"combo", e.id.combo.code},
                   {"template_text", printed ? e.printed_text : e.text},
                   {"corrected", !printed && e.has_correction()},
                   {"notes", e.notes}});
  }
  return out;
}

const std::vector<DerivationFixture>& derivation_fixtures() {
  static const std::vector<DerivationFixture> fixtures = [] {
    const Formula final_f = parse("[]((up(Q) && !up(R) && <>up(R)) -> X (up(R) P P))");
    struct Step {
      const char* name;
      const char* mode;
      const char* text;
      const char* condition;
    };
    const Step steps[] = {
        {"buggy-1", "P is tested in the state where up(Q) is detected",
         "[]((up(Q) && <>up(R)) -> (!P U up(R)))", "<>(up(Q) && P)"},
        {"buggy-2", "up(Q) and up(R) coincide", "[]((up(Q) && <>up(R)) -> X (!P U up(R)))",
         "<>(up(Q) && up(R))"},
        {"buggy-3", "P and up(R) occur together",
         "[]((up(Q) && !up(R) && <>up(R)) -> X (!P U up(R)))", "<>(P && up(R))"},
    };
    const Alphabet ab({"P", "Q", "R"});
    const TraceSpace space(ab, 3, 2);
    const CompiledFormula cf(final_f, ab);
    std::vector<DerivationFixture> out;
    for (const auto& s : steps) {
      const Formula buggy = parse(s.text);
      const Formula cond = parse(s.condition);
      const CompiledFormula cb(buggy, ab);
      const CompiledFormula cc(cond, ab);
      State buf[64];
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        const auto shape = space.decode(i, buf);
        const std::size_t n = shape.prefix + shape.loop;
        const bool vb = cb.eval_states(buf, n, shape.prefix) & 1U;
        const bool vf = cf.eval_states(buf, n, shape.prefix) & 1U;
        if (vb == vf || !(cc.eval_states(buf, n, shape.prefix) & 1U)) continue;
        out.push_back({s.name, s.mode, buggy, final_f, cond, space.at(i), vb, vf});
        break;
      }
      if (out.empty() || out.back().name != s.name)
        throw std::logic_error(std::string("no witness for ") + s.name);
    }
    return out;
  }();
  return fixtures;
}

}  // namespace edgepat
