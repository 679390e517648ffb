// edgepat: command-line front end.
//
// Exit codes: 0 holds / proved, 1 fails / refuted, 2 usage or unsupported,
// 3 unknown.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "edgepat/catalog.hpp"
#include "edgepat/eval.hpp"
#include "edgepat/laws.hpp"
#include "edgepat/stutter.hpp"
#include "edgepat/syntax.hpp"
#include "edgepat/trace_json.hpp"

using namespace edgepat;
using nlohmann::json;

namespace {

enum Exit { kHolds = 0, kFails = 1, kUsage = 2, kUnknown = 3 };

struct Config {
  std::string bounds_text;
  Bounds bounds;
  int workers = 0;
  bool json = false;
  bool as_printed = false;
  bool down_edges = false;

  Variant variant() const { return as_printed ? Variant::AsPrinted : Variant::Corrected; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bounds parse_bounds(const std::string& text) {
  static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("bounds must look like P,L (e.g. 3,2)");
  Bounds b{std::stoul(m[1]), std::stoul(m[2])};
  if (b.max_loop < 1) throw UsageError("loop bound must be at least 1");
  return b;
}

bool looks_like_cell(const std::string& s) {
  static const std::regex re(R"([a-z_]+\.[a-z_]+\.\d)");
  return std::regex_match(s, re);
}

// A dotted cell key yields the cell's template; anything else is parsed.
Formula resolve(const std::string& text, const Config& cfg) {
  if (looks_like_cell(text)) {
    Formula f = template_of(parse_cell_key(text), cfg.variant());
    return cfg.down_edges ? to_down_edges(f) : f;
  }
  return parse(text);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_list(const Config& cfg) {
  const json cat = catalog_to_json(cfg.variant());
  if (cfg.json) {
    print_json(cat);
    return kHolds;
  }
  for (const auto& c : cat) {
    const std::string key = c["pattern"].get<std::string>() + "." + c["scope"].get<std::string>() + "." +
                            std::to_string(c["combo"].get<int>());
    std::cout << std::left << std::setw(26) << key << c["template_text"].get<std::string>();
    if (!c["notes"].get<std::string>().empty()) std::cout << "    [" << c["notes"].get<std::string>() << "]";
    std::cout << "\n";
  }
  std::cout << cat.size() << " cells\n";
  return kHolds;
}

int cmd_instantiate(const Config& cfg, const std::string& key, const std::vector<std::string>& binds) {
  PatternInstance inst{parse_cell_key(key), {}};
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding must look like NAME=formula: " + b);
    inst.bindings.emplace(b.substr(0, eq), parse(b.substr(eq + 1)));
  }
  Formula f = template_of(inst.cell, cfg.variant());
  if (cfg.down_edges) f = to_down_edges(f);
  if (!binds.empty()) {
    // validates the binding set against the cell's placeholders
    instantiate(inst, cfg.variant());
    f = substitute(f, inst.bindings);
  }
  if (cfg.json) {
    print_json({{"cell", key}, {"canonical", print_canonical(f)}, {"spin", print_spin(f)}});
  } else {
    std::cout << "canonical: " << print_canonical(f) << "\n";
    std::cout << "spin:      " << print_spin(f) << "\n";
  }
  return kHolds;
}

int cmd_eval(const Config& cfg, const std::string& what, const std::string& file, std::size_t pos) {
  const Formula f = resolve(what, cfg);
  const LassoTrace t = load_trace_file(file);
  const bool v = eval(f, t, {pos});
  if (cfg.json)
    print_json({{"formula", print_canonical(f)}, {"position", pos}, {"value", v}});
  else
    std::cout << (v ? "true" : "false") << "\n";
  return v ? kHolds : kFails;
}

void print_verdict_text(const CusVerdict& v) {
  std::cout << "verdict: " << verdict_name(v.kind()) << "\n";
  for (const auto& s : v.derivation()) std::cout << "  " << std::left << std::setw(32) << s.rule << print_canonical(s.formula) << "\n";
  if (const auto& c = v.counterexample()) {
    std::cout << "trace:         " << to_string(c->trace) << "\n";
    std::cout << "stutter index: " << c->stutter_index << "\n";
    std::cout << "stuttered:     " << to_string(stutter_at(c->trace, {c->stutter_index})) << "\n";
    std::cout << "value at 0:    " << (c->original ? "true" : "false") << " -> "
              << (c->stuttered ? "true" : "false") << "\n";
  }
}

int verdict_exit(const CusVerdict& v) {
  switch (v.kind()) {
    case CusVerdict::Kind::Proved: return kHolds;
    case CusVerdict::Kind::Refuted: return kFails;
    case CusVerdict::Kind::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_check_cus(const Config& cfg, const std::string& what) {
  const Formula f = resolve(what, cfg);
  const CusVerdict v = check(f, {cfg.bounds, cfg.workers, std::nullopt});
  if (cfg.json)
    print_json(verdict_to_json(v));
  else
    print_verdict_text(v);
  return verdict_exit(v);
}

int cmd_simplify(const Config& cfg, const std::string& text) {
  const auto r = simplify_traced(parse(text));
  if (cfg.json)
    print_json({{"formula", print_canonical(r.formula)}, {"laws", r.applied}});
  else
    std::cout << print_canonical(r.formula) << "\n";
  return kHolds;
}

int cmd_selftest(const Config& cfg, bool inject_bad_law) {
  bool ok = true;
  json report = {{"schemas", json::array()}, {"laws", json::array()}, {"cells", json::array()}};
  auto line = [&](const std::string& section, const std::string& name, bool pass, const std::string& detail) {
    if (!cfg.json)
      std::cout << std::left << std::setw(8) << section << std::setw(30) << name << (pass ? "pass  " : "FAIL  ")
                << detail << "\n";
  };

  auto schema_list = schemas();
  for (const auto& s : schema_list) {
    const auto r = validate_schema(s, cfg.bounds, cfg.workers);
    ok = ok && r.passed();
    std::string detail = std::to_string(r.instantiations) + " instances, " + std::to_string(r.elapsed.count()) + " ms";
    if (!r.passed()) detail += "; " + print_canonical(*r.failing_instance) + " on " + to_string(r.counterexample->trace);
    line("schema", s.name, r.passed(), detail);
    report["schemas"].push_back({{"name", r.name}, {"instantiations", r.instantiations},
                                 {"elapsed_ms", r.elapsed.count()}, {"passed", r.passed()}});
  }
  {
    const auto r = validate_schema(broken_schema(), cfg.bounds, cfg.workers);
    const bool caught = !r.passed();
    ok = ok && caught;
    line("schema", broken_schema().name, caught, caught ? "refuted as expected" : "not refuted");
    report["schemas"].push_back({{"name", r.name}, {"expected_refuted", true}, {"passed", caught}});
  }

  std::vector<Law> laws = law_list();
  if (inject_bad_law) laws.push_back(make_law("injected-up-and", "up(A && B)", "up(A) && up(B)"));
  for (const auto& l : laws) {
    const auto r = verify_law(l, cfg.bounds, cfg.workers);
    ok = ok && r.passed();
    std::string detail = std::to_string(r.traces) + " traces";
    json j = {{"name", l.name}, {"passed", r.passed()}};
    if (r.witness) {
      detail += "; differs at position " + std::to_string(r.witness->position) + " of " + to_string(r.witness->trace);
      j["witness"] = {{"trace", trace_to_json(r.witness->trace)}, {"position", r.witness->position}};
    }
    line("law", l.name, r.passed(), detail);
    report["laws"].push_back(j);
  }

  for (const auto& c : all_cells()) {
    const Formula f = template_of(c, cfg.variant());
    const CusVerdict p = check_syntactic(f);
    const CusVerdict s = falsify(f, cfg.bounds, cfg.workers);
    const bool pass = p.is_proved() && !s.is_refuted();
    ok = ok && pass;
    line("cell", cell_key(c), pass,
         std::string("prover ") + std::string(verdict_name(p.kind())) + ", falsifier " +
             (s.is_refuted() ? "refuted" : "no counterexample"));
    report["cells"].push_back({{"cell", cell_key(c)}, {"prover", verdict_name(p.kind())},
                               {"falsifier", verdict_name(s.kind())}, {"passed", pass}});
  }
  report["passed"] = ok;
  if (cfg.json)
    print_json(report);
  else
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern formulas with edges: instantiate, evaluate, check stuttering closure, simplify"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--bounds", cfg.bounds_text, "falsifier bounds P,L (max prefix, max loop)")
      ->envname("EDGE_PATTERNS_BOUNDS")
      ->default_str("3,2");
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_flag("--as-printed", cfg.as_printed, "use catalog texts exactly as originally printed");
  app.add_flag("--down-edges", cfg.down_edges, "replace up edges by down edges in catalog templates");

  auto* list = app.add_subcommand("list", "list the catalog cells");

  std::string cell_arg;
  std::vector<std::string> bind_args;
  auto* inst = app.add_subcommand("instantiate", "instantiate a cell, e.g. absence.globally.2 P=door");
  inst->add_option("cell", cell_arg, "cell key pattern.scope.combo")->required();
  inst->add_option("bindings", bind_args, "NAME=formula bindings");

  std::string what_arg, trace_arg;
  std::size_t pos = 0;
  auto* ev = app.add_subcommand("eval", "evaluate a formula or cell on a trace file");
  ev->add_option("formula", what_arg, "formula text or cell key")->required();
  ev->add_option("trace", trace_arg, "trace JSON file")->required();
  ev->add_option("--pos", pos, "position to evaluate at");

  auto* cus = app.add_subcommand("check-cus", "prove or refute closure under stuttering");
  cus->add_option("formula", what_arg, "formula text or cell key")->required();

  std::string simp_arg;
  auto* simp = app.add_subcommand("simplify", "rewrite with the edge laws");
  simp->add_option("formula", simp_arg, "formula text")->required();

  bool inject = false;
  auto* self = app.add_subcommand("selftest", "validate schemas, laws and the catalog");
  self->add_flag("--inject-bad-law", inject, "add a wrong law to exercise failure reporting");

  auto* laws_cmd = app.add_subcommand("laws", "law library");
  laws_cmd->require_subcommand(1);
  auto* laws_export = laws_cmd->add_subcommand("export", "print the laws as JSON");

  auto* cat_cmd = app.add_subcommand("catalog", "pattern catalog");
  cat_cmd->require_subcommand(1);
  auto* cat_export = cat_cmd->add_subcommand("export", "print the catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.bounds = parse_bounds(cfg.bounds_text.empty() ? "3,2" : cfg.bounds_text);
    if (*list) return cmd_list(cfg);
    if (*inst) return cmd_instantiate(cfg, cell_arg, bind_args);
    if (*ev) return cmd_eval(cfg, what_arg, trace_arg, pos);
    if (*cus) return cmd_check_cus(cfg, what_arg);
    if (*simp) return cmd_simplify(cfg, simp_arg);
    if (*self) return cmd_selftest(cfg, inject);
    if (*laws_export) {
      print_json(laws_to_json());
      return kHolds;
    }
    if (*cat_export) {
      print_json(catalog_to_json(cfg.variant()));
      return kHolds;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.span().start << ".." << e.span().end << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedCell& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const BindingError& e) {
    std::cerr << "binding error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
