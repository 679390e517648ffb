#include <algorithm>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "edgepat/normal_form.hpp"
#include "edgepat/passes.hpp"
#include "edgepat/stutter.hpp"
#include "edgepat/syntax.hpp"

namespace edgepat {

// ── Verdicts ────────────────────────────────────────────────────────────────

CusVerdict CusVerdict::proved(std::vector<ProofStep> steps) {
  CusVerdict v;
  v.kind_ = Kind::Proved;
  v.steps_ = std::move(steps);
  return v;
}

CusVerdict CusVerdict::refuted(Counterexample cex) {
  CusVerdict v;
  v.kind_ = Kind::Refuted;
  v.cex_ = std::move(cex);
  return v;
}

CusVerdict CusVerdict::unknown() { return CusVerdict(); }

std::vector<std::string> CusVerdict::rules() const {
  std::vector<std::string> out;
  for (const auto& s : steps_) out.push_back(s.rule);
  return out;
}

std::string_view verdict_name(CusVerdict::Kind k) {
  switch (k) {
    case CusVerdict::Kind::Proved: return "proved";
    case CusVerdict::Kind::Refuted: return "refuted";
    case CusVerdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

// ── Schema table ────────────────────────────────────────────────────────────

const std::vector<RuleSchema>& schemas() {
  static const std::vector<RuleSchema> table = {
      {"until-edge", "(!up(A) || X B || C) U (up(D) && X E && F)",
       "left: no rising A or B next or C; right: rising D with E next and F"},
      {"until-edge-state-goal", "(!up(A) || X B || C) U F",
       "until-edge without the rising edge on the right"},
      {"until-edge-guarded-goal", "C U (up(D) && X E && F && C)",
       "the rising D must happen while C still holds"},
      {"eventually-edge", "<>(up(A) && X B && C)", "a rising A followed by B, with C"},
      {"always-edge", "[](up(A) -> X B || C)", "every rising A is followed by B, or C holds"},
      {"until-edge-interval",
       "((P -> (!up(A) U S)) && !up(A)) U (up(A) && (P -> S))",
       "response inside an interval closed by a rising A"},
  };
  return table;
}

RuleSchema broken_schema() { return {"broken-next", "X A", "not closed under stuttering"}; }

// ── Prover ──────────────────────────────────────────────────────────────────

namespace {

using Proof = std::vector<ProofStep>;
using Bindings = std::vector<std::pair<std::string, Formula>>;
using Cont = std::function<bool(const Bindings&)>;

const Formula* lookup(const Bindings& b, const std::string& name) {
  for (const auto& [k, v] : b)
    if (k == name) return &v;
  return nullptr;
}

Bindings bind(Bindings b, const std::string& name, Formula f) {
  b.emplace_back(name, std::move(f));
  return b;
}

bool is_metavar(const Formula& p) { return p.is(Op::Atom); }

struct CompiledSchema {
  const RuleSchema* schema;
  Formula pattern;  // normalised template
  std::vector<std::string> metavars;
};

const std::vector<CompiledSchema>& compiled_schemas() {
  static const std::vector<CompiledSchema> table = [] {
    std::vector<CompiledSchema> out;
    for (const auto& s : schemas()) {
      const Formula p = parse(s.template_text);
      out.push_back({&s, nf::normalize(p), atoms_of(p)});
    }
    return out;
  }();
  return table;
}

// Matching modulo associativity, commutativity and units of && and ||.
// Inside an n-ary pattern node an unbound bare metavariable takes whatever
// children are left (possibly none, i.e. the unit), and X M with M unbound
// may be absent (M = unit).
class Matcher {
 public:
  bool match(const Formula& p, const Formula& t, const Bindings& b, const Cont& k) const {
    if (is_metavar(p)) {
      if (const Formula* v = lookup(b, p.name())) return *v == t && k(b);
      return k(bind(b, p.name(), t));
    }
    switch (p.op()) {
      case Op::Const: return p == t && k(b);
      case Op::And:
      case Op::Or: return match_junction(p, t, b, k);
      case Op::Not:
        if (is_metavar(p.child(0)) && !t.is(Op::Not))
          return match(p.child(0), nf::negate(t), b, k);
        [[fallthrough]];
      default:
        if (p.op() != t.op() || p.arity() != t.arity()) return false;
        return match_seq(p.children(), t.children(), 0, b, k);
    }
  }

 private:
  bool match_seq(const std::vector<Formula>& ps, const std::vector<Formula>& ts, std::size_t i,
                 const Bindings& b, const Cont& k) const {
    if (i == ps.size()) return k(b);
    return match(ps[i], ts[i], b, [&](const Bindings& b2) { return match_seq(ps, ts, i + 1, b2, k); });
  }

  bool match_junction(const Formula& p, const Formula& t, const Bindings& b, const Cont& k) const {
    const Op op = p.op();
    const Formula unit = Formula::constant(op == Op::And);
    std::vector<Formula> targets;
    if (t.is(op))
      targets = t.children();
    else if (t != unit)
      targets.push_back(t);
    // structured children first, then X M, then bare metavariables
    std::vector<Formula> order;
    for (int pass = 0; pass < 3; ++pass)
      for (const auto& c : p.children()) {
        const int cls = is_metavar(c) ? 2 : (c.is(Op::Next) && is_metavar(c.child(0))) ? 1 : 0;
        if (cls == pass) order.push_back(c);
      }
    std::vector<bool> used(targets.size(), false);
    return junction_step(op, unit, order, 0, targets, used, b, k);
  }

  bool junction_step(Op op, const Formula& unit, const std::vector<Formula>& order, std::size_t i,
                     const std::vector<Formula>& targets, std::vector<bool>& used,
                     const Bindings& b, const Cont& k) const {
    if (i == order.size()) {
      for (bool u : used)
        if (!u) return false;
      return k(b);
    }
    const Formula& pc = order[i];
    auto next = [&](const Bindings& b2) {
      return junction_step(op, unit, order, i + 1, targets, used, b2, k);
    };
    const bool bare = is_metavar(pc);
    const bool opt_next = pc.is(Op::Next) && is_metavar(pc.child(0));
    const std::string& mv = bare ? pc.name() : opt_next ? pc.child(0).name() : pc.name();

    if (bare || opt_next) {
      if (const Formula* v = lookup(b, mv)) {
        // A bound metavariable must reappear verbatim (as its children).
        const Formula want = opt_next ? nf::next(*v) : *v;
        std::vector<Formula> items;
        if (want.is(op))
          items = want.children();
        else if (want != unit)
          items.push_back(want);
        std::vector<std::size_t> taken;
        for (const auto& it : items) {
          bool found = false;
          for (std::size_t j = 0; j < targets.size(); ++j)
            if (!used[j] && targets[j] == it) {
              used[j] = true;
              taken.push_back(j);
              found = true;
              break;
            }
          if (!found) {
            for (auto j : taken) used[j] = false;
            return false;
          }
        }
        const bool ok = next(b);
        for (auto j : taken) used[j] = false;
        return ok;
      }
    }
    if (bare) {
      std::vector<Formula> rest;
      std::vector<std::size_t> taken;
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (!used[j]) {
          rest.push_back(targets[j]);
          used[j] = true;
          taken.push_back(j);
        }
      const Formula value = op == Op::And ? nf::conj(rest) : nf::disj(rest);
      const bool ok = next(bind(b, mv, value));
      for (auto j : taken) used[j] = false;
      return ok;
    }
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      const bool ok = match(pc, targets[j], b, next);
      used[j] = false;
      if (ok) return true;
    }
    if (opt_next) return next(bind(b, mv, unit));
    return false;
  }
};

bool is_propositional(const Formula& f) {
  switch (f.op()) {
    case Op::Const:
    case Op::Atom: return true;
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::IfThenElse:
      for (const auto& k : f.children())
        if (!is_propositional(k)) return false;
      return true;
    default: return false;
  }
}

class Prover {
 public:
  std::optional<Proof> prove(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    auto r = prove_uncached(f);
    memo_.emplace(f, r);
    return r;
  }

 private:
  static void append(Proof& into, const Proof& from) { into.insert(into.end(), from.begin(), from.end()); }

  std::optional<Proof> all_of(const std::vector<Formula>& parts, Proof acc = {}) {
    for (const auto& p : parts) {
      auto q = prove(p);
      if (!q) return std::nullopt;
      append(acc, *q);
    }
    return acc;
  }

  std::optional<Proof> prove_uncached(const Formula& f) {
    if (is_propositional(f)) return Proof{{"cus-propositional", f}};
    switch (f.op()) {
      case Op::Not: {
        auto p = prove(f.child(0));
        if (!p) return std::nullopt;
        p->push_back({"cus-not", f});
        return p;
      }
      case Op::And:
      case Op::Or: {
        auto p = all_of(f.children());
        if (!p) return std::nullopt;
        p->push_back({f.is(Op::And) ? "cus-and" : "cus-or", f});
        return p;
      }
      case Op::Always:
      case Op::Eventually: {
        if (auto p = prove(f.child(0))) {
          p->push_back({f.is(Op::Always) ? "cus-always" : "cus-eventually", f});
          return p;
        }
        return f.is(Op::Always) ? always_rules(f) : eventually_rules(f);
      }
      case Op::Until: {
        if (auto p = all_of(f.children())) {
          p->push_back({"cus-until", f});
          return p;
        }
        return until_rules(f);
      }
      default: return std::nullopt;
    }
  }

  // Try every schema whose pattern head matches f.
  std::optional<Proof> by_schema(const Formula& f) {
    for (const auto& cs : compiled_schemas()) {
      if (cs.pattern.op() != f.op()) continue;
      std::optional<Proof> found;
      Matcher().match(cs.pattern, f, {}, [&](const Bindings& b) {
        Proof acc;
        for (const auto& mv : cs.metavars) {
          const Formula* v = lookup(b, mv);
          if (!v) return false;
          auto q = prove(*v);
          if (!q) return false;
          append(acc, *q);
        }
        acc.push_back({"schema:" + cs.schema->name, f});
        found = std::move(acc);
        return true;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  // Variants of a literal list where at most one literal selected by `pick`
  // is kept and every other one is unfolded; the kept one is tried in turn.
  template <class Pick, class Unfold, class Join>
  std::vector<Formula> keep_one(const nf::Literals& lits, Pick pick, Unfold unfold, Join join) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lits.size(); ++i)
      if (pick(lits[i])) idx.push_back(i);
    std::vector<Formula> out;
    if (idx.empty()) {
      out.push_back(join(lits));
      return out;
    }
    for (std::size_t keep : idx) {
      nf::Literals v;
      for (std::size_t i = 0; i < lits.size(); ++i) {
        const bool other = pick(lits[i]) && i != keep;
        v.push_back(other ? unfold(lits[i]) : lits[i]);
      }
      out.push_back(join(v));
    }
    return out;
  }

  // Splits lists until no literal satisfies `expand`, expanding with `unfold`.
  template <class Expand, class Unfold, class Join, class Split>
  std::optional<std::vector<nf::Literals>> expand_lists(std::vector<nf::Literals> work, Expand expand,
                                                         Unfold unfold, Join join, Split split,
                                                         bool& changed) {
    std::vector<nf::Literals> done;
    while (!work.empty()) {
      nf::Literals c = std::move(work.back());
      work.pop_back();
      auto it = std::find_if(c.begin(), c.end(), expand);
      if (it == c.end()) {
        done.push_back(std::move(c));
        continue;
      }
      changed = true;
      *it = unfold(*it);
      auto parts = split(join(c));
      if (!parts) return std::nullopt;
      work.insert(work.end(), parts->begin(), parts->end());
      if (done.size() + work.size() > 512) return std::nullopt;
    }
    return done;
  }

  static Formula disj_of(const nf::Literals& l) { return nf::disj(l); }
  static Formula conj_of(const nf::Literals& l) { return nf::conj(l); }
  static Formula up_to_pair(const Formula& lit) { return nf::unfold_up(lit.child(0)); }
  static Formula not_up_to_pair(const Formula& lit) { return nf::unfold_not_up(lit.child(0).child(0)); }

  // [] x: split x into clauses, unfold rising edges, then each clause must be
  // CUS or match an always-schema with a single !up literal kept.
  std::optional<Proof> always_rules(const Formula& f) {
    auto clauses = nf::cnf(f.child(0));
    if (!clauses) return std::nullopt;
    bool unfolded = false;
    auto expanded = expand_lists(*clauses, nf::is_up_literal, up_to_pair, disj_of,
                                 [](const Formula& g) { return nf::cnf(g); }, unfolded);
    if (!expanded) return std::nullopt;
    Proof acc;
    if (unfolded) acc.push_back({"unfold-up", f});
    if (expanded->size() > 1) acc.push_back({"always-distribute", f});
    for (const auto& c : *expanded) {
      const Formula clause = nf::always(nf::disj(c));
      if (auto p = prove(nf::disj(c))) {
        append(acc, *p);
        acc.push_back({"cus-always", clause});
        continue;
      }
      std::optional<Proof> got;
      for (const auto& v : keep_one(c, nf::is_not_up_literal, not_up_to_pair, disj_of)) {
        const Formula g = nf::always(v);
        if ((got = by_schema(g))) {
          if (g != clause) got->insert(got->begin(), {"unfold-not-up", g});
          break;
        }
      }
      if (!got) return std::nullopt;
      append(acc, *got);
    }
    return acc;
  }

  // <> x: split x into terms, unfold !up literals, then each term must be CUS
  // or match an eventually-schema with a single up literal kept.
  std::optional<Proof> eventually_rules(const Formula& f) {
    auto terms = nf::dnf(f.child(0));
    if (!terms) return std::nullopt;
    bool unfolded = false;
    auto expanded = expand_lists(*terms, nf::is_not_up_literal, not_up_to_pair, conj_of,
                                 [](const Formula& g) { return nf::dnf(g); }, unfolded);
    if (!expanded) return std::nullopt;
    Proof acc;
    if (unfolded) acc.push_back({"unfold-not-up", f});
    if (expanded->size() > 1) acc.push_back({"eventually-distribute", f});
    for (const auto& t : *expanded) {
      const Formula term = nf::eventually(nf::conj(t));
      if (auto p = prove(nf::conj(t))) {
        append(acc, *p);
        acc.push_back({"cus-eventually", term});
        continue;
      }
      std::optional<Proof> got;
      for (const auto& v : keep_one(t, nf::is_up_literal, up_to_pair, conj_of)) {
        const Formula g = nf::eventually(v);
        if ((got = by_schema(g))) {
          if (g != term) got->insert(got->begin(), {"unfold-up", g});
          break;
        }
      }
      if (!got) return std::nullopt;
      append(acc, *got);
    }
    return acc;
  }

  // a U b: the whole node against the table, else split b into terms and try
  // each term with one edge kept on either side.
  std::optional<Proof> until_rules(const Formula& f) {
    if (auto p = by_schema(f)) return p;
    auto left_clauses = nf::cnf(f.child(0));
    if (!left_clauses || left_clauses->size() != 1) return std::nullopt;
    const nf::Literals& left = left_clauses->front();
    auto terms = nf::dnf(f.child(1));
    if (!terms) return std::nullopt;
    bool unfolded = false;
    auto expanded = expand_lists(*terms, nf::is_not_up_literal, not_up_to_pair, conj_of,
                                 [](const Formula& g) { return nf::dnf(g); }, unfolded);
    if (!expanded) return std::nullopt;
    Proof acc;
    if (unfolded) acc.push_back({"unfold-not-up", f});
    if (expanded->size() > 1) acc.push_back({"until-distribute", f});
    const auto lefts = keep_one(left, nf::is_not_up_literal, not_up_to_pair, disj_of);
    for (const auto& t : *expanded) {
      const auto rights = keep_one(t, nf::is_up_literal, up_to_pair, conj_of);
      std::optional<Proof> got;
      for (const auto& l : lefts) {
        for (const auto& r : rights) {
          const Formula g = nf::until(l, r);
          if (auto p = all_of({l, r})) {
            got = std::move(p);
            got->push_back({"cus-until", g});
          } else {
            got = by_schema(g);
          }
          if (got) break;
        }
        if (got) break;
      }
      if (!got) return std::nullopt;
      append(acc, *got);
    }
    return acc;
  }

  std::unordered_map<Formula, std::optional<Proof>, FormulaHash> memo_;
};

}  // namespace

CusVerdict check_syntactic(const Formula& f) {
  const Formula n = nf::normalize(f);
  Prover prover;
  auto proof = prover.prove(n);
  if (!proof) return CusVerdict::unknown();
  Proof steps;
  if (n != f) steps.push_back({"normalize", n});
  steps.insert(steps.end(), proof->begin(), proof->end());
  return CusVerdict::proved(std::move(steps));
}

CusVerdict check(const Formula& f, const CheckOptions& options) {
  CusVerdict v = check_syntactic(f);
  if (v.is_proved()) return v;
  const Alphabet ab = options.alphabet ? *options.alphabet : default_alphabet(f);
  return falsify(f, ab, options.bounds, options.workers);
}

}  // namespace edgepat
