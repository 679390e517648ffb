#include "edgepat/laws.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>
#include <limits>

#include <omp.h>

#include "edgepat/eval.hpp"
#include "edgepat/syntax.hpp"

namespace edgepat {

Law make_law(std::string name, std::string left_text, std::string right_text) {
  Law l;
  l.name = std::move(name);
  l.left = parse(left_text);
  l.right = parse(right_text);
  l.left_text = std::move(left_text);
  l.right_text = std::move(right_text);
  return l;
}

const std::vector<Law>& law_list() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> v;
    auto add = [&](const char* n, const char* l, const char* r) { v.push_back(make_law(n, l, r)); };
    // edges of negations
    add("edge-not-up", "up(!A)", "down(A)");
    add("edge-not-down", "down(!A)", "up(A)");
    add("edge-not-any", "any(!A)", "any(A)");
    // boolean operators
    add("up-and", "up(A && B)", "(up(A) && X B) || (up(B) && X A)");
    add("up-or", "up(A || B)", "(up(A) && !B) || (up(B) && !A)");
    add("down-and", "down(A && B)", "(down(A) && B) || (down(B) && A)");
    add("down-or", "down(A || B)", "(down(A) && X !B) || (down(B) && !X A)");
    // edges of edges
    add("down-down", "down(down(A))", "down(A)");
    add("down-up", "down(up(A))", "up(A)");
    add("up-down", "up(down(A))", "X down(A)");
    add("up-up", "up(up(A))", "X up(A)");
    // temporal operators
    add("up-next", "up(X A)", "X up(A)");
    add("down-next", "down(X A)", "X down(A)");
    add("up-always", "up([] A)", "up(A) && X [] A");
    add("down-always", "down([] A)", "false");
    add("up-eventually", "up(<> A)", "false");
    add("down-eventually", "down(<> A)", "down(A) && X [] !A");
    add("up-until", "up(A U B)", "!(A || B) && X (A U B)");
    add("down-until", "down(A U B)", "B && !X (A U B)");
    // edges under temporal operators
    add("always-up-edge", "[] up(A)", "false");
    add("always-down-edge", "[] down(A)", "false");
    add("up-edge-until", "up(A) U B", "B || (up(A) && X B)");
    // definition of the any edge
    add("any-edge-def", "any(A)", "up(A) || down(A)");
    v.back().compound_only = true;
    return v;
  }();
  return laws;
}

const Law* find_law(const std::string& name) {
  for (const auto& l : law_list())
    if (l.name == name) return &l;
  return nullptr;
}

LawResult verify_law(const Law& law, Bounds bounds, int workers) {
  auto names = atoms_of(Formula::conjunction(law.left, law.right));
  for (const char* mv : {"A", "B"})
    if (std::find(names.begin(), names.end(), mv) == names.end()) names.emplace_back(mv);
  std::sort(names.begin(), names.end());
  return verify_law(law, Alphabet(std::move(names)), bounds, workers);
}

LawResult verify_law(const Law& law, const Alphabet& alphabet, Bounds bounds, int workers) {
  const TraceSpace space(alphabet, bounds.max_prefix, bounds.max_loop);
  const CompiledFormula left(law.left, alphabet);
  const CompiledFormula right(law.right, alphabet);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t total = space.size();
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 2048) num_threads(threads)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(total); ++si) {
    const auto i = static_cast<std::uint64_t>(si);
    if (i * 64 >= best.load(std::memory_order_relaxed)) continue;
    State states[64];
    const auto shape = space.decode(i, states);
    const std::size_t n = shape.prefix + shape.loop;
    const std::uint64_t diff = left.eval_states(states, n, shape.prefix) ^ right.eval_states(states, n, shape.prefix);
    if (diff == 0) continue;
    const std::uint64_t key = i * 64 + static_cast<std::uint64_t>(__builtin_ctzll(diff));
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (key < cur && !best.compare_exchange_weak(cur, key)) {
    }
  }

  LawResult r{law.name, total, std::nullopt};
  if (const std::uint64_t key = best.load(); key != kNone) {
    LassoTrace t = space.at(key / 64);
    const std::size_t pos = key % 64;
    const bool lv = (left.eval_trace(t) >> pos) & 1U;
    const bool rv = (right.eval_trace(t) >> pos) & 1U;
    r.witness = LawWitness{std::move(t), pos, lv, rv};
  }
  return r;
}

// ── Rewriting ───────────────────────────────────────────────────────────────

namespace {

using Binding = std::map<std::string, Formula>;

// Plain structural matching; template atoms are metavariables.
bool match(const Formula& p, const Formula& t, Binding& b) {
  if (p.is(Op::Atom)) {
    auto [it, fresh] = b.emplace(p.name(), t);
    return fresh || it->second == t;
  }
  if (p.op() != t.op() || p.arity() != t.arity()) return false;
  if (p.is(Op::Const)) return p.value() == t.value();
  for (std::size_t i = 0; i < p.arity(); ++i)
    if (!match(p.child(i), t.child(i), b)) return false;
  return true;
}

// Constant folding for one node whose children are already folded.
Formula fold(const Formula& f) {
  auto c = [](const Formula& g, bool v) { return g.is_const(v); };
  switch (f.op()) {
    case Op::Not:
      if (f.child(0).is(Op::Const)) return Formula::constant(!f.child(0).value());
      if (f.child(0).is(Op::Not)) return f.child(0).child(0);
      return f;
    case Op::And:
    case Op::Or: {
      const bool is_and = f.is(Op::And);
      std::vector<Formula> kids;
      for (const auto& k : f.children()) {
        if (c(k, !is_and)) return k;
        if (!c(k, is_and)) kids.push_back(k);
      }
      if (kids.size() == f.arity()) return f;
      return is_and ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
    }
    case Op::Implies:
      if (c(f.child(0), false) || c(f.child(1), true)) return Formula::top();
      if (c(f.child(0), true)) return f.child(1);
      if (c(f.child(1), false)) return fold(Formula::negation(f.child(0)));
      return f;
    case Op::IfThenElse:
      if (f.child(0).is(Op::Const)) return f.child(0).value() ? f.child(1) : f.child(2);
      return f;
    case Op::Next:
    case Op::Always:
    case Op::Eventually:
      return f.child(0).is(Op::Const) ? f.child(0) : f;
    case Op::EdgeUp:
    case Op::EdgeDown:
    case Op::EdgeAny:
      return f.child(0).is(Op::Const) ? Formula::bottom() : f;
    case Op::Until:
      if (f.child(1).is(Op::Const) || c(f.child(0), false)) return f.child(1);
      if (c(f.child(0), true)) return Formula::eventually(f.child(1));
      return f;
    case Op::WeakUntil:
      if (c(f.child(1), true)) return Formula::top();
      if (c(f.child(0), false)) return f.child(1);
      if (c(f.child(0), true)) return Formula::top();
      if (c(f.child(1), false)) return Formula::always(f.child(0));
      return f;
    case Op::Precedes:
      if (c(f.child(1), false)) return Formula::top();
      return f;
    default: return f;
  }
}

class Rewriter {
 public:
  explicit Rewriter(std::size_t limit) : limit_(limit) {}

  Formula run(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    Formula g = f;
    if (f.arity() > 0) {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(run(k));
      g = fold(Formula::make(f.op(), std::move(kids)));
    }
    for (const auto& law : law_list()) {
      if (!law.rewrite) continue;
      Binding b;
      if (!match(law.left, g, b)) continue;
      if (law.compound_only && b.at("A").is(Op::Atom)) continue;
      if (++steps_ > limit_) throw RewriteLimit("rewrite step limit exceeded");
      applied_.push_back(law.name);
      g = run(substitute(law.right, b));
      break;
    }
    memo_.emplace(f, g);
    return g;
  }

  std::size_t steps() const { return steps_; }
  std::vector<std::string> applied() && { return std::move(applied_); }

 private:
  std::size_t limit_;
  std::size_t steps_ = 0;
  std::vector<std::string> applied_;
  std::unordered_map<Formula, Formula, FormulaHash> memo_;
};

}  // namespace

SimplifyResult simplify_traced(const Formula& f, std::size_t max_steps) {
  Rewriter rw(max_steps);
  Formula g = rw.run(f);
  const std::size_t steps = rw.steps();
  return {g, steps, std::move(rw).applied()};
}

Formula simplify(const Formula& f) { return simplify_traced(f).formula; }

nlohmann::json laws_to_json() {
  auto out = nlohmann::json::array();
  for (const auto& l : law_list())
    out.push_back({{"name", l.name}, {"left_text", l.left_text}, {"right_text", l.right_text}});
  return out;
}

}  // namespace edgepat
