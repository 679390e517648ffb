#include "edgepat/trace.hpp"

#include <algorithm>
#include <unordered_set>

namespace edgepat {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxAtoms) throw AlphabetError("alphabet exceeds 64 atoms");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw AlphabetError("empty atom name in alphabet");
    if (!seen.insert(n).second) throw AlphabetError("duplicate atom '" + n + "' in alphabet");
  }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Alphabet::require(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw AlphabetError("atom '" + name + "' is not declared in the trace alphabet");
}

LassoTrace::LassoTrace(Alphabet alphabet, std::vector<State> prefix, std::vector<State> loop)
    : alphabet_(std::move(alphabet)), prefix_(std::move(prefix)), loop_(std::move(loop)) {
  if (loop_.empty()) throw std::invalid_argument("lasso loop must be nonempty");
  const std::size_t n = alphabet_.size();
  const State mask = n >= 64 ? ~State{0} : ((State{1} << n) - 1);
  auto check = [&](State s) {
    if (s & ~mask) throw std::invalid_argument("state assigns atoms outside the alphabet");
  };
  std::for_each(prefix_.begin(), prefix_.end(), check);
  std::for_each(loop_.begin(), loop_.end(), check);
}

std::size_t LassoTrace::canonical(Position p) const noexcept {
  if (p.index < prefix_.size()) return p.index;
  return prefix_.size() + (p.index - prefix_.size()) % loop_.size();
}

State LassoTrace::state_at(Position p) const noexcept {
  const std::size_t c = canonical(p);
  return c < prefix_.size() ? prefix_[c] : loop_[c - prefix_.size()];
}

std::vector<State> LassoTrace::unroll(std::size_t n) const {
  std::vector<State> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(state_at({i}));
  return out;
}

std::string to_string(const LassoTrace& t) {
  auto state = [&](State s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t a = 0; a < t.alphabet().size(); ++a)
      if ((s >> a) & 1U) {
        if (!first) out += ",";
        out += t.alphabet().name(a);
        first = false;
      }
    return out + "}";
  };
  std::string out;
  for (State s : t.prefix()) out += state(s) + " ";
  out += "(";
  for (std::size_t i = 0; i < t.loop().size(); ++i) out += (i ? " " : "") + state(t.loop()[i]);
  return out + ")";
}

LassoTrace stutter_at(const LassoTrace& t, Position i) {
  if (i.index >= t.span())
    throw std::out_of_range("stutter position must be below prefix+loop length");
  const auto& prefix = t.prefix();
  const auto& loop = t.loop();
  if (i.index < prefix.size()) {
    std::vector<State> p = prefix;
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(i.index), prefix[i.index]);
    return LassoTrace(t.alphabet(), std::move(p), loop);
  }
  const std::size_t k = i.index - prefix.size();
  std::vector<State> p = prefix;
  p.insert(p.end(), loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(k + 1));
  p.push_back(loop[k]);
  std::vector<State> l;
  l.reserve(loop.size());
  for (std::size_t j = 0; j < loop.size(); ++j) l.push_back(loop[(k + 1 + j) % loop.size()]);
  return LassoTrace(t.alphabet(), std::move(p), std::move(l));
}

TraceSpace::TraceSpace(Alphabet alphabet, std::size_t max_prefix, std::size_t max_loop)
    : alphabet_(std::move(alphabet)), max_prefix_(max_prefix), max_loop_(max_loop) {
  if (max_loop_ < 1) throw std::invalid_argument("max_loop must be at least 1");
  const std::size_t bits = alphabet_.size();
  for (std::size_t p = 0; p <= max_prefix_; ++p) {
    for (std::size_t l = 1; l <= max_loop_; ++l) {
      const std::size_t digits = p + l;
      if (digits > 64) throw std::overflow_error("trace bounds exceed 64 positions");
      if (bits * digits >= 63) throw std::overflow_error("trace space too large to enumerate");
      const std::uint64_t count = std::uint64_t{1} << (bits * digits);
      blocks_.push_back({{p, l}, total_, count});
      total_ += count;
    }
  }
}

TraceSpace::Shape TraceSpace::decode(std::uint64_t index, State* states) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t v, const Block& b) { return v < b.first; });
  const Block& b = *std::prev(it);
  std::uint64_t code = index - b.first;
  const std::size_t bits = alphabet_.size();
  const State digit_mask = (State{1} << bits) - 1;
  const std::size_t n = b.shape.prefix + b.shape.loop;
  for (std::size_t j = 0; j < n; ++j) {
    states[j] = code & digit_mask;
    code >>= bits;
  }
  return b.shape;
}

LassoTrace TraceSpace::at(std::uint64_t index) const {
  if (index >= total_) throw std::out_of_range("trace index out of range");
  State buf[64];
  const Shape s = decode(index, buf);
  std::vector<State> prefix(buf, buf + s.prefix);
  std::vector<State> loop(buf + s.prefix, buf + s.prefix + s.loop);
  return LassoTrace(alphabet_, std::move(prefix), std::move(loop));
}

}  // namespace edgepat
