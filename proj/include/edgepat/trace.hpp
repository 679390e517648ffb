// ============================================================================
// edgepat/trace.hpp: ultimately periodic state sequences
// ============================================================================
//
// A LassoTrace denotes the infinite word  prefix ; loop ; loop ; ...
// States are bitsets over an Alphabet (bit j = truth of atom j), so at most
// 64 atoms are supported.
//
// Distinct positions of the induced word are 0 .. prefix+loop-1; position
// prefix+loop-1 is followed by position prefix (the loop back-edge).
// ============================================================================

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgepat {

using State = std::uint64_t;

class AlphabetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Alphabet {
 public:
  static constexpr std::size_t kMaxAtoms = 64;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  // Throws AlphabetError when the atom is undeclared.
  std::size_t require(const std::string& name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

struct Position {
  std::size_t index = 0;
};

class LassoTrace {
 public:
  LassoTrace(Alphabet alphabet, std::vector<State> prefix, std::vector<State> loop);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<State>& prefix() const noexcept { return prefix_; }
  const std::vector<State>& loop() const noexcept { return loop_; }

  // Number of distinct suffix positions.
  std::size_t span() const noexcept { return prefix_.size() + loop_.size(); }
  std::size_t loop_start() const noexcept { return prefix_.size(); }
  std::size_t successor(std::size_t i) const noexcept { return i + 1 < span() ? i + 1 : loop_start(); }

  // Position of the induced word folded into 0 .. span()-1.
  std::size_t canonical(Position p) const noexcept;
  State state_at(Position p) const noexcept;
  bool holds(Position p, std::size_t atom) const noexcept { return (state_at(p) >> atom) & 1U; }

  // The first n states of the induced word.
  std::vector<State> unroll(std::size_t n) const;

  friend bool operator==(const LassoTrace&, const LassoTrace&) = default;

 private:
  Alphabet alphabet_;
  std::vector<State> prefix_;
  std::vector<State> loop_;
};

// "{P,Q} {} ({Q})": prefix states, then the loop in parentheses.
std::string to_string(const LassoTrace& t);

// Duplicate the state at position i (i < span()).  Inside the loop the loop
// is rotated rather than grown.
LassoTrace stutter_at(const LassoTrace& t, Position i);

// ── Enumeration ─────────────────────────────────────────────────────────────
//
// Every trace with |prefix| <= max_prefix and 1 <= |loop| <= max_loop,
// exactly once.  Order: shorter prefix first, then shorter loop, then the
// state sequence read as a base-2^|alphabet| counter whose least significant
// digit is position 0 (position 0 varies fastest; false < true per atom).
// Random access by index lets workers split the space into ranges.

class TraceSpace {
 public:
  TraceSpace(Alphabet alphabet, std::size_t max_prefix, std::size_t max_loop);

  std::uint64_t size() const noexcept { return total_; }
  LassoTrace at(std::uint64_t index) const;

  struct Shape {
    std::size_t prefix = 0;
    std::size_t loop = 0;
  };
  // Decodes index into shape and states without building a LassoTrace.
  Shape decode(std::uint64_t index, State* states) const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t max_prefix() const noexcept { return max_prefix_; }
  std::size_t max_loop() const noexcept { return max_loop_; }

  class iterator {
   public:
    iterator(const TraceSpace* space, std::uint64_t i) : space_(space), i_(i) {}
    LassoTrace operator*() const { return space_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }

   private:
    const TraceSpace* space_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, total_}; }

 private:
  struct Block {
    Shape shape;
    std::uint64_t first = 0;
    std::uint64_t count = 0;
  };
  Alphabet alphabet_;
  std::size_t max_prefix_;
  std::size_t max_loop_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

// Convenience wrapper matching the stream-style interface.
inline TraceSpace enumerate_traces(const Alphabet& alphabet, std::size_t max_prefix,
                                   std::size_t max_loop) {
  return TraceSpace(alphabet, max_prefix, max_loop);
}

}  // namespace edgepat
