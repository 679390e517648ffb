// ============================================================================
// edgepat/syntax.hpp: concrete syntax for formulas
// ============================================================================
//
// ASCII grammar, loosest binding first:
//
//   ite     := imp [ '?' ite ':' ite ]
//   imp     := or  [ '->' imp ]                  right-assoc
//   or      := and [ '||' or ]                   right-assoc
//   and     := binop [ '&&' and ]                right-assoc
//   binop   := unary [ ('U' | 'W' | 'P') binop ] right-assoc, one level
//   unary   := ('!' | 'X' | '[]' | '<>') unary
//            | ('up' | 'down' | 'any') '(' ite ')'
//            | 'true' | 'false' | ident | '(' ite ')'
//
// `X`, `U`, `W`, `true`, `false`, `up`, `down`, `any` are reserved.  `P` is
// contextual: an atom in operand position, the precedes operator in infix
// position, so the pattern placeholder P can be written as is.
// ============================================================================

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgepat/formula.hpp"

namespace edgepat {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected);

  const SourceSpan& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

Formula parse(std::string_view text);

// Minimal parentheses; parse(print_canonical(f)) == f for binary trees.
std::string print_canonical(const Formula& f);

// Lowers sugar and edges, then prints with every non-atomic operand
// parenthesised, using only `true false ! && || -> X [] <> U`.
std::string print_spin(const Formula& f);

// True for names the parser accepts as an atom.
bool is_valid_atom_name(std::string_view name);

}  // namespace edgepat
