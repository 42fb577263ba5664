#pragma once

#include <string_view>

#include "ltlnorm/errors.hpp"
#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// Parses the whitespace-insensitive grammar
//
//   formula  := disj
//   disj     := conj { "|" conj }
//   conj     := binop { "&" binop }
//   binop    := unary { ("U"|"W"|"R"|"M") unary }     right-associative
//   unary    := ("!"|"X"|"F"|"G") unary | atompart
//   atompart := "1" | "0" | "true" | "false" | identifier | "(" formula ")"
//
// with precedence unary > U/W/R/M > "&" > "|" and identifiers matching
// [a-z][a-z0-9_]*. "F x" reads as true U x and "G x" as false R x.
//
// The result is in negation normal form (negations pushed to atoms through
// the usual duals) with adjacent G-then-F / F-then-G pairs fused into the
// limit operators GF / FG. Throws ParseError with a 0-based position.
Formula parse(std::string_view text);

// Bottom-up fusion of the two sugar shapes false R (true U x) -> GF x and
// true U (false R x) -> FG x. parse() applies this already; the simplifier
// re-applies it after constant folding uncovers new adjacencies.
Formula fuse_limits(const Formula& f);

}  // namespace ltlnorm
