#pragma once

#include <iosfwd>
#include <string>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// Renders a formula in the input grammar, with minimal parentheses and the
// F / G / GF / FG sugar spelled out ("true U x" prints as "F x", "false R x"
// as "G x", limit operators as "G F x" / "F G x"). parse(render(f)) == f for
// every formula the parser can produce. The context placeholder prints as
// the reserved symbol "▫".
std::string render(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace ltlnorm
