#pragma once

#include <string>
#include <vector>

#include "ncplane/ncpoly.hpp"

namespace ncplane {

/// Parse a free-algebra expression over m generators and the declared
/// parameters.
///
/// Grammar:
///   expr   := ['+'|'-']? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := name | rational | '(' expr ')' | '[' expr ',' expr ']'
///
/// `[a,b]` desugars to a*b - b*a. Generators are named x,y for m = 2 and
/// x1..xm in general; all other names must be declared parameters.
/// Whitespace is insignificant.
NCPoly nc_parse(const std::string& text, int m, const ParamList& params);

/// Identifier tokens appearing in an expression, in order of first
/// occurrence (generator names included). Used to infer parameter contexts.
std::vector<std::string> scan_names(const std::string& text);

}  // namespace ncplane
