#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homcolor/document.hpp"

namespace homcolor {

/// Exit codes: 0 pass, 1 fail (witness or failed precondition), 2 structural error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Map specification used on the command line: a map name from the document
/// ("R"), "alpha", "id", "zero", "c*id" (e.g. "-3/2*id"), or a JSON matrix.
LinearMap resolve_map_spec(const HomAlgebra& alg, const std::string& spec);

/// Parses "slot=product" pairs.
Binding parse_bindings(const std::vector<std::string>& pairs);

}  // namespace homcolor
