#pragma once

#include <string>
#include <string_view>

#include "transfersys/lattice.hpp"

namespace transfersys {

// Builtin lattice descriptions:
//   cyclic:1            trivial group
//   cyclic:p^2*q        product of chains, one symbolic prime per factor
//   boolean:n           [1]^n
//   subspace:p=2,n=3    subspaces of F_p^n
GroupLattice parse_builtin_lattice(std::string_view text);

// Exponent vector of a "cyclic:" body such as "p^2*q". Symbols order the
// coordinates; repeated symbols are an error.
std::vector<unsigned> parse_cyclic_exponents(std::string_view body);

}  // namespace transfersys
