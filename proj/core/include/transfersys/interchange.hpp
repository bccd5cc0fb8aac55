#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "transfersys/lattice.hpp"

namespace transfersys {

inline constexpr int kInterchangeVersion = 1;

// Parses and validates a lattice document. Throws FormatError for schema
// problems and LatticeError for violated lattice invariants.
GroupLattice load_lattice(std::string_view text);
GroupLattice load_lattice_file(const std::filesystem::path& path);

// Serializes with "covers" as the relation. load_lattice(dump_lattice(L)) == L.
std::string dump_lattice(const GroupLattice& lattice, int indent = 2);

}  // namespace transfersys
