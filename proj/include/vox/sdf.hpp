#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vox/molecule.hpp"

namespace vox {

// Reads V2000 molfile records separated by "$$$$". Atoms carry coordinates
// from the atom block, charges come from "M  CHG" lines, bond orders from
// the bond block (4 = aromatic). Implicit hydrogens are filled by valence
// rules unless the record carries a "> <smiles>" data field written by this
// toolkit, in which case the graph is taken from the SMILES and only the
// coordinates come from the atom block.
std::vector<Molecule> read_sdf(std::istream& in);
std::vector<Molecule> read_sdf_file(const std::string& path);

// Writes one record per molecule; aromatic-flagged bonds are written as
// order 4 and the canonical SMILES is attached as a data field so that the
// record round-trips exactly.
void write_sdf(std::ostream& out, const std::vector<Molecule>& mols);
void write_sdf_file(const std::string& path, const std::vector<Molecule>& mols);

}  // namespace vox
