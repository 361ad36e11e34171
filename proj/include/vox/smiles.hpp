#pragma once

#include <string>

#include "vox/molecule.hpp"

namespace vox {

// Parses a single-component SMILES string into an attributed graph with
// perceived rings/aromaticity and implicit hydrogens filled by valence
// rules. Throws InputError on syntax errors, unsupported elements,
// valence violations and disconnected ('.') inputs.
Molecule parse_smiles(const std::string& text);

// Canonical SMILES: invariant under any permutation of input atom order.
// Stereochemistry is not encoded (parsed annotations are dropped).
std::string write_canonical_smiles(const Molecule& m);

// Convenience: parse then canonicalize.
std::string canonical_smiles(const std::string& text);

// Non-canonical SMILES in deterministic DFS order. Also returns the atom
// appearance order (appearance[k] = original atom index), which equals the
// atom order produced by parsing the returned string.
std::pair<std::string, std::vector<int>> write_smiles_with_order(const Molecule& m);

}  // namespace vox
