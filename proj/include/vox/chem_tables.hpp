#pragma once

#include <string>
#include <vector>

#include "vox/molecule.hpp"

namespace vox {

// Data tables shared by valence accounting and the 3D embedder. The same
// values are shipped as data/chem_tables.json; a test keeps them in sync.
inline constexpr int kChemTablesVersion = 1;

// Allowed total valences (bond-order sum + attached H) per neutral element,
// in increasing order. Implicit hydrogens fill up to the next allowed value.
const std::vector<int>& allowed_valences(Element e);

// Valence shift applied for a formal charge, e.g. N+ -> 4, O- -> 1.
// Returns the allowed valences for (element, charge).
std::vector<int> allowed_valences_charged(Element e, int charge);

// Ideal bond length in Angstroms for an element pair and order. Falls back
// to scaled covalent-radius sums for pairs not in the curated table.
double ideal_bond_length(Element a, Element b, BondOrder order);

// Emits the JSON document mirrored in data/chem_tables.json.
std::string chem_tables_json();

}  // namespace vox
