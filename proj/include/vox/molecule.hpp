#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vox/geometry.hpp"

namespace vox {

// Supported elements. Kept small on purpose: drug-like corpora only.
enum class Element : std::uint8_t {
  C, O, N, F, S, Cl, Br, P, I, B, Se, Si, H
};

constexpr int kNumElements = 13;

const char* element_symbol(Element e);
int atomic_number(Element e);
// Case-sensitive lookup, nullptr-free: returns false if unknown.
bool element_from_symbol(const std::string& symbol, Element* out);
bool is_organic_subset(Element e);         // bare SMILES atoms
bool may_be_aromatic(Element e);           // lowercase-capable

// Covalent radius in Angstroms, used as bond-length fallback.
double covalent_radius(Element e);

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

struct Atom {
  Element element = Element::C;
  std::int8_t charge = 0;
  // Total attached hydrogens (implicit + bracket-explicit). Explicit [H]
  // atoms present in the graph are counted as graph neighbours instead.
  std::uint8_t h_count = 0;
  bool aromatic = false;
  // Stereo annotation, parsed and preserved but ignored everywhere:
  // 0 = none, 1 = '@', 2 = '@@'.
  std::uint8_t chirality = 0;
};

struct Bond {
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  BondOrder order = BondOrder::Single;
  bool aromatic = false;  // set for declared-aromatic and perceived rings
  // Stereo bond direction annotation ('/' = 1, '\' = 2), preserved, ignored.
  std::uint8_t direction = 0;

  std::uint16_t other(std::uint16_t idx) const { return idx == a ? b : a; }
};

struct Molecule {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::optional<std::vector<Vec3>> coords;  // Angstroms, one per atom
  std::string name;

  int num_atoms() const { return int(atoms.size()); }
  int num_heavy_atoms() const;
  bool has_coords() const { return coords.has_value(); }
};

// Neighbour lists: adjacency[i] = list of (neighbour atom, bond index).
using Adjacency = std::vector<std::vector<std::pair<int, int>>>;
Adjacency build_adjacency(const Molecule& m);

// Smallest set of smallest rings, each ring an ordered atom cycle.
// Deterministic: candidate rings are discovered per bond via BFS and
// selected smallest-first until the cyclomatic number is reached.
std::vector<std::vector<int>> sssr(const Molecule& m);

// Atom/bond ring membership flags derived from sssr().
struct RingInfo {
  std::vector<std::vector<int>> rings;
  std::vector<bool> atom_in_ring;
  std::vector<bool> bond_in_ring;
};
RingInfo ring_info(const Molecule& m);

// Upgrades Kekule rings to aromatic (Hueckel 4n+2 on each SSSR ring;
// fusion-aware pi counting). Atoms and bonds declared aromatic by the
// input are left as-is. Returns number of rings marked.
int perceive_aromaticity(Molecule& m, const RingInfo& info);

// Heavy-atom degree plus the bond-order sum used for valence accounting
// (aromatic-flagged bonds count per their Kekule order when known, else 1).
int heavy_degree(const Molecule& m, const Adjacency& adj, int atom);
int total_h(const Molecule& m, const Adjacency& adj, int atom);  // h_count + explicit H neighbours

// Structural validation shared by the parsers: endpoint indices, duplicate
// bonds. Throws InputError on violation.
void validate_structure(const Molecule& m);

// Graph isomorphism over (element, charge, total H, aromatic) atoms and
// (order-or-aromatic) bonds. Intended for tests and duplicate checks on
// small molecules; backtracking with invariant pruning.
bool graph_isomorphic(const Molecule& a, const Molecule& b);

}  // namespace vox
