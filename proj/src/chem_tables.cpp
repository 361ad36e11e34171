#include "vox/chem_tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vox/common.hpp"

namespace vox {

namespace {

struct PairLength {
  Element a;
  Element b;
  BondOrder order;
  double length;
};

// Curated lengths for the common drug-like pairs; everything else falls
// back to covalent-radius sums scaled by bond order.
const PairLength kBondLengths[] = {
    {Element::C, Element::C, BondOrder::Single, 1.54},
    {Element::C, Element::C, BondOrder::Double, 1.34},
    {Element::C, Element::C, BondOrder::Triple, 1.20},
    {Element::C, Element::C, BondOrder::Aromatic, 1.39},
    {Element::C, Element::N, BondOrder::Single, 1.47},
    {Element::C, Element::N, BondOrder::Double, 1.28},
    {Element::C, Element::N, BondOrder::Triple, 1.16},
    {Element::C, Element::N, BondOrder::Aromatic, 1.34},
    {Element::C, Element::O, BondOrder::Single, 1.43},
    {Element::C, Element::O, BondOrder::Double, 1.22},
    {Element::C, Element::O, BondOrder::Aromatic, 1.36},
    {Element::C, Element::S, BondOrder::Single, 1.81},
    {Element::C, Element::S, BondOrder::Double, 1.60},
    {Element::C, Element::S, BondOrder::Aromatic, 1.71},
    {Element::C, Element::F, BondOrder::Single, 1.35},
    {Element::C, Element::Cl, BondOrder::Single, 1.77},
    {Element::C, Element::Br, BondOrder::Single, 1.94},
    {Element::C, Element::I, BondOrder::Single, 2.14},
    {Element::C, Element::P, BondOrder::Single, 1.84},
    {Element::C, Element::B, BondOrder::Single, 1.56},
    {Element::C, Element::Si, BondOrder::Single, 1.86},
    {Element::C, Element::Se, BondOrder::Single, 1.95},
    {Element::C, Element::H, BondOrder::Single, 1.09},
    {Element::N, Element::N, BondOrder::Single, 1.45},
    {Element::N, Element::N, BondOrder::Double, 1.25},
    {Element::N, Element::N, BondOrder::Aromatic, 1.35},
    {Element::N, Element::O, BondOrder::Single, 1.40},
    {Element::N, Element::O, BondOrder::Double, 1.21},
    {Element::N, Element::S, BondOrder::Single, 1.71},
    {Element::N, Element::H, BondOrder::Single, 1.01},
    {Element::O, Element::O, BondOrder::Single, 1.48},
    {Element::O, Element::S, BondOrder::Single, 1.57},
    {Element::O, Element::S, BondOrder::Double, 1.45},
    {Element::O, Element::P, BondOrder::Single, 1.63},
    {Element::O, Element::P, BondOrder::Double, 1.48},
    {Element::O, Element::H, BondOrder::Single, 0.96},
    {Element::S, Element::S, BondOrder::Single, 2.05},
    {Element::S, Element::H, BondOrder::Single, 1.34},
};

}  // namespace

const std::vector<int>& allowed_valences(Element e) {
  static const std::vector<int> kB = {3};
  static const std::vector<int> kC = {4};
  static const std::vector<int> kN = {3, 5};
  static const std::vector<int> kO = {2};
  static const std::vector<int> kHalogen = {1};
  static const std::vector<int> kS = {2, 4, 6};
  static const std::vector<int> kP = {3, 5};
  static const std::vector<int> kSe = {2, 4, 6};
  static const std::vector<int> kSi = {4};
  static const std::vector<int> kH = {1};
  switch (e) {
    case Element::B: return kB;
    case Element::C: return kC;
    case Element::N: return kN;
    case Element::O: return kO;
    case Element::F:
    case Element::Cl:
    case Element::Br:
    case Element::I: return kHalogen;
    case Element::S: return kS;
    case Element::P: return kP;
    case Element::Se: return kSe;
    case Element::Si: return kSi;
    case Element::H: return kH;
  }
  return kC;
}

std::vector<int> allowed_valences_charged(Element e, int charge) {
  std::vector<int> base = allowed_valences(e);
  if (charge == 0) return base;
  // Isoelectronic shift: a positive charge on N/O/S/P raises the bonding
  // capacity by one per unit, a negative charge lowers it. Carbon and boron
  // lose capacity in both directions (carbanion/carbocation both 3-valent).
  int shift = 0;
  switch (e) {
    case Element::N:
    case Element::P:
    case Element::O:
    case Element::S:
    case Element::Se:
      shift = charge;
      break;
    case Element::C:
    case Element::B:
    case Element::Si:
      shift = -std::abs(charge);
      break;
    default:
      shift = -std::abs(charge);  // halogens: X+ rare, X- zero-valent
      break;
  }
  for (int& v : base) v = std::max(0, v + shift);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

double ideal_bond_length(Element a, Element b, BondOrder order) {
  for (const PairLength& p : kBondLengths) {
    if (((p.a == a && p.b == b) || (p.a == b && p.b == a)) && p.order == order) {
      return p.length;
    }
  }
  double sum = covalent_radius(a) + covalent_radius(b);
  switch (order) {
    case BondOrder::Single: return sum;
    case BondOrder::Double: return 0.87 * sum;
    case BondOrder::Triple: return 0.78 * sum;
    case BondOrder::Aromatic: return 0.91 * sum;
  }
  return sum;
}

std::string chem_tables_json() {
  std::ostringstream os;
  os << "{\n  \"version\": " << kChemTablesVersion << ",\n";
  os << "  \"bond_lengths\": [\n";
  bool first = true;
  for (const PairLength& p : kBondLengths) {
    if (!first) os << ",\n";
    first = false;
    os << "    [\"" << element_symbol(p.a) << "\", \"" << element_symbol(p.b)
       << "\", " << int(p.order) << ", " << p.length << "]";
  }
  os << "\n  ],\n";
  os << "  \"allowed_valences\": {\n";
  const Element all[] = {Element::C,  Element::O, Element::N,  Element::F,
                         Element::S,  Element::Cl, Element::Br, Element::P,
                         Element::I,  Element::B, Element::Se, Element::Si,
                         Element::H};
  first = true;
  for (Element e : all) {
    if (!first) os << ",\n";
    first = false;
    os << "    \"" << element_symbol(e) << "\": [";
    const auto& vals = allowed_valences(e);
    for (size_t i = 0; i < vals.size(); ++i) os << (i ? ", " : "") << vals[i];
    os << "]";
  }
  os << "\n  },\n";
  os << "  \"tokenizer\": {\n"
        "    \"bracket_atom\": \"[...] taken as one token\",\n"
        "    \"two_char_elements\": [\"Cl\", \"Br\", \"Si\", \"Se\"],\n"
        "    \"single_char_atoms\": [\"B\", \"C\", \"N\", \"O\", \"P\", \"S\", \"F\", \"I\", \"b\", \"c\", \"n\", \"o\", \"p\", \"s\"],\n"
        "    \"ring_closures\": \"0-9 and %nn\",\n"
        "    \"symbols\": [\"-\", \"=\", \"#\", \":\", \"/\", \"\\\\\", \"(\", \")\", \".\"]\n"
        "  }\n}\n";
  return os.str();
}

}  // namespace vox
