#include "vox/sdf.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vox/chem_tables.hpp"
#include "vox/common.hpp"
#include "vox/smiles.hpp"

namespace vox {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int_field(const std::string& line, size_t pos, size_t width, const char* what) {
  if (line.size() < pos) throw InputError(std::string("SDF: short line reading ") + what);
  std::string f = trim(line.substr(pos, width));
  if (f.empty()) throw InputError(std::string("SDF: empty field for ") + what);
  try {
    return std::stoi(f);
  } catch (...) {
    throw InputError(std::string("SDF: bad integer for ") + what + ": '" + f + "'");
  }
}

Molecule parse_record(const std::vector<std::string>& lines) {
  if (lines.size() < 4) throw InputError("SDF: truncated record header");
  Molecule m;
  m.name = trim(lines[0]);
  const std::string& counts = lines[3];
  int natoms = parse_int_field(counts, 0, 3, "atom count");
  int nbonds = parse_int_field(counts, 3, 3, "bond count");
  if (natoms <= 0) throw InputError("SDF: no atoms in record");
  size_t atom_start = 4;
  if (lines.size() < atom_start + natoms + nbonds) {
    throw InputError("SDF: counts line declares more atoms/bonds than lines present");
  }
  std::optional<std::string> smiles_field;
  std::vector<Vec3> coords;
  for (int i = 0; i < natoms; ++i) {
    const std::string& line = lines[atom_start + i];
    if (line.size() < 34) throw InputError("SDF: short atom line");
    double x, y, z;
    char sym[4] = {0, 0, 0, 0};
    if (std::sscanf(line.c_str(), "%lf %lf %lf %3s", &x, &y, &z, sym) != 4) {
      throw InputError("SDF: cannot parse atom line: '" + line + "'");
    }
    Element e;
    if (!element_from_symbol(sym, &e)) {
      throw InputError(std::string("SDF: unsupported element '") + sym + "'");
    }
    Atom a;
    a.element = e;
    m.atoms.push_back(a);
    coords.push_back({x, y, z});
  }
  for (int i = 0; i < nbonds; ++i) {
    const std::string& line = lines[atom_start + natoms + i];
    int a = parse_int_field(line, 0, 3, "bond atom 1");
    int b = parse_int_field(line, 3, 3, "bond atom 2");
    int order = parse_int_field(line, 6, 3, "bond order");
    if (a < 1 || a > natoms || b < 1 || b > natoms) {
      throw InputError("SDF: bond endpoint out of range");
    }
    Bond bond;
    bond.a = std::uint16_t(a - 1);
    bond.b = std::uint16_t(b - 1);
    switch (order) {
      case 1: bond.order = BondOrder::Single; break;
      case 2: bond.order = BondOrder::Double; break;
      case 3: bond.order = BondOrder::Triple; break;
      case 4:
        bond.order = BondOrder::Aromatic;
        bond.aromatic = true;
        break;
      default:
        throw InputError("SDF: unsupported bond order " + std::to_string(order));
    }
    m.bonds.push_back(bond);
  }
  // Property block and data items.
  for (size_t li = atom_start + natoms + nbonds; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.rfind("M  CHG", 0) == 0) {
      std::istringstream is(line.substr(6));
      int count = 0;
      is >> count;
      for (int k = 0; k < count; ++k) {
        int idx = 0, chg = 0;
        if (!(is >> idx >> chg)) throw InputError("SDF: malformed M  CHG line");
        if (idx < 1 || idx > natoms) throw InputError("SDF: M  CHG index out of range");
        m.atoms[idx - 1].charge = std::int8_t(chg);
      }
    } else if (line.rfind(">", 0) == 0 && line.find("<smiles>") != std::string::npos) {
      if (li + 1 < lines.size()) smiles_field = trim(lines[li + 1]);
    }
  }
  validate_structure(m);
  if (smiles_field && !smiles_field->empty()) {
    // Our own records: graph truth lives in the SMILES, geometry in the
    // atom block (same atom order by construction).
    Molecule parsed = parse_smiles(*smiles_field);
    if (parsed.num_atoms() == int(m.atoms.size())) {
      parsed.coords = coords;
      parsed.name = m.name;
      return parsed;
    }
  }
  // Aromatic flags from order-4 bonds.
  for (const Bond& b : m.bonds) {
    if (b.aromatic) {
      m.atoms[b.a].aromatic = true;
      m.atoms[b.b].aromatic = true;
    }
  }
  // Implicit hydrogens by valence rules (explicit H atoms stay atoms).
  Adjacency adj = build_adjacency(m);
  for (int i = 0; i < m.num_atoms(); ++i) {
    Atom& a = m.atoms[i];
    int order_sum = 0;
    int aromatic_bonds = 0;
    for (auto [nb, bi] : adj[i]) {
      const Bond& b = m.bonds[bi];
      if (b.aromatic) {
        ++aromatic_bonds;
      } else {
        order_sum += int(b.order);
      }
    }
    if (a.aromatic) {
      if (a.element == Element::C || a.element == Element::B) {
        int connections = order_sum + aromatic_bonds;
        a.h_count = std::uint8_t(std::max(0, allowed_valences(a.element).front() - connections - 1));
      } else {
        a.h_count = 0;
      }
      continue;
    }
    std::vector<int> allowed = allowed_valences_charged(a.element, a.charge);
    int fill = -1;
    for (int v : allowed) {
      if (order_sum <= v) {
        fill = v;
        break;
      }
    }
    if (fill < 0) {
      throw InputError("SDF: valence violation at atom " + std::to_string(i + 1));
    }
    a.h_count = std::uint8_t(fill - order_sum);
  }
  RingInfo info = ring_info(m);
  perceive_aromaticity(m, info);
  m.coords = coords;
  return m;
}

}  // namespace

std::vector<Molecule> read_sdf(std::istream& in) {
  std::vector<Molecule> out;
  std::vector<std::string> record;
  std::string line;
  bool any_line = false;
  while (std::getline(in, line)) {
    any_line = true;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line) == "$$$$") {
      if (!record.empty()) out.push_back(parse_record(record));
      record.clear();
    } else {
      record.push_back(line);
    }
  }
  // Trailing record without $$$$ is accepted if it holds anything.
  bool nonblank = false;
  for (const std::string& l : record) nonblank |= !trim(l).empty();
  if (nonblank) out.push_back(parse_record(record));
  if (!any_line) throw InputError("SDF: empty input");
  return out;
}

std::vector<Molecule> read_sdf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open SDF file: " + path);
  return read_sdf(in);
}

void write_sdf(std::ostream& out, const std::vector<Molecule>& mols) {
  for (const Molecule& m : mols) {
    if (!m.has_coords()) throw InputError("write_sdf: molecule has no coordinates");
    // Atoms are written in SMILES appearance order so that the attached
    // smiles field and the atom block agree position-by-position.
    auto [smiles, order] = write_smiles_with_order(m);
    std::vector<int> to_new(m.num_atoms());
    for (int k = 0; k < m.num_atoms(); ++k) to_new[order[k]] = k;
    out << m.name << "\n  voxcap\n\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n",
                  m.num_atoms(), int(m.bonds.size()));
    out << buf;
    const std::vector<Vec3>& c = *m.coords;
    for (int k = 0; k < m.num_atoms(); ++k) {
      int i = order[k];
      std::snprintf(buf, sizeof(buf), "%10.4f%10.4f%10.4f %-3s 0  0  0  0  0  0  0  0  0  0  0  0\n",
                    c[i].x, c[i].y, c[i].z, element_symbol(m.atoms[i].element));
      out << buf;
    }
    for (const Bond& b : m.bonds) {
      int order_code = b.aromatic ? 4 : int(b.order);
      std::snprintf(buf, sizeof(buf), "%3d%3d%3d  0\n", to_new[b.a] + 1, to_new[b.b] + 1,
                    order_code);
      out << buf;
    }
    std::vector<std::pair<int, int>> charges;
    for (int k = 0; k < m.num_atoms(); ++k) {
      int i = order[k];
      if (m.atoms[i].charge != 0) charges.push_back({k + 1, m.atoms[i].charge});
    }
    for (size_t k = 0; k < charges.size(); k += 8) {
      size_t n = std::min<size_t>(8, charges.size() - k);
      std::snprintf(buf, sizeof(buf), "M  CHG%3d", int(n));
      out << buf;
      for (size_t j = 0; j < n; ++j) {
        std::snprintf(buf, sizeof(buf), "%4d%4d", charges[k + j].first, charges[k + j].second);
        out << buf;
      }
      out << "\n";
    }
    out << "M  END\n";
    out << ">  <smiles>\n" << smiles << "\n\n";
    out << "$$$$\n";
  }
}

void write_sdf_file(const std::string& path, const std::vector<Molecule>& mols) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open file for writing: " + path);
  write_sdf(out, mols);
}

}  // namespace vox
