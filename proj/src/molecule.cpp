#include "vox/molecule.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "vox/common.hpp"

namespace vox {

namespace {

struct ElementInfo {
  const char* symbol;
  int z;
  double cov_radius;
  bool organic;
  bool aromatic_ok;
};

// Indexed by Element enum order.
const ElementInfo kElements[kNumElements] = {
    {"C", 6, 0.77, true, true},   {"O", 8, 0.73, true, true},
    {"N", 7, 0.75, true, true},   {"F", 9, 0.71, true, false},
    {"S", 16, 1.02, true, true},  {"Cl", 17, 0.99, true, false},
    {"Br", 35, 1.14, true, false},{"P", 15, 1.06, true, true},
    {"I", 53, 1.33, true, false}, {"B", 5, 0.84, true, true},
    {"Se", 34, 1.17, false, true},{"Si", 14, 1.11, false, false},
    {"H", 1, 0.32, false, false},
};

}  // namespace

const char* element_symbol(Element e) { return kElements[int(e)].symbol; }
int atomic_number(Element e) { return kElements[int(e)].z; }
double covalent_radius(Element e) { return kElements[int(e)].cov_radius; }
bool is_organic_subset(Element e) { return kElements[int(e)].organic; }
bool may_be_aromatic(Element e) { return kElements[int(e)].aromatic_ok; }

bool element_from_symbol(const std::string& symbol, Element* out) {
  for (int i = 0; i < kNumElements; ++i) {
    if (symbol == kElements[i].symbol) {
      *out = Element(i);
      return true;
    }
  }
  return false;
}

int Molecule::num_heavy_atoms() const {
  int n = 0;
  for (const Atom& a : atoms) n += (a.element != Element::H);
  return n;
}

Adjacency build_adjacency(const Molecule& m) {
  Adjacency adj(m.atoms.size());
  for (size_t i = 0; i < m.bonds.size(); ++i) {
    const Bond& b = m.bonds[i];
    adj[b.a].push_back({b.b, int(i)});
    adj[b.b].push_back({b.a, int(i)});
  }
  return adj;
}

int heavy_degree(const Molecule& m, const Adjacency& adj, int atom) {
  int n = 0;
  for (auto [nb, bi] : adj[atom]) n += (m.atoms[nb].element != Element::H);
  return n;
}

int total_h(const Molecule& m, const Adjacency& adj, int atom) {
  int n = m.atoms[atom].h_count;
  for (auto [nb, bi] : adj[atom]) n += (m.atoms[nb].element == Element::H);
  return n;
}

void validate_structure(const Molecule& m) {
  int n = m.num_atoms();
  std::set<std::pair<int, int>> seen;
  for (const Bond& b : m.bonds) {
    if (b.a >= n || b.b >= n) throw InputError("bond endpoint out of range");
    if (b.a == b.b) throw InputError("self-bond");
    auto key = std::minmax(int(b.a), int(b.b));
    if (!seen.insert({key.first, key.second}).second) {
      throw InputError("duplicate bond between atoms " + std::to_string(b.a) +
                       " and " + std::to_string(b.b));
    }
  }
}

namespace {

// Smallest ring through a given bond: BFS from one endpoint to the other
// with the bond itself removed. Returns empty when the bond is a bridge.
std::vector<int> smallest_ring_through(const Adjacency& adj, int bond_idx, int from, int to) {
  std::vector<int> prev(adj.size(), -1);
  std::deque<int> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (auto [nb, bi] : adj[cur]) {
      if (bi == bond_idx || prev[nb] != -1) continue;
      prev[nb] = cur;
      queue.push_back(nb);
    }
  }
  if (prev[to] == -1) return {};
  std::vector<int> path{to};
  for (int cur = to; cur != from; cur = prev[cur]) path.push_back(prev[cur]);
  return path;  // ordered cycle: from..to closed by the removed bond
}

}  // namespace

std::vector<std::vector<int>> sssr(const Molecule& m) {
  Adjacency adj = build_adjacency(m);
  int components = 0;
  {
    std::vector<bool> seen(m.atoms.size(), false);
    for (int i = 0; i < m.num_atoms(); ++i) {
      if (seen[i]) continue;
      ++components;
      std::deque<int> queue{i};
      seen[i] = true;
      while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (auto [nb, bi] : adj[cur]) {
          if (!seen[nb]) {
            seen[nb] = true;
            queue.push_back(nb);
          }
        }
      }
    }
  }
  int cyclomatic = int(m.bonds.size()) - m.num_atoms() + components;
  if (cyclomatic <= 0) return {};

  // Candidate = smallest ring through each bond, deduplicated.
  std::vector<std::vector<int>> candidates;
  std::set<std::vector<int>> dedup;
  for (size_t bi = 0; bi < m.bonds.size(); ++bi) {
    std::vector<int> ring = smallest_ring_through(adj, int(bi), m.bonds[bi].a, m.bonds[bi].b);
    if (ring.empty()) continue;
    std::vector<int> key = ring;
    std::sort(key.begin(), key.end());
    if (dedup.insert(key).second) candidates.push_back(ring);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  // Greedy selection by ring-bond independence over GF(2).
  auto bond_index = [&](int a, int b) {
    for (auto [nb, bi] : adj[a]) {
      if (nb == b) return bi;
    }
    return -1;
  };
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<std::uint64_t>> basis;  // bitset rows, reduced
  int words = int(m.bonds.size() + 63) / 64;
  for (const auto& ring : candidates) {
    if (int(chosen.size()) == cyclomatic) break;
    std::vector<std::uint64_t> row(words, 0);
    for (size_t i = 0; i < ring.size(); ++i) {
      int bi = bond_index(ring[i], ring[(i + 1) % ring.size()]);
      row[bi / 64] ^= (1ULL << (bi % 64));
    }
    // Gaussian elimination against the accepted basis.
    std::vector<std::uint64_t> reduced = row;
    for (const auto& b : basis) {
      int lead = -1;
      for (int w = 0; w < words && lead < 0; ++w) {
        if (b[w]) lead = w * 64 + __builtin_ctzll(b[w]);
      }
      if (lead >= 0 && (reduced[lead / 64] >> (lead % 64)) & 1) {
        for (int w = 0; w < words; ++w) reduced[w] ^= b[w];
      }
    }
    bool zero = std::all_of(reduced.begin(), reduced.end(), [](std::uint64_t w) { return w == 0; });
    if (!zero) {
      basis.push_back(reduced);
      chosen.push_back(ring);
    }
  }
  return chosen;
}

RingInfo ring_info(const Molecule& m) {
  RingInfo info;
  info.rings = sssr(m);
  info.atom_in_ring.assign(m.atoms.size(), false);
  info.bond_in_ring.assign(m.bonds.size(), false);
  std::map<std::pair<int, int>, int> bond_of;
  for (size_t i = 0; i < m.bonds.size(); ++i) {
    auto key = std::minmax(int(m.bonds[i].a), int(m.bonds[i].b));
    bond_of[{key.first, key.second}] = int(i);
  }
  for (const auto& ring : info.rings) {
    for (size_t i = 0; i < ring.size(); ++i) {
      info.atom_in_ring[ring[i]] = true;
      auto key = std::minmax(ring[i], ring[(i + 1) % ring.size()]);
      info.bond_in_ring[bond_of.at({key.first, key.second})] = true;
    }
  }
  return info;
}

namespace {

// Pi-electron contribution of `atom` to `ring`, or -1 when the atom cannot
// participate. Fusion-aware: a double bond into a neighbouring ring still
// contributes one electron (naphthalene, indole).
int pi_contribution(const Molecule& m, const Adjacency& adj, const RingInfo& info,
                    const std::vector<int>& ring, int atom) {
  const Atom& a = m.atoms[atom];
  bool in_ring_double = false, cross_ring_double = false, exo_double = false;
  for (auto [nb, bi] : adj[atom]) {
    const Bond& b = m.bonds[bi];
    if (b.order != BondOrder::Double) continue;
    bool nb_in_this_ring = std::find(ring.begin(), ring.end(), nb) != ring.end();
    if (nb_in_this_ring) {
      in_ring_double = true;
    } else if (info.atom_in_ring[nb] && info.atom_in_ring[atom]) {
      cross_ring_double = true;
    } else {
      exo_double = true;
    }
  }
  if (in_ring_double || cross_ring_double) return 1;
  if (exo_double) return -1;  // quinone-type carbonyl breaks the ring current
  // No double bond: lone-pair donors.
  switch (a.element) {
    case Element::O:
    case Element::S:
    case Element::Se:
      return a.charge == 0 ? 2 : -1;
    case Element::N:
    case Element::P: {
      if (a.charge > 0) return -1;
      if (a.charge < 0) return 2;
      // Pyrrole-type: N-H or fully substituted N donates its lone pair.
      int hs = total_h(m, adj, atom);
      int deg = int(adj[atom].size());
      if (hs >= 1 || deg == 3) return 2;
      return -1;
    }
    case Element::C:
      if (a.charge == -1) return 2;
      if (a.charge == 1) return 0;
      return -1;  // sp3 carbon
    default:
      return -1;
  }
}

}  // namespace

int perceive_aromaticity(Molecule& m, const RingInfo& info) {
  Adjacency adj = build_adjacency(m);
  std::map<std::pair<int, int>, int> bond_of;
  for (size_t i = 0; i < m.bonds.size(); ++i) {
    auto key = std::minmax(int(m.bonds[i].a), int(m.bonds[i].b));
    bond_of[{key.first, key.second}] = int(i);
  }
  int marked = 0;
  for (const auto& ring : info.rings) {
    if (ring.size() < 5 || ring.size() > 7) continue;
    bool all_candidates = true;
    int pi = 0;
    for (int atom : ring) {
      if (!may_be_aromatic(m.atoms[atom].element)) {
        all_candidates = false;
        break;
      }
      int c = pi_contribution(m, adj, info, ring, atom);
      if (c < 0) {
        all_candidates = false;
        break;
      }
      pi += c;
    }
    if (!all_candidates || pi < 2 || (pi - 2) % 4 != 0) continue;
    ++marked;
    for (size_t i = 0; i < ring.size(); ++i) {
      m.atoms[ring[i]].aromatic = true;
      auto key = std::minmax(ring[i], ring[(i + 1) % ring.size()]);
      m.bonds[bond_of.at({key.first, key.second})].aromatic = true;
    }
  }
  return marked;
}

namespace {

struct IsoKey {
  int element, charge, h, aromatic, degree;
  bool operator<(const IsoKey& o) const {
    return std::tie(element, charge, h, aromatic, degree) <
           std::tie(o.element, o.charge, o.h, o.aromatic, o.degree);
  }
  bool operator==(const IsoKey& o) const {
    return std::tie(element, charge, h, aromatic, degree) ==
           std::tie(o.element, o.charge, o.h, o.aromatic, o.degree);
  }
};

IsoKey atom_key(const Molecule& m, const Adjacency& adj, int i) {
  return {int(m.atoms[i].element), m.atoms[i].charge, total_h(m, adj, i),
          m.atoms[i].aromatic ? 1 : 0, int(adj[i].size())};
}

int bond_code(const Bond& b) { return b.aromatic ? 4 : int(b.order); }

bool extend(const Molecule& a, const Molecule& b, const Adjacency& aa, const Adjacency& ab,
            std::vector<int>& map_ab, std::vector<int>& map_ba, int depth) {
  int n = a.num_atoms();
  if (depth == n) return true;
  // Next unmapped atom in a, preferring one adjacent to the mapped core.
  int pick = -1;
  for (int i = 0; i < n && pick < 0; ++i) {
    if (map_ab[i] >= 0) continue;
    for (auto [nb, bi] : aa[i]) {
      if (map_ab[nb] >= 0) {
        pick = i;
        break;
      }
    }
  }
  if (pick < 0) {
    for (int i = 0; i < n; ++i) {
      if (map_ab[i] < 0) {
        pick = i;
        break;
      }
    }
  }
  IsoKey want = atom_key(a, aa, pick);
  for (int j = 0; j < n; ++j) {
    if (map_ba[j] >= 0 || !(atom_key(b, ab, j) == want)) continue;
    bool ok = true;
    for (auto [nb, bi] : aa[pick]) {
      if (map_ab[nb] < 0) continue;
      bool found = false;
      for (auto [nb2, bi2] : ab[j]) {
        if (nb2 == map_ab[nb] && bond_code(b.bonds[bi2]) == bond_code(a.bonds[bi])) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    // Also require the reverse: mapped neighbours of j must map back.
    if (ok) {
      for (auto [nb2, bi2] : ab[j]) {
        if (map_ba[nb2] < 0) continue;
        bool found = false;
        for (auto [nb, bi] : aa[pick]) {
          if (nb == map_ba[nb2] && bond_code(a.bonds[bi]) == bond_code(b.bonds[bi2])) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    map_ab[pick] = j;
    map_ba[j] = pick;
    if (extend(a, b, aa, ab, map_ab, map_ba, depth + 1)) return true;
    map_ab[pick] = -1;
    map_ba[j] = -1;
  }
  return false;
}

}  // namespace

bool graph_isomorphic(const Molecule& a, const Molecule& b) {
  if (a.num_atoms() != b.num_atoms() || a.bonds.size() != b.bonds.size()) return false;
  Adjacency aa = build_adjacency(a), ab = build_adjacency(b);
  std::multiset<IsoKey> ka, kb;
  for (int i = 0; i < a.num_atoms(); ++i) ka.insert(atom_key(a, aa, i));
  for (int i = 0; i < b.num_atoms(); ++i) kb.insert(atom_key(b, ab, i));
  if (!(ka == kb)) return false;
  std::vector<int> map_ab(a.num_atoms(), -1), map_ba(b.num_atoms(), -1);
  return extend(a, b, aa, ab, map_ab, map_ba, 0);
}

}  // namespace vox
