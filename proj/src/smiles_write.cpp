#include "vox/smiles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vox/chem_tables.hpp"
#include "vox/common.hpp"

namespace vox {

namespace {

int bond_rank_code(const Bond& b) { return b.aromatic ? 4 : int(b.order); }

// Iterative invariant refinement. Seed key: (element, charge, degree,
// H count, aromatic); refinement key: (rank, sorted (bond code, neighbour
// rank) pairs). Returns dense ranks, lower = earlier in output.
std::vector<int> refine_ranks(const Molecule& m, const Adjacency& adj,
                              const std::vector<int>& seed) {
  int n = m.num_atoms();
  std::vector<int> rank(n);
  {
    std::vector<std::pair<std::array<long long, 6>, int>> keys(n);
    for (int i = 0; i < n; ++i) {
      const Atom& a = m.atoms[i];
      keys[i] = {std::array<long long, 6>{(long long)a.element, a.charge,
                                          (long long)adj[i].size(),
                                          total_h(m, adj, i),
                                          a.aromatic ? 1 : 0, seed[i]},
                 i};
    }
    std::sort(keys.begin(), keys.end());
    int r = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || keys[i].first != keys[i - 1].first) ++r;
      rank[keys[i].second] = r;
    }
  }
  for (int iter = 0; iter < n + 2; ++iter) {
    std::vector<std::pair<std::vector<long long>, int>> keys(n);
    for (int i = 0; i < n; ++i) {
      std::vector<long long> key{rank[i]};
      std::vector<std::pair<int, int>> nbr;
      for (auto [nb, bi] : adj[i]) nbr.push_back({bond_rank_code(m.bonds[bi]), rank[nb]});
      std::sort(nbr.begin(), nbr.end());
      for (auto [code, r] : nbr) {
        key.push_back(code);
        key.push_back(r);
      }
      keys[i] = {std::move(key), i};
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> next(n);
    int r = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || keys[i].first != keys[i - 1].first) ++r;
      next[keys[i].second] = r;
    }
    if (next == rank) break;
    rank = std::move(next);
  }
  return rank;
}

bool all_singleton(const std::vector<int>& rank) {
  std::vector<int> seen(rank.size(), 0);
  for (int r : rank) {
    if (seen[r]++) return false;
  }
  return true;
}

struct Writer {
  const Molecule& m;
  const Adjacency& adj;
  const std::vector<int>& rank;
  std::vector<int> visit_time;
  std::vector<bool> tree_bond;
  std::vector<std::vector<int>> children;  // tree child bond indices, rank order
  std::ostringstream out;
  std::map<int, int> bond_digit;  // ring-closure bond -> digit
  int next_digit = 1;

  Writer(const Molecule& mol, const Adjacency& a, const std::vector<int>& r)
      : m(mol), adj(a), rank(r), visit_time(mol.atoms.size(), -1),
        tree_bond(mol.bonds.size(), false), children(mol.atoms.size()) {}

  // Neighbour bonds of `atom`, ordered by (neighbour rank, bond index).
  std::vector<int> ordered_bonds(int atom) const {
    std::vector<std::pair<int, int>> v;
    for (auto [nb, bi] : adj[atom]) v.push_back({rank[nb], bi});
    std::sort(v.begin(), v.end());
    std::vector<int> bonds;
    for (auto [r, bi] : v) bonds.push_back(bi);
    return bonds;
  }

  void classify(int root) {
    int clock = 0;
    std::vector<std::pair<int, int>> stack{{root, -1}};  // (atom, parent bond)
    while (!stack.empty()) {
      auto [atom, pbond] = stack.back();
      stack.pop_back();
      if (visit_time[atom] >= 0) continue;
      visit_time[atom] = clock++;
      if (pbond >= 0) tree_bond[pbond] = true;
      // Push children in reverse rank order so lowest rank pops first.
      std::vector<int> bonds = ordered_bonds(atom);
      for (auto it = bonds.rbegin(); it != bonds.rend(); ++it) {
        int nb = m.bonds[*it].other(std::uint16_t(atom));
        if (visit_time[nb] < 0 && *it != pbond) stack.push_back({nb, *it});
      }
    }
    // Recover the realised tree children: a bond is a tree edge from the
    // endpoint visited earlier.
    for (size_t bi = 0; bi < m.bonds.size(); ++bi) {
      if (!tree_bond[bi]) continue;
      const Bond& b = m.bonds[bi];
      int parent = visit_time[b.a] < visit_time[b.b] ? b.a : b.b;
      children[parent].push_back(int(bi));
    }
    for (auto& c : children) {
      std::sort(c.begin(), c.end(), [&](int x, int y) {
        int cx = m.bonds[x].a, cy = m.bonds[y].a;
        int ox = visit_time[m.bonds[x].b] > visit_time[cx] ? m.bonds[x].b : cx;
        int oy = visit_time[m.bonds[y].b] > visit_time[cy] ? m.bonds[y].b : cy;
        return visit_time[ox] < visit_time[oy];
      });
    }
  }

  // Hydrogen count a bare (or plain-aromatic) atom would be read back with.
  int implied_h(int i) const {
    const Atom& a = m.atoms[i];
    if (!is_organic_subset(a.element)) return -1;
    if (a.aromatic) {
      if (a.element == Element::C || a.element == Element::B) {
        int connections = int(adj[i].size());
        return std::max(0, allowed_valences(a.element).front() - connections - 1);
      }
      return 0;
    }
    int order_sum = 0;
    for (auto [nb, bi] : adj[i]) {
      const Bond& b = m.bonds[bi];
      order_sum += (b.aromatic || b.order == BondOrder::Aromatic) ? 1 : int(b.order);
    }
    for (int v : allowed_valences(a.element)) {
      if (order_sum <= v) return v - order_sum;
    }
    return -1;
  }

  void emit_atom(int i) {
    const Atom& a = m.atoms[i];
    std::string sym = element_symbol(a.element);
    if (a.aromatic && may_be_aromatic(a.element)) {
      for (char& c : sym) c = char(std::tolower(static_cast<unsigned char>(c)));
    }
    int h = a.h_count;
    if (a.charge == 0 && implied_h(i) == h) {
      out << sym;
      return;
    }
    out << '[' << sym;
    if (h == 1) {
      out << 'H';
    } else if (h > 1) {
      out << 'H' << h;
    }
    if (a.charge == 1) {
      out << '+';
    } else if (a.charge == -1) {
      out << '-';
    } else if (a.charge > 1) {
      out << '+' << int(a.charge);
    } else if (a.charge < -1) {
      out << '-' << -int(a.charge);
    }
    out << ']';
  }

  void emit_bond(const Bond& b) {
    if (b.aromatic) return;  // default between lowercase atoms
    switch (b.order) {
      case BondOrder::Single:
        if (m.atoms[b.a].aromatic && m.atoms[b.b].aromatic) out << '-';
        break;
      case BondOrder::Double: out << '='; break;
      case BondOrder::Triple: out << '#'; break;
      case BondOrder::Aromatic: break;
    }
  }

  void emit_digit(int digit) {
    if (digit > 99) throw InternalError("ring closure digits exhausted");
    if (digit < 10) {
      out << digit;
    } else {
      out << '%' << digit;
    }
  }

  void emit(int atom, int parent_bond) {
    if (parent_bond >= 0) emit_bond(m.bonds[parent_bond]);
    emit_atom(atom);
    // Ring closures at this atom, ordered by the other endpoint's rank.
    std::vector<int> ring_bonds;
    for (int bi : ordered_bonds(atom)) {
      if (!tree_bond[bi]) ring_bonds.push_back(bi);
    }
    for (int bi : ring_bonds) {
      auto it = bond_digit.find(bi);
      if (it == bond_digit.end()) {
        int digit = next_digit++;
        bond_digit[bi] = digit;
        emit_bond(m.bonds[bi]);
        emit_digit(digit);
      } else {
        emit_bond(m.bonds[bi]);
        emit_digit(it->second);
      }
    }
    const std::vector<int>& kids = children[atom];
    for (size_t k = 0; k < kids.size(); ++k) {
      int bi = kids[k];
      int child = visit_time[m.bonds[bi].a] > visit_time[m.bonds[bi].b]
                      ? m.bonds[bi].a
                      : m.bonds[bi].b;
      bool last = (k + 1 == kids.size());
      if (!last) out << '(';
      emit(child, bi);
      if (!last) out << ')';
    }
  }

  std::string run() {
    int root = 0;
    for (int i = 1; i < m.num_atoms(); ++i) {
      if (rank[i] < rank[root]) root = i;
    }
    classify(root);
    emit(root, -1);
    return out.str();
  }
};

std::string emit_with_ranks(const Molecule& m, const Adjacency& adj,
                            const std::vector<int>& rank) {
  return Writer(m, adj, rank).run();
}

// Recursive tie-break: whenever the stable partition still has a tied class,
// bump each member in turn and keep the lexicographically smallest string.
// Automorphic members produce identical strings, so the branching factor is
// the symmetry of the molecule, not its size.
std::string canonical_recurse(const Molecule& m, const Adjacency& adj,
                              const std::vector<int>& seed, int depth) {
  std::vector<int> rank = refine_ranks(m, adj, seed);
  if (all_singleton(rank) || depth > 64) {
    return emit_with_ranks(m, adj, rank);
  }
  int n = m.num_atoms();
  std::vector<int> count(n, 0);
  for (int r : rank) ++count[r];
  int tied_rank = -1;
  for (int r = 0; r < n; ++r) {
    if (count[r] > 1) {
      tied_rank = r;
      break;
    }
  }
  std::string best;
  for (int i = 0; i < n; ++i) {
    if (rank[i] != tied_rank) continue;
    std::vector<int> bumped(n);
    for (int j = 0; j < n; ++j) bumped[j] = 2 * rank[j] + 1;
    bumped[i] = 2 * rank[i];  // promote this atom ahead of its class
    std::string s = canonical_recurse(m, adj, bumped, depth + 1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::string write_canonical_smiles(const Molecule& m) {
  if (m.atoms.empty()) throw InputError("cannot write empty molecule");
  Adjacency adj = build_adjacency(m);
  std::vector<int> seed(m.num_atoms(), 0);
  return canonical_recurse(m, adj, seed, 0);
}

std::pair<std::string, std::vector<int>> write_smiles_with_order(const Molecule& m) {
  if (m.atoms.empty()) throw InputError("cannot write empty molecule");
  Adjacency adj = build_adjacency(m);
  std::vector<int> rank(m.num_atoms());
  std::iota(rank.begin(), rank.end(), 0);
  Writer w(m, adj, rank);
  std::string s = w.run();
  std::vector<int> appearance(m.num_atoms());
  for (int i = 0; i < m.num_atoms(); ++i) appearance[w.visit_time[i]] = i;
  return {s, appearance};
}

}  // namespace vox
