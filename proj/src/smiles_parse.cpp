#include "vox/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "vox/chem_tables.hpp"
#include "vox/common.hpp"

namespace vox {

namespace {

struct PendingBond {
  BondOrder order = BondOrder::Single;
  bool explicit_order = false;
  bool aromatic = false;
  std::uint8_t direction = 0;
};

struct RingOpen {
  int atom = -1;
  PendingBond bond;
};

struct ParserAtom {
  Atom atom;
  bool bracket = false;
  int explicit_h = 0;  // bracket H count (valid when bracket)
};

class SmilesParser {
 public:
  explicit SmilesParser(const std::string& text) : text_(text) {}

  Molecule run() {
    if (text_.empty()) throw InputError("empty SMILES");
    parse_chain();
    if (pos_ != text_.size()) fail("unexpected character");
    if (!paren_stack_.empty()) fail("unclosed parenthesis");
    if (!ring_open_.empty()) fail("unclosed ring bond " + std::to_string(ring_open_.begin()->first));
    if (mol_.atoms.empty()) fail("no atoms");
    validate_structure(mol_);
    finalize();
    return std::move(mol_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("SMILES error at position " + std::to_string(pos_) + ": " + msg +
                     " in \"" + text_ + "\"");
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  void parse_chain() {
    while (!eof()) {
      char c = peek();
      if (c == '(') {
        ++pos_;
        if (prev_atom_ < 0) fail("branch before any atom");
        paren_stack_.push_back(prev_atom_);
      } else if (c == ')') {
        ++pos_;
        if (paren_stack_.empty()) fail("unmatched ')'");
        prev_atom_ = paren_stack_.back();
        paren_stack_.pop_back();
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\') {
        ++pos_;
        if (pending_.explicit_order) fail("two bond symbols in a row");
        pending_.explicit_order = true;
        switch (c) {
          case '-': pending_.order = BondOrder::Single; break;
          case '=': pending_.order = BondOrder::Double; break;
          case '#': pending_.order = BondOrder::Triple; break;
          case ':': pending_.order = BondOrder::Aromatic; pending_.aromatic = true; break;
          case '/': pending_.order = BondOrder::Single; pending_.direction = 1; break;
          case '\\': pending_.order = BondOrder::Single; pending_.direction = 2; break;
        }
      } else if (c == '.') {
        fail("disconnected components are not supported");
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        parse_ring_closure();
      } else if (c == '[') {
        parse_bracket_atom();
      } else {
        parse_bare_atom();
      }
    }
  }

  int add_atom(const ParserAtom& pa) {
    int idx = int(parser_atoms_.size());
    parser_atoms_.push_back(pa);
    mol_.atoms.push_back(pa.atom);
    if (prev_atom_ >= 0) add_bond(prev_atom_, idx);
    pending_ = PendingBond{};
    prev_atom_ = idx;
    return idx;
  }

  void add_bond(int a, int b) {
    Bond bond;
    bond.a = std::uint16_t(a);
    bond.b = std::uint16_t(b);
    if (pending_.explicit_order) {
      bond.order = pending_.order;
      bond.aromatic = pending_.aromatic;
      bond.direction = pending_.direction;
    } else if (mol_.atoms[a].aromatic && mol_.atoms[b].aromatic) {
      bond.order = BondOrder::Aromatic;
      bond.aromatic = true;
    } else {
      bond.order = BondOrder::Single;
    }
    mol_.bonds.push_back(bond);
  }

  void parse_ring_closure() {
    if (prev_atom_ < 0) fail("ring closure before any atom");
    int number = 0;
    if (peek() == '%') {
      ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("'%' needs two digits");
      number = (take() - '0') * 10;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("'%' needs two digits");
      number += take() - '0';
    } else {
      number = take() - '0';
    }
    auto it = ring_open_.find(number);
    if (it == ring_open_.end()) {
      ring_open_[number] = RingOpen{prev_atom_, pending_};
      pending_ = PendingBond{};
      return;
    }
    RingOpen open = it->second;
    ring_open_.erase(it);
    if (open.atom == prev_atom_) fail("ring bond to self");
    // Bond order may be given at either end; both given must agree.
    PendingBond rb;
    if (open.bond.explicit_order && pending_.explicit_order &&
        open.bond.order != pending_.order) {
      fail("conflicting ring bond orders for closure " + std::to_string(number));
    }
    rb = open.bond.explicit_order ? open.bond : pending_;
    Bond bond;
    bond.a = std::uint16_t(open.atom);
    bond.b = std::uint16_t(prev_atom_);
    if (rb.explicit_order) {
      bond.order = rb.order;
      bond.aromatic = rb.aromatic;
      bond.direction = rb.direction;
    } else if (mol_.atoms[open.atom].aromatic && mol_.atoms[prev_atom_].aromatic) {
      bond.order = BondOrder::Aromatic;
      bond.aromatic = true;
    } else {
      bond.order = BondOrder::Single;
    }
    mol_.bonds.push_back(bond);
    pending_ = PendingBond{};
  }

  void parse_bare_atom() {
    char c = peek();
    ParserAtom pa;
    // Two-character organic-subset elements first.
    if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
      pos_ += 2;
      pa.atom.element = Element::Cl;
    } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
      pos_ += 2;
      pa.atom.element = Element::Br;
    } else {
      Element e;
      bool aromatic = false;
      switch (c) {
        case 'B': e = Element::B; break;
        case 'C': e = Element::C; break;
        case 'N': e = Element::N; break;
        case 'O': e = Element::O; break;
        case 'P': e = Element::P; break;
        case 'S': e = Element::S; break;
        case 'F': e = Element::F; break;
        case 'I': e = Element::I; break;
        case 'b': e = Element::B; aromatic = true; break;
        case 'c': e = Element::C; aromatic = true; break;
        case 'n': e = Element::N; aromatic = true; break;
        case 'o': e = Element::O; aromatic = true; break;
        case 'p': e = Element::P; aromatic = true; break;
        case 's': e = Element::S; aromatic = true; break;
        default:
          fail(std::string("unsupported or unexpected character '") + c + "'");
      }
      ++pos_;
      pa.atom.element = e;
      pa.atom.aromatic = aromatic;
    }
    add_atom(pa);
  }

  void parse_bracket_atom() {
    ++pos_;  // '['
    ParserAtom pa;
    pa.bracket = true;
    if (eof()) fail("unterminated bracket atom");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("isotopes are not supported");
    }
    // Element symbol: one uppercase + optional lowercase, or aromatic lowercase.
    std::string sym;
    if (std::isupper(static_cast<unsigned char>(peek()))) {
      sym += take();
      if (!eof() && std::islower(static_cast<unsigned char>(peek()))) {
        std::string two = sym + peek();
        Element dummy;
        if (element_from_symbol(two, &dummy)) {
          sym = two;
          ++pos_;
        }
      }
      Element e;
      if (!element_from_symbol(sym, &e)) fail("unsupported element '" + sym + "'");
      pa.atom.element = e;
    } else if (std::islower(static_cast<unsigned char>(peek()))) {
      sym += take();
      if (sym == "s" && !eof() && peek() == 'e') {
        sym = "se";
        ++pos_;
      }
      static const std::map<std::string, Element> kAromatic = {
          {"b", Element::B}, {"c", Element::C}, {"n", Element::N}, {"o", Element::O},
          {"p", Element::P}, {"s", Element::S}, {"se", Element::Se}};
      auto it = kAromatic.find(sym);
      if (it == kAromatic.end()) fail("unsupported aromatic symbol '" + sym + "'");
      pa.atom.element = it->second;
      pa.atom.aromatic = true;
    } else {
      fail("expected element symbol in bracket atom");
    }
    // Chirality.
    if (!eof() && peek() == '@') {
      ++pos_;
      pa.atom.chirality = 1;
      if (!eof() && peek() == '@') {
        ++pos_;
        pa.atom.chirality = 2;
      }
    }
    // Explicit hydrogens.
    if (!eof() && peek() == 'H') {
      ++pos_;
      pa.explicit_h = 1;
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        pa.explicit_h = take() - '0';
      }
    }
    // Charge.
    if (!eof() && (peek() == '+' || peek() == '-')) {
      int sign = take() == '+' ? 1 : -1;
      int magnitude = 1;
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        magnitude = take() - '0';
      } else {
        while (!eof() && ((sign > 0 && peek() == '+') || (sign < 0 && peek() == '-'))) {
          ++pos_;
          ++magnitude;
        }
      }
      pa.atom.charge = std::int8_t(sign * magnitude);
    }
    // Atom class: parsed and dropped.
    if (!eof() && peek() == ':') {
      ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("atom class needs digits");
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (eof() || peek() != ']') fail("expected ']'");
    ++pos_;
    pa.atom.h_count = std::uint8_t(pa.explicit_h);
    add_atom(pa);
  }

  // Bond-order sum seen by valence rules. Aromatic bonds are resolved by the
  // lowercase-SMILES convention instead (see finalize()).
  static int order_value(BondOrder o) {
    switch (o) {
      case BondOrder::Single: return 1;
      case BondOrder::Double: return 2;
      case BondOrder::Triple: return 3;
      case BondOrder::Aromatic: return 1;
    }
    return 1;
  }

  void finalize() {
    Adjacency adj = build_adjacency(mol_);
    // Implicit hydrogens and valence checks, Kekule atoms.
    for (int i = 0; i < mol_.num_atoms(); ++i) {
      Atom& a = mol_.atoms[i];
      const ParserAtom& pa = parser_atoms_[i];
      int order_sum = 0;
      int aromatic_bonds = 0;
      for (auto [nb, bi] : adj[i]) {
        const Bond& b = mol_.bonds[bi];
        if (b.aromatic || b.order == BondOrder::Aromatic) {
          ++aromatic_bonds;
        } else {
          order_sum += order_value(b.order);
        }
      }
      if (a.aromatic) {
        // Declared-aromatic atom: implicit hydrogens by the lowercase
        // convention. c/b fill to (V - connections - 1); lone-pair donors
        // (n, o, s, p, se) get no implicit hydrogens.
        int connections = order_sum + aromatic_bonds;
        if (pa.bracket) {
          int v = connections + 1 + a.h_count;  // ring pi counts one
          int vmax = allowed_valences_charged(a.element, a.charge).empty()
                         ? 0
                         : allowed_valences_charged(a.element, a.charge).back();
          // Lone-pair donors (nH, o, s) use the plain sum.
          int v_alt = connections + a.h_count;
          if (std::min(v, v_alt) > vmax) fail_atom(i, "valence violation on aromatic atom");
        } else if (a.element == Element::C || a.element == Element::B) {
          int v = allowed_valences(a.element).front();
          int h = v - connections - 1;
          if (h < -1) fail_atom(i, "valence violation on aromatic atom");
          a.h_count = std::uint8_t(std::max(0, h));
        } else {
          a.h_count = 0;
        }
        continue;
      }
      if (aromatic_bonds > 0) {
        // Aromatic bond attached to a non-aromatic atom: count it as single.
        order_sum += aromatic_bonds;
      }
      std::vector<int> allowed = allowed_valences_charged(a.element, a.charge);
      if (pa.bracket) {
        int v = order_sum + a.h_count;
        if (allowed.empty() || v > allowed.back()) fail_atom(i, "valence violation");
        // Under-valence bracket atoms accepted as written (radicals).
      } else {
        int fill = -1;
        for (int v : allowed) {
          if (order_sum <= v) {
            fill = v;
            break;
          }
        }
        if (fill < 0) fail_atom(i, "valence violation");
        a.h_count = std::uint8_t(fill - order_sum);
      }
    }
    // Ring and aromaticity perception over Kekule input.
    RingInfo info = ring_info(mol_);
    perceive_aromaticity(mol_, info);
  }

  [[noreturn]] void fail_atom(int atom, const std::string& msg) const {
    throw InputError("SMILES error: " + msg + " at atom " + std::to_string(atom) +
                     " (" + element_symbol(mol_.atoms[atom].element) + ") in \"" + text_ + "\"");
  }

  const std::string& text_;
  size_t pos_ = 0;
  Molecule mol_;
  std::vector<ParserAtom> parser_atoms_;
  std::vector<int> paren_stack_;
  std::map<int, RingOpen> ring_open_;
  int prev_atom_ = -1;
  PendingBond pending_;
};

}  // namespace

Molecule parse_smiles(const std::string& text) {
  for (char c : text) {
    if (static_cast<unsigned char>(c) > 127 || c == ' ' || c == '\t') {
      throw InputError("SMILES must be ASCII without whitespace");
    }
  }
  return SmilesParser(text).run();
}

std::string canonical_smiles(const std::string& text) {
  return write_canonical_smiles(parse_smiles(text));
}

}  // namespace vox
