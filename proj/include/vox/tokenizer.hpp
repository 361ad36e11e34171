#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vox {

// Reserved token ids. All ids are 1-based; logits index id-1.
inline constexpr int kPadToken = 1;
inline constexpr int kBosToken = 2;
inline constexpr int kEosToken = 3;
inline constexpr int kUnkToken = 4;
inline constexpr int kNumReservedTokens = 4;

struct Vocabulary {
  // entries[r-1] is the string for token id r. The first four entries are
  // the reserved sentinels; corpus tokens follow ordered by descending
  // frequency, ties broken lexicographically.
  std::vector<std::string> entries;

  int size() const { return int(entries.size()); }
  const std::string& token_string(int id) const { return entries[id - 1]; }
  // Returns 0 if the string is not in the vocabulary.
  int id_of(const std::string& s) const;
  // FNV-1a over entries, for checkpoint compatibility checks.
  std::uint64_t hash() const;

  std::string to_json() const;
  static Vocabulary from_json(const std::string& json_text);
};

struct TokenSequence {
  std::vector<int> tokens;  // BOS ... EOS, ids in [1, R]
  bool had_unk = false;
};

// Splits a SMILES string into surface tokens by greedy longest match over
// the fixed classes: bracket atoms "[...]", Cl/Br/Si/Se, single-character
// atoms, digits, %nn ring closures, bond and branch symbols.
// Characters matching no class become single-character tokens (mapped to
// UNK downstream). Throws InputError on an unterminated bracket.
std::vector<std::string> split_smiles_tokens(const std::string& text);

Vocabulary build_vocabulary(const std::vector<std::string>& corpus);

// Round trip restores `text` exactly when no UNK was emitted.
TokenSequence tokenize(const std::string& text, const Vocabulary& v);
std::string detokenize(const TokenSequence& seq, const Vocabulary& v);

}  // namespace vox
