#include "vox/tokenizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vox/common.hpp"
#include "json.hpp"

namespace vox {

int Vocabulary::id_of(const std::string& s) const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == s) return int(i) + 1;
  }
  return 0;
}

std::uint64_t Vocabulary::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::string& e : entries) {
    for (char c : e) {
      h ^= std::uint8_t(c);
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;  // entry separator
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Vocabulary::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["entries"] = entries;
  return j.dump(2);
}

Vocabulary Vocabulary::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Vocabulary v;
  v.entries = j.at("entries").get<std::vector<std::string>>();
  if (v.size() < kNumReservedTokens) throw InputError("vocabulary missing reserved entries");
  return v;
}

std::vector<std::string> split_smiles_tokens(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '[') {
      size_t end = text.find(']', pos);
      if (end == std::string::npos) throw InputError("unterminated bracket atom in tokenizer");
      out.push_back(text.substr(pos, end - pos + 1));
      pos = end + 1;
      continue;
    }
    if (pos + 1 < text.size()) {
      std::string two = text.substr(pos, 2);
      if (two == "Cl" || two == "Br" || two == "Si" || two == "Se") {
        out.push_back(two);
        pos += 2;
        continue;
      }
    }
    if (c == '%') {
      if (pos + 2 < text.size() && is_digit(text[pos + 1]) && is_digit(text[pos + 2])) {
        out.push_back(text.substr(pos, 3));
        pos += 3;
      } else {
        out.push_back("%");  // malformed; becomes UNK downstream
        ++pos;
      }
      continue;
    }
    static const std::string kSingles = "BCNOPSFIbcnops-=#:/\\().0123456789";
    if (kSingles.find(c) != std::string::npos) {
      out.push_back(std::string(1, c));
    } else {
      out.push_back(std::string(1, c));  // unknown char, one token -> UNK
    }
    ++pos;
  }
  return out;
}

Vocabulary build_vocabulary(const std::vector<std::string>& corpus) {
  if (corpus.empty()) throw InputError("empty corpus for vocabulary");
  std::map<std::string, std::uint64_t> freq;
  for (const std::string& s : corpus) {
    for (const std::string& t : split_smiles_tokens(s)) ++freq[t];
  }
  std::vector<std::pair<std::string, std::uint64_t>> items(freq.begin(), freq.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary v;
  v.entries = {"<pad>", "<bos>", "<eos>", "<unk>"};
  for (const auto& [tok, n] : items) v.entries.push_back(tok);
  return v;
}

TokenSequence tokenize(const std::string& text, const Vocabulary& v) {
  TokenSequence seq;
  seq.tokens.push_back(kBosToken);
  for (const std::string& t : split_smiles_tokens(text)) {
    int id = v.id_of(t);
    if (id == 0) {
      seq.tokens.push_back(kUnkToken);
      seq.had_unk = true;
    } else {
      seq.tokens.push_back(id);
    }
  }
  seq.tokens.push_back(kEosToken);
  return seq;
}

std::string detokenize(const TokenSequence& seq, const Vocabulary& v) {
  std::string out;
  for (int id : seq.tokens) {
    if (id <= kNumReservedTokens) continue;  // sentinels drop out
    if (id > v.size()) throw InputError("token id exceeds vocabulary size");
    out += v.token_string(id);
  }
  return out;
}

}  // namespace vox
