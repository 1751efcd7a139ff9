#include <array>
#include <cctype>
#include <string>

#include "emotif/lexicon.hpp"

namespace emotif {

namespace {

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool is_vowel_letter(char c) {
  switch (lower(c)) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

constexpr std::array<std::string_view, 4> kConsonantDigraphs = {"ng", "ny", "kh", "sy"};
constexpr std::array<std::string_view, 3> kDiphthongs = {"ai", "au", "oi"};
constexpr std::array<std::string_view, 12> kOnsetClusters = {
    "bl", "br", "dr", "fl", "fr", "gl", "gr", "kl", "kr", "pl", "pr", "tr"};

template <std::size_t N>
bool starts_with_any(std::string_view lowered, std::size_t at,
                     const std::array<std::string_view, N>& set) {
  for (auto d : set) {
    if (lowered.substr(at, d.size()) == d) return true;
  }
  return false;
}

struct Unit {
  std::size_t begin;
  std::size_t length;
  bool vowel;
};

// Segments a lowercase word into vowel groups and consonant units.
std::vector<Unit> segment(std::string_view lowered) {
  std::vector<Unit> units;
  std::size_t i = 0;
  while (i < lowered.size()) {
    if (is_vowel_letter(lowered[i])) {
      std::size_t len = starts_with_any(lowered, i, kDiphthongs) ? 2 : 1;
      units.push_back({i, len, true});
      i += len;
    } else {
      std::size_t len = starts_with_any(lowered, i, kConsonantDigraphs) ? 2 : 1;
      units.push_back({i, len, false});
      i += len;
    }
  }
  return units;
}

bool is_onset_cluster(std::string_view lowered, const Unit& a, const Unit& b) {
  if (a.length != 1 || b.length != 1) return false;
  const std::string pair{lowered[a.begin], lowered[b.begin]};
  for (auto c : kOnsetClusters) {
    if (c == pair) return true;
  }
  return false;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = lower(c);
  return out;
}

// Single-letter consonant mapping; digraphs are handled before this lookup.
std::vector<std::string> map_consonant(char c) {
  switch (c) {
    case 'b': return {"b"};
    case 'c': return {"tS"};
    case 'd': return {"d"};
    case 'f': return {"f"};
    case 'g': return {"g"};
    case 'h': return {"h"};
    case 'j': return {"dZ"};
    case 'k': return {"k"};
    case 'l': return {"l"};
    case 'm': return {"m"};
    case 'n': return {"n"};
    case 'p': return {"p"};
    case 'q': return {"k"};
    case 'r': return {"r"};
    case 's': return {"s"};
    case 't': return {"t"};
    case 'v': return {"f"};
    case 'w': return {"w"};
    case 'x': return {"k", "s"};
    case 'y': return {"j"};
    case 'z': return {"z"};
    default: return {};
  }
}

std::string map_digraph(std::string_view d) {
  if (d == "ng") return "N";
  if (d == "ny") return "J";
  if (d == "kh") return "x";
  if (d == "sy") return "S";
  if (d == "ai") return "aI";
  if (d == "au") return "aU";
  if (d == "oi") return "oI";
  return {};
}

}  // namespace

std::vector<std::string> syllabify_orthographic(std::string_view word) {
  if (word.empty()) {
    throw LexiconError(LexiconError::Kind::NoVowel, "cannot syllabify an empty word");
  }
  for (char c : word) {
    if (!is_ascii_letter(c)) {
      throw LexiconError(LexiconError::Kind::InvalidCharacter,
                         "'" + std::string(word) + "' contains a non-letter character");
    }
  }
  const std::string lowered = lowercase(word);
  const auto units = segment(lowered);

  std::vector<std::size_t> nuclei;
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (units[u].vowel) nuclei.push_back(u);
  }
  if (nuclei.empty()) {
    throw LexiconError(LexiconError::Kind::NoVowel,
                       "'" + std::string(word) + "' has no vowel to carry a syllable");
  }

  // Unit index where each syllable after the first begins.
  std::vector<std::size_t> starts;
  for (std::size_t n = 1; n < nuclei.size(); ++n) {
    const std::size_t prev = nuclei[n - 1];
    const std::size_t next = nuclei[n];
    const std::size_t consonants = next - prev - 1;
    if (consonants == 0) {
      starts.push_back(next);
    } else if (consonants == 1) {
      starts.push_back(prev + 1);
    } else if (is_onset_cluster(lowered, units[next - 2], units[next - 1])) {
      starts.push_back(next - 2);
    } else {
      starts.push_back(next - 1);
    }
  }

  std::vector<std::string> out;
  std::size_t begin = 0;
  for (std::size_t s : starts) {
    const std::size_t end = units[s].begin;
    out.emplace_back(word.substr(begin, end - begin));
    begin = end;
  }
  out.emplace_back(word.substr(begin));
  return out;
}

std::vector<Syllable> grapheme_to_sampa(const std::vector<std::string>& syllables) {
  std::vector<Syllable> out;
  out.reserve(syllables.size());
  for (const auto& orth : syllables) {
    const std::string s = lowercase(orth);
    Syllable syl;
    bool have_nucleus = false;
    std::size_t i = 0;
    while (i < s.size()) {
      const std::string_view two = std::string_view(s).substr(i, 2);
      if (two.size() == 2 && (starts_with_any(s, i, kConsonantDigraphs) ||
                              starts_with_any(s, i, kDiphthongs))) {
        const bool vowel = is_vowel_letter(two[0]);
        if (vowel) {
          if (have_nucleus) break;
          syl.nucleus_index = syl.phonemes.size();
          have_nucleus = true;
        }
        syl.phonemes.push_back(map_digraph(two));
        i += 2;
        continue;
      }
      const char c = s[i];
      if (is_vowel_letter(c)) {
        if (have_nucleus) break;
        syl.nucleus_index = syl.phonemes.size();
        have_nucleus = true;
        syl.phonemes.emplace_back(1, c);
      } else {
        auto mapped = map_consonant(c);
        if (mapped.empty()) {
          throw LexiconError(LexiconError::Kind::UnmappableGrapheme,
                             "no SAMPA mapping for '" + std::string(1, orth[i]) + "' in '" +
                                 orth + "'");
        }
        syl.phonemes.insert(syl.phonemes.end(), mapped.begin(), mapped.end());
      }
      ++i;
    }
    if (!have_nucleus || i != s.size()) {
      throw LexiconError(LexiconError::Kind::NoVowel,
                         "'" + orth + "' is not a single-nucleus syllable");
    }
    out.push_back(std::move(syl));
  }
  return out;
}

LexiconEntry g2p_entry(std::string_view word) {
  LexiconEntry entry;
  entry.orthographic = lowercase(word);
  entry.syllables = grapheme_to_sampa(syllabify_orthographic(entry.orthographic));
  return entry;
}

std::vector<std::string> split_sentence(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (is_ascii_letter(c) || uc >= 0x80) {
      current += lower(c);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace emotif
