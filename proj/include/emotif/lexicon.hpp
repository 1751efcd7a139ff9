#pragma once

// Word -> syllabified SAMPA lexicon plus the rule-based fallbacks used when a
// word is missing from it.

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "emotif/error.hpp"

namespace emotif {

struct Syllable {
  std::vector<std::string> phonemes;  // SAMPA tokens
  std::size_t nucleus_index = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct LexiconEntry {
  std::string orthographic;  // lowercase
  std::vector<Syllable> syllables;

  std::vector<std::string> phonemes() const;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

class LexiconError : public Error {
 public:
  enum class Kind { NoVowel, InvalidCharacter, UnmappableGrapheme, MalformedEntry, UnknownWord };

  LexiconError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Splits an Indonesian word into orthographic syllables. Concatenating the
// result gives back the input (case preserved). Digraphs ng, ny, kh and sy are
// never split; a single intervocalic consonant starts the next syllable; of a
// longer run only the last consonant (or a stop+liquid onset cluster) does.
std::vector<std::string> syllabify_orthographic(std::string_view word);

// Deterministic letter -> SAMPA mapping for syllables produced by
// syllabify_orthographic (c->tS, j->dZ, y->j, ng->N, ny->J, kh->x, sy->S).
std::vector<Syllable> grapheme_to_sampa(const std::vector<std::string>& syllables);

LexiconEntry g2p_entry(std::string_view word);

// Lowercases and splits on anything that is not a letter.
std::vector<std::string> split_sentence(std::string_view text);

class Lexicon {
 public:
  Lexicon() = default;

  // `word<TAB>syl|syl|...`, tokens space separated, nucleus marked with '*'.
  // '#' starts a comment line.
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::filesystem::path& path);

  // The small lexicon shipped with the library (data/sample_lexicon.tsv).
  static const Lexicon& sample();

  // Replaces any existing entry with the same orthography.
  void insert(LexiconEntry entry);

  const LexiconEntry* find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  std::string to_text() const;

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

struct ResolvedWord {
  LexiconEntry entry;
  bool from_fallback = false;
};

// Lexicon wins; otherwise G2P when allowed, else UnknownWord naming the word.
ResolvedWord resolve_word(const Lexicon& lexicon, std::string_view word, bool allow_g2p);

}  // namespace emotif
