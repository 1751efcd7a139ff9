#pragma once

// Word/syllable alignment of a phoneme stream and the prosodic context of
// every aligned phoneme.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emotif/lexicon.hpp"
#include "emotif/pho.hpp"
#include "emotif/prosody.hpp"

namespace emotif {

inline constexpr std::string_view kPauseSymbol = "_";

inline bool is_pause(std::string_view symbol) { return symbol == kPauseSymbol; }

struct AlignedSyllable {
  std::vector<std::size_t> phonemes;  // item indices into the PhoDocument
  std::size_t nucleus_offset = 0;     // position of the vowel inside `phonemes`

  friend bool operator==(const AlignedSyllable&, const AlignedSyllable&) = default;
};

struct AlignedWord {
  std::string orthographic;
  std::vector<AlignedSyllable> syllables;
  bool from_fallback = false;

  friend bool operator==(const AlignedWord&, const AlignedWord&) = default;
};

struct AlignedUtterance {
  std::vector<AlignedWord> words;
  std::vector<std::size_t> unaligned;  // pauses, in document order

  friend bool operator==(const AlignedUtterance&, const AlignedUtterance&) = default;
};

class AlignmentError : public Error {
 public:
  enum class Kind { AlignmentMismatch, StreamExhausted };

  AlignmentError(Kind kind, std::size_t item_index, std::string word, const std::string& what)
      : Error(what), kind_(kind), item_index_(item_index), word_(std::move(word)) {}

  Kind kind() const { return kind_; }
  // Document item index where matching failed (equals the 0-based line of a
  // parsed file). For StreamExhausted this is the document size.
  std::size_t item_index() const { return item_index_; }
  const std::string& word() const { return word_; }

 private:
  Kind kind_;
  std::size_t item_index_;
  std::string word_;
};

// Greedy left-to-right match of each word's expected phonemes against the
// stream. Pauses between words go to `unaligned`.
AlignedUtterance align(const PhoDocument& doc, std::span<const ResolvedWord> words);

// Resolves each word through the lexicon (or G2P when `allow_g2p`), then
// aligns. A warning is appended for every word taken from the fallback.
AlignedUtterance align(const PhoDocument& doc, std::span<const std::string> sentence,
                       const Lexicon& lexicon, bool allow_g2p,
                       std::vector<std::string>* warnings = nullptr);

using ContextMap = std::map<std::size_t, ProsodicContext>;

// One-word utterances count as Last word; one-syllable words as Last syllable.
ContextMap classify_context(const AlignedUtterance& aligned);

WordPosition word_position(std::size_t index, std::size_t count);
SyllablePosition syllable_position(std::size_t index, std::size_t count);

}  // namespace emotif
