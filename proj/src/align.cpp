#include "emotif/align.hpp"

namespace emotif {

AlignedUtterance align(const PhoDocument& doc, std::span<const ResolvedWord> words) {
  const auto stream = doc.phoneme_indices();
  AlignedUtterance out;
  std::size_t cursor = 0;

  auto skip_pauses = [&] {
    while (cursor < stream.size() && is_pause(doc.phoneme_at(stream[cursor]).symbol)) {
      out.unaligned.push_back(stream[cursor++]);
    }
  };

  for (const auto& resolved : words) {
    const auto& entry = resolved.entry;
    skip_pauses();
    AlignedWord word{entry.orthographic, {}, resolved.from_fallback};
    for (const auto& syl : entry.syllables) {
      AlignedSyllable slot{{}, syl.nucleus_index};
      for (const auto& expected : syl.phonemes) {
        if (cursor >= stream.size()) {
          throw AlignmentError(AlignmentError::Kind::StreamExhausted, doc.items.size(),
                               entry.orthographic,
                               "phoneme stream ended while matching '" + entry.orthographic +
                                   "' (expected '" + expected + "')");
        }
        const std::size_t item = stream[cursor];
        const auto& found = doc.phoneme_at(item).symbol;
        if (found != expected) {
          throw AlignmentError(AlignmentError::Kind::AlignmentMismatch, item, entry.orthographic,
                               "line " + std::to_string(item + 1) + ": expected '" + expected +
                                   "' for word '" + entry.orthographic + "', found '" + found +
                                   "'");
        }
        slot.phonemes.push_back(item);
        ++cursor;
      }
      word.syllables.push_back(std::move(slot));
    }
    out.words.push_back(std::move(word));
  }

  skip_pauses();
  if (cursor < stream.size()) {
    const std::size_t item = stream[cursor];
    throw AlignmentError(AlignmentError::Kind::AlignmentMismatch, item, "",
                         "line " + std::to_string(item + 1) + ": unexpected phoneme '" +
                             doc.phoneme_at(item).symbol + "' after the last word");
  }
  return out;
}

AlignedUtterance align(const PhoDocument& doc, std::span<const std::string> sentence,
                       const Lexicon& lexicon, bool allow_g2p,
                       std::vector<std::string>* warnings) {
  std::vector<ResolvedWord> words;
  words.reserve(sentence.size());
  for (const auto& w : sentence) {
    words.push_back(resolve_word(lexicon, w, allow_g2p));
    if (words.back().from_fallback && warnings) {
      warnings->push_back("'" + w + "' not in lexicon; using rule-based G2P");
    }
  }
  return align(doc, words);
}

WordPosition word_position(std::size_t index, std::size_t count) {
  if (index + 1 == count) return WordPosition::Last;
  if (index == 0) return WordPosition::First;
  return WordPosition::Other;
}

SyllablePosition syllable_position(std::size_t index, std::size_t count) {
  if (index + 1 == count) return SyllablePosition::Last;
  if (index == 0) return SyllablePosition::First;
  return SyllablePosition::Middle;
}

ContextMap classify_context(const AlignedUtterance& aligned) {
  ContextMap out;
  const auto n_words = aligned.words.size();
  for (std::size_t w = 0; w < n_words; ++w) {
    const auto& word = aligned.words[w];
    const auto wp = word_position(w, n_words);
    for (std::size_t s = 0; s < word.syllables.size(); ++s) {
      const auto& syl = word.syllables[s];
      const auto sp = syllable_position(s, word.syllables.size());
      for (std::size_t p = 0; p < syl.phonemes.size(); ++p) {
        const Role role = p < syl.nucleus_offset    ? Role::Consonant1
                          : p == syl.nucleus_offset ? Role::Vowel
                                                    : Role::Consonant2;
        out.emplace(syl.phonemes[p], ProsodicContext{wp, sp, role});
      }
    }
  }
  return out;
}

}  // namespace emotif
