#include "emotif/profiles.hpp"

#include <algorithm>
#include <cctype>

namespace emotif {

namespace {

std::size_t word_slot(WordPosition w) { return w == WordPosition::First ? 0 : 1; }

// Rows in table order (first syllable, middle, last) with columns
// (first consonant, second consonant, vowel).
using DurationRows = std::array<std::array<double, 3>, 3>;
using PitchRows = std::array<std::array<double, 2>, 3>;

struct TableSet {
  DurationRows duration_first_word;
  DurationRows duration_last_word;
  double duration_other_word;
  PitchRows pitch_first_word;
  PitchRows pitch_last_word;
  std::array<double, 2> pitch_other_word;
};

EmotionProfile from_tables(std::string name, const TableSet& t) {
  EmotionProfile p;
  p.name = std::move(name);
  const std::array<const DurationRows*, 2> dur = {&t.duration_first_word, &t.duration_last_word};
  const std::array<const PitchRows*, 2> pit = {&t.pitch_first_word, &t.pitch_last_word};
  const std::array<WordPosition, 2> words = {WordPosition::First, WordPosition::Last};
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t s = 0; s < 3; ++s) {
      const auto sp = kAllSyllablePositions[s];
      p.duration_cell(words[w], sp, Role::Consonant1) = {(*dur[w])[s][0]};
      p.duration_cell(words[w], sp, Role::Consonant2) = {(*dur[w])[s][1]};
      p.duration_cell(words[w], sp, Role::Vowel) = {(*dur[w])[s][2]};
      p.pitch_cell(words[w], sp, PitchEdge::Start) = {(*pit[w])[s][0]};
      p.pitch_cell(words[w], sp, PitchEdge::End) = {(*pit[w])[s][1]};
    }
  }
  p.duration_other_word = {t.duration_other_word};
  p.pitch_other_word = {{t.pitch_other_word[0]}, {t.pitch_other_word[1]}};
  return p;
}

// Measured corpus analysis for the three recorded emotions.
constexpr TableSet kHappy = {
    {{{-38, -32, +65}, {+4, -36, +61}, {-11, +30, +89}}},
    {{{-16, +53, +174}, {-5, +21, +252}, {+14, +60, +256}}},
    +21,
    {{{+132, +152}, {+133, +162}, {+173, +201}}},
    {{{+205, +282}, {+243, +363}, {+288, +333}}},
    {+226, +242},
};

constexpr TableSet kAngry = {
    {{{-36, +1, +12}, {+5, -3, +72}, {-15, +5, +136}}},
    {{{-18, -10, +77}, {-41, +5, +26}, {+9, -16, +58}}},
    +5,
    {{{+172, +183}, {+195, +260}, {+244, +237}}},
    {{{+192, +232}, {+154, +207}, {+209, +202}}},
    {+192, +205},
};

constexpr TableSet kSad = {
    {{{-25, -40, +113}, {-11, +40, +135}, {+8, -26, -40}}},
    {{{+10, -7, +117}, {+8, +33, +169}, {+10, +10, +229}}},
    +33,
    {{{+123, +122}, {+96, +108}, {+107, +112}}},
    {{{+88, +133}, {+89, +137}, {+116, +136}}},
    {+113, +116},
};

}  // namespace

RateFactor& EmotionProfile::duration_cell(WordPosition w, SyllablePosition s, Role r) {
  return duration[word_slot(w)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)];
}

const RateFactor& EmotionProfile::duration_cell(WordPosition w, SyllablePosition s,
                                                Role r) const {
  return duration[word_slot(w)][static_cast<std::size_t>(s)][static_cast<std::size_t>(r)];
}

RateFactor& EmotionProfile::pitch_cell(WordPosition w, SyllablePosition s, PitchEdge e) {
  return pitch[word_slot(w)][static_cast<std::size_t>(s)].at(e);
}

const RateFactor& EmotionProfile::pitch_cell(WordPosition w, SyllablePosition s,
                                             PitchEdge e) const {
  return pitch[word_slot(w)][static_cast<std::size_t>(s)].at(e);
}

bool EmotionProfile::valid() const {
  for (const auto& block : duration)
    for (const auto& row : block)
      for (const auto& f : row)
        if (!f.valid()) return false;
  for (const auto& block : pitch)
    for (const auto& pair : block)
      if (!pair.start.valid() || !pair.end.valid()) return false;
  return duration_other_word.valid() && pitch_other_word.start.valid() &&
         pitch_other_word.end.valid();
}

EmotionProfile builtin_profile(Emotion emotion) {
  switch (emotion) {
    case Emotion::Happy: return from_tables("happy", kHappy);
    case Emotion::Angry: return from_tables("angry", kAngry);
    case Emotion::Sad: return from_tables("sad", kSad);
  }
  return neutral_profile();
}

EmotionProfile neutral_profile() {
  EmotionProfile p;
  p.name = "neutral";
  return p;
}

std::optional<EmotionProfile> builtin_profile_by_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "neutral") return neutral_profile();
  if (auto e = parse_emotion(lower)) return builtin_profile(*e);
  return std::nullopt;
}

RateFactor lookup_duration(const EmotionProfile& profile, const ProsodicContext& ctx) {
  if (ctx.word_position == WordPosition::Other) return profile.duration_other_word;
  return profile.duration_cell(ctx.word_position, ctx.syllable_position, ctx.role);
}

RateFactor lookup_pitch(const EmotionProfile& profile, WordPosition word,
                        SyllablePosition syllable, PitchEdge edge) {
  if (word == WordPosition::Other) return profile.pitch_other_word.at(edge);
  return profile.pitch_cell(word, syllable, edge);
}

}  // namespace emotif
