#pragma once

// Keys shared by the lexicon, profile, transform and analysis modules.

#include <optional>
#include <string>
#include <string_view>

namespace emotif {

enum class Emotion { Happy, Angry, Sad };

enum class WordPosition { First, Last, Other };
enum class SyllablePosition { First, Middle, Last };
enum class Role { Consonant1, Vowel, Consonant2 };
enum class PitchEdge { Start, End };

inline constexpr Emotion kAllEmotions[] = {Emotion::Happy, Emotion::Angry, Emotion::Sad};
inline constexpr SyllablePosition kAllSyllablePositions[] = {
    SyllablePosition::First, SyllablePosition::Middle, SyllablePosition::Last};
inline constexpr Role kAllRoles[] = {Role::Consonant1, Role::Consonant2, Role::Vowel};

// The prosodic cell a scorable phoneme falls into.
struct ProsodicContext {
  WordPosition word_position = WordPosition::Other;
  SyllablePosition syllable_position = SyllablePosition::Middle;
  Role role = Role::Vowel;

  friend bool operator==(const ProsodicContext&, const ProsodicContext&) = default;
};

std::string_view to_string(Emotion e);
std::string_view to_string(WordPosition p);
std::string_view to_string(SyllablePosition p);
std::string_view to_string(Role r);
std::string_view to_string(PitchEdge e);

// Case-insensitive; accepts English names and the Indonesian senang/marah/sedih.
std::optional<Emotion> parse_emotion(std::string_view name);

}  // namespace emotif
