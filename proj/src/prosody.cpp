#include "emotif/prosody.hpp"

#include <algorithm>
#include <cctype>

namespace emotif {

std::string_view to_string(Emotion e) {
  switch (e) {
    case Emotion::Happy: return "happy";
    case Emotion::Angry: return "angry";
    case Emotion::Sad: return "sad";
  }
  return "?";
}

std::string_view to_string(WordPosition p) {
  switch (p) {
    case WordPosition::First: return "first";
    case WordPosition::Last: return "last";
    case WordPosition::Other: return "other";
  }
  return "?";
}

std::string_view to_string(SyllablePosition p) {
  switch (p) {
    case SyllablePosition::First: return "first";
    case SyllablePosition::Middle: return "middle";
    case SyllablePosition::Last: return "last";
  }
  return "?";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Consonant1: return "cons1";
    case Role::Vowel: return "vowel";
    case Role::Consonant2: return "cons2";
  }
  return "?";
}

std::string_view to_string(PitchEdge e) { return e == PitchEdge::Start ? "start" : "end"; }

std::optional<Emotion> parse_emotion(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "happy" || lower == "senang") return Emotion::Happy;
  if (lower == "angry" || lower == "marah") return Emotion::Angry;
  if (lower == "sad" || lower == "sedih") return Emotion::Sad;
  return std::nullopt;
}

}  // namespace emotif
