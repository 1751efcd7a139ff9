#pragma once

// Emotion profiles: signed-percent rate factors keyed by prosodic cell.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "emotif/error.hpp"
#include "emotif/prosody.hpp"

namespace emotif {

// Signed relative difference in percent; applied as a multiplier of
// 1 + percent/100, so it must stay above -100.
struct RateFactor {
  double percent = 0.0;

  double multiplier() const { return 1.0 + percent / 100.0; }
  bool valid() const { return percent > -100.0; }

  friend bool operator==(const RateFactor&, const RateFactor&) = default;
  friend auto operator<=>(const RateFactor&, const RateFactor&) = default;
};

struct PitchPair {
  RateFactor start;
  RateFactor end;

  const RateFactor& at(PitchEdge e) const { return e == PitchEdge::Start ? start : end; }
  RateFactor& at(PitchEdge e) { return e == PitchEdge::Start ? start : end; }

  friend bool operator==(const PitchPair&, const PitchPair&) = default;
};

// Cells exist only for the first and last word; every other word shares
// one duration factor and one start/end pitch pair.
struct EmotionProfile {
  using RoleRow = std::array<RateFactor, 3>;         // indexed by Role
  using DurationBlock = std::array<RoleRow, 3>;      // indexed by SyllablePosition
  using PitchBlock = std::array<PitchPair, 3>;       // indexed by SyllablePosition

  std::string name;
  std::array<DurationBlock, 2> duration{};  // [First word, Last word]
  RateFactor duration_other_word{};
  std::array<PitchBlock, 2> pitch{};
  PitchPair pitch_other_word{};

  RateFactor& duration_cell(WordPosition w, SyllablePosition s, Role r);
  const RateFactor& duration_cell(WordPosition w, SyllablePosition s, Role r) const;
  RateFactor& pitch_cell(WordPosition w, SyllablePosition s, PitchEdge e);
  const RateFactor& pitch_cell(WordPosition w, SyllablePosition s, PitchEdge e) const;

  // Every factor above -100.
  bool valid() const;

  friend bool operator==(const EmotionProfile&, const EmotionProfile&) = default;
};

class ProfileError : public Error {
 public:
  enum class Kind { MissingCell, SignSyntax, OutOfRange, Malformed };

  ProfileError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

EmotionProfile builtin_profile(Emotion emotion);
EmotionProfile neutral_profile();

// "happy", "angry", "sad" (or senang/marah/sedih) and "neutral".
std::optional<EmotionProfile> builtin_profile_by_name(std::string_view name);

RateFactor lookup_duration(const EmotionProfile& profile, const ProsodicContext& ctx);
RateFactor lookup_pitch(const EmotionProfile& profile, WordPosition word,
                        SyllablePosition syllable, PitchEdge edge);

// JSON profile files. Each factor is a string with an explicit sign, e.g.
// "+65" or "-38".
EmotionProfile parse_profile_json(std::string_view text);
std::string profile_to_json(const EmotionProfile& profile);
EmotionProfile load_profile(const std::filesystem::path& path);
void save_profile(const EmotionProfile& profile, const std::filesystem::path& path);

std::string format_signed_percent(double percent);
RateFactor parse_signed_percent(std::string_view text);

}  // namespace emotif
