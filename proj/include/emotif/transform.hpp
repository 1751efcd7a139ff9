#pragma once

// Applies an emotion profile to a phoneme stream: every aligned phoneme's
// duration is scaled by the factor of its prosodic cell, and every syllable's
// pitch contour by its start/end edge factors.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotif/align.hpp"
#include "emotif/pho.hpp"
#include "emotif/profiles.hpp"

namespace emotif {

inline constexpr double kMinPitchHz = 30.0;
inline constexpr double kMaxPitchHz = 600.0;

class TransformError : public Error {
 public:
  enum class Kind { ContextMissing };

  TransformError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// round-half-up(duration * (1 + percent/100)), never below 1 ms.
int scale_duration(int duration_ms, RateFactor factor);

// hz * (1 + percent/100) on the 0.01 Hz grid, clamped to [30, 600].
double scale_frequency(double hz, double percent);

// `records` is one syllable in document order. Each pitch point gets the
// factor interpolated linearly in time between `start` (syllable onset) and
// `end` (syllable offset). Durations are left untouched.
void scale_pitch_contour(std::span<PhonemeRecord> records, RateFactor start, RateFactor end);

// Returns a new document; pauses, comments and symbols are preserved.
PhoDocument apply_emotion(const PhoDocument& doc, const AlignedUtterance& aligned,
                          const EmotionProfile& profile);
PhoDocument apply_emotion(const PhoDocument& doc, const AlignedUtterance& aligned,
                          const ContextMap& contexts, const EmotionProfile& profile);

// Produces the standard (unmodified) phoneme stream for a sentence, e.g. an
// espeak invocation or a fixture file.
using StandardPhoSource = std::function<PhoDocument(std::string_view text)>;

struct PipelineResult {
  PhoDocument standard;
  AlignedUtterance aligned;
  ContextMap contexts;
  PhoDocument document;
  std::vector<std::string> warnings;
};

// text -> standard .pho -> align -> classify -> apply. Nothing is persisted.
PipelineResult transform_pipeline(std::string_view text, const EmotionProfile& profile,
                                  const Lexicon& lexicon, const StandardPhoSource& source,
                                  bool allow_g2p);

}  // namespace emotif
