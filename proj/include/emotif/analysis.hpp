#pragma once

// Derivation of rate factors from paired standard-TTS / recorded speech.
//
// Each diff is |measured - standard| / standard * 100, signed positive when
// the measured value exceeds the standard one and negative when it falls
// short. Diffs are averaged per prosodic cell into an EmotionProfile.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotif/align.hpp"
#include "emotif/pho.hpp"
#include "emotif/profiles.hpp"
#include "emotif/textgrid.hpp"

namespace emotif {

struct SegmentMeasurement {
  std::string label;
  double duration_ms = 0.0;
  std::optional<double> start_pitch_hz;
  std::optional<double> end_pitch_hz;

  bool voiced() const { return start_pitch_hz.has_value(); }

  friend bool operator==(const SegmentMeasurement&, const SegmentMeasurement&) = default;
};

struct MeasuredUtterance {
  std::vector<SegmentMeasurement> segments;
  std::vector<std::string> sentence;

  friend bool operator==(const MeasuredUtterance&, const MeasuredUtterance&) = default;
};

// Where an aligned segment sits: its cell plus the word/syllable it belongs to.
struct SegmentSlot {
  ProsodicContext context;
  std::size_t word = 0;
  std::size_t syllable = 0;

  friend bool operator==(const SegmentSlot&, const SegmentSlot&) = default;
};

struct DiffSample {
  ProsodicContext context;
  std::optional<double> duration_diff_pct;
  std::optional<double> start_pitch_diff_pct;
  std::optional<double> end_pitch_diff_pct;
};

class AnalysisError : public Error {
 public:
  enum class Kind { MissingPitch, NonPositiveValue, LabelMismatch, EmptyCorpus, MalformedPitchFile };

  AnalysisError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

double duration_diff(double standard_ms, double measured_ms);
double start_pitch_diff(std::optional<double> standard_hz, std::optional<double> measured_hz);
double end_pitch_diff(std::optional<double> standard_hz, std::optional<double> measured_hz);

// Aligned phonemes only, in document order. Pitch comes from the first and
// last pitch point of each record.
MeasuredUtterance measure_pho(const PhoDocument& doc, const AlignedUtterance& aligned);

// Parallel to measure_pho's segments.
std::vector<SegmentSlot> segment_slots(const AlignedUtterance& aligned);

struct PitchSidecarLine {
  std::string label;
  std::optional<double> start_hz;
  std::optional<double> end_hz;

  friend bool operator==(const PitchSidecarLine&, const PitchSidecarLine&) = default;
};

// `label<TAB>start_hz<TAB>end_hz`, '-' for an absent value.
std::vector<PitchSidecarLine> parse_pitch_sidecar(std::string_view text);
std::string format_pitch_sidecar(std::span<const PitchSidecarLine> lines);

// Segments from a hand-made segmentation tier. Intervals with an empty or
// pause label are dropped; the sidecar has one line per remaining interval.
MeasuredUtterance measure_recording(const IntervalTier& tier,
                                    std::span<const PitchSidecarLine> pitch,
                                    std::vector<std::string> sentence);

struct DerivationPair {
  std::string id;  // used in error messages
  MeasuredUtterance standard;
  MeasuredUtterance recorded;
  std::vector<SegmentSlot> slots;
};

// Duration samples per segment, pitch samples per syllable edge.
std::vector<DiffSample> diff_samples(const DerivationPair& pair);

// Sample counts for every cell of a profile, same layout as EmotionProfile.
struct CellCounts {
  std::array<std::array<std::array<std::size_t, 3>, 3>, 2> duration{};
  std::size_t duration_other_word = 0;
  std::array<std::array<std::array<std::size_t, 2>, 3>, 2> pitch{};
  std::array<std::size_t, 2> pitch_other_word{};
};

struct Derivation {
  EmotionProfile profile;
  CellCounts counts;
  std::vector<std::string> warnings;  // one per empty cell
};

// Arithmetic mean per cell; empty cells get factor 0 and a warning.
Derivation derive_profile(std::span<const DerivationPair> pairs, std::string name);

// Plain-text tables of factors with per-cell sample counts.
std::string derivation_report(const Derivation& derivation);

}  // namespace emotif
