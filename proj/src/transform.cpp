#include "emotif/transform.hpp"

#include <algorithm>
#include <cmath>

namespace emotif {

int scale_duration(int duration_ms, RateFactor factor) {
  // duration * (100 + percent) is exact for integer percents, so the half-up
  // decision is not disturbed by a multiplier like 0.62.
  const double scaled_x100 = static_cast<double>(duration_ms) * (100.0 + factor.percent);
  const double rounded = std::floor((scaled_x100 + 50.0) / 100.0);
  return static_cast<int>(std::max(1.0, rounded));
}

double scale_frequency(double hz, double percent) {
  const double scaled = round_to_hundredths(hz * (100.0 + percent) / 100.0);
  return std::clamp(scaled, kMinPitchHz, kMaxPitchHz);
}

void scale_pitch_contour(std::span<PhonemeRecord> records, RateFactor start, RateFactor end) {
  double total = 0.0;
  for (const auto& r : records) total += r.duration_ms;
  if (total <= 0.0) return;

  double offset = 0.0;
  for (auto& record : records) {
    for (auto& point : record.pitch_points) {
      const double t = offset + point.position_percent / 100.0 * record.duration_ms;
      const double r = std::clamp(t / total, 0.0, 1.0);
      const double percent = (1.0 - r) * start.percent + r * end.percent;
      // A zero factor leaves in-range input alone, including off-grid values.
      const bool in_range = point.frequency_hz >= kMinPitchHz && point.frequency_hz <= kMaxPitchHz;
      if (percent != 0.0 || !in_range) point.frequency_hz = scale_frequency(point.frequency_hz, percent);
    }
    offset += record.duration_ms;
  }
}

PhoDocument apply_emotion(const PhoDocument& doc, const AlignedUtterance& aligned,
                          const EmotionProfile& profile) {
  return apply_emotion(doc, aligned, classify_context(aligned), profile);
}

PhoDocument apply_emotion(const PhoDocument& doc, const AlignedUtterance& aligned,
                          const ContextMap& contexts, const EmotionProfile& profile) {
  PhoDocument out = doc;
  const auto n_words = aligned.words.size();
  for (std::size_t w = 0; w < n_words; ++w) {
    const auto& word = aligned.words[w];
    const auto wp = word_position(w, n_words);
    for (std::size_t s = 0; s < word.syllables.size(); ++s) {
      const auto& syl = word.syllables[s];
      const auto sp = syllable_position(s, word.syllables.size());

      // Contour positions are measured on the input timeline.
      std::vector<PhonemeRecord> slice;
      slice.reserve(syl.phonemes.size());
      for (auto idx : syl.phonemes) slice.push_back(doc.phoneme_at(idx));
      scale_pitch_contour(slice, lookup_pitch(profile, wp, sp, PitchEdge::Start),
                          lookup_pitch(profile, wp, sp, PitchEdge::End));

      for (std::size_t p = 0; p < syl.phonemes.size(); ++p) {
        const auto idx = syl.phonemes[p];
        auto ctx = contexts.find(idx);
        if (ctx == contexts.end()) {
          throw TransformError(TransformError::Kind::ContextMissing,
                               "no prosodic context for phoneme at line " +
                                   std::to_string(idx + 1) + " of word '" +
                                   word.orthographic + "'");
        }
        auto& target = out.phoneme_at(idx);
        target.pitch_points = std::move(slice[p].pitch_points);
        target.duration_ms = scale_duration(target.duration_ms, lookup_duration(profile, ctx->second));
      }
    }
  }
  return out;
}

PipelineResult transform_pipeline(std::string_view text, const EmotionProfile& profile,
                                  const Lexicon& lexicon, const StandardPhoSource& source,
                                  bool allow_g2p) {
  PipelineResult result;
  const auto words = split_sentence(text);
  if (words.empty()) return result;

  result.standard = source(text);
  result.aligned = align(result.standard, words, lexicon, allow_g2p, &result.warnings);
  result.contexts = classify_context(result.aligned);
  result.document = apply_emotion(result.standard, result.aligned, result.contexts, profile);
  return result;
}

}  // namespace emotif
