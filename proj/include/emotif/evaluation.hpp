#pragma once

// Scoring of listening tests: emotion perception (confusion matrix and
// recognition threshold), intelligibility transcripts and clarity ratings.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotif/error.hpp"
#include "emotif/prosody.hpp"

namespace emotif {

struct PerceptionResponse {
  std::string listener_id;
  std::string stimulus_id;
  Emotion true_emotion = Emotion::Happy;
  Emotion chosen_emotion = Emotion::Happy;
};

struct ConfusionMatrix {
  // counts[true][chosen], indexed by Emotion.
  std::array<std::array<std::size_t, 3>, 3> counts{};

  std::size_t row_total(Emotion true_emotion) const;
  // Share of `chosen` among responses to `true_emotion` stimuli; 0 for an empty row.
  double percent(Emotion true_emotion, Emotion chosen) const;
  double recognition(Emotion e) const { return percent(e, e); }
  std::size_t total() const;
  std::size_t correct() const;
};

struct IntelligibilityRecord {
  std::string stimulus_id;
  int clarity_rating = 0;  // 1 (very poor) .. 5 (very clear)
  std::vector<std::string> reference;
  std::vector<std::string> transcript;
};

class EvaluationError : public Error {
 public:
  enum class Kind { EmptyInput, OutOfScale, SchemaViolation, DuplicateResponse };

  EvaluationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr double kDefaultRecognitionThreshold = 60.0;
inline constexpr int kMinClarityRating = 1;
inline constexpr int kMaxClarityRating = 5;

ConfusionMatrix confusion_matrix(std::span<const PerceptionResponse> responses);

struct ThresholdResult {
  double threshold_pct = kDefaultRecognitionThreshold;
  std::array<bool, 3> passed{};  // indexed by Emotion
  bool all_passed = false;
};

// An emotion passes when its recognition rate is at least the threshold.
ThresholdResult check_recognition_threshold(const ConfusionMatrix& matrix,
                                            double threshold_pct = kDefaultRecognitionThreshold);

// Lowercase, punctuation stripped, split on whitespace.
std::vector<std::string> normalize_words(std::string_view text);

// Position-aligned exact word matches over reference length, in percent.
double word_accuracy(const IntelligibilityRecord& record);
// Mean of per-record word accuracy.
double intelligibility_accuracy(std::span<const IntelligibilityRecord> records);
// mean(rating) / 5 * 100.
double clarity_rate(std::span<const IntelligibilityRecord> records);

struct NaturalnessReport {
  ConfusionMatrix matrix;
  std::size_t total = 0;
  std::size_t correct = 0;
  double overall_pct = 0.0;             // correct / total
  std::array<double, 3> per_emotion{};  // recognition per Emotion
  double mean_of_emotions_pct = 0.0;    // unweighted mean over emotions with responses
};

NaturalnessReport naturalness_report(std::span<const PerceptionResponse> responses);

// `listener_id,stimulus_id,true_emotion,chosen_emotion`; optional header row.
std::vector<PerceptionResponse> parse_perception_csv(std::string_view text);
// `stimulus_id,rating,"reference","transcript"`; optional header row.
std::vector<IntelligibilityRecord> parse_intelligibility_csv(std::string_view text);

// Splits one CSV line; double quotes may wrap fields and "" escapes a quote.
std::vector<std::string> split_csv_line(std::string_view line);

// Plain-text layout: rows are the intended emotion, columns the listeners' choice.
std::string format_confusion_table(const ConfusionMatrix& matrix);

}  // namespace emotif
