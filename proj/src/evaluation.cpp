#include "emotif/evaluation.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <utility>

namespace emotif {

namespace {

std::size_t idx(Emotion e) { return static_cast<std::size_t>(e); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Non-empty CSV rows, with a leading header row dropped when its first
// field matches `header_first`.
std::vector<std::pair<std::size_t, std::vector<std::string>>> csv_rows(std::string_view text,
                                                                       std::string_view header_first) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (rows.empty() && line_no == 1 && !fields.empty() && trim(fields[0]) == header_first) continue;
    rows.emplace_back(line_no, std::move(fields));
  }
  return rows;
}

EvaluationError schema(std::size_t line_no, const std::string& what) {
  return EvaluationError(EvaluationError::Kind::SchemaViolation,
                         "line " + std::to_string(line_no) + ": " + what);
}

Emotion emotion_field(const std::string& field, std::size_t line_no) {
  if (auto e = parse_emotion(trim(field))) return *e;
  throw schema(line_no, "unknown emotion '" + field + "'");
}

}  // namespace

std::size_t ConfusionMatrix::row_total(Emotion true_emotion) const {
  const auto& row = counts[idx(true_emotion)];
  return row[0] + row[1] + row[2];
}

double ConfusionMatrix::percent(Emotion true_emotion, Emotion chosen) const {
  const auto n = row_total(true_emotion);
  if (n == 0) return 0.0;
  return static_cast<double>(counts[idx(true_emotion)][idx(chosen)]) / static_cast<double>(n) * 100.0;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t n = 0;
  for (auto e : kAllEmotions) n += row_total(e);
  return n;
}

std::size_t ConfusionMatrix::correct() const {
  std::size_t n = 0;
  for (auto e : kAllEmotions) n += counts[idx(e)][idx(e)];
  return n;
}

ConfusionMatrix confusion_matrix(std::span<const PerceptionResponse> responses) {
  if (responses.empty()) throw EvaluationError(EvaluationError::Kind::EmptyInput, "no perception responses");
  ConfusionMatrix m;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : responses) {
    if (!seen.emplace(r.listener_id, r.stimulus_id).second) {
      throw EvaluationError(EvaluationError::Kind::DuplicateResponse,
                            "listener '" + r.listener_id + "' answered stimulus '" +
                                r.stimulus_id + "' more than once");
    }
    ++m.counts[idx(r.true_emotion)][idx(r.chosen_emotion)];
  }
  return m;
}

ThresholdResult check_recognition_threshold(const ConfusionMatrix& matrix, double threshold_pct) {
  ThresholdResult result;
  result.threshold_pct = threshold_pct;
  result.all_passed = true;
  for (auto e : kAllEmotions) {
    result.passed[idx(e)] = matrix.recognition(e) >= threshold_pct;
    result.all_passed = result.all_passed && result.passed[idx(e)];
  }
  return result;
}

std::vector<std::string> normalize_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else if (!std::ispunct(uc)) {
      current += static_cast<char>(std::tolower(uc));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

double word_accuracy(const IntelligibilityRecord& record) {
  if (record.reference.empty()) {
    throw EvaluationError(EvaluationError::Kind::SchemaViolation,
                          "stimulus '" + record.stimulus_id + "' has an empty reference sentence");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < record.reference.size() && i < record.transcript.size(); ++i) {
    if (record.reference[i] == record.transcript[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(record.reference.size()) * 100.0;
}

double intelligibility_accuracy(std::span<const IntelligibilityRecord> records) {
  if (records.empty()) throw EvaluationError(EvaluationError::Kind::EmptyInput, "no intelligibility records");
  double sum = 0.0;
  for (const auto& r : records) sum += word_accuracy(r);
  return sum / static_cast<double>(records.size());
}

double clarity_rate(std::span<const IntelligibilityRecord> records) {
  if (records.empty()) throw EvaluationError(EvaluationError::Kind::EmptyInput, "no intelligibility records");
  long sum = 0;
  for (const auto& r : records) {
    if (r.clarity_rating < kMinClarityRating || r.clarity_rating > kMaxClarityRating) {
      throw EvaluationError(EvaluationError::Kind::OutOfScale,
                            "stimulus '" + r.stimulus_id + "' rating " +
                                std::to_string(r.clarity_rating) + " outside 1..5");
    }
    sum += r.clarity_rating;
  }
  return static_cast<double>(sum) / static_cast<double>(records.size()) /
         static_cast<double>(kMaxClarityRating) * 100.0;
}

NaturalnessReport naturalness_report(std::span<const PerceptionResponse> responses) {
  NaturalnessReport report;
  report.matrix = confusion_matrix(responses);
  report.total = report.matrix.total();
  report.correct = report.matrix.correct();
  report.overall_pct = static_cast<double>(report.correct) / static_cast<double>(report.total) * 100.0;
  double sum = 0.0;
  int emotions = 0;
  for (auto e : kAllEmotions) {
    report.per_emotion[idx(e)] = report.matrix.recognition(e);
    if (report.matrix.row_total(e) > 0) {
      sum += report.per_emotion[idx(e)];
      ++emotions;
    }
  }
  report.mean_of_emotions_pct = sum / emotions;
  return report;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::vector<PerceptionResponse> parse_perception_csv(std::string_view text) {
  std::vector<PerceptionResponse> out;
  for (const auto& [line_no, f] : csv_rows(text, "listener_id")) {
    if (f.size() != 4) throw schema(line_no, "expected 4 fields, got " + std::to_string(f.size()));
    PerceptionResponse r{trim(f[0]), trim(f[1]), emotion_field(f[2], line_no), emotion_field(f[3], line_no)};
    if (r.listener_id.empty() || r.stimulus_id.empty()) throw schema(line_no, "empty listener or stimulus id");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IntelligibilityRecord> parse_intelligibility_csv(std::string_view text) {
  std::vector<IntelligibilityRecord> out;
  for (const auto& [line_no, f] : csv_rows(text, "stimulus_id")) {
    if (f.size() != 4) throw schema(line_no, "expected 4 fields, got " + std::to_string(f.size()));
    IntelligibilityRecord r;
    r.stimulus_id = trim(f[0]);
    const std::string rating = trim(f[1]);
    auto [end, ec] = std::from_chars(rating.data(), rating.data() + rating.size(), r.clarity_rating);
    if (ec != std::errc{} || end != rating.data() + rating.size()) {
      throw schema(line_no, "rating '" + rating + "' is not an integer");
    }
    if (r.clarity_rating < kMinClarityRating || r.clarity_rating > kMaxClarityRating) {
      throw EvaluationError(EvaluationError::Kind::OutOfScale,
                            "line " + std::to_string(line_no) + ": rating " + rating + " outside 1..5");
    }
    r.reference = normalize_words(f[2]);
    r.transcript = normalize_words(f[3]);
    if (r.reference.empty()) throw schema(line_no, "empty reference sentence");
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_confusion_table(const ConfusionMatrix& m) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %10s %10s %10s %6s\n", "Stimulus", "HAPPY", "ANGRY", "SAD", "n");
  out += line;
  for (auto t : kAllEmotions) {
    std::string name(to_string(t));
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::snprintf(line, sizeof line, "%-10s %9.2f%% %9.2f%% %9.2f%% %6zu\n", name.c_str(),
                  m.percent(t, Emotion::Happy), m.percent(t, Emotion::Angry),
                  m.percent(t, Emotion::Sad), m.row_total(t));
    out += line;
  }
  return out;
}

}  // namespace emotif
