#pragma once

// In-memory model of MBROLA .pho phoneme streams.
//
// A .pho line is `symbol duration (position hz)*`, where position is a
// percentage of the phoneme's duration. Lines starting with ';' are comments.
// Comments and blank lines are kept verbatim so a transformed file diffs
// cleanly against its input.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "emotif/error.hpp"

namespace emotif {

struct PitchPoint {
  double position_percent = 0.0;
  double frequency_hz = 0.0;

  friend bool operator==(const PitchPoint&, const PitchPoint&) = default;
};

struct PhonemeRecord {
  std::string symbol;
  int duration_ms = 1;
  std::vector<PitchPoint> pitch_points;  // empty for unvoiced / silent segments

  bool voiced() const { return !pitch_points.empty(); }

  friend bool operator==(const PhonemeRecord&, const PhonemeRecord&) = default;
};

struct PhoComment {
  std::string text;  // whole line, including the leading ';'

  friend bool operator==(const PhoComment&, const PhoComment&) = default;
};

struct PhoBlank {
  friend bool operator==(const PhoBlank&, const PhoBlank&) = default;
};

using PhoItem = std::variant<PhonemeRecord, PhoComment, PhoBlank>;

struct PhoDocument {
  std::vector<PhoItem> items;

  // Item indices holding phonemes, in document order.
  std::vector<std::size_t> phoneme_indices() const;

  const PhonemeRecord& phoneme_at(std::size_t item_index) const;
  PhonemeRecord& phoneme_at(std::size_t item_index);

  long total_duration_ms() const;

  friend bool operator==(const PhoDocument&, const PhoDocument&) = default;
};

class PhoParseError : public Error {
 public:
  enum class Kind {
    MalformedLine,
    NonNumericField,
    NonPositiveDuration,
    PositionOutOfRange,
    NonPositiveFrequency,
  };

  PhoParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  // 1-based line number in the parsed text.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// Accepts LF or CRLF line endings.
PhoDocument parse_pho(std::string_view text);

// Canonical rendering: one LF-terminated line per item.
std::string emit_pho(const PhoDocument& doc);

std::string format_phoneme_line(const PhonemeRecord& record);

// Renders a real with at most two decimals and no trailing zeros
// ("120", "278.4", "99.25"). Locale independent.
std::string format_decimal(double value);

// Rounds to the 0.01 grid that format_decimal prints, so a value stored in a
// document survives emit/parse unchanged.
double round_to_hundredths(double value);

}  // namespace emotif
