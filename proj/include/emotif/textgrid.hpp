#pragma once

// Reader for Praat TextGrid files in the long and short text formats.
// UTF-8 and UTF-16 (with BOM) input is accepted. Point tiers are skipped.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "emotif/error.hpp"

namespace emotif {

struct TextGridInterval {
  std::string label;
  double start_s = 0.0;
  double end_s = 0.0;

  friend bool operator==(const TextGridInterval&, const TextGridInterval&) = default;
};

struct IntervalTier {
  std::string name;
  std::vector<TextGridInterval> intervals;

  friend bool operator==(const IntervalTier&, const IntervalTier&) = default;
};

struct TextGrid {
  double start_s = 0.0;
  double end_s = 0.0;
  std::vector<IntervalTier> tiers;

  const IntervalTier* find_tier(std::string_view name) const;

  friend bool operator==(const TextGrid&, const TextGrid&) = default;
};

class TextGridError : public Error {
 public:
  enum class Kind { UnsupportedFormat, NonMonotoneTimes };

  TextGridError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

TextGrid parse_textgrid(std::string_view bytes);

// Short-format rendering, mainly for tests and fixtures.
std::string textgrid_to_short_text(const TextGrid& grid);

// Converts UTF-16 (BOM required) to UTF-8; UTF-8 input (with or without BOM)
// is returned without the BOM.
std::string decode_text(std::string_view bytes);

}  // namespace emotif
