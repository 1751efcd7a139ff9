#include "emotif/pho.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace emotif {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

long parse_integer_field(std::string_view token, std::size_t line) {
  long value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw PhoParseError(PhoParseError::Kind::NonNumericField, line,
                        "expected an integer duration, got " + quote(token));
  }
  return value;
}

double parse_real_field(std::string_view token, std::size_t line) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(value)) {
    throw PhoParseError(PhoParseError::Kind::NonNumericField, line,
                        "expected a number, got " + quote(token));
  }
  return value;
}

PhonemeRecord parse_phoneme_line(std::string_view line, std::size_t line_no) {
  const auto fields = split_fields(line);
  if (fields.size() < 2) {
    throw PhoParseError(PhoParseError::Kind::MalformedLine, line_no,
                        "expected 'symbol duration', got " + quote(line));
  }
  if ((fields.size() - 2) % 2 != 0) {
    throw PhoParseError(PhoParseError::Kind::MalformedLine, line_no,
                        "unpaired pitch value in " + quote(line));
  }

  PhonemeRecord record;
  record.symbol = std::string(fields[0]);

  const long duration = parse_integer_field(fields[1], line_no);
  if (duration < 1) {
    throw PhoParseError(PhoParseError::Kind::NonPositiveDuration, line_no,
                        "duration must be at least 1 ms, got " + quote(fields[1]));
  }
  record.duration_ms = static_cast<int>(duration);

  for (std::size_t i = 2; i < fields.size(); i += 2) {
    PitchPoint point{parse_real_field(fields[i], line_no),
                     parse_real_field(fields[i + 1], line_no)};
    if (point.position_percent < 0.0 || point.position_percent > 100.0) {
      throw PhoParseError(PhoParseError::Kind::PositionOutOfRange, line_no,
                          "pitch position " + quote(fields[i]) + " outside [0,100]");
    }
    if (point.frequency_hz <= 0.0) {
      throw PhoParseError(PhoParseError::Kind::NonPositiveFrequency, line_no,
                          "pitch frequency must be positive, got " + quote(fields[i + 1]));
    }
    if (!record.pitch_points.empty() &&
        point.position_percent < record.pitch_points.back().position_percent) {
      throw PhoParseError(PhoParseError::Kind::MalformedLine, line_no,
                          "pitch positions must be non-decreasing in " + quote(line));
    }
    record.pitch_points.push_back(point);
  }
  return record;
}

}  // namespace

PhoParseError::PhoParseError(Kind kind, std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

std::vector<std::size_t> PhoDocument::phoneme_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (std::holds_alternative<PhonemeRecord>(items[i])) out.push_back(i);
  }
  return out;
}

const PhonemeRecord& PhoDocument::phoneme_at(std::size_t item_index) const {
  return std::get<PhonemeRecord>(items.at(item_index));
}

PhonemeRecord& PhoDocument::phoneme_at(std::size_t item_index) {
  return std::get<PhonemeRecord>(items.at(item_index));
}

long PhoDocument::total_duration_ms() const {
  long total = 0;
  for (const auto& item : items) {
    if (const auto* rec = std::get_if<PhonemeRecord>(&item)) total += rec->duration_ms;
  }
  return total;
}

PhoDocument parse_pho(std::string_view text) {
  PhoDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) {
      doc.items.emplace_back(PhoBlank{});
    } else if (line[first] == ';') {
      doc.items.emplace_back(PhoComment{std::string(line)});
    } else {
      doc.items.emplace_back(parse_phoneme_line(line, line_no));
    }
  }
  return doc;
}

double round_to_hundredths(double value) { return std::round(value * 100.0) / 100.0; }

std::string format_decimal(double value) {
  char buf[64];
  const double rounded = round_to_hundredths(value);
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, rounded, std::chars_format::fixed, 2);
  std::string out(buf, end);
  while (!out.empty() && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  if (out == "-0") out = "0";
  return out;
}

std::string format_phoneme_line(const PhonemeRecord& record) {
  std::string line = record.symbol + ' ' + std::to_string(record.duration_ms);
  for (const auto& p : record.pitch_points) {
    line += ' ';
    line += format_decimal(p.position_percent);
    line += ' ';
    line += format_decimal(p.frequency_hz);
  }
  return line;
}

std::string emit_pho(const PhoDocument& doc) {
  std::string out;
  for (const auto& item : doc.items) {
    if (const auto* rec = std::get_if<PhonemeRecord>(&item)) {
      out += format_phoneme_line(*rec);
    } else if (const auto* comment = std::get_if<PhoComment>(&item)) {
      out += comment->text;
    }
    out += '\n';
  }
  return out;
}

}  // namespace emotif
