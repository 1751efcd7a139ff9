#include "emotif/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace emotif {

namespace {

AnalysisError non_positive(const char* what, double v) {
  return AnalysisError(AnalysisError::Kind::NonPositiveValue,
                       std::string(what) + " must be positive, got " + std::to_string(v));
}

// The signed relative difference shared by the three diff formulas.
double relative_diff(double standard, double measured) {
  const double magnitude = std::fabs(measured - standard) / standard * 100.0;
  if (measured > standard) return magnitude;
  if (measured < standard) return -magnitude;
  return 0.0;
}

double pitch_diff(std::optional<double> standard_hz, std::optional<double> measured_hz,
                  const char* edge) {
  if (!standard_hz || !measured_hz) {
    throw AnalysisError(AnalysisError::Kind::MissingPitch,
                        std::string(edge) + " pitch missing on the " +
                            (!standard_hz ? "standard" : "measured") + " side");
  }
  if (*standard_hz <= 0.0) throw non_positive("standard pitch", *standard_hz);
  if (*measured_hz <= 0.0) throw non_positive("measured pitch", *measured_hz);
  return relative_diff(*standard_hz, *measured_hz);
}

std::optional<double> parse_hz(std::string_view field, std::size_t line_no) {
  if (field == "-") return std::nullopt;
  double v = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || end != field.data() + field.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw AnalysisError(AnalysisError::Kind::MalformedPitchFile,
                        "pitch file line " + std::to_string(line_no) + ": '" + std::string(field) +
                            "' is neither a positive frequency nor '-'");
  }
  return v;
}

std::string format_hz(const std::optional<double>& hz) {
  if (!hz) return "-";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, *hz);
  return std::string(buf, end);
}

// Samples of one cell. Values are sorted before summing so the mean does not
// depend on corpus order.
struct Pool {
  std::vector<double> values;

  void add(double v) { values.push_back(v); }
  double mean() const {
    if (values.empty()) return 0.0;
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    return std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  }
};

struct Pools {
  std::array<std::array<std::array<Pool, 3>, 3>, 2> duration;
  Pool duration_other_word;
  std::array<std::array<std::array<Pool, 2>, 3>, 2> pitch;
  std::array<Pool, 2> pitch_other_word;
};

std::size_t slot(WordPosition w) { return w == WordPosition::First ? 0 : 1; }

std::string cell_name(WordPosition w, SyllablePosition s, std::string_view key) {
  return std::string(to_string(w)) + " word / " + std::string(to_string(s)) + " syllable / " +
         std::string(key);
}

}  // namespace

double duration_diff(double standard_ms, double measured_ms) {
  if (standard_ms <= 0.0) throw non_positive("standard duration", standard_ms);
  if (measured_ms <= 0.0) throw non_positive("measured duration", measured_ms);
  return relative_diff(standard_ms, measured_ms);
}

double start_pitch_diff(std::optional<double> standard_hz, std::optional<double> measured_hz) {
  return pitch_diff(standard_hz, measured_hz, "start");
}

double end_pitch_diff(std::optional<double> standard_hz, std::optional<double> measured_hz) {
  return pitch_diff(standard_hz, measured_hz, "end");
}

MeasuredUtterance measure_pho(const PhoDocument& doc, const AlignedUtterance& aligned) {
  MeasuredUtterance out;
  for (const auto& word : aligned.words) {
    out.sentence.push_back(word.orthographic);
    for (const auto& syl : word.syllables) {
      for (auto idx : syl.phonemes) {
        const auto& rec = doc.phoneme_at(idx);
        SegmentMeasurement m{rec.symbol, static_cast<double>(rec.duration_ms), {}, {}};
        if (rec.voiced()) {
          m.start_pitch_hz = rec.pitch_points.front().frequency_hz;
          m.end_pitch_hz = rec.pitch_points.back().frequency_hz;
        }
        out.segments.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::vector<SegmentSlot> segment_slots(const AlignedUtterance& aligned) {
  const auto contexts = classify_context(aligned);
  std::vector<SegmentSlot> out;
  for (std::size_t w = 0; w < aligned.words.size(); ++w) {
    const auto& word = aligned.words[w];
    for (std::size_t s = 0; s < word.syllables.size(); ++s) {
      for (auto idx : word.syllables[s].phonemes) {
        out.push_back({contexts.at(idx), w, s});
      }
    }
  }
  return out;
}

std::vector<PitchSidecarLine> parse_pitch_sidecar(std::string_view text) {
  std::vector<PitchSidecarLine> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3 || fields[0].empty()) {
      throw AnalysisError(AnalysisError::Kind::MalformedPitchFile,
                          "pitch file line " + std::to_string(line_no) +
                              ": expected 'label<TAB>start_hz<TAB>end_hz'");
    }
    PitchSidecarLine entry{std::string(fields[0]), parse_hz(fields[1], line_no),
                           parse_hz(fields[2], line_no)};
    if (entry.start_hz.has_value() != entry.end_hz.has_value()) {
      throw AnalysisError(AnalysisError::Kind::MalformedPitchFile,
                          "pitch file line " + std::to_string(line_no) +
                              ": start and end pitch must be both present or both '-'");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string format_pitch_sidecar(std::span<const PitchSidecarLine> lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l.label + '\t' + format_hz(l.start_hz) + '\t' + format_hz(l.end_hz) + '\n';
  }
  return out;
}

MeasuredUtterance measure_recording(const IntervalTier& tier,
                                    std::span<const PitchSidecarLine> pitch,
                                    std::vector<std::string> sentence) {
  MeasuredUtterance out;
  out.sentence = std::move(sentence);
  std::size_t k = 0;
  for (const auto& iv : tier.intervals) {
    if (iv.label.empty() || is_pause(iv.label)) continue;
    if (k >= pitch.size()) {
      throw AnalysisError(AnalysisError::Kind::LabelMismatch,
                          "pitch file has fewer lines than labelled intervals in tier '" +
                              tier.name + "'");
    }
    const auto& p = pitch[k++];
    if (p.label != iv.label) {
      throw AnalysisError(AnalysisError::Kind::LabelMismatch,
                          "segment " + std::to_string(k) + ": TextGrid label '" + iv.label +
                              "' but pitch file label '" + p.label + "'");
    }
    // Snapped to whole microseconds.
    const double ms = std::round((iv.end_s - iv.start_s) * 1e6) / 1e3;
    out.segments.push_back({iv.label, ms, p.start_hz, p.end_hz});
  }
  if (k != pitch.size()) {
    throw AnalysisError(AnalysisError::Kind::LabelMismatch,
                        "pitch file has more lines than labelled intervals in tier '" +
                            tier.name + "'");
  }
  return out;
}

std::vector<DiffSample> diff_samples(const DerivationPair& pair) {
  const auto& std_segs = pair.standard.segments;
  const auto& rec_segs = pair.recorded.segments;
  if (std_segs.size() != rec_segs.size() || pair.slots.size() != std_segs.size()) {
    throw AnalysisError(AnalysisError::Kind::LabelMismatch,
                        pair.id + ": standard has " + std::to_string(std_segs.size()) +
                            " segments, recording has " + std::to_string(rec_segs.size()));
  }

  std::vector<DiffSample> out;
  for (std::size_t i = 0; i < std_segs.size(); ++i) {
    if (std_segs[i].label != rec_segs[i].label) {
      throw AnalysisError(AnalysisError::Kind::LabelMismatch,
                          pair.id + ": segment " + std::to_string(i + 1) + " is '" +
                              std_segs[i].label + "' in the standard but '" + rec_segs[i].label +
                              "' in the recording");
    }
    DiffSample s;
    s.context = pair.slots[i].context;
    s.duration_diff_pct = duration_diff(std_segs[i].duration_ms, rec_segs[i].duration_ms);
    out.push_back(s);
  }

  // One pitch sample per syllable: edges come from the first and last voiced
  // segment on each side.
  std::size_t i = 0;
  while (i < std_segs.size()) {
    std::size_t j = i;
    while (j < std_segs.size() && pair.slots[j].word == pair.slots[i].word &&
           pair.slots[j].syllable == pair.slots[i].syllable) {
      ++j;
    }
    auto first_voiced = [&](const std::vector<SegmentMeasurement>& segs) -> const SegmentMeasurement* {
      for (std::size_t k = i; k < j; ++k)
        if (segs[k].voiced()) return &segs[k];
      return nullptr;
    };
    auto last_voiced = [&](const std::vector<SegmentMeasurement>& segs) -> const SegmentMeasurement* {
      for (std::size_t k = j; k > i; --k)
        if (segs[k - 1].voiced()) return &segs[k - 1];
      return nullptr;
    };
    const auto* s_first = first_voiced(std_segs);
    const auto* r_first = first_voiced(rec_segs);
    const auto* s_last = last_voiced(std_segs);
    const auto* r_last = last_voiced(rec_segs);

    DiffSample s;
    s.context = pair.slots[i].context;
    s.context.role = Role::Vowel;
    if (s_first && r_first) s.start_pitch_diff_pct = start_pitch_diff(s_first->start_pitch_hz, r_first->start_pitch_hz);
    if (s_last && r_last) s.end_pitch_diff_pct = end_pitch_diff(s_last->end_pitch_hz, r_last->end_pitch_hz);
    if (s.start_pitch_diff_pct || s.end_pitch_diff_pct) out.push_back(s);
    i = j;
  }
  return out;
}

Derivation derive_profile(std::span<const DerivationPair> pairs, std::string name) {
  if (pairs.empty()) throw AnalysisError(AnalysisError::Kind::EmptyCorpus, "no utterance pairs to derive from");

  Pools pools;
  for (const auto& pair : pairs) {
    for (const auto& s : diff_samples(pair)) {
      const auto& c = s.context;
      const bool other = c.word_position == WordPosition::Other;
      const auto sp = static_cast<std::size_t>(c.syllable_position);
      if (s.duration_diff_pct) {
        auto& pool = other ? pools.duration_other_word
                           : pools.duration[slot(c.word_position)][sp][static_cast<std::size_t>(c.role)];
        pool.add(*s.duration_diff_pct);
      }
      if (s.start_pitch_diff_pct) {
        auto& pool = other ? pools.pitch_other_word[0] : pools.pitch[slot(c.word_position)][sp][0];
        pool.add(*s.start_pitch_diff_pct);
      }
      if (s.end_pitch_diff_pct) {
        auto& pool = other ? pools.pitch_other_word[1] : pools.pitch[slot(c.word_position)][sp][1];
        pool.add(*s.end_pitch_diff_pct);
      }
    }
  }

  Derivation d;
  d.profile.name = std::move(name);
  auto take = [&](const Pool& pool, RateFactor& factor, std::size_t& count, const std::string& cell) {
    factor = {pool.mean()};
    count = pool.values.size();
    if (count == 0) d.warnings.push_back("no samples for " + cell + "; factor set to 0");
  };

  for (auto w : {WordPosition::First, WordPosition::Last}) {
    for (auto s : kAllSyllablePositions) {
      const auto si = static_cast<std::size_t>(s);
      for (auto r : kAllRoles) {
        const auto ri = static_cast<std::size_t>(r);
        take(pools.duration[slot(w)][si][ri], d.profile.duration_cell(w, s, r),
             d.counts.duration[slot(w)][si][ri], cell_name(w, s, to_string(r)) + " duration");
      }
      for (auto e : {PitchEdge::Start, PitchEdge::End}) {
        const auto ei = e == PitchEdge::Start ? 0u : 1u;
        take(pools.pitch[slot(w)][si][ei], d.profile.pitch_cell(w, s, e), d.counts.pitch[slot(w)][si][ei],
             cell_name(w, s, to_string(e)) + " pitch");
      }
    }
  }
  take(pools.duration_other_word, d.profile.duration_other_word, d.counts.duration_other_word,
       "other word duration");
  take(pools.pitch_other_word[0], d.profile.pitch_other_word.start, d.counts.pitch_other_word[0],
       "other word start pitch");
  take(pools.pitch_other_word[1], d.profile.pitch_other_word.end, d.counts.pitch_other_word[1],
       "other word end pitch");
  return d;
}

std::string derivation_report(const Derivation& d) {
  const auto& p = d.profile;
  std::string out;
  char line[256];
  auto cell = [](const RateFactor& f, std::size_t n) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%+.2f%% (n=%zu)", f.percent, n);
    return std::string(buf);
  };
  const std::array<std::pair<WordPosition, const char*>, 2> words = {
      {{WordPosition::First, "First word"}, {WordPosition::Last, "Last word"}}};
  const std::array<const char*, 3> syllables = {"First", "Middle", "Last"};

  out += "Profile: " + p.name + "\n\nDuration\n";
  std::snprintf(line, sizeof line, "%-12s %-9s %-20s %-20s %-20s\n", "Word", "Syllable",
                "1st consonant", "2nd consonant", "Vowel");
  out += line;
  for (const auto& [w, label] : words) {
    for (std::size_t s = 0; s < 3; ++s) {
      const auto sp = kAllSyllablePositions[s];
      const auto& counts = d.counts.duration[slot(w)][s];
      std::snprintf(line, sizeof line, "%-12s %-9s %-20s %-20s %-20s\n", s == 0 ? label : "",
                    syllables[s],
                    cell(p.duration_cell(w, sp, Role::Consonant1), counts[0]).c_str(),
                    cell(p.duration_cell(w, sp, Role::Consonant2), counts[2]).c_str(),
                    cell(p.duration_cell(w, sp, Role::Vowel), counts[1]).c_str());
      out += line;
    }
  }
  std::snprintf(line, sizeof line, "%-12s %-9s %s\n", "Other word", "",
                cell(p.duration_other_word, d.counts.duration_other_word).c_str());
  out += line;

  out += "\nPitch\n";
  std::snprintf(line, sizeof line, "%-12s %-9s %-20s %-20s\n", "Word", "Syllable", "Start", "End");
  out += line;
  for (const auto& [w, label] : words) {
    for (std::size_t s = 0; s < 3; ++s) {
      const auto sp = kAllSyllablePositions[s];
      const auto& counts = d.counts.pitch[slot(w)][s];
      std::snprintf(line, sizeof line, "%-12s %-9s %-20s %-20s\n", s == 0 ? label : "",
                    syllables[s], cell(p.pitch_cell(w, sp, PitchEdge::Start), counts[0]).c_str(),
                    cell(p.pitch_cell(w, sp, PitchEdge::End), counts[1]).c_str());
      out += line;
    }
  }
  std::snprintf(line, sizeof line, "%-12s %-9s %-20s %-20s\n", "Other word", "",
                cell(p.pitch_other_word.start, d.counts.pitch_other_word[0]).c_str(),
                cell(p.pitch_other_word.end, d.counts.pitch_other_word[1]).c_str());
  out += line;

  if (!d.warnings.empty()) {
    out += "\nWarnings\n";
    for (const auto& w : d.warnings) out += "  " + w + "\n";
  }
  return out;
}

}  // namespace emotif
