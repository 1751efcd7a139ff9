#include "emotif/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <optional>

#include "emotif/align.hpp"
#include "emotif/analysis.hpp"
#include "emotif/evaluation.hpp"
#include "emotif/io.hpp"
#include "emotif/lexicon.hpp"
#include "emotif/pho.hpp"
#include "emotif/profiles.hpp"
#include "emotif/synth.hpp"
#include "emotif/textgrid.hpp"
#include "emotif/transform.hpp"

namespace emotif {

namespace fs = std::filesystem;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

class ThresholdFailed : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::string lexicon;
  bool g2p_fallback = false;
  bool verbose = false;
  std::string espeak;
  std::string mbrola;
  std::string voice = "mb-id1";
  std::string voice_db;
  bool no_path_search = false;
};

struct TransformOptions {
  std::string in_pho;
  std::string text;
  std::optional<std::string> emotion;
  std::optional<std::string> profile;
  std::string out;
};

struct DeriveOptions {
  std::string manifest;
  std::string out;
  std::string report;
  std::string name = "derived";
  std::string tier;
};

struct ScoreOptions {
  std::string mode;
  std::string in;
  std::optional<double> threshold;
  std::string json;
};

struct SynthOptions {
  std::string text;
  std::optional<std::string> emotion;
  std::optional<std::string> profile;
  std::string out;
  std::string keep_pho;
};

Lexicon load_lexicon(const GlobalOptions& g) {
  return g.lexicon.empty() ? Lexicon::sample() : Lexicon::load(g.lexicon);
}

EmotionProfile select_profile(const std::optional<std::string>& emotion,
                              const std::optional<std::string>& profile, std::ostream& err) {
  if (emotion && profile) throw UsageError("give either --emotion or --profile, not both");
  if (emotion) {
    if (auto p = builtin_profile_by_name(*emotion)) return *p;
    throw UsageError("unknown emotion '" + *emotion + "' (happy, angry, sad, neutral)");
  }
  if (!profile) throw UsageError("one of --emotion or --profile is required");

  auto builtin = builtin_profile_by_name(*profile);
  std::error_code ec;
  if (fs::is_regular_file(*profile, ec)) {
    if (builtin) err << "warning: '" << *profile << "' is both a file and a built-in profile; using the file\n";
    return load_profile(*profile);
  }
  if (builtin) return *builtin;
  return load_profile(*profile);
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

std::string context_table(const PhoDocument& before, const PhoDocument& after,
                          const AlignedUtterance& aligned, const ContextMap& contexts,
                          const EmotionProfile& profile) {
  std::string table;
  char line[200];
  std::snprintf(line, sizeof line, "%-12s %-4s %-6s %-6s %-7s %-6s %7s %7s %9s\n", "word", "syl",
                "phone", "word@", "syl@", "role", "dur_in", "dur_out", "factor");
  table += line;
  for (const auto& word : aligned.words) {
    for (std::size_t s = 0; s < word.syllables.size(); ++s) {
      for (auto idx : word.syllables[s].phonemes) {
        const auto& ctx = contexts.at(idx);
        std::snprintf(line, sizeof line, "%-12s %-4zu %-6s %-6s %-7s %-6s %7d %7d %9s\n",
                      word.orthographic.c_str(), s + 1, before.phoneme_at(idx).symbol.c_str(),
                      std::string(to_string(ctx.word_position)).c_str(),
                      std::string(to_string(ctx.syllable_position)).c_str(),
                      std::string(to_string(ctx.role)).c_str(), before.phoneme_at(idx).duration_ms,
                      after.phoneme_at(idx).duration_ms,
                      format_signed_percent(lookup_duration(profile, ctx).percent).c_str());
        table += line;
      }
    }
  }
  return table;
}

int cmd_transform(const GlobalOptions& g, const TransformOptions& o, std::ostream& out,
                  std::ostream& err) {
  const auto profile = select_profile(o.emotion, o.profile, err);
  const auto lexicon = load_lexicon(g);
  const auto doc = parse_pho(read_text_file(o.in_pho));

  std::vector<std::string> warnings;
  const auto words = split_sentence(o.text);
  const auto aligned = align(doc, words, lexicon, g.g2p_fallback, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const auto contexts = classify_context(aligned);
  const auto result = apply_emotion(doc, aligned, contexts, profile);

  if (g.verbose) out << context_table(doc, result, aligned, contexts, profile);
  write_output(o.out, emit_pho(result), out);
  return kExitOk;
}

struct ManifestRow {
  std::size_t line = 0;
  fs::path standard_pho;
  fs::path textgrid;
  fs::path pitch;
  std::string sentence;
};

std::vector<ManifestRow> parse_manifest(const fs::path& path) {
  const auto text = read_text_file(path);
  const auto base = path.parent_path();
  std::vector<ManifestRow> rows;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;

    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 4) {
      throw UsageError("manifest line " + std::to_string(line_no) +
                       ": expected 'standard.pho<TAB>recording.TextGrid<TAB>pitch.tsv<TAB>sentence'");
    }
    auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };
    rows.push_back({line_no, resolve(f[0]), resolve(f[1]), resolve(f[2]), f[3]});
  }
  return rows;
}

const IntervalTier& pick_tier(const TextGrid& grid, const std::string& name, const fs::path& path) {
  if (!name.empty()) {
    if (const auto* t = grid.find_tier(name)) return *t;
    throw UsageError(path.string() + " has no interval tier named '" + name + "'");
  }
  if (grid.tiers.empty()) throw UsageError(path.string() + " has no interval tier");
  return grid.tiers.front();
}

int cmd_derive(const GlobalOptions& g, const DeriveOptions& o, std::ostream& out, std::ostream& err) {
  const auto lexicon = load_lexicon(g);
  const auto rows = parse_manifest(o.manifest);

  std::vector<DerivationPair> pairs;
  for (const auto& row : rows) {
    const std::string id = "manifest line " + std::to_string(row.line) + " (" + row.standard_pho.filename().string() + ")";
    try {
      const auto doc = parse_pho(read_text_file(row.standard_pho));
      std::vector<std::string> warnings;
      const auto words = split_sentence(row.sentence);
      const auto aligned = align(doc, words, lexicon, g.g2p_fallback, &warnings);
      for (const auto& w : warnings) err << "warning: " << id << ": " << w << "\n";

      const auto grid = parse_textgrid(read_text_file(row.textgrid));
      const auto pitch = parse_pitch_sidecar(read_text_file(row.pitch));
      DerivationPair pair;
      pair.id = id;
      pair.standard = measure_pho(doc, aligned);
      pair.recorded = measure_recording(pick_tier(grid, o.tier, row.textgrid), pitch, words);
      pair.slots = segment_slots(aligned);
      pairs.push_back(std::move(pair));
    } catch (const IoError&) {
      throw;
    } catch (const AnalysisError& e) {
      throw AnalysisError(e.kind(), id + ": " + e.what());
    } catch (const Error& e) {
      throw UsageError(id + ": " + e.what());
    }
  }

  const auto derivation = derive_profile(pairs, o.name);
  for (const auto& w : derivation.warnings) err << "warning: " << w << "\n";
  save_profile(derivation.profile, o.out);
  const auto report = derivation_report(derivation);
  const std::string report_path = o.report.empty() ? o.out + ".report.txt" : o.report;
  write_output(report_path, report, out);
  if (g.verbose) out << report;
  return kExitOk;
}

nlohmann::ordered_json matrix_json(const ConfusionMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (auto t : kAllEmotions) {
    nlohmann::ordered_json row;
    row["n"] = m.row_total(t);
    for (auto c : kAllEmotions) row[std::string(to_string(c))] = m.percent(t, c);
    rows[std::string(to_string(t))] = row;
  }
  return rows;
}

std::string threshold_lines(const ConfusionMatrix& m, const ThresholdResult& r) {
  std::string s;
  char line[128];
  for (auto e : kAllEmotions) {
    std::snprintf(line, sizeof line, "%-6s recognition %6.2f%% %s %.2f%%: %s\n",
                  std::string(to_string(e)).c_str(), m.recognition(e),
                  r.passed[static_cast<std::size_t>(e)] ? ">=" : "<", r.threshold_pct,
                  r.passed[static_cast<std::size_t>(e)] ? "pass" : "FAIL");
    s += line;
  }
  return s;
}

int cmd_score(const ScoreOptions& o, std::ostream& out) {
  const auto text = read_text_file(o.in);
  nlohmann::ordered_json summary;
  summary["mode"] = o.mode;
  bool failed = false;
  char line[160];

  if (o.mode == "perception" || o.mode == "naturalness") {
    const auto responses = parse_perception_csv(text);
    const auto report = naturalness_report(responses);
    const auto threshold = check_recognition_threshold(report.matrix, o.threshold.value_or(kDefaultRecognitionThreshold));
    out << format_confusion_table(report.matrix) << "\n" << threshold_lines(report.matrix, threshold);
    std::snprintf(line, sizeof line,
                  "overall accuracy (pooled):          %.2f%% (%zu/%zu)\n"
                  "overall accuracy (mean of emotions): %.2f%%\n",
                  report.overall_pct, report.correct, report.total, report.mean_of_emotions_pct);
    out << line;

    summary["responses"] = report.total;
    summary["matrix"] = matrix_json(report.matrix);
    nlohmann::ordered_json rec;
    for (auto e : kAllEmotions) rec[std::string(to_string(e))] = report.matrix.recognition(e);
    summary["recognition"] = rec;
    summary["overall_pooled"] = report.overall_pct;
    summary["overall_mean_of_emotions"] = report.mean_of_emotions_pct;
    summary["threshold"] = threshold.threshold_pct;
    summary["threshold_passed"] = threshold.all_passed;
    failed = o.threshold.has_value() && !threshold.all_passed;
  } else if (o.mode == "intelligibility") {
    const auto records = parse_intelligibility_csv(text);
    nlohmann::ordered_json per_record = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      std::snprintf(line, sizeof line, "%-12s words %6.2f%%  rating %d\n", r.stimulus_id.c_str(),
                    word_accuracy(r), r.clarity_rating);
      out << line;
      per_record.push_back({{"stimulus", r.stimulus_id}, {"word_accuracy", word_accuracy(r)},
                            {"rating", r.clarity_rating}});
    }
    const double accuracy = intelligibility_accuracy(records);
    const double clarity = clarity_rate(records);
    std::snprintf(line, sizeof line, "word accuracy: %.2f%%\nclarity rate:  %.2f%%\n", accuracy, clarity);
    out << line;
    summary["records"] = per_record;
    summary["word_accuracy"] = accuracy;
    summary["clarity_rate"] = clarity;
  } else {
    throw UsageError("unknown score mode '" + o.mode + "'");
  }

  if (!o.json.empty()) write_text_file(o.json, summary.dump(2) + "\n");
  if (failed) throw ThresholdFailed("recognition below threshold for at least one emotion");
  return kExitOk;
}

int cmd_syllabify(const std::vector<std::string>& inputs, std::ostream& out) {
  std::vector<std::string> words;
  for (const auto& arg : inputs) {
    std::size_t i = 0;
    while (i < arg.size()) {
      while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
      std::size_t start = i;
      while (i < arg.size() && !std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
      if (i > start) words.push_back(arg.substr(start, i - start));
    }
  }
  if (words.empty()) throw UsageError("no words to syllabify");

  std::string hyphenated, structure;
  for (const auto& w : words) {
    const auto syllables = syllabify_orthographic(w);
    if (!hyphenated.empty()) hyphenated += ' ';
    for (std::size_t s = 0; s < syllables.size(); ++s) {
      if (s) hyphenated += '-';
      hyphenated += syllables[s];
    }
    structure += std::to_string(syllables.size());
  }
  out << hyphenated << "\n" << "structure " << structure << "\n";
  return kExitOk;
}

SynthConfig synth_config(const GlobalOptions& g) {
  SynthConfig c;
  if (!g.espeak.empty()) c.espeak_path = g.espeak;
  if (!g.mbrola.empty()) c.mbrola_path = g.mbrola;
  if (!g.voice_db.empty()) c.voice_db_path = g.voice_db;
  c.voice_name = g.voice;
  c.search_path = !g.no_path_search;
  return c;
}

int cmd_synth(const GlobalOptions& g, const SynthOptions& o, std::ostream& out, std::ostream& err) {
  const auto profile = select_profile(o.emotion, o.profile, err);
  const auto lexicon = load_lexicon(g);
  const auto config = synth_config(g);

  auto result = transform_pipeline(
      o.text, profile, lexicon,
      [&](std::string_view text) { return generate_standard_pho(std::string(text), config); },
      g.g2p_fallback);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";

  if (!o.keep_pho.empty()) write_text_file(o.keep_pho, emit_pho(result.document));
  if (g.verbose) {
    out << context_table(result.standard, result.document, result.aligned, result.contexts, profile);
  }
  render_wav(result.document, config, o.out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Emotion injection for MBROLA phoneme streams", "emotif"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file");

  GlobalOptions g;
  app.add_option("--lexicon", g.lexicon, "Lexicon file (default: built-in sample lexicon)");
  app.add_flag("--g2p-fallback", g.g2p_fallback, "Use rule-based G2P for words missing from the lexicon");
  app.add_flag("-v,--verbose", g.verbose, "Print per-phoneme context tables");
  app.add_option("--espeak", g.espeak, "espeak executable");
  app.add_option("--mbrola", g.mbrola, "mbrola executable");
  app.add_option("--voice", g.voice, "espeak MBROLA voice name")->capture_default_str();
  app.add_option("--voice-db", g.voice_db, "MBROLA voice database");
  app.add_flag("--no-path-search", g.no_path_search, "Do not look up espeak/mbrola on PATH");

  TransformOptions t;
  auto* transform = app.add_subcommand("transform", "Apply an emotion profile to a .pho file");
  transform->add_option("--in", t.in_pho, "Standard .pho input")->required();
  transform->add_option("--text", t.text, "Sentence the .pho file speaks")->required();
  transform->add_option("--emotion", t.emotion, "Built-in profile: happy, angry, sad, neutral");
  transform->add_option("--profile", t.profile, "Built-in profile name or profile JSON file");
  transform->add_option("--out", t.out, "Output .pho (default: stdout)");

  DeriveOptions d;
  auto* derive = app.add_subcommand("derive", "Derive a profile from standard/recorded pairs");
  derive->add_option("--manifest", d.manifest, "pho<TAB>TextGrid<TAB>pitch<TAB>sentence lines")->required();
  derive->add_option("--out", d.out, "Profile JSON to write")->required();
  derive->add_option("--report", d.report, "Derivation report (default: <out>.report.txt)");
  derive->add_option("--name", d.name, "Profile name")->capture_default_str();
  derive->add_option("--tier", d.tier, "TextGrid tier with phoneme segments (default: first)");

  ScoreOptions s;
  auto* score = app.add_subcommand("score", "Score listening-test responses");
  score->add_option("--mode", s.mode, "perception, naturalness or intelligibility")
      ->required()
      ->check(CLI::IsMember({"perception", "naturalness", "intelligibility"}));
  score->add_option("--in", s.in, "Response CSV")->required();
  score->add_option("--check-threshold", s.threshold, "Fail unless every emotion reaches this recognition %");
  score->add_option("--json", s.json, "Write a JSON summary here");

  std::vector<std::string> syllabify_words;
  auto* syllabify = app.add_subcommand("syllabify", "Split Indonesian words into syllables");
  syllabify->add_option("words", syllabify_words, "Words or sentences")->required();

  SynthOptions y;
  auto* synth = app.add_subcommand("synth", "Text to emotional speech through espeak and mbrola");
  synth->add_option("--text", y.text, "Sentence to speak")->required();
  synth->add_option("--emotion", y.emotion, "Built-in profile: happy, angry, sad, neutral");
  synth->add_option("--profile", y.profile, "Built-in profile name or profile JSON file");
  synth->add_option("--out", y.out, "WAV file to write")->required();
  synth->add_option("--keep-pho", y.keep_pho, "Also write the transformed .pho here");

  for (auto* sub : {transform, derive, score, syllabify, synth}) sub->fallthrough();

  std::vector<const char*> argv{"emotif"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*transform) return cmd_transform(g, t, out, err);
    if (*derive) return cmd_derive(g, d, out, err);
    if (*score) return cmd_score(s, out);
    if (*syllabify) return cmd_syllabify(syllabify_words, out);
    if (*synth) return cmd_synth(g, y, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const SynthError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSynthError;
  } catch (const ThresholdFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitThresholdFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace emotif
