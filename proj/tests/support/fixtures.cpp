#include "fixtures.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emotif/lexicon.hpp"

#ifndef EMOTIF_TEST_DATA_DIR
#error "EMOTIF_TEST_DATA_DIR must be defined"
#endif

namespace emotif::testing {

namespace fs = std::filesystem;

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double grid_value(Rng& rng, double lo, double hi) {
  const auto a = static_cast<long>(std::ceil(lo * 100.0));
  const auto b = static_cast<long>(std::floor(hi * 100.0));
  return static_cast<double>(std::uniform_int_distribution<long>(a, b)(rng)) / 100.0;
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

const char* kSymbols[] = {"a", "i", "u", "e", "o", "@", "p", "b", "t", "d", "k", "g", "s", "h",
                          "m", "n", "N", "J", "l", "r", "tS", "dZ", "aI", "aU", "_"};

std::string random_comment(Rng& rng) {
  static const char* kWords[] = {"aku", "suka", "sekali", "speed", "pitch", "100", "%", "x=1"};
  std::string text = coin(rng, 0.2) ? "  ;" : ";";
  const int n = uniform_int(rng, 0, 4);
  for (int i = 0; i < n; ++i) text += std::string(" ") + kWords[uniform_int(rng, 0, 7)];
  return text;
}

std::vector<PitchPoint> random_points(Rng& rng, int count, double min_hz, double max_hz) {
  std::vector<double> positions;
  for (int i = 0; i < count; ++i) positions.push_back(grid_value(rng, 0.0, 100.0));
  std::sort(positions.begin(), positions.end());
  std::vector<PitchPoint> points;
  for (double pos : positions) points.push_back({pos, grid_value(rng, min_hz, max_hz)});
  return points;
}

}  // namespace

const std::vector<std::string>& lexicon_words() {
  static const std::vector<std::string> words = {
      "aku",   "suka",  "sekali", "senior", "amat",    "cantik", "kamu", "diam",   "saja",
      "pergi", "kalian", "berdua", "hilang", "hadiah", "itu",    "lupakan", "anak", "baik",
      "banyak", "dengan", "makan", "malam", "mau",    "pantai", "rumah", "selamat", "tidak"};
  return words;
}

PhoDocument random_document(Rng& rng) {
  PhoDocument doc;
  const int n = uniform_int(rng, 0, 40);
  for (int i = 0; i < n; ++i) {
    const int kind = uniform_int(rng, 0, 9);
    if (kind == 0) {
      doc.items.emplace_back(PhoComment{random_comment(rng)});
    } else if (kind == 1) {
      doc.items.emplace_back(PhoBlank{});
    } else {
      PhonemeRecord rec;
      rec.symbol = kSymbols[uniform_int(rng, 0, std::size(kSymbols) - 1)];
      rec.duration_ms = uniform_int(rng, 1, 500);
      const int points = coin(rng, 0.35) ? 0 : uniform_int(rng, 1, 6);
      rec.pitch_points = random_points(rng, points, 40.0, 450.0);
      doc.items.emplace_back(std::move(rec));
    }
  }
  return doc;
}

SentenceFixture random_sentence(Rng& rng, const SentenceOptions& options) {
  const auto& words = lexicon_words();
  const auto& lexicon = Lexicon::sample();
  SentenceFixture fx;
  const int n = uniform_int(rng, options.min_words, options.max_words);

  auto pause = [&] { fx.doc.items.emplace_back(PhonemeRecord{"_", uniform_int(rng, 20, 300), {}}); };
  if (options.comments && coin(rng, 0.3)) fx.doc.items.emplace_back(PhoComment{"; standard output"});
  pause();
  for (int w = 0; w < n; ++w) {
    const auto& word = words[uniform_int(rng, 0, static_cast<int>(words.size()) - 1)];
    fx.sentence.push_back(word);
    const auto* entry = lexicon.find(word);
    if (!entry) throw std::logic_error("fixture word missing from lexicon: " + word);

    for (const auto& syl : entry->syllables) {
      for (std::size_t p = 0; p < syl.phonemes.size(); ++p) {
        PhonemeRecord rec{syl.phonemes[p], uniform_int(rng, options.min_duration, options.max_duration), {}};
        const bool first = p == 0;
        const bool last = p + 1 == syl.phonemes.size();
        const bool vowel = p == syl.nucleus_index;
        const bool edge = options.syllable_edge_points && (first || last);
        if (edge || vowel || coin(rng, 0.3)) {
          rec.pitch_points = random_points(rng, uniform_int(rng, 1, 3), options.min_hz, options.max_hz);
        }
        if (options.syllable_edge_points) {
          if (first) rec.pitch_points.insert(rec.pitch_points.begin(), {0.0, grid_value(rng, options.min_hz, options.max_hz)});
          if (last) rec.pitch_points.push_back({100.0, grid_value(rng, options.min_hz, options.max_hz)});
        }
        fx.doc.items.emplace_back(std::move(rec));
      }
    }
    if (w + 1 == n || coin(rng, 0.4)) pause();
    if (options.comments && coin(rng, 0.1)) fx.doc.items.emplace_back(PhoBlank{});
  }
  return fx;
}

EmotionProfile random_profile(Rng& rng, double lo, double hi) {
  // (lo, hi]: draw from [lo, hi) and reflect.
  std::uniform_real_distribution<double> dist(lo, hi);
  auto draw = [&] { return RateFactor{hi - (dist(rng) - lo)}; };
  EmotionProfile p;
  p.name = "random";
  for (auto& block : p.duration)
    for (auto& row : block)
      for (auto& f : row) f = draw();
  p.duration_other_word = draw();
  for (auto& block : p.pitch)
    for (auto& pair : block) pair = {draw(), draw()};
  p.pitch_other_word = {draw(), draw()};
  return p;
}

RecordingFiles recording_files(const PhoDocument& recorded) {
  // Long TextGrid format, one interval per phoneme including pauses.
  std::vector<std::tuple<std::string, double, double>> intervals;
  std::string pitch;
  double t = 0.0;
  for (const auto& item : recorded.items) {
    const auto* rec = std::get_if<PhonemeRecord>(&item);
    if (!rec) continue;
    const double end = t + rec->duration_ms / 1000.0;
    intervals.emplace_back(rec->symbol, t, end);
    t = end;
    if (rec->symbol == "_") continue;
    pitch += rec->symbol + "\t";
    if (rec->voiced()) {
      pitch += format_decimal(rec->pitch_points.front().frequency_hz) + "\t" +
               format_decimal(rec->pitch_points.back().frequency_hz) + "\n";
    } else {
      pitch += "-\t-\n";
    }
  }

  std::ostringstream tg;
  tg.precision(17);
  tg << "File type = \"ooTextFile\"\nObject class = \"TextGrid\"\n\n";
  tg << "xmin = 0 \nxmax = " << t << " \ntiers? <exists> \nsize = 1 \nitem []: \n";
  tg << "    item [1]:\n        class = \"IntervalTier\" \n        name = \"phones\" \n";
  tg << "        xmin = 0 \n        xmax = " << t << " \n";
  tg << "        intervals: size = " << intervals.size() << " \n";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& [label, a, b] = intervals[i];
    tg << "        intervals [" << i + 1 << "]:\n";
    tg << "            xmin = " << a << " \n            xmax = " << b << " \n";
    tg << "            text = \"" << (label == "_" ? "" : label) << "\" \n";
  }
  return {tg.str(), pitch};
}

DerivationPair derivation_pair(const SentenceFixture& fixture, const PhoDocument& recorded,
                               std::string id) {
  const auto aligned = align(fixture.doc, fixture.sentence, Lexicon::sample(), false, nullptr);
  const auto files = recording_files(recorded);
  const auto grid = parse_textgrid(files.textgrid);
  DerivationPair pair;
  pair.id = std::move(id);
  pair.standard = measure_pho(fixture.doc, aligned);
  pair.recorded = measure_recording(grid.tiers.at(0), parse_pitch_sidecar(files.pitch), fixture.sentence);
  pair.slots = segment_slots(aligned);
  return pair;
}

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("emotif-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path write_script(const fs::path& path, const std::string& body) {
  write_file(path, "#!/bin/sh\n" + body);
  fs::permissions(path, fs::perms::owner_all | fs::perms::group_read | fs::perms::group_exec);
  return path;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

fs::path data_dir() { return EMOTIF_TEST_DATA_DIR; }

}  // namespace emotif::testing
