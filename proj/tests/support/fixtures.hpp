#pragma once

// Generators and file helpers shared by the unit, property and acceptance
// tests.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "emotif/align.hpp"
#include "emotif/analysis.hpp"
#include "emotif/pho.hpp"
#include "emotif/profiles.hpp"

namespace emotif::testing {

using Rng = std::mt19937_64;

// Words of the sample lexicon, in a fixed order.
const std::vector<std::string>& lexicon_words();

// Arbitrary well-formed document: phonemes (voiced, unvoiced, multi-point),
// pauses, comments and blank lines. Values sit on the 0.01 grid.
PhoDocument random_document(Rng& rng);

struct SentenceFixture {
  std::vector<std::string> sentence;
  PhoDocument doc;
};

struct SentenceOptions {
  int min_words = 1;
  int max_words = 5;
  int min_duration = 60;
  int max_duration = 200;
  double min_hz = 80.0;
  double max_hz = 125.0;
  // First phoneme of every syllable carries a point at 0%, last phoneme a
  // point at 100%.
  bool syllable_edge_points = true;
  bool comments = true;
};

// A sentence of lexicon words and a matching standard document.
SentenceFixture random_sentence(Rng& rng, const SentenceOptions& options = {});

// Profile with every factor drawn uniformly from (lo, hi].
EmotionProfile random_profile(Rng& rng, double lo, double hi);

// Recorded-side measurements taken from `recorded` through a TextGrid and a
// pitch sidecar, exactly as the derive command reads them.
struct RecordingFiles {
  std::string textgrid;
  std::string pitch;
};
RecordingFiles recording_files(const PhoDocument& recorded);

DerivationPair derivation_pair(const SentenceFixture& fixture, const PhoDocument& recorded,
                               std::string id);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Writes an executable /bin/sh script.
std::filesystem::path write_script(const std::filesystem::path& path, const std::string& body);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// Directory holding the checked-in test data.
std::filesystem::path data_dir();

}  // namespace emotif::testing
