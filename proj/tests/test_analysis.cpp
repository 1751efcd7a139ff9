#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "emotif/analysis.hpp"
#include "emotif/transform.hpp"
#include "support/fixtures.hpp"

using namespace emotif;

namespace {

using Strings = std::vector<std::string>;

// Signed difference over the standard, times 100.
double oracle_diff(double s, double m) { return (m - s) / s * 100.0; }

const char* kKamu = "_ 50\nk 80\na 90 0 120 100 118\nm 60\nu 100 0 118 100 110\n_ 40\n";

}  // namespace

TEST_CASE("diff formulas") {
  CHECK(duration_diff(100, 165) == 65);
  CHECK(duration_diff(100, 100) == 0);
  CHECK(duration_diff(200, 150) == -25);
  CHECK(start_pitch_diff(120, 278.4) == doctest::Approx(132));
  CHECK(start_pitch_diff(100, 100) == 0);
  CHECK(end_pitch_diff(200, 100) == -50);
  CHECK_THROWS_AS(duration_diff(0, 10), AnalysisError);
  try {
    start_pitch_diff(std::nullopt, 100);
    FAIL("expected MissingPitch");
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == AnalysisError::Kind::MissingPitch);
  }
}

TEST_CASE("diff sign and scale properties") {
  testing::Rng rng(31);
  std::uniform_real_distribution<double> v(1.0, 1000.0), k(0.01, 100.0);
  for (int i = 0; i < 5000; ++i) {
    const double s = v(rng), m = v(rng);
    const double d = duration_diff(s, m);
    CHECK(d == oracle_diff(s, m));
    CHECK((d > 0) == (m > s));
    CHECK((d < 0) == (m < s));
    const double scale = k(rng);
    CHECK(duration_diff(scale * s, scale * m) == doctest::Approx(d).epsilon(1e-9));
    CHECK(start_pitch_diff(s, m) == d);
    CHECK(end_pitch_diff(s, m) == d);
  }
}

TEST_CASE("measuring a standard document") {
  const auto doc = parse_pho("a 150 10 120 90 200\ns 90\n_ 100\n");
  Lexicon lex;
  lex.insert({"as", {{{"a", "s"}, 0}}});
  const auto aligned = align(doc, Strings{"as"}, lex, false, nullptr);
  const auto m = measure_pho(doc, aligned);
  REQUIRE(m.segments.size() == 2);
  CHECK(m.segments[0] == SegmentMeasurement{"a", 150, 120, 200});
  CHECK(m.segments[1] == SegmentMeasurement{"s", 90, std::nullopt, std::nullopt});
  CHECK(m.sentence == Strings{"as"});
}

TEST_CASE("pitch sidecar") {
  const auto lines = parse_pitch_sidecar("k\t-\t-\r\na\t120.5\t118\n\n# note\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == PitchSidecarLine{"k", std::nullopt, std::nullopt});
  CHECK(lines[1] == PitchSidecarLine{"a", 120.5, 118});
  CHECK(parse_pitch_sidecar(format_pitch_sidecar(lines)) == lines);
  CHECK_THROWS_AS(parse_pitch_sidecar("a\t120\n"), AnalysisError);
  CHECK_THROWS_AS(parse_pitch_sidecar("a\t120\t-\n"), AnalysisError);
  CHECK_THROWS_AS(parse_pitch_sidecar("a\t0\t100\n"), AnalysisError);
}

TEST_CASE("measuring a recording") {
  IntervalTier tier{"phones", {{"", 0, 0.05}, {"k", 0.05, 0.13}, {"a", 0.13, 0.25}, {"_", 0.25, 0.3}}};
  const std::vector<PitchSidecarLine> pitch{{"k", {}, {}}, {"a", 200, 180}};
  const auto m = measure_recording(tier, pitch, {"ka"});
  REQUIRE(m.segments.size() == 2);
  CHECK(m.segments[0].duration_ms == doctest::Approx(80));
  CHECK(m.segments[1].start_pitch_hz == 200);

  const std::vector<PitchSidecarLine> wrong{{"k", {}, {}}, {"o", 200, 180}};
  try {
    measure_recording(tier, wrong, {"ka"});
    FAIL("expected LabelMismatch");
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == AnalysisError::Kind::LabelMismatch);
  }
  const std::vector<PitchSidecarLine> short_pitch{{"k", {}, {}}};
  CHECK_THROWS_AS(measure_recording(tier, short_pitch, {"ka"}), AnalysisError);
}

TEST_CASE("identical sides derive the zero profile") {
  const auto doc = parse_pho(kKamu);
  testing::SentenceFixture fx{{"kamu"}, doc};
  const auto pair = testing::derivation_pair(fx, doc, "same");
  const auto d = derive_profile(std::vector{pair}, "zero");
  auto expected = neutral_profile();
  expected.name = "zero";
  CHECK(d.profile == expected);
  CHECK(d.counts.duration[1][0][0] == 1);
  CHECK(d.counts.pitch[1][2][1] == 1);
  CHECK_FALSE(d.warnings.empty());
}

TEST_CASE("cell means") {
  const auto doc = parse_pho(kKamu);
  const auto aligned = align(doc, Strings{"kamu"}, Lexicon::sample(), false, nullptr);
  auto a = doc, b = doc;
  a.phoneme_at(1).duration_ms = 88;   // k +10
  b.phoneme_at(1).duration_ms = 104;  // k +30
  std::vector<DerivationPair> pairs;
  for (const auto* rec : {&a, &b}) {
    pairs.push_back({"p", measure_pho(doc, aligned), measure_pho(*rec, aligned), segment_slots(aligned)});
  }
  const auto d = derive_profile(pairs, "m");
  CHECK(d.profile.duration_cell(WordPosition::Last, SyllablePosition::First, Role::Consonant1).percent ==
        doctest::Approx(20));
  CHECK(d.counts.duration[1][0][0] == 2);
}

TEST_CASE("pitch edges use the first and last voiced segments") {
  // Syllable "ka": k voiced only on the recorded side, so the edge comes
  // from a on the standard side and from k on the recorded side.
  DerivationPair pair;
  pair.id = "edges";
  pair.standard.segments = {{"k", 80, {}, {}}, {"a", 90, 100, 120}};
  pair.recorded.segments = {{"k", 80, 150, 150}, {"a", 90, 110, 180}};
  const ProsodicContext c1{WordPosition::Last, SyllablePosition::Last, Role::Consonant1};
  const ProsodicContext v{WordPosition::Last, SyllablePosition::Last, Role::Vowel};
  pair.slots = {{c1, 0, 0}, {v, 0, 0}};
  const auto samples = diff_samples(pair);
  REQUIRE(samples.size() == 3);
  CHECK(*samples[2].start_pitch_diff_pct == 50);
  CHECK(*samples[2].end_pitch_diff_pct == 50);
}

TEST_CASE("derivation errors") {
  CHECK_THROWS_AS(derive_profile(std::vector<DerivationPair>{}, "x"), AnalysisError);
  const auto doc = parse_pho(kKamu);
  const auto aligned = align(doc, Strings{"kamu"}, Lexicon::sample(), false, nullptr);
  DerivationPair pair{"pair-7", measure_pho(doc, aligned), measure_pho(doc, aligned), segment_slots(aligned)};
  pair.recorded.segments[2].label = "o";
  try {
    derive_profile(std::vector{pair}, "x");
    FAIL("expected LabelMismatch");
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == AnalysisError::Kind::LabelMismatch);
    CHECK(std::string(e.what()).find("pair-7") != std::string::npos);
  }
  pair.recorded.segments.pop_back();
  CHECK_THROWS_AS(derive_profile(std::vector{pair}, "x"), AnalysisError);
}

TEST_CASE("derivation ignores corpus order") {
  testing::Rng rng(37);
  std::vector<DerivationPair> pairs;
  const auto happy = builtin_profile(Emotion::Happy);
  for (int i = 0; i < 12; ++i) {
    const auto fx = testing::random_sentence(rng);
    const auto aligned = align(fx.doc, fx.sentence, Lexicon::sample(), false, nullptr);
    pairs.push_back(testing::derivation_pair(fx, apply_emotion(fx.doc, aligned, happy), "p" + std::to_string(i)));
  }
  const auto reference = derive_profile(pairs, "x");
  for (int k = 0; k < 10; ++k) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const auto d = derive_profile(pairs, "x");
    CHECK(d.profile == reference.profile);
  }
}

TEST_CASE("derive recovers the applied profile") {
  testing::Rng rng(41);
  for (auto e : kAllEmotions) {
    const auto profile = builtin_profile(e);
    std::vector<DerivationPair> pairs;
    for (int i = 0; i < 20; ++i) {
      const auto fx = testing::random_sentence(rng);
      const auto aligned = align(fx.doc, fx.sentence, Lexicon::sample(), false, nullptr);
      pairs.push_back(testing::derivation_pair(fx, apply_emotion(fx.doc, aligned, profile), "p"));
    }
    const auto d = derive_profile(pairs, profile.name);
    int compared = 0;
    for (auto w : {WordPosition::First, WordPosition::Last}) {
      const auto wi = w == WordPosition::First ? 0 : 1;
      for (auto s : kAllSyllablePositions) {
        const auto si = static_cast<std::size_t>(s);
        for (auto r : kAllRoles) {
          if (d.counts.duration[wi][si][static_cast<std::size_t>(r)] == 0) continue;
          ++compared;
          CHECK(std::fabs(d.profile.duration_cell(w, s, r).percent - profile.duration_cell(w, s, r).percent) <= 1.0);
        }
        for (auto edge : {PitchEdge::Start, PitchEdge::End}) {
          if (d.counts.pitch[wi][si][edge == PitchEdge::Start ? 0 : 1] == 0) continue;
          ++compared;
          CHECK(std::fabs(d.profile.pitch_cell(w, s, edge).percent - profile.pitch_cell(w, s, edge).percent) <= 1.0);
        }
      }
    }
    CHECK(compared > 20);
  }
}

TEST_CASE("derivation report lists factors and counts") {
  const auto doc = parse_pho(kKamu);
  testing::SentenceFixture fx{{"kamu"}, doc};
  const auto d = derive_profile(std::vector{testing::derivation_pair(fx, doc, "x")}, "demo");
  const auto report = derivation_report(d);
  CHECK(report.find("Profile: demo") != std::string::npos);
  CHECK(report.find("+0.00% (n=1)") != std::string::npos);
  CHECK(report.find("+0.00% (n=0)") != std::string::npos);
  CHECK(report.find("Warnings") != std::string::npos);
}
