#include <doctest.h>

#include <set>

#include "emotif/align.hpp"
#include "support/fixtures.hpp"

using namespace emotif;

namespace {

using Strings = std::vector<std::string>;

const char* kKamuDiamSaja =
    "_ 120\n"
    "k 80\n"
    "a 90 50 120\n"
    "m 60\n"
    "u 100 0 118 100 110\n"
    "_ 40\n"
    "d 70\n"
    "i 80 50 115\n"
    "a 95 50 112\n"
    "m 65\n"
    "s 85\n"
    "a 90 50 108\n"
    "dZ 70\n"
    "a 120 0 105 100 95\n"
    "_ 200\n";

}  // namespace

TEST_CASE("three two-syllable words with pauses") {
  const auto doc = parse_pho(kKamuDiamSaja);
  const Strings sentence{"kamu", "diam", "saja"};
  const auto aligned = align(doc, sentence, Lexicon::sample(), false, nullptr);
  REQUIRE(aligned.words.size() == 3);
  for (const auto& w : aligned.words) CHECK(w.syllables.size() == 2);
  CHECK(aligned.unaligned == std::vector<std::size_t>{0, 5, 14});
  CHECK(aligned.words[1].syllables[0].phonemes == std::vector<std::size_t>{6, 7});
  CHECK(aligned.words[1].syllables[1].phonemes == std::vector<std::size_t>{8, 9});
  CHECK(aligned.words[1].syllables[1].nucleus_offset == 0);
}

TEST_CASE("empty sentence over silence") {
  const auto doc = parse_pho("_ 100\n_ 50\n");
  const auto aligned = align(doc, Strings{}, Lexicon::sample(), false, nullptr);
  CHECK(aligned.words.empty());
  CHECK(aligned.unaligned == std::vector<std::size_t>{0, 1});
}

TEST_CASE("a missing phoneme is reported at its index") {
  // "diam" lacks its final m, so the next word's s lands where m is expected.
  std::string text = kKamuDiamSaja;
  text.erase(text.find("m 65\n"), 5);
  const auto doc = parse_pho(text);
  try {
    align(doc, Strings{"kamu", "diam", "saja"}, Lexicon::sample(), false, nullptr);
    FAIL("expected a mismatch");
  } catch (const AlignmentError& e) {
    CHECK(e.kind() == AlignmentError::Kind::AlignmentMismatch);
    CHECK(e.item_index() == 9);
    CHECK(e.word() == "diam");
  }
}

TEST_CASE("stream exhaustion and trailing phonemes") {
  const auto doc = parse_pho("_ 100\na 80\nk 70\n");
  try {
    align(doc, Strings{"aku"}, Lexicon::sample(), false, nullptr);
    FAIL("expected exhaustion");
  } catch (const AlignmentError& e) {
    CHECK(e.kind() == AlignmentError::Kind::StreamExhausted);
    CHECK(e.word() == "aku");
  }

  const auto longer = parse_pho("a 80\nk 70\nu 90\nk 50\n");
  try {
    align(longer, Strings{"aku"}, Lexicon::sample(), false, nullptr);
    FAIL("expected a mismatch");
  } catch (const AlignmentError& e) {
    CHECK(e.kind() == AlignmentError::Kind::AlignmentMismatch);
    CHECK(e.item_index() == 3);
  }
}

TEST_CASE("unknown words need the fallback") {
  const auto doc = parse_pho("b 60\nu 80\nN 50\na 90\n");
  CHECK_THROWS_AS(align(doc, Strings{"bunga"}, Lexicon::sample(), false, nullptr), LexiconError);
  Strings warnings;
  const auto aligned = align(doc, Strings{"bunga"}, Lexicon::sample(), true, &warnings);
  CHECK(aligned.words[0].from_fallback);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("bunga") != std::string::npos);
}

TEST_CASE("context classification") {
  const auto doc = parse_pho(kKamuDiamSaja);
  const auto aligned = align(doc, Strings{"kamu", "diam", "saja"}, Lexicon::sample(), false, nullptr);
  const auto ctx = classify_context(aligned);
  CHECK(ctx.size() == 12);
  CHECK(ctx.count(0) == 0);
  CHECK(ctx.at(1) == ProsodicContext{WordPosition::First, SyllablePosition::First, Role::Consonant1});
  CHECK(ctx.at(2) == ProsodicContext{WordPosition::First, SyllablePosition::First, Role::Vowel});
  CHECK(ctx.at(4) == ProsodicContext{WordPosition::First, SyllablePosition::Last, Role::Vowel});
  CHECK(ctx.at(9) == ProsodicContext{WordPosition::Other, SyllablePosition::Last, Role::Consonant2});
  CHECK(ctx.at(13) == ProsodicContext{WordPosition::Last, SyllablePosition::Last, Role::Vowel});
}

TEST_CASE("roles, middle syllables and single-item rules") {
  const auto sekali = parse_pho("s 80\ne 50\nk 65\na 80\nl 55\ni 110\n");
  auto ctx = classify_context(align(sekali, Strings{"sekali"}, Lexicon::sample(), false, nullptr));
  CHECK(ctx.at(2).syllable_position == SyllablePosition::Middle);
  CHECK(ctx.at(4) == ProsodicContext{WordPosition::Last, SyllablePosition::Last, Role::Consonant1});
  CHECK(ctx.at(5) == ProsodicContext{WordPosition::Last, SyllablePosition::Last, Role::Vowel});

  const auto pergi = parse_pho("p 60\ne 70\nr 40\ng 50\ni 90\n_ 10\nk 60\na 80\nm 50\nu 90\n");
  ctx = classify_context(align(pergi, Strings{"pergi", "kamu"}, Lexicon::sample(), false, nullptr));
  CHECK(ctx.at(0).role == Role::Consonant1);
  CHECK(ctx.at(1).role == Role::Vowel);
  CHECK(ctx.at(2).role == Role::Consonant2);
  CHECK(ctx.at(0).word_position == WordPosition::First);

  const auto mau = parse_pho("m 60\naU 150\n");
  ctx = classify_context(align(mau, Strings{"mau"}, Lexicon::sample(), false, nullptr));
  CHECK(ctx.at(1) == ProsodicContext{WordPosition::Last, SyllablePosition::Last, Role::Vowel});
}

TEST_CASE("alignment partitions the phoneme stream") {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto fx = testing::random_sentence(rng);
    const auto aligned = align(fx.doc, fx.sentence, Lexicon::sample(), false, nullptr);
    std::vector<std::size_t> seen;
    for (const auto& w : aligned.words)
      for (const auto& s : w.syllables) seen.insert(seen.end(), s.phonemes.begin(), s.phonemes.end());
    std::set<std::size_t> all(seen.begin(), seen.end());
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    for (auto u : aligned.unaligned) {
      CHECK(all.insert(u).second);
      CHECK(is_pause(fx.doc.phoneme_at(u).symbol));
    }
    const auto phonemes = fx.doc.phoneme_indices();
    CHECK(std::set<std::size_t>(phonemes.begin(), phonemes.end()) == all);

    const auto ctx = classify_context(aligned);
    CHECK(ctx.size() == seen.size());
    for (const auto& w : aligned.words) {
      for (const auto& s : w.syllables) {
        int vowels = 0;
        for (auto idx : s.phonemes) vowels += ctx.at(idx).role == Role::Vowel;
        CHECK(vowels == 1);
      }
    }
    CHECK(align(fx.doc, fx.sentence, Lexicon::sample(), false, nullptr) == aligned);
  }
}
