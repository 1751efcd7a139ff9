#include <sstream>

#include "emotif/io.hpp"
#include "emotif/lexicon.hpp"
#include "sample_lexicon_data.hpp"

namespace emotif {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

LexiconError malformed(std::size_t line_no, const std::string& what) {
  return LexiconError(LexiconError::Kind::MalformedEntry,
                      "lexicon line " + std::to_string(line_no) + ": " + what);
}

Syllable parse_syllable(std::string_view text, std::size_t line_no) {
  Syllable syl;
  bool have_nucleus = false;
  std::istringstream tokens{std::string(text)};
  std::string token;
  while (tokens >> token) {
    if (token.front() == '*') {
      if (have_nucleus) throw malformed(line_no, "syllable '" + std::string(text) + "' has two nuclei");
      token.erase(0, 1);
      if (token.empty()) throw malformed(line_no, "bare '*' without a phoneme");
      syl.nucleus_index = syl.phonemes.size();
      have_nucleus = true;
    }
    syl.phonemes.push_back(token);
  }
  if (syl.phonemes.empty()) throw malformed(line_no, "empty syllable");
  if (!have_nucleus) {
    throw malformed(line_no, "syllable '" + std::string(trim(text)) + "' has no '*' nucleus");
  }
  return syl;
}

}  // namespace

std::vector<std::string> LexiconEntry::phonemes() const {
  std::vector<std::string> out;
  for (const auto& syl : syllables) out.insert(out.end(), syl.phonemes.begin(), syl.phonemes.end());
  return out;
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw malformed(line_no, "expected 'word<TAB>syllables'");
    const auto word = trim(line.substr(0, tab));
    if (word.empty()) throw malformed(line_no, "missing word");

    const auto words = split_sentence(word);
    if (words.size() != 1 || words.front().size() != word.size()) {
      throw malformed(line_no, "'" + std::string(word) + "' is not a single word");
    }
    LexiconEntry entry;
    entry.orthographic = words.front();
    for (auto syl : split(line.substr(tab + 1), '|')) {
      entry.syllables.push_back(parse_syllable(syl, line_no));
    }
    if (lex.find(entry.orthographic)) {
      throw malformed(line_no, "duplicate entry for '" + entry.orthographic + "'");
    }
    lex.insert(std::move(entry));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) { return parse(read_text_file(path)); }

const Lexicon& Lexicon::sample() {
  static const Lexicon lexicon = parse(detail::kSampleLexicon);
  return lexicon;
}

void Lexicon::insert(LexiconEntry entry) {
  auto key = entry.orthographic;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

const LexiconEntry* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string Lexicon::to_text() const {
  std::string out;
  for (const auto& [word, entry] : entries_) {
    out += word;
    out += '\t';
    for (std::size_t s = 0; s < entry.syllables.size(); ++s) {
      if (s) out += '|';
      const auto& syl = entry.syllables[s];
      for (std::size_t p = 0; p < syl.phonemes.size(); ++p) {
        if (p) out += ' ';
        if (p == syl.nucleus_index) out += '*';
        out += syl.phonemes[p];
      }
    }
    out += '\n';
  }
  return out;
}

ResolvedWord resolve_word(const Lexicon& lexicon, std::string_view word, bool allow_g2p) {
  if (const auto* entry = lexicon.find(word)) return {*entry, false};
  if (!allow_g2p) {
    throw LexiconError(LexiconError::Kind::UnknownWord,
                       "word '" + std::string(word) + "' is not in the lexicon");
  }
  return {g2p_entry(word), true};
}

}  // namespace emotif
