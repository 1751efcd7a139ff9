#include <charconv>
#include <cmath>

#include <json.hpp>

#include "emotif/io.hpp"
#include "emotif/profiles.hpp"

namespace emotif {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<WordPosition, const char*>, 2> kWordKeys = {
    {{WordPosition::First, "first_word"}, {WordPosition::Last, "last_word"}}};
constexpr std::array<const char*, 3> kSyllableKeys = {"first", "middle", "last"};

const char* role_key(Role r) {
  switch (r) {
    case Role::Consonant1: return "cons1";
    case Role::Consonant2: return "cons2";
    case Role::Vowel: return "vowel";
  }
  return "?";
}

const char* edge_key(PitchEdge e) { return e == PitchEdge::Start ? "start" : "end"; }

const Json& require(const Json& node, const char* key, const std::string& path) {
  if (!node.is_object()) {
    throw ProfileError(ProfileError::Kind::Malformed, "'" + path + "' must be an object");
  }
  auto it = node.find(key);
  if (it == node.end()) {
    throw ProfileError(ProfileError::Kind::MissingCell,
                       "profile is missing '" + (path.empty() ? "" : path + ".") + key + "'");
  }
  return *it;
}

RateFactor read_factor(const Json& node, const char* key, const std::string& path) {
  const Json& value = require(node, key, path);
  const std::string where = path + "." + key;
  if (!value.is_string()) {
    throw ProfileError(ProfileError::Kind::SignSyntax,
                       "'" + where + "' must be a string with an explicit sign, e.g. \"+65\"");
  }
  try {
    return parse_signed_percent(value.get<std::string>());
  } catch (const ProfileError& e) {
    throw ProfileError(e.kind(), "'" + where + "': " + e.what());
  }
}

}  // namespace

std::string format_signed_percent(double percent) {
  if (percent == 0.0) return "+0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, percent);
  std::string digits(buf, end);
  return percent > 0 ? "+" + digits : digits;
}

RateFactor parse_signed_percent(std::string_view text) {
  if (!text.empty() && text.back() == '%') text.remove_suffix(1);
  if (text.empty() || (text.front() != '+' && text.front() != '-')) {
    throw ProfileError(ProfileError::Kind::SignSyntax,
                       "rate factor '" + std::string(text) + "' needs an explicit + or - sign");
  }
  std::string_view number = text.front() == '+' ? text.substr(1) : text;
  if (text.front() == '+' && !number.empty() && (number.front() == '+' || number.front() == '-')) {
    throw ProfileError(ProfileError::Kind::SignSyntax, "rate factor '" + std::string(text) + "' has two signs");
  }
  double value = 0.0;
  auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
  if (ec != std::errc{} || end != number.data() + number.size() || !std::isfinite(value)) {
    throw ProfileError(ProfileError::Kind::SignSyntax,
                       "rate factor '" + std::string(text) + "' is not a number");
  }
  if (value <= -100.0) {
    throw ProfileError(ProfileError::Kind::OutOfRange,
                       "rate factor " + std::string(text) + "% would make a non-positive multiplier");
  }
  return {value};
}

EmotionProfile parse_profile_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ProfileError(ProfileError::Kind::Malformed, std::string("invalid JSON: ") + e.what());
  }

  EmotionProfile p;
  const Json& name = require(root, "name", "");
  if (!name.is_string()) throw ProfileError(ProfileError::Kind::Malformed, "'name' must be a string");
  p.name = name.get<std::string>();

  const Json& duration = require(root, "duration", "");
  const Json& pitch = require(root, "pitch", "");
  for (const auto& [word, word_key] : kWordKeys) {
    const std::string dpath = std::string("duration.") + word_key;
    const std::string ppath = std::string("pitch.") + word_key;
    const Json& dword = require(duration, word_key, "duration");
    const Json& pword = require(pitch, word_key, "pitch");
    for (std::size_t s = 0; s < 3; ++s) {
      const auto sp = kAllSyllablePositions[s];
      const Json& dsyl = require(dword, kSyllableKeys[s], dpath);
      const Json& psyl = require(pword, kSyllableKeys[s], ppath);
      for (Role r : kAllRoles) {
        p.duration_cell(word, sp, r) = read_factor(dsyl, role_key(r), dpath + "." + kSyllableKeys[s]);
      }
      for (PitchEdge e : {PitchEdge::Start, PitchEdge::End}) {
        p.pitch_cell(word, sp, e) = read_factor(psyl, edge_key(e), ppath + "." + kSyllableKeys[s]);
      }
    }
  }
  p.duration_other_word = read_factor(duration, "other_word", "duration");
  const Json& other_pitch = require(pitch, "other_word", "pitch");
  p.pitch_other_word.start = read_factor(other_pitch, "start", "pitch.other_word");
  p.pitch_other_word.end = read_factor(other_pitch, "end", "pitch.other_word");
  return p;
}

std::string profile_to_json(const EmotionProfile& p) {
  Json root;
  root["name"] = p.name;
  Json duration = Json::object();
  Json pitch = Json::object();
  for (const auto& [word, word_key] : kWordKeys) {
    Json dword = Json::object();
    Json pword = Json::object();
    for (std::size_t s = 0; s < 3; ++s) {
      const auto sp = kAllSyllablePositions[s];
      Json dsyl = Json::object();
      for (Role r : {Role::Consonant1, Role::Consonant2, Role::Vowel}) {
        dsyl[role_key(r)] = format_signed_percent(p.duration_cell(word, sp, r).percent);
      }
      dword[kSyllableKeys[s]] = std::move(dsyl);
      pword[kSyllableKeys[s]] = {
          {"start", format_signed_percent(p.pitch_cell(word, sp, PitchEdge::Start).percent)},
          {"end", format_signed_percent(p.pitch_cell(word, sp, PitchEdge::End).percent)}};
    }
    duration[word_key] = std::move(dword);
    pitch[word_key] = std::move(pword);
  }
  duration["other_word"] = format_signed_percent(p.duration_other_word.percent);
  pitch["other_word"] = {{"start", format_signed_percent(p.pitch_other_word.start.percent)},
                         {"end", format_signed_percent(p.pitch_other_word.end.percent)}};
  root["duration"] = std::move(duration);
  root["pitch"] = std::move(pitch);
  return root.dump(2) + "\n";
}

EmotionProfile load_profile(const std::filesystem::path& path) {
  return parse_profile_json(read_text_file(path));
}

void save_profile(const EmotionProfile& profile, const std::filesystem::path& path) {
  write_text_file(path, profile_to_json(profile));
}

}  // namespace emotif
