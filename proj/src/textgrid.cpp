#include "emotif/textgrid.hpp"

#include <charconv>
#include <cmath>

namespace emotif {

namespace {

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

TextGridError unsupported(const std::string& what) {
  return TextGridError(TextGridError::Kind::UnsupportedFormat, what);
}

struct Token {
  enum class Type { String, Number, Flag } type;
  std::string text;
  double number = 0.0;
};

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '?';
}

// Keeps only values: quoted strings, numbers and <flags>. Labels such as
// `xmin =` and bracketed indices like `item [1]:` are dropped, which reduces
// the long format to the same token sequence as the short one.
std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ':' || c == '=') {
      ++i;
    } else if (c == '!') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      while (true) {
        if (i >= s.size()) throw unsupported("unterminated string");
        if (s[i] == '"') {
          if (i + 1 < s.size() && s[i + 1] == '"') {
            text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        text += s[i++];
      }
      out.push_back({Token::Type::String, std::move(text)});
    } else if (c == '[') {
      const auto close = s.find(']', i);
      if (close == std::string_view::npos) throw unsupported("unterminated '['");
      i = close + 1;
    } else if (c == '<') {
      const auto close = s.find('>', i);
      if (close == std::string_view::npos) throw unsupported("unterminated '<'");
      out.push_back({Token::Type::Flag, std::string(s.substr(i, close - i + 1))});
      i = close + 1;
    } else if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.') {
      std::size_t j = i;
      while (j < s.size() && ((s[j] >= '0' && s[j] <= '9') || s[j] == '.' || s[j] == 'e' ||
                              s[j] == 'E' || s[j] == '-' || s[j] == '+')) {
        ++j;
      }
      std::string_view num = s.substr(i, j - i);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      double value = 0.0;
      auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc{} || end != num.data() + num.size() || !std::isfinite(value)) {
        throw unsupported("bad number '" + std::string(s.substr(i, j - i)) + "'");
      }
      out.push_back({Token::Type::Number, std::string(num), value});
      i = j;
    } else if (is_ident_char(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
    } else {
      throw unsupported(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& next(Token::Type type, const char* what) {
    if (pos_ >= tokens_.size()) throw unsupported(std::string("file ends before ") + what);
    const Token& t = tokens_[pos_++];
    if (t.type != type) throw unsupported(std::string("expected ") + what + ", got '" + t.text + "'");
    return t;
  }
  std::string string(const char* what) { return next(Token::Type::String, what).text; }
  double number(const char* what) { return next(Token::Type::Number, what).number; }
  std::size_t count(const char* what) {
    const double v = number(what);
    if (v < 0 || v != std::floor(v)) throw unsupported(std::string("bad ") + what);
    return static_cast<std::size_t>(v);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string decode_text(std::string_view bytes) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(bytes[i]); };
  if (bytes.size() >= 3 && byte(0) == 0xEF && byte(1) == 0xBB && byte(2) == 0xBF) {
    return std::string(bytes.substr(3));
  }
  const bool be = bytes.size() >= 2 && byte(0) == 0xFE && byte(1) == 0xFF;
  const bool le = bytes.size() >= 2 && byte(0) == 0xFF && byte(1) == 0xFE;
  if (!be && !le) return std::string(bytes);
  if (bytes.size() % 2 != 0) throw unsupported("odd byte count in UTF-16 input");

  std::string out;
  auto unit = [&](std::size_t i) -> char32_t {
    return be ? (byte(i) << 8 | byte(i + 1)) : (byte(i + 1) << 8 | byte(i));
  };
  for (std::size_t i = 2; i < bytes.size(); i += 2) {
    char32_t u = unit(i);
    if (u >= 0xD800 && u <= 0xDBFF) {
      if (i + 3 >= bytes.size()) throw unsupported("truncated UTF-16 surrogate pair");
      const char32_t lo = unit(i + 2);
      if (lo < 0xDC00 || lo > 0xDFFF) throw unsupported("invalid UTF-16 surrogate pair");
      u = 0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00);
      i += 2;
    } else if (u >= 0xDC00 && u <= 0xDFFF) {
      throw unsupported("unpaired UTF-16 low surrogate");
    }
    append_utf8(out, u);
  }
  return out;
}

const IntervalTier* TextGrid::find_tier(std::string_view name) const {
  for (const auto& t : tiers) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

TextGrid parse_textgrid(std::string_view bytes) {
  TokenReader in(tokenize(decode_text(bytes)));
  if (in.string("file type") != "ooTextFile") throw unsupported("not a Praat text file");
  if (in.string("object class") != "TextGrid") throw unsupported("object class is not TextGrid");

  TextGrid grid;
  grid.start_s = in.number("xmin");
  grid.end_s = in.number("xmax");
  if (in.next(Token::Type::Flag, "tier flag").text != "<exists>") return grid;

  const std::size_t n_tiers = in.count("tier count");
  for (std::size_t t = 0; t < n_tiers; ++t) {
    const std::string cls = in.string("tier class");
    const std::string name = in.string("tier name");
    in.number("tier xmin");
    in.number("tier xmax");
    const std::size_t n = in.count("item count");
    if (cls == "IntervalTier") {
      IntervalTier tier{name, {}};
      for (std::size_t k = 0; k < n; ++k) {
        TextGridInterval iv;
        iv.start_s = in.number("interval xmin");
        iv.end_s = in.number("interval xmax");
        iv.label = in.string("interval text");
        if (iv.end_s <= iv.start_s) {
          throw TextGridError(TextGridError::Kind::NonMonotoneTimes,
                              "tier '" + name + "' interval " + std::to_string(k + 1) +
                                  " ends at " + format_number(iv.end_s) +
                                  " s, not after its start " + format_number(iv.start_s) + " s");
        }
        tier.intervals.push_back(std::move(iv));
      }
      grid.tiers.push_back(std::move(tier));
    } else if (cls == "TextTier") {
      for (std::size_t k = 0; k < n; ++k) {
        in.number("point time");
        in.string("point mark");
      }
    } else {
      throw unsupported("unknown tier class '" + cls + "'");
    }
  }
  return grid;
}

std::string textgrid_to_short_text(const TextGrid& grid) {
  std::string out = "File type = \"ooTextFile\"\nObject class = \"TextGrid\"\n\n";
  out += format_number(grid.start_s) + "\n" + format_number(grid.end_s) + "\n";
  if (grid.tiers.empty()) return out + "<absent>\n";
  out += "<exists>\n" + std::to_string(grid.tiers.size()) + "\n";
  for (const auto& tier : grid.tiers) {
    out += "\"IntervalTier\"\n" + quoted(tier.name) + "\n";
    const double xmin = tier.intervals.empty() ? grid.start_s : tier.intervals.front().start_s;
    const double xmax = tier.intervals.empty() ? grid.end_s : tier.intervals.back().end_s;
    out += format_number(xmin) + "\n" + format_number(xmax) + "\n";
    out += std::to_string(tier.intervals.size()) + "\n";
    for (const auto& iv : tier.intervals) {
      out += format_number(iv.start_s) + "\n" + format_number(iv.end_s) + "\n" + quoted(iv.label) + "\n";
    }
  }
  return out;
}

}  // namespace emotif
