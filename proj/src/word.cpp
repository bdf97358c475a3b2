#include "thompson/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace thompson {

Letter::Letter(Index index, int sign) : index_(index), sign_(sign) {
  if (index > kIndexCap) {
    throw IndexCapError("generator index " + std::to_string(index) +
                        " exceeds the index cap");
  }
  if (sign != 1 && sign != -1) {
    throw Error("letter sign must be +1 or -1");
  }
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word shifted(const Word& w, std::int64_t offset) {
  Word out;
  out.reserve(w.size());
  for (const Letter& letter : w) {
    const auto moved = static_cast<std::int64_t>(letter.index()) + offset;
    if (moved < 0) {
      throw NegativeIndexError("shift by " + std::to_string(offset) +
                               " takes x" + std::to_string(letter.index()) +
                               " below x0");
    }
    out.emplace_back(static_cast<Index>(moved), letter.sign());
  }
  return out;
}

namespace {

Letter parse_token(std::string_view token) {
  if (token.size() < 2 || token.front() != 'x') {
    throw ParseError("bad letter token '" + std::string(token) + "'");
  }
  std::string_view digits = token.substr(1);
  int sign = 1;
  if (const auto caret = digits.find('^'); caret != std::string_view::npos) {
    if (digits.substr(caret) != "^-1") {
      throw ParseError("bad exponent in token '" + std::string(token) +
                       "' (only ^-1 is supported)");
    }
    sign = -1;
    digits = digits.substr(0, caret);
  }
  Index index = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() ||
      digits.empty()) {
    throw ParseError("bad generator index in token '" + std::string(token) +
                     "'");
  }
  return Letter(index, sign);
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) {
      const std::string_view token = text.substr(i, j - i);
      if (token == "1") {
        // identity token contributes no letters
      } else {
        out.push_back(parse_token(token));
      }
    }
    i = j;
  }
  return out;
}

std::string to_text(const Letter& letter) {
  std::string out = "x" + std::to_string(letter.index());
  if (letter.sign() < 0) {
    out += "^-1";
  }
  return out;
}

std::string to_text(const Word& w) {
  std::string out;
  for (const Letter& letter : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_text(letter);
  }
  return out;
}

}  // namespace thompson
