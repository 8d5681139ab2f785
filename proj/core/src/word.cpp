#include "tilesum/word.hpp"

#include <cctype>

#include "tilesum/error.hpp"

namespace tilesum {

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'x' || c == 'X' || c == 'y' || c == 'Y') {
      out.emplace_back(1, c);
      ++i;
      continue;
    }
    if (c == 'g' || c == 'G') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw Error(Errc::Parse, "generator letter without an index at offset " + std::to_string(i));
      out.emplace_back(text.substr(i, j - i));
      i = j;
      continue;
    }
    throw Error(Errc::Parse, std::string("unexpected character '") + c + "' in word");
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& t : w) out += t;
  return out;
}

std::string inverse_token(const std::string& token) {
  std::string out = token;
  if (!out.empty()) {
    const auto c = static_cast<unsigned char>(out[0]);
    out[0] = static_cast<char>(std::isupper(c) ? std::tolower(c) : std::toupper(c));
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_token(*it));
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& t : w) {
    if (!out.empty() && out.back() == inverse_token(t))
      out.pop_back();
    else
      out.push_back(t);
  }
  return out;
}

Word power(const std::string& token, std::int64_t n) {
  const std::string t = n < 0 ? inverse_token(token) : token;
  return Word(static_cast<std::size_t>(n < 0 ? -n : n), t);
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

}  // namespace tilesum
