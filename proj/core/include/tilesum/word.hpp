#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tilesum {

/// A group word as a token list. Tokens are "x", "y" and "g<digits>";
/// the capitalised token ("X", "Y", "G<digits>") is the inverse letter.
using Word = std::vector<std::string>;

/// Parses concatenated tokens, e.g. "xyXYg0G12". Whitespace is ignored.
/// Throws Parse.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

std::string inverse_token(const std::string& token);
Word inverse_word(const Word& w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

/// token^n, with the inverse token for negative n.
Word power(const std::string& token, std::int64_t n);

void append(Word& w, const Word& tail);

}  // namespace tilesum
