#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace focusrank::text {

/// Lowercased word tokens: maximal runs of letters and digits in UTF-8 input.
/// Punctuation, symbols and whitespace separate tokens; malformed UTF-8
/// bytes are treated as separators.
std::vector<std::string> tokenize(std::string_view input);

/// Decodes one UTF-8 code point at `pos`, advancing it. Returns U+FFFD and
/// advances one byte on malformed input.
char32_t decode_utf8(std::string_view input, std::size_t &pos);

void append_utf8(std::string &out, char32_t cp);

bool is_word_char(char32_t cp);
bool is_upper(char32_t cp);
char32_t to_lower(char32_t cp);

} // namespace focusrank::text
