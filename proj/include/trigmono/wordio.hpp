#pragma once

#include "trigmono/braid.hpp"

namespace trigmono {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Grammar: word := term (('.'|' ') term)*, term := gen ('^' signed-int)?
// with gen in {s1, s2} for braids, {a1, a2, a3} for free words.
// "1" denotes the empty word.
BraidWord parseBraidWord(const std::string& text);
FreeWord parseFreeWord(const std::string& text);

// Matrix literal [[a,b],[c,d]].
ModularMatrix parseMatrix(const std::string& text);

// Split on the given separator, trimming surrounding blanks.
std::vector<std::string> splitList(const std::string& text, char sep);

}  // namespace trigmono
