#include "trigmono/wordio.hpp"

#include <cctype>

namespace trigmono {

namespace {

struct Term {
  int gen = 0;
  long exp = 1;
};

std::vector<Term> parseTerms(const std::string& text, char genChar, int maxGen) {
  std::vector<Term> terms;
  size_t i = 0;
  auto skipSep = [&] {
    while (i < text.size() && (text[i] == '.' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
  };
  skipSep();
  if (i < text.size() && text[i] == '1' && i + 1 >= text.size()) return terms;
  while (i < text.size()) {
    if (text[i] != genChar) throw ParseError("expected '" + std::string(1, genChar) +
                                             "' at position " + std::to_string(i) + " in \"" +
                                             text + "\"");
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected generator index in \"" + text + "\"");
    int gen = text[i] - '0';
    ++i;
    if (gen < 1 || gen > maxGen) throw ParseError("generator index out of range in \"" + text + "\"");
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected exponent in \"" + text + "\"");
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        ++i;
      }
      if (negative) exp = -exp;
    }
    terms.push_back({gen, exp});
    skipSep();
  }
  return terms;
}

}  // namespace

BraidWord parseBraidWord(const std::string& text) {
  BraidWord w;
  for (const Term& t : parseTerms(text, 's', 2))
    w = w * BraidWord::gen(t.gen, static_cast<int>(t.exp));
  return w;
}

FreeWord parseFreeWord(const std::string& text) {
  FreeWord w;
  for (const Term& t : parseTerms(text, 'a', 3))
    w = w * FreeWord::gen(t.gen, static_cast<int>(t.exp));
  return w;
}

ModularMatrix parseMatrix(const std::string& text) {
  std::vector<Int> vals;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      cur.push_back(ch);
    } else if (!cur.empty()) {
      vals.emplace_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) vals.emplace_back(cur);
  if (vals.size() != 4) throw ParseError("matrix literal must be [[a,b],[c,d]]: \"" + text + "\"");
  try {
    return ModularMatrix(vals[0], vals[1], vals[2], vals[3]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<std::string> splitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == sep)
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return out;
}

}  // namespace trigmono
