#include "fg/word.hpp"

#include <cctype>
#include <sstream>

namespace fg {

ReducedWord ReducedWord::reduce(std::span<const int> raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int c : raw) {
    if (!out.empty() && out.back() == inverse_code(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return ReducedWord(std::move(out));
}

ReducedWord invert(const ReducedWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (auto it = w.codes().rbegin(); it != w.codes().rend(); ++it)
    out.push_back(inverse_code(*it));
  return ReducedWord(std::move(out));
}

ReducedWord concat(const ReducedWord& a, const ReducedWord& b) {
  std::vector<int> raw = a.codes();
  raw.insert(raw.end(), b.codes().begin(), b.codes().end());
  return ReducedWord::reduce(raw);
}

ReducedWord conjugate(const ReducedWord& g, const ReducedWord& w) {
  return concat(concat(g, w), invert(g));
}

namespace {

ReducedWord parse_compact(const std::string& text, const Alphabet& alphabet) {
  std::vector<int> raw;
  raw.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
    std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    int idx = alphabet.index_of(name);
    if (idx < 0) {
      throw ParseError("unknown letter '" + std::string(1, ch) + "' at position " +
                       std::to_string(i + 1));
    }
    raw.push_back(inv ? negative_code(idx) : positive_code(idx));
  }
  return ReducedWord::reduce(raw);
}

ReducedWord parse_tokens(const std::string& text, const Alphabet& alphabet) {
  std::vector<int> raw;
  std::istringstream in(text);
  std::string tok;
  size_t pos = 0;
  while (in >> tok) {
    ++pos;
    bool inv = false;
    std::string name = tok;
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      inv = true;
      name = name.substr(0, name.size() - 3);
    }
    int idx = alphabet.index_of(name);
    if (idx < 0) {
      throw ParseError("unknown letter '" + tok + "' at token " + std::to_string(pos));
    }
    raw.push_back(inv ? negative_code(idx) : positive_code(idx));
  }
  return ReducedWord::reduce(raw);
}

}  // namespace

ReducedWord parse_word(const std::string& text, const Alphabet& alphabet) {
  if (text.find(' ') != std::string::npos || text.find('^') != std::string::npos)
    return parse_tokens(text, alphabet);
  if (alphabet.compact_printable()) return parse_compact(text, alphabet);
  return parse_tokens(text, alphabet);
}

std::string format_word(const ReducedWord& w, const Alphabet& alphabet) {
  if (alphabet.compact_printable()) {
    std::string s;
    s.reserve(w.length());
    for (int c : w.codes()) {
      char ch = alphabet.name(code_base(c))[0];
      s += code_is_positive(c) ? ch : static_cast<char>(std::toupper(ch));
    }
    return s;
  }
  std::string s;
  for (size_t i = 0; i < w.length(); ++i) {
    if (i) s += " ";
    s += alphabet.code_name(w.code(i));
  }
  return s;
}

}  // namespace fg
