#include "fg/subgroup_io.hpp"

#include <fstream>
#include <sstream>

namespace fg {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

}  // namespace

SubgroupFile parse_subgroup_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  SubgroupFile out;
  bool have_alphabet = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    if (!have_alphabet) {
      if (s.rfind("alphabet:", 0) != 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'alphabet:' header");
      std::vector<std::string> names;
      std::istringstream ss(s.substr(9));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        std::string t = strip(tok);
        if (t.empty())
          throw ParseError("line " + std::to_string(lineno) + ": empty alphabet name");
        names.push_back(t);
      }
      try {
        out.alphabet = Alphabet(names);
      } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
      have_alphabet = true;
      continue;
    }
    try {
      out.generators.push_back(parse_word(s, out.alphabet));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_alphabet) throw ParseError("missing 'alphabet:' header");
  return out;
}

std::string write_subgroup_file(const Alphabet& alphabet,
                                const std::vector<ReducedWord>& generators) {
  std::ostringstream out;
  out << "alphabet: " << alphabet.joined() << "\n";
  for (const auto& g : generators) out << format_word(g, alphabet) << "\n";
  return out.str();
}

SubgroupFile load_subgroup_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  std::ostringstream body;
  body << f.rdbuf();
  try {
    return parse_subgroup_file(body.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SubgroupHandle load_subgroup(const std::string& path, std::string name) {
  SubgroupFile file = load_subgroup_file(path);
  return from_generators(file.alphabet, file.generators, std::move(name));
}

void save_subgroup_file(const std::string& path, const Alphabet& alphabet,
                        const std::vector<ReducedWord>& generators) {
  std::ofstream f(path, std::ios::binary);
  f << write_subgroup_file(alphabet, generators);
}

}  // namespace fg
