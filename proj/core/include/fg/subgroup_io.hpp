#pragma once

#include <string>
#include <vector>

#include "fg/subgroup.hpp"

namespace fg {

// Text format for subgroup generators:
//   alphabet: x,y
//   xyxyX        # generator, compact syntax; token syntax also accepted
// Blank lines and #-comments are ignored.
struct SubgroupFile {
  Alphabet alphabet;
  std::vector<ReducedWord> generators;
};

SubgroupFile parse_subgroup_file(const std::string& text);
std::string write_subgroup_file(const Alphabet& alphabet,
                                const std::vector<ReducedWord>& generators);

SubgroupFile load_subgroup_file(const std::string& path);
SubgroupHandle load_subgroup(const std::string& path, std::string name = "");
void save_subgroup_file(const std::string& path, const Alphabet& alphabet,
                        const std::vector<ReducedWord>& generators);

}  // namespace fg
