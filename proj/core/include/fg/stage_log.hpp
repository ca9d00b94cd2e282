#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fg/subgroup.hpp"

namespace fg {

// A machine-checkable claim about handles logged in the same stage.
struct Certificate {
  enum class Kind {
    RelIndexFinite,   // [a : b] finite
    RelIndexEquals,   // [a : b] == expected
    IndexInfinite,    // [F : a] infinite
    IndexFinite,      // [F : a] finite
    MemberWord,       // word_text in a
    NotMemberWord,    // word_text not in a
    ContainsSubgroup  // every basis element of b is a member of a
  };
  Kind kind;
  std::string a;
  std::string b;          // handle name or word text depending on kind
  long expected = 0;      // RelIndexEquals only

  std::string describe() const;
};

struct LogStage {
  std::string step;
  std::string note;
  std::vector<std::pair<std::string, SubgroupHandle>> handles;
  std::vector<Certificate> certs;

  const SubgroupHandle* find(const std::string& name) const;
};

// Audit trail of an iterative construction.  Every logged certificate can be
// re-verified against the logged handles.
class StageLog {
 public:
  void add(LogStage stage) { stages_.push_back(std::move(stage)); }
  void append(const StageLog& other) {
    for (const auto& s : other.stages_) stages_.push_back(s);
  }
  const std::vector<LogStage>& stages() const { return stages_; }
  bool empty() const { return stages_.empty(); }

  // Recomputes every certificate; on failure reports the first offender.
  bool verify(std::string* first_failure = nullptr) const;
  std::string to_text() const;

 private:
  std::vector<LogStage> stages_;
};

}  // namespace fg
