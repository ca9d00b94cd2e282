#pragma once

#include <string>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

// A signed letter is stored as an int code: 2*i for the i-th generator,
// 2*i+1 for its inverse.  All tie-breaking downstream uses code order,
// which is declaration order of the generators.
inline int positive_code(int base) { return 2 * base; }
inline int negative_code(int base) { return 2 * base + 1; }
inline int inverse_code(int code) { return code ^ 1; }
inline int code_base(int code) { return code >> 1; }
inline bool code_is_positive(int code) { return (code & 1) == 0; }

// Ordered finite set of generator names.  The ordering is fixed at
// construction and used for every deterministic tie-break.
class Alphabet {
 public:
  // Empty placeholder, only valid as an assignment target.
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw PreconditionError("alphabet must have rank >= 1");
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].empty()) throw PreconditionError("empty generator name");
      for (size_t j = i + 1; j < letters_.size(); ++j) {
        if (letters_[i] == letters_[j])
          throw PreconditionError("duplicate generator name: " + letters_[i]);
      }
    }
  }

  // b1..bk, used for basis/rebasing alphabets.
  static Alphabet basis_names(int k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (int i = 1; i <= k; ++i) names.push_back("b" + std::to_string(i));
    return Alphabet(std::move(names));
  }

  int rank() const { return static_cast<int>(letters_.size()); }
  int num_codes() const { return 2 * rank(); }
  const std::string& name(int i) const { return letters_[i]; }
  const std::vector<std::string>& names() const { return letters_; }

  // -1 when absent.
  int index_of(const std::string& s) const {
    for (size_t i = 0; i < letters_.size(); ++i)
      if (letters_[i] == s) return static_cast<int>(i);
    return -1;
  }

  // True when the compact one-char-per-letter syntax applies.
  bool compact_printable() const {
    for (const auto& n : letters_)
      if (n.size() != 1 || n[0] < 'a' || n[0] > 'z') return false;
    return true;
  }

  std::string code_name(int code) const {
    return code_is_positive(code) ? name(code_base(code))
                                  : name(code_base(code)) + "^-1";
  }

  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  std::string joined() const {
    std::string s;
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += letters_[i];
    }
    return s;
  }

 private:
  std::vector<std::string> letters_;
};

}  // namespace fg
