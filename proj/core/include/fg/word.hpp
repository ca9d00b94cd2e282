#pragma once

#include <span>
#include <string>
#include <vector>

#include "fg/alphabet.hpp"

namespace fg {

// A freely reduced word: no adjacent letter/inverse pair.  The empty word is
// the identity.  Immutable after construction.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Free reduction of a raw signed-letter sequence.
  static ReducedWord reduce(std::span<const int> raw);
  static ReducedWord identity() { return ReducedWord(); }
  static ReducedWord letter(int code) { return ReducedWord({code}); }

  size_t length() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  const std::vector<int>& codes() const { return codes_; }
  int code(size_t i) const { return codes_[i]; }

  bool operator==(const ReducedWord& o) const { return codes_ == o.codes_; }
  bool operator!=(const ReducedWord& o) const { return codes_ != o.codes_; }
  bool operator<(const ReducedWord& o) const {
    if (codes_.size() != o.codes_.size()) return codes_.size() < o.codes_.size();
    return codes_ < o.codes_;
  }

 private:
  explicit ReducedWord(std::vector<int> codes) : codes_(std::move(codes)) {}
  std::vector<int> codes_;
  friend ReducedWord invert(const ReducedWord&);
  friend ReducedWord concat(const ReducedWord&, const ReducedWord&);
};

ReducedWord invert(const ReducedWord& w);
ReducedWord concat(const ReducedWord& a, const ReducedWord& b);
// g w g^-1, reduced.
ReducedWord conjugate(const ReducedWord& g, const ReducedWord& w);

// Compact syntax (lowercase = generator, uppercase = inverse) when the
// alphabet allows it, otherwise token syntax "x y^-1" separated by spaces.
// Unknown letters are rejected with character and position.
ReducedWord parse_word(const std::string& text, const Alphabet& alphabet);
std::string format_word(const ReducedWord& w, const Alphabet& alphabet);

}  // namespace fg
