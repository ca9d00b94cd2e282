#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fg/constructions.hpp"

namespace fg {

// Deterministic stream of all finitely generated infinite-index subgroups
// with total generator length up to `budget`.  Each subgroup appears once
// (canonical serialization is the dedupe key); finite-index subgroups are
// skipped.  Order: total length, then generator count, then generator tuples
// lexicographically (words compared length-first).
class SubgroupStream {
 public:
  SubgroupStream(Alphabet alphabet, int budget);
  std::optional<SubgroupHandle> next();
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  void fill();
  Alphabet alphabet_;
  int budget_;
  int total_ = 0;
  size_t pos_ = 0;
  std::vector<SubgroupHandle> pending_;
  std::set<std::string> seen_;
};

SubgroupStream enumerate_subgroups(const Alphabet& alphabet, int budget);

struct BuildCaps {
  int budget = 6;               // enumeration budget (max total generator length)
  int max_core_vertices = 20000;  // per-stage cap on the running core
};

struct RStage {
  SubgroupHandle l, h, r;
};

// Finite-stage approximation R_1 <= ... <= R_N of the limit subgroup R.
struct RPrefix {
  Alphabet alphabet;
  std::vector<RStage> stages;
  StageLog log;
  bool truncated = false;
  std::string truncation_reason;

  const SubgroupHandle& final_r() const { return stages.back().r; }
};

// R_1 = first nontrivial enumerated subgroup; R_i = <R_{i-1}, H_i> with H_i
// from small_join(R_{i-1}, L_i, {}).  Exceeding a cap yields a truncated
// prefix with the reason recorded, not an error.
RPrefix build_R_prefix(const Alphabet& alphabet, int n, const BuildCaps& caps = {});

// relative_index(L, L ∩ R_N): finite for every processed L_i, expected
// Infinite for finite-index L (finite-stage evidence only).
RelIndex verify_R_property(const RPrefix& prefix, const SubgroupHandle& l);

// Evidence summary (indices, deficit count, commutator membership).
std::string prefix_report(const RPrefix& prefix);

// Directory layout: L<i>.core / H<i>.core / R<i>.core, prefix.txt, log.txt.
void write_prefix(const RPrefix& prefix, const std::string& dir);
RPrefix read_prefix(const std::string& dir);

}  // namespace fg
