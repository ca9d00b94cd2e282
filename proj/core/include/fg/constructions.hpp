#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fg/stage_log.hpp"
#include "fg/subgroup.hpp"

namespace fg {

// ---- two-subgroup arithmetic ----

// Core of A ∩ B via the product graph at (base, base).  A nonzero
// max_vertices bounds the reachable product; ResourceError beyond it.
SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b,
                         size_t max_vertices = 0);
// Core of <A ∪ B>: wedge at base, folded.
SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b);
// Core of g A g^-1.
SubgroupHandle conjugate_subgroup(const SubgroupHandle& a, const ReducedWord& g);

struct RelIndex {
  enum class Kind { Finite, Infinite, NotSubgroup } kind;
  long n = 0;
  static RelIndex make_finite(long v) { return {Kind::Finite, v}; }
  static RelIndex infinite() { return {Kind::Infinite, 0}; }
  static RelIndex not_subgroup() { return {Kind::NotSubgroup, 0}; }
  bool finite() const { return kind == Kind::Finite; }
  bool operator==(const RelIndex& o) const {
    return kind == o.kind && (kind != Kind::Finite || n == o.n);
  }
  std::string str() const;
};

// Index of B in A (NotSubgroup when B is not contained in A).
RelIndex relative_index(const SubgroupHandle& a, const SubgroupHandle& b);

// Left coset representatives of B in A (B <= A of finite index): first is
// the identity, and t_i^-1 t_j is never in B for i != j.  The inverses of
// the representatives form a Schreier (prefix-closed) set in A's basis.
std::vector<ReducedWord> transversal(const SubgroupHandle& a, const SubgroupHandle& b);

// Finite-index M >= A with M ∩ S empty (every s must lie outside A).
SubgroupHandle hall_completion(const SubgroupHandle& a,
                               const std::vector<ReducedWord>& exclude);

// ---- rebasing machinery ----

// A finite-index E <= F with a free basis in which A is generated by the
// first y_count basis letters.  Carries both rewriting directions.
struct FreeFactorEmbedding {
  SubgroupHandle ambient;                 // E, canonical core (full graph)
  Alphabet inner_alphabet;                // b1..bk, k = rank(E)
  std::vector<ReducedWord> basis_words;   // b_i as a word over the outer alphabet
  int y_count = 0;                        // b1..b_{y_count} freely generate A
  BasisData basis_data;                   // on ambient.graph

  // word over inner_alphabet -> word over the outer alphabet
  ReducedWord expand(const ReducedWord& inner) const;
  // word over the outer alphabet -> word over inner_alphabet (must be in E)
  std::optional<ReducedWord> to_inner(const ReducedWord& outer) const;
  // subgroup over inner_alphabet -> subgroup over the outer alphabet
  SubgroupHandle expand_subgroup(const SubgroupHandle& inner, std::string name = "") const;
};

// A subgroup expressed in the basis of an enclosing finite-index subgroup.
struct RebasedSubgroup {
  FreeFactorEmbedding embedding;
  SubgroupHandle inner;  // over embedding.inner_alphabet
};

FreeFactorEmbedding free_factor_embedding(const SubgroupHandle& a);

// ---- cover / saturation pipeline ----

// K <= H of finite index whose core has a deficit vertex outside
// frame(K, Y).  Either K == H (a bridge labeled outside Y exists) or K is a
// degree-j cyclic cover obtained by redirecting a non-bridge edge labeled
// outside Y.  Y is a set of base-letter indices.
SubgroupHandle frame_avoiding_cover(const SubgroupHandle& h, const std::vector<int>& y,
                                    int j);

// (A1, B0, B1): [A:A1] and [B:B0] finite, B0 <= B1, A1 <= B1, and B1
// finitely generated of infinite index.
struct EnvelopePair {
  SubgroupHandle a1, b0, b1;
};
EnvelopePair envelope_pair(const SubgroupHandle& a, const SubgroupHandle& b,
                           StageLog* log = nullptr);

// Finite-index shrinks H'_i of the inputs whose join has infinite index.
struct FamilyShrink {
  std::vector<SubgroupHandle> shrunk;
  SubgroupHandle joined;
};
FamilyShrink family_shrink(const std::vector<SubgroupHandle>& family,
                           StageLog* log = nullptr);

// Largest-needed normal refinement: intersection of the conjugates of Q over
// a transversal of Q in B1; normal in B1, still of finite index in B1.
// Computed as the kernel of the coset action of B1, so [B1 : result] equals
// the order of the induced permutation group; throws ResourceError when that
// order exceeds `order_cap` (the core graph would be at least that large).
SubgroupHandle normal_core_in(const SubgroupHandle& q, const SubgroupHandle& b1,
                              size_t order_cap = 5000);

// B2 finitely generated of infinite index, normalized by A, containing a
// finite-index subgroup H of B.
struct NormalizedEnvelope {
  SubgroupHandle b2, h;
  StageLog log;
};
NormalizedEnvelope normalized_envelope(const SubgroupHandle& a, const SubgroupHandle& b);

// H <= B of finite index in B such that <A, H> has infinite index in F and
// avoids every word in `exclude` (each must lie outside A).
struct SmallJoin {
  SubgroupHandle h;
  StageLog log;
};
SmallJoin small_join(const SubgroupHandle& a, const SubgroupHandle& b,
                     const std::vector<ReducedWord>& exclude);

// ---- small-cancellation witness ----

struct SmallCancelReport {
  bool ok = false;
  std::string violation;  // human-readable witness when !ok
};

// True iff every subword of length >= ceil(|u_i|/10) of u_i occurs exactly
// once in u_i and nowhere in u_j (j != i), and every |u_i| >= 10*w_length.
SmallCancelReport check_smallcancel(const std::vector<ReducedWord>& u_words,
                                    const Alphabet& alphabet, size_t w_length);

// r-generated H of infinite index with F = H * N(w): generators
// v_i = u_{2i-1} w u_{2i-1}^-1 x_i u_{2i} w u_{2i}^-1 over verified
// small-cancellation positive words u_j.
struct NormalSupplementWitness {
  SubgroupHandle h;
  std::vector<ReducedWord> v_words;
  std::vector<ReducedWord> u_words;
};
NormalSupplementWitness normal_supplement_witness(const Alphabet& alphabet,
                                                  const ReducedWord& w);

}  // namespace fg
