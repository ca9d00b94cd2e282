#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "fg/alphabet.hpp"
#include "fg/word.hpp"

namespace fg {

// Working representation during construction: a deterministic partial graph
// with the edge involution maintained (setting u -c-> v also sets
// v -c^-1-> u).  Not canonical, may be trimmed/renumbered later.
struct MutableGraph {
  int rank = 0;
  int base = 0;
  std::vector<int> trans;  // n * 2*rank entries, -1 = undefined

  MutableGraph() = default;
  explicit MutableGraph(int rank_, int n = 0) : rank(rank_), trans(static_cast<size_t>(n) * 2 * rank_, -1) {}

  int vertex_count() const { return rank == 0 ? 0 : static_cast<int>(trans.size()) / (2 * rank); }
  int get(int v, int c) const { return trans[static_cast<size_t>(v) * 2 * rank + c]; }
  int add_vertex() {
    trans.resize(trans.size() + 2 * rank, -1);
    return vertex_count() - 1;
  }
  // Both directions; the slots must be free.
  void set_edge(int u, int c, int v);
  void clear_edge(int u, int c);
  int degree(int v) const {
    int d = 0;
    for (int c = 0; c < 2 * rank; ++c)
      if (get(v, c) >= 0) ++d;
    return d;
  }
};

// Pre-fold multigraph: a plain edge list over numbered vertices, folded by
// union-find into a deterministic graph.
struct PreGraph {
  int rank = 0;
  int base = 0;
  int n = 0;
  std::vector<std::tuple<int, int, int>> edges;  // (u, code, v)

  explicit PreGraph(int rank_) : rank(rank_), n(1) {}
  int add_vertex() { return n++; }
  void add_edge(int u, int c, int v) { edges.emplace_back(u, c, v); }
  // Closed loop at `at` spelling w through fresh vertices.
  void add_word_loop(int at, const ReducedWord& w);
};

// Stallings folding: identify clashing edges until the graph is
// deterministic.  Near-linear via union-find with small-to-large merging.
// The result's base is the image of the pregraph base.
MutableGraph fold(const PreGraph& pg);

// Iteratively remove degree<=1 vertices other than base.
void trim(MutableGraph& g);

// Immutable canonical core graph: vertices renumbered by BFS from the base
// in code order, base = 0.  Two cores represent the same subgroup iff their
// serializations are equal.
class CoreGraph {
 public:
  // Empty placeholder, only valid as an assignment target.
  CoreGraph() = default;

  // Trims, canonicalizes, checks invariants.  `old_to_new`, when given,
  // receives the renumbering (-1 for dropped vertices).
  CoreGraph(Alphabet alphabet, MutableGraph g, std::vector<int>* old_to_new = nullptr);

  static CoreGraph trivial(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  int rank_letters() const { return alphabet_.rank(); }
  int vertex_count() const { return g_.vertex_count(); }
  int base() const { return 0; }
  int target(int v, int c) const { return g_.get(v, c); }
  int degree(int v) const { return g_.degree(v); }
  long edge_pairs() const;  // number of geometric edges

  const MutableGraph& raw() const { return g_; }

  // One line per positive edge, canonical order; bit-exact format.
  std::string serialize() const;
  static CoreGraph deserialize(const std::string& text);
  std::string to_dot() const;

  bool operator==(const CoreGraph& o) const {
    return alphabet_ == o.alphabet_ && g_.trans == o.g_.trans;
  }

 private:
  CoreGraph(Alphabet alphabet, MutableGraph g, bool already_canonical);
  Alphabet alphabet_;
  MutableGraph g_;
};

}  // namespace fg
