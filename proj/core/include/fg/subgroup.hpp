#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fg/core_graph.hpp"

namespace fg {

// Canonical representation of a finitely generated subgroup: its core graph
// plus an optional display name.
struct SubgroupHandle {
  CoreGraph graph;
  std::string name;  // "" = unnamed

  const Alphabet& alphabet() const { return graph.alphabet(); }
  bool is_trivial() const { return graph.vertex_count() == 1 && graph.edge_pairs() == 0; }
};

// Finite value or infinity.
struct Index {
  bool finite = false;
  long n = 0;
  static Index make_finite(long v) { return Index{true, v}; }
  static Index infinite() { return Index{false, 0}; }
  bool operator==(const Index& o) const {
    return finite == o.finite && (!finite || n == o.n);
  }
  std::string str() const { return finite ? std::to_string(n) : "infinite"; }
};

// Core of <generators>; empty generators (or all-identity) give the trivial
// subgroup.
SubgroupHandle from_generators(const Alphabet& alphabet,
                               const std::vector<ReducedWord>& generators,
                               std::string name = "");

struct MembershipPath {
  std::vector<int> vertices;  // length |w|+1, starts and ends at base
};

bool is_member(const SubgroupHandle& h, const ReducedWord& w,
               MembershipPath* path = nullptr);

Index index_in_F(const SubgroupHandle& h);

struct DeficitReport {
  struct Entry {
    int vertex;
    std::vector<int> missing;  // signed letter codes absent from star(vertex)
  };
  std::vector<Entry> entries;
  bool empty() const { return entries.empty(); }
  bool vertex_listed(int v) const {
    for (const auto& e : entries)
      if (e.vertex == v) return true;
    return false;
  }
};

// Missing signed letters restricted to Y^{+-1}, Y given as base-letter
// indices into the alphabet.
DeficitReport deficit_vertices(const SubgroupHandle& h, const std::vector<int>& y);
std::vector<int> full_letter_set(const Alphabet& alphabet);

struct HandlePath {
  std::vector<int> vertices;  // length()+1 entries, starts at base
  std::vector<int> codes;
  int length() const { return static_cast<int>(codes.size()); }
};

// The unique maximal path from a degree-1 base through degree<=2 vertices;
// empty when the base has degree != 1.
HandlePath handle(const SubgroupHandle& h);

struct Subgraph {
  std::vector<char> has_vertex;                  // indexed by vertex id
  std::vector<std::tuple<int, int, int>> edges;  // (u, code, v), positive codes
  std::vector<int> vertices() const {
    std::vector<int> out;
    for (size_t v = 0; v < has_vertex.size(); ++v)
      if (has_vertex[v]) out.push_back(static_cast<int>(v));
    return out;
  }
  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(has_vertex.size()) && has_vertex[v];
  }
};

// Maximal connected subgraph through the base with labels in Y^{+-1}.
Subgraph frame(const SubgroupHandle& h, const std::vector<int>& y);

// Cycle rank: edge pairs - vertices + 1.
int rank(const SubgroupHandle& h);

// Spanning-tree basis machinery.  Tree = BFS from base in code order over
// class-0 edges (class is a caller predicate; default: everything class 0).
// Co-tree edges are listed class 0 first, each in its positive direction,
// in canonical (u, code) order; edge i yields basis word
// path(base->u) * letter * path(v->base).
struct BasisData {
  std::vector<int> parent_vertex;  // -1 at base
  std::vector<int> parent_code;
  std::vector<std::tuple<int, int, int>> cotree;  // (u, code, v)
  std::vector<ReducedWord> words;                 // over the graph's alphabet
  int primary_count = 0;                          // # class-0 cotree edges
  std::vector<int> edge_slot;                     // (v*2r+c) -> +-(i+1), 0 = tree

  ReducedWord path_from_base(const CoreGraph& g, int v) const;
};

using EdgeClassFn = int (*)(void* ctx, int u, int c, int v);
BasisData make_basis(const CoreGraph& g, EdgeClassFn cls = nullptr, void* ctx = nullptr);

// Free basis of H (length = rank), via the default spanning tree.
std::vector<ReducedWord> basis(const SubgroupHandle& h);

// w rewritten over basis letters b1..b_rank, or nullopt when w is not a
// member.  The rank-0 subgroup only contains the identity.
std::optional<ReducedWord> express(const SubgroupHandle& h, const ReducedWord& w);
// Same but against a caller-supplied basis on h's graph.
std::optional<ReducedWord> express(const CoreGraph& g, const BasisData& bd,
                                   const ReducedWord& w);

// Base-pointed label-preserving isomorphism == same subgroup.
bool is_isomorphic(const SubgroupHandle& a, const SubgroupHandle& b);

std::string serialize(const SubgroupHandle& h);
SubgroupHandle deserialize_subgroup(const std::string& text);
std::string to_dot(const SubgroupHandle& h);

}  // namespace fg
