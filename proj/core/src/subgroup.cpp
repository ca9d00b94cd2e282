#include "fg/subgroup.hpp"

#include <algorithm>
#include <deque>

namespace fg {

SubgroupHandle from_generators(const Alphabet& alphabet,
                               const std::vector<ReducedWord>& generators,
                               std::string name) {
  PreGraph pg(alphabet.rank());
  for (const auto& g : generators) pg.add_word_loop(pg.base, g);
  MutableGraph folded = fold(pg);
  return SubgroupHandle{CoreGraph(alphabet, std::move(folded)), std::move(name)};
}

bool is_member(const SubgroupHandle& h, const ReducedWord& w, MembershipPath* path) {
  int v = h.graph.base();
  std::vector<int> trail{v};
  for (int c : w.codes()) {
    v = h.graph.target(v, c);
    if (v < 0) return false;
    trail.push_back(v);
  }
  if (v != h.graph.base()) return false;
  if (path) path->vertices = std::move(trail);
  return true;
}

std::vector<int> full_letter_set(const Alphabet& alphabet) {
  std::vector<int> y(alphabet.rank());
  for (int i = 0; i < alphabet.rank(); ++i) y[i] = i;
  return y;
}

DeficitReport deficit_vertices(const SubgroupHandle& h, const std::vector<int>& y) {
  DeficitReport report;
  for (int v = 0; v < h.graph.vertex_count(); ++v) {
    std::vector<int> missing;
    for (int b : y) {
      for (int c : {positive_code(b), negative_code(b)}) {
        if (h.graph.target(v, c) < 0) missing.push_back(c);
      }
    }
    if (!missing.empty()) report.entries.push_back({v, std::move(missing)});
  }
  return report;
}

Index index_in_F(const SubgroupHandle& h) {
  auto report = deficit_vertices(h, full_letter_set(h.alphabet()));
  if (!report.empty()) return Index::infinite();
  return Index::make_finite(h.graph.vertex_count());
}

HandlePath handle(const SubgroupHandle& h) {
  HandlePath path;
  const CoreGraph& g = h.graph;
  path.vertices.push_back(g.base());
  if (g.degree(g.base()) != 1) return path;
  int prev_code = -1;
  int v = g.base();
  while (true) {
    int next_code = -1;
    for (int c = 0; c < g.alphabet().num_codes(); ++c) {
      if (c == prev_code) continue;  // do not reverse the edge just taken
      if (g.target(v, c) >= 0) {
        next_code = c;
        break;
      }
    }
    if (next_code < 0) break;  // dead end (single-edge graph)
    int w = g.target(v, next_code);
    if (g.degree(w) > 2) {
      // w is the attachment vertex p_+
      path.codes.push_back(next_code);
      path.vertices.push_back(w);
      break;
    }
    path.codes.push_back(next_code);
    path.vertices.push_back(w);
    prev_code = inverse_code(next_code);
    v = w;
    if (g.degree(w) < 2) break;
  }
  return path;
}

Subgraph frame(const SubgroupHandle& h, const std::vector<int>& y) {
  const CoreGraph& g = h.graph;
  Subgraph sub;
  sub.has_vertex.assign(g.vertex_count(), 0);
  std::deque<int> queue{g.base()};
  sub.has_vertex[g.base()] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int b : y) {
      for (int c : {positive_code(b), negative_code(b)}) {
        int w = g.target(v, c);
        if (w >= 0 && !sub.has_vertex[w]) {
          sub.has_vertex[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!sub.has_vertex[v]) continue;
    for (int b : y) {
      int w = g.target(v, positive_code(b));
      if (w >= 0 && sub.has_vertex[w]) sub.edges.emplace_back(v, positive_code(b), w);
    }
  }
  return sub;
}

int rank(const SubgroupHandle& h) {
  return static_cast<int>(h.graph.edge_pairs()) - h.graph.vertex_count() + 1;
}

ReducedWord BasisData::path_from_base(const CoreGraph& g, int v) const {
  (void)g;
  std::vector<int> rev;
  while (parent_vertex[v] >= 0) {
    rev.push_back(parent_code[v]);
    v = parent_vertex[v];
  }
  std::reverse(rev.begin(), rev.end());
  return ReducedWord::reduce(rev);
}

BasisData make_basis(const CoreGraph& g, EdgeClassFn cls, void* ctx) {
  const int n = g.vertex_count();
  const int codes = g.alphabet().num_codes();
  auto edge_class = [&](int u, int c, int v) -> int {
    return cls ? cls(ctx, u, c, v) : 0;
  };

  BasisData bd;
  bd.parent_vertex.assign(n, -1);
  bd.parent_code.assign(n, -1);
  bd.edge_slot.assign(static_cast<size_t>(n) * codes, 0);
  std::vector<char> visited(n, 0);
  std::deque<int> queue{g.base()};
  visited[g.base()] = 1;
  std::vector<char> tree_edge(static_cast<size_t>(n) * codes, 0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int c = 0; c < codes; ++c) {
      int w = g.target(v, c);
      if (w < 0 || visited[w]) continue;
      if (edge_class(v, c, w) != 0) continue;  // tree uses class-0 edges only
      visited[w] = 1;
      bd.parent_vertex[w] = v;
      bd.parent_code[w] = c;
      tree_edge[static_cast<size_t>(v) * codes + c] = 1;
      tree_edge[static_cast<size_t>(w) * codes + inverse_code(c)] = 1;
      queue.push_back(w);
    }
  }
  // All vertices must be spanned by class-0 edges (callers guarantee this).
  for (int v = 0; v < n; ++v)
    if (!visited[v]) throw std::logic_error("class-0 edges do not span the graph");

  // Co-tree edges: class 0 first, positive direction, canonical order.
  for (int pass = 0; pass < 2; ++pass) {
    for (int v = 0; v < n; ++v) {
      for (int b = 0; b < g.alphabet().rank(); ++b) {
        int c = positive_code(b);
        int w = g.target(v, c);
        if (w < 0 || tree_edge[static_cast<size_t>(v) * codes + c]) continue;
        if (edge_class(v, c, w) != pass) continue;
        bd.cotree.emplace_back(v, c, w);
        if (pass == 0) ++bd.primary_count;
      }
    }
  }
  for (size_t i = 0; i < bd.cotree.size(); ++i) {
    auto [u, c, w] = bd.cotree[i];
    bd.edge_slot[static_cast<size_t>(u) * codes + c] = static_cast<int>(i) + 1;
    if (!(u == w && inverse_code(c) == c))
      bd.edge_slot[static_cast<size_t>(w) * codes + inverse_code(c)] =
          -(static_cast<int>(i) + 1);
    ReducedWord word = concat(
        concat(bd.path_from_base(g, u), ReducedWord::letter(c)),
        invert(bd.path_from_base(g, w)));
    bd.words.push_back(std::move(word));
  }
  return bd;
}

std::vector<ReducedWord> basis(const SubgroupHandle& h) {
  return make_basis(h.graph).words;
}

std::optional<ReducedWord> express(const CoreGraph& g, const BasisData& bd,
                                   const ReducedWord& w) {
  const int codes = g.alphabet().num_codes();
  int v = g.base();
  std::vector<int> letters;
  for (int c : w.codes()) {
    int slot = bd.edge_slot[static_cast<size_t>(v) * codes + c];
    int t = g.target(v, c);
    if (t < 0) return std::nullopt;
    if (slot > 0) letters.push_back(positive_code(slot - 1));
    else if (slot < 0) letters.push_back(negative_code(-slot - 1));
    v = t;
  }
  if (v != g.base()) return std::nullopt;
  return ReducedWord::reduce(letters);
}

std::optional<ReducedWord> express(const SubgroupHandle& h, const ReducedWord& w) {
  return express(h.graph, make_basis(h.graph), w);
}

bool is_isomorphic(const SubgroupHandle& a, const SubgroupHandle& b) {
  return a.graph == b.graph;
}

std::string serialize(const SubgroupHandle& h) { return h.graph.serialize(); }

SubgroupHandle deserialize_subgroup(const std::string& text) {
  return SubgroupHandle{CoreGraph::deserialize(text), ""};
}

std::string to_dot(const SubgroupHandle& h) { return h.graph.to_dot(); }

}  // namespace fg
