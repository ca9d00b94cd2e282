#include "fg/core_graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fg {

void MutableGraph::set_edge(int u, int c, int v) {
  assert(get(u, c) == -1 && get(v, inverse_code(c)) == -1);
  trans[static_cast<size_t>(u) * 2 * rank + c] = v;
  trans[static_cast<size_t>(v) * 2 * rank + inverse_code(c)] = u;
}

void MutableGraph::clear_edge(int u, int c) {
  int v = get(u, c);
  assert(v >= 0);
  trans[static_cast<size_t>(u) * 2 * rank + c] = -1;
  trans[static_cast<size_t>(v) * 2 * rank + inverse_code(c)] = -1;
}

void PreGraph::add_word_loop(int at, const ReducedWord& w) {
  if (w.empty()) return;
  int cur = at;
  for (size_t i = 0; i + 1 < w.length(); ++i) {
    int next = add_vertex();
    add_edge(cur, w.code(i), next);
    cur = next;
  }
  add_edge(cur, w.code(w.length() - 1), at);
}

namespace {

struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
};

}  // namespace

MutableGraph fold(const PreGraph& pg) {
  const int n = pg.n;
  Dsu dsu(n);
  // Per representative: code -> one retained target (possibly stale).
  std::vector<std::map<int, int>> out(n);
  std::deque<std::pair<int, int>> merges;

  auto insert_edge = [&](int u, int c, int v) {
    u = dsu.find(u);
    auto it = out[u].find(c);
    if (it == out[u].end()) {
      out[u].emplace(c, v);
    } else if (dsu.find(it->second) != dsu.find(v)) {
      merges.emplace_back(it->second, v);
    }
  };

  for (const auto& [u, c, v] : pg.edges) {
    insert_edge(u, c, v);
    insert_edge(v, inverse_code(c), u);
  }

  while (!merges.empty()) {
    auto [a, b] = merges.front();
    merges.pop_front();
    a = dsu.find(a);
    b = dsu.find(b);
    if (a == b) continue;
    if (dsu.size[a] < dsu.size[b]) std::swap(a, b);
    dsu.parent[b] = a;
    dsu.size[a] += dsu.size[b];
    // merge b's map into a's
    for (auto& [c, t] : out[b]) {
      auto it = out[a].find(c);
      if (it == out[a].end()) {
        out[a].emplace(c, t);
      } else if (dsu.find(it->second) != dsu.find(t)) {
        merges.emplace_back(it->second, t);
      }
    }
    out[b].clear();
  }

  // Compact representatives.
  std::vector<int> id(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (dsu.find(v) == v) id[v] = m++;

  MutableGraph g(pg.rank, m);
  for (int v = 0; v < n; ++v) {
    if (dsu.find(v) != v) continue;
    for (auto& [c, t] : out[v]) {
      int w = id[dsu.find(t)];
      int existing = g.get(id[v], c);
      assert(existing == -1 || existing == w);
      if (existing == -1) {
        // set only this direction here; the inverse entry is inserted when
        // the other endpoint's map is visited (it always is, by symmetry)
        g.trans[static_cast<size_t>(id[v]) * 2 * g.rank + c] = w;
      }
    }
  }
  g.base = id[dsu.find(pg.base)];
  return g;
}

void trim(MutableGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  std::vector<int> deg(n);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (v != g.base && deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (removed[v] || v == g.base) continue;
    if (deg[v] > 1) continue;
    removed[v] = 1;
    for (int c = 0; c < 2 * g.rank; ++c) {
      int w = g.get(v, c);
      if (w < 0) continue;
      g.clear_edge(v, c);
      deg[v]--;
      deg[w]--;
      if (w != g.base && deg[w] <= 1 && !removed[w]) queue.push_back(w);
    }
  }
  // compact
  std::vector<int> id(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) id[v] = m++;
  MutableGraph out(g.rank, m);
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    for (int c = 0; c < 2 * g.rank; ++c) {
      int w = g.get(v, c);
      if (w >= 0) out.trans[static_cast<size_t>(id[v]) * 2 * g.rank + c] = id[w];
    }
  }
  out.base = id[g.base];
  g = std::move(out);
}

CoreGraph::CoreGraph(Alphabet alphabet, MutableGraph g, std::vector<int>* old_to_new)
    : alphabet_(std::move(alphabet)) {
  if (g.rank != alphabet_.rank())
    throw std::logic_error("graph rank does not match alphabet");
  trim(g);
  const int n = g.vertex_count();
  // BFS renumbering from base in code order.
  std::vector<int> order(n, -1);
  std::deque<int> queue{g.base};
  order[g.base] = 0;
  int next = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int c = 0; c < 2 * g.rank; ++c) {
      int w = g.get(v, c);
      if (w >= 0 && order[w] < 0) {
        order[w] = next++;
        queue.push_back(w);
      }
    }
  }
  if (next != n) throw std::logic_error("core graph is not connected");
  MutableGraph canon(g.rank, n);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < 2 * g.rank; ++c) {
      int w = g.get(v, c);
      if (w >= 0)
        canon.trans[static_cast<size_t>(order[v]) * 2 * g.rank + c] = order[w];
    }
  }
  canon.base = 0;
  g_ = std::move(canon);
  if (old_to_new) *old_to_new = order;
  // invariants: involution and degrees
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < 2 * g_.rank; ++c) {
      int w = g_.get(v, c);
      if (w >= 0 && g_.get(w, inverse_code(c)) != v)
        throw std::logic_error("edge involution violated");
    }
    if (v != 0 && g_.degree(v) <= 1)
      throw std::logic_error("non-base vertex of degree <= 1 after trim");
  }
}

CoreGraph::CoreGraph(Alphabet alphabet, MutableGraph g, bool)
    : alphabet_(std::move(alphabet)), g_(std::move(g)) {}

CoreGraph CoreGraph::trivial(Alphabet alphabet) {
  MutableGraph g(alphabet.rank(), 1);
  return CoreGraph(std::move(alphabet), std::move(g));
}

long CoreGraph::edge_pairs() const {
  long d = 0;
  for (int v = 0; v < vertex_count(); ++v) d += g_.degree(v);
  return d / 2;
}

std::string CoreGraph::serialize() const {
  std::ostringstream out;
  out << "base=0 vertices=" << vertex_count() << " alphabet=" << alphabet_.joined()
      << "\n";
  for (int v = 0; v < vertex_count(); ++v) {
    for (int b = 0; b < alphabet_.rank(); ++b) {
      int w = g_.get(v, positive_code(b));
      if (w >= 0) out << v << " " << alphabet_.name(b) << " " << w << "\n";
    }
  }
  return out.str();
}

CoreGraph CoreGraph::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ParseError("line 1: missing header");
  ++lineno;
  int nvert = -1;
  std::string alpha_field;
  {
    std::istringstream hs(line);
    std::string tok;
    int base = -1;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError("line 1: bad header token '" + tok + "'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "base") base = std::stoi(val);
      else if (key == "vertices") nvert = std::stoi(val);
      else if (key == "alphabet") alpha_field = val;
      else throw ParseError("line 1: unknown header key '" + key + "'");
    }
    if (base != 0) throw ParseError("line 1: base must be 0");
    if (nvert <= 0) throw ParseError("line 1: missing or bad vertex count");
    if (alpha_field.empty()) throw ParseError("line 1: missing alphabet");
  }
  std::vector<std::string> names;
  {
    std::string cur;
    for (char ch : alpha_field) {
      if (ch == ',') {
        names.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    names.push_back(cur);
  }
  Alphabet alphabet(names);
  MutableGraph g(alphabet.rank(), nvert);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    int u, v;
    std::string letter;
    if (!(ls >> u >> letter >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'from letter to'");
    int b = alphabet.index_of(letter);
    if (b < 0)
      throw ParseError("line " + std::to_string(lineno) + ": unknown letter '" + letter + "'");
    if (u < 0 || u >= nvert || v < 0 || v >= nvert)
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
    if (g.get(u, positive_code(b)) != -1 || g.get(v, negative_code(b)) != -1)
      throw ParseError("line " + std::to_string(lineno) + ": duplicate edge slot");
    g.set_edge(u, positive_code(b), v);
  }
  CoreGraph out(alphabet, g);
  if (out.vertex_count() != nvert)
    throw ParseError("serialized graph was not a trimmed core");
  return out;
}

std::string CoreGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph core {\n";
  out << "  rankdir=LR;\n";
  out << "  0 [shape=doublecircle];\n";
  for (int v = 1; v < vertex_count(); ++v) out << "  " << v << " [shape=circle];\n";
  for (int v = 0; v < vertex_count(); ++v) {
    for (int b = 0; b < alphabet_.rank(); ++b) {
      int w = g_.get(v, positive_code(b));
      if (w >= 0)
        out << "  " << v << " -> " << w << " [label=\"" << alphabet_.name(b) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fg
