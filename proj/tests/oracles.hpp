// Independent slow reference implementations used to validate the library.
// Everything here is deliberately naive and shares no code with core/.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "fg/core_graph.hpp"
#include "fg/subgroup.hpp"

namespace oracle {

// repeated-scan free reduction
inline std::vector<int> naive_reduce(std::vector<int> codes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < codes.size(); ++i) {
      if (fg::inverse_code(codes[i]) == codes[i + 1]) {
        codes.erase(codes.begin() + i, codes.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return codes;
}

// membership by brute-force closure of length-capped products of generators
// and their inverses.  Tri-state: definitive yes, definitive no (closure
// reached a fixpoint under the cap), or nullopt when the state cap was hit
// before the fixpoint.  A "yes" is always sound; a fixpoint "no" is sound
// because any product can only leave the cap through longer intermediates,
// and the default cap leaves generous room above |w|.
inline std::optional<bool> closure_member(const std::vector<fg::ReducedWord>& gens,
                                          const fg::ReducedWord& w,
                                          int length_cap = -1,
                                          size_t state_cap = 300000) {
  size_t longest = 0;
  std::vector<std::vector<int>> moves;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    longest = std::max(longest, g.length());
    moves.push_back(g.codes());
    std::vector<int> inv;
    for (auto it = g.codes().rbegin(); it != g.codes().rend(); ++it)
      inv.push_back(fg::inverse_code(*it));
    moves.push_back(inv);
  }
  if (length_cap < 0)
    length_cap = static_cast<int>(w.length() + 4 * longest + 4);
  const std::vector<int>& target = w.codes();
  std::set<std::vector<int>> all{{}};
  std::vector<std::vector<int>> queue{{}};
  bool capped = false;
  while (!queue.empty()) {
    std::vector<int> word = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : moves) {
      std::vector<int> prod = word;
      prod.insert(prod.end(), m.begin(), m.end());
      prod = naive_reduce(std::move(prod));
      if (prod == target) return true;
      if (static_cast<int>(prod.size()) > length_cap) continue;
      if (all.insert(prod).second) {
        if (all.size() > state_cap) {
          capped = true;
          queue.clear();
          break;
        }
        queue.push_back(std::move(prod));
      }
    }
  }
  if (all.count(target)) return true;
  if (capped) return std::nullopt;
  return false;
}

// folding by exhaustive scan in a shuffled order; quadratic
inline fg::MutableGraph slow_fold(const fg::PreGraph& pg, std::mt19937& rng) {
  std::vector<int> rep(pg.n);
  for (int i = 0; i < pg.n; ++i) rep[i] = i;
  auto find = [&](int v) {
    while (rep[v] != v) v = rep[v];
    return v;
  };
  auto edges = pg.edges;
  std::shuffle(edges.begin(), edges.end(), rng);
  bool changed = true;
  while (changed) {
    changed = false;
    std::shuffle(edges.begin(), edges.end(), rng);
    for (size_t i = 0; i < edges.size() && !changed; ++i) {
      for (size_t j = i + 1; j < edges.size() && !changed; ++j) {
        auto [u1, c1, v1] = edges[i];
        auto [u2, c2, v2] = edges[j];
        u1 = find(u1); v1 = find(v1); u2 = find(u2); v2 = find(v2);
        int a = -1, b = -1;
        if (c1 == c2 && u1 == u2 && v1 != v2) { a = v1; b = v2; }
        else if (c1 == c2 && v1 == v2 && u1 != u2) { a = u1; b = u2; }
        else if (c1 == fg::inverse_code(c2) && u1 == v2 && v1 != u2) { a = v1; b = u2; }
        else if (c1 == fg::inverse_code(c2) && v1 == u2 && u1 != v2) { a = u1; b = v2; }
        if (a >= 0) {
          rep[std::max(a, b)] = std::min(a, b);
          changed = true;
        }
      }
    }
  }
  std::map<int, int> compact;
  for (int v = 0; v < pg.n; ++v) {
    int r = find(v);
    if (!compact.count(r)) compact[r] = static_cast<int>(compact.size());
  }
  fg::MutableGraph g(pg.rank, static_cast<int>(compact.size()));
  g.base = compact[find(pg.base)];
  for (auto [u, c, v] : pg.edges) {
    int uu = compact[find(u)], vv = compact[find(v)];
    if (g.get(uu, c) == -1) g.set_edge(uu, c, vv);
  }
  return g;
}

// independent membership check: slow shuffled fold, then trace
inline bool slow_member(const std::vector<fg::ReducedWord>& gens,
                        const fg::ReducedWord& w, std::mt19937& rng) {
  fg::PreGraph pg(2);
  for (const auto& g : gens) pg.add_word_loop(pg.base, g);
  fg::MutableGraph g = slow_fold(pg, rng);
  int v = g.base;
  for (int c : w.codes()) {
    v = g.get(v, c);
    if (v < 0) return false;
  }
  return v == g.base;
}

inline fg::ReducedWord random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  std::vector<int> codes;
  while (static_cast<int>(codes.size()) < len) {
    int c = pick(rng);
    if (!codes.empty() && fg::inverse_code(codes.back()) == c) continue;
    codes.push_back(c);
  }
  return fg::ReducedWord::reduce(codes);
}

inline std::vector<fg::ReducedWord> random_generators(std::mt19937& rng, int rank,
                                                      int max_gens, int max_len) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::uniform_int_distribution<int> wlen(1, max_len);
  std::vector<fg::ReducedWord> gens;
  int n = ngens(rng);
  for (int i = 0; i < n; ++i) gens.push_back(random_word(rng, rank, wlen(rng)));
  return gens;
}

// random subgroup that keeps infinite index (retry until the filter passes)
inline fg::SubgroupHandle random_infinite_subgroup(std::mt19937& rng,
                                                   const fg::Alphabet& alphabet,
                                                   int max_gens, int max_len) {
  for (int tries = 0; tries < 200; ++tries) {
    auto gens = random_generators(rng, alphabet.rank(), max_gens, max_len);
    fg::SubgroupHandle h = fg::from_generators(alphabet, gens);
    if (!fg::index_in_F(h).finite && !h.is_trivial()) return h;
  }
  throw std::logic_error("random_infinite_subgroup: no instance found");
}

}  // namespace oracle
