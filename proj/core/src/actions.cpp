#include "fg/actions.hpp"

#include <numeric>
#include <sstream>

namespace fg {

Index orbit_size(const SubgroupHandle& r, const SubgroupHandle& l,
                 const ReducedWord& g) {
  SubgroupHandle lp = conjugate_subgroup(l, g);
  RelIndex ri = relative_index(lp, intersect(lp, r));
  return ri.finite() ? Index::make_finite(ri.n) : Index::infinite();
}

namespace {

// index of the rep carrying coset R*(w), or -1 when none is in the ball
int find_coset(const SubgroupHandle& r, const std::vector<ReducedWord>& reps,
               const ReducedWord& w) {
  for (size_t j = 0; j < reps.size(); ++j)
    if (is_member(r, concat(w, invert(reps[j])))) return static_cast<int>(j);
  return -1;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CosetBall coset_ball(const SubgroupHandle& r, int radius) {
  if (radius < 0) throw PreconditionError("coset_ball: radius must be >= 0");
  CosetBall ball;
  ball.radius = radius;
  ball.reps.push_back(ReducedWord::identity());
  // length by length in code order, so the kept representative of each coset
  // is the canonically first word reaching it
  for (int len = 1; len <= radius; ++len) {
    std::vector<ReducedWord> of_len;
    std::vector<int> buf;
    auto gen = [&](auto&& self) -> void {
      if (static_cast<int>(buf.size()) == len) {
        of_len.push_back(ReducedWord::reduce(buf));
        return;
      }
      for (int c = 0; c < r.alphabet().num_codes(); ++c) {
        if (!buf.empty() && inverse_code(buf.back()) == c) continue;
        buf.push_back(c);
        self(self);
        buf.pop_back();
      }
    };
    gen(gen);
    for (const auto& w : of_len)
      if (find_coset(r, ball.reps, w) < 0) ball.reps.push_back(w);
  }
  return ball;
}

BallPartition orbits_on_ball(const SubgroupHandle& r, const SubgroupHandle& l,
                             int radius) {
  if (r.alphabet() != l.alphabet())
    throw PreconditionError("subgroups are over different alphabets");
  BallPartition part;
  part.ball = coset_ball(r, radius);
  const auto& reps = part.ball.reps;
  const int n = static_cast<int>(reps.size());

  std::vector<ReducedWord> moves;
  for (const auto& b : basis(l)) {
    moves.push_back(b);
    moves.push_back(invert(b));
  }
  Dsu dsu(n);
  std::vector<char> escapes(n, 0);
  for (int i = 0; i < n; ++i) {
    for (const auto& m : moves) {
      int j = find_coset(r, reps, concat(reps[i], m));
      if (j < 0) escapes[i] = 1;
      else dsu.unite(i, j);
    }
  }
  std::vector<int> cell_of(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = dsu.find(i);
    if (cell_of[root] < 0) {
      cell_of[root] = static_cast<int>(part.cells.size());
      part.cells.emplace_back();
    }
    part.cells[cell_of[root]].members.push_back(i);
    if (escapes[i]) part.cells[cell_of[root]].open = true;
  }
  return part;
}

bool cosets_distinct(const SubgroupHandle& r, const std::vector<ReducedWord>& words) {
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      if (is_member(r, concat(words[i], invert(words[j])))) return false;
  return true;
}

std::string ball_to_dot(const SubgroupHandle& r, const CosetBall& ball) {
  std::ostringstream out;
  out << "digraph schreier {\n";
  for (size_t i = 0; i < ball.reps.size(); ++i) {
    out << "  n" << i << " [label=\""
        << (ball.reps[i].empty() ? "1" : format_word(ball.reps[i], r.alphabet()))
        << "\"";
    if (i == 0) out << " shape=doublecircle";
    out << "];\n";
  }
  for (size_t i = 0; i < ball.reps.size(); ++i) {
    for (int b = 0; b < r.alphabet().rank(); ++b) {
      ReducedWord moved =
          concat(ball.reps[i], ReducedWord::letter(positive_code(b)));
      int j = find_coset(r, ball.reps, moved);
      if (j >= 0)
        out << "  n" << i << " -> n" << j << " [label=\"" << r.alphabet().name(b)
            << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string partition_report(const SubgroupHandle& r, const SubgroupHandle& l,
                             const BallPartition& part) {
  std::ostringstream out;
  out << "cosets in ball (radius " << part.ball.radius << "): "
      << part.ball.reps.size() << "\n";
  for (size_t c = 0; c < part.cells.size(); ++c) {
    const auto& cell = part.cells[c];
    out << "cell " << (c + 1) << " (" << (cell.open ? "open" : "interior")
        << ", size " << cell.members.size() << "):";
    for (int i : cell.members) {
      out << " "
          << (part.ball.reps[i].empty() ? "1"
                                        : format_word(part.ball.reps[i], r.alphabet()));
    }
    out << "\n";
  }
  (void)l;
  return out.str();
}

}  // namespace fg
