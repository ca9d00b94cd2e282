#pragma once

#include <string>
#include <vector>

#include "fg/constructions.hpp"

namespace fg {

// Size of the orbit of coset Rg under right multiplication by L:
// equals [L' : L' ∩ R] for L' = g L g^-1.
Index orbit_size(const SubgroupHandle& r, const SubgroupHandle& l, const ReducedWord& g);

// A finite window onto the coset space of R: representatives of the
// pairwise-distinct cosets Rg over all words g of length <= radius, with the
// identity first, in length-then-code order.
struct CosetBall {
  int radius = 0;
  std::vector<ReducedWord> reps;
};
CosetBall coset_ball(const SubgroupHandle& r, int radius);

// Partition of a coset ball into L-orbit cells.  A cell is open when some
// generator move from it leaves the ball; only interior (closed) cells report
// their true orbit size.
struct BallPartition {
  CosetBall ball;
  struct Cell {
    std::vector<int> members;  // indices into ball.reps
    bool open = false;
  };
  std::vector<Cell> cells;
};
BallPartition orbits_on_ball(const SubgroupHandle& r, const SubgroupHandle& l,
                             int radius);

// true iff g_i g_j^-1 is outside R for all i < j
bool cosets_distinct(const SubgroupHandle& r, const std::vector<ReducedWord>& words);

// Schreier graph of the ball: cosets as nodes, alphabet moves as edges.
std::string ball_to_dot(const SubgroupHandle& r, const CosetBall& ball);

std::string partition_report(const SubgroupHandle& r, const SubgroupHandle& l,
                             const BallPartition& part);

}  // namespace fg
