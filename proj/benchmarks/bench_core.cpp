#include <benchmark/benchmark.h>

#include <random>

#include "fg/constructions.hpp"

using namespace fg;

namespace {

const Alphabet kXY({"x", "y"});

ReducedWord random_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<int> codes;
  while (static_cast<int>(codes.size()) < len) {
    int c = pick(rng);
    if (!codes.empty() && inverse_code(codes.back()) == c) continue;
    codes.push_back(c);
  }
  return ReducedWord::reduce(codes);
}

std::vector<ReducedWord> random_gens(std::mt19937& rng, int count, int len) {
  std::vector<ReducedWord> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_word(rng, len));
  return gens;
}

void BM_Fold(benchmark::State& state) {
  std::mt19937 rng(1);
  auto gens = random_gens(rng, static_cast<int>(state.range(0)), 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_generators(kXY, gens));
  }
}
BENCHMARK(BM_Fold)->Arg(4)->Arg(16)->Arg(64);

void BM_Membership(benchmark::State& state) {
  std::mt19937 rng(2);
  SubgroupHandle h = from_generators(kXY, random_gens(rng, 8, 20));
  std::vector<ReducedWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 12));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(is_member(h, w));
  }
}
BENCHMARK(BM_Membership);

void BM_Intersect(benchmark::State& state) {
  std::mt19937 rng(3);
  SubgroupHandle a = from_generators(kXY, random_gens(rng, 6, 18));
  SubgroupHandle b = from_generators(kXY, random_gens(rng, 6, 18));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(a, b));
  }
}
BENCHMARK(BM_Intersect);

void BM_SmallJoin(benchmark::State& state) {
  SubgroupHandle a = from_generators(kXY, {parse_word("xy", kXY)});
  SubgroupHandle b = from_generators(kXY, {parse_word("yx", kXY)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(small_join(a, b, {}));
  }
}
BENCHMARK(BM_SmallJoin);

}  // namespace

BENCHMARK_MAIN();
