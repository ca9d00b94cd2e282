#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <set>

#include "fg/enumeration.hpp"
#include "oracles.hpp"

using namespace fg;

static const Alphabet kXY({"x", "y"});

static SubgroupHandle make(const std::vector<std::string>& gens) {
  std::vector<ReducedWord> words;
  for (const auto& g : gens) words.push_back(parse_word(g, kXY));
  return from_generators(kXY, words);
}

TEST_CASE("stream order at budget one") {
  SubgroupStream s(kXY, 1);
  auto h1 = s.next();
  REQUIRE(h1);
  CHECK(h1->is_trivial());
  auto h2 = s.next();
  REQUIRE(h2);
  CHECK(is_isomorphic(*h2, make({"x"})));
  auto h3 = s.next();
  REQUIRE(h3);
  CHECK(is_isomorphic(*h3, make({"y"})));
  CHECK(!s.next());
}

TEST_CASE("stream covers budget two and skips finite index") {
  SubgroupStream s(kXY, 2);
  std::vector<SubgroupHandle> got;
  while (auto h = s.next()) got.push_back(*h);
  // trivial, <x>, <y>, then the length-2 singles
  REQUIRE(got.size() >= 6);
  CHECK(got[0].is_trivial());
  CHECK(is_isomorphic(got[1], make({"x"})));
  CHECK(is_isomorphic(got[2], make({"y"})));
  CHECK(is_isomorphic(got[3], make({"xx"})));
  CHECK(is_isomorphic(got[4], make({"xy"})));
  CHECK(is_isomorphic(got[5], make({"xY"})));
  std::set<std::string> keys;
  for (const auto& h : got) {
    CHECK(!index_in_F(h).finite);
    CHECK(keys.insert(serialize(h)).second);  // no duplicates
    // <x,y> (finite index) never shows up
    CHECK(!(index_in_F(h).finite));
  }
  bool has_full = false;
  for (const auto& h : got)
    if (is_isomorphic(h, make({"x", "y"}))) has_full = true;
  CHECK(!has_full);
}

TEST_CASE("stream is deterministic") {
  auto run = [] {
    SubgroupStream s(kXY, 3);
    std::string all;
    while (auto h = s.next()) all += serialize(*h) + "\n";
    return all;
  };
  CHECK(run() == run());
}

TEST_CASE("r-prefix construction and verification") {
  RPrefix p = build_R_prefix(kXY, 3);
  REQUIRE(p.stages.size() == 3);
  CHECK(!p.truncated);
  // R1 = <x>, the first nontrivial subgroup
  CHECK(is_isomorphic(p.stages[0].r, make({"x"})));
  for (size_t i = 0; i < p.stages.size(); ++i) {
    const RStage& s = p.stages[i];
    CHECK(!index_in_F(s.r).finite);
    CHECK(relative_index(s.l, s.h).finite());
    if (i > 0)
      for (const auto& g : basis(p.stages[i - 1].r)) CHECK(is_member(s.r, g));
    RelIndex v = verify_R_property(p, s.l);
    CHECK(v.finite());
  }
  // R_N itself and the full group
  CHECK(verify_R_property(p, p.final_r()) == RelIndex::make_finite(1));
  CHECK(verify_R_property(p, make({"x", "y"})).kind == RelIndex::Kind::Infinite);
  std::string why;
  CHECK_MESSAGE(p.log.verify(&why), why);
  // placeholder stages stay no-ops
  bool has_placeholder = false;
  for (const auto& st : p.log.stages())
    if (st.step == "merge_placeholder") {
      has_placeholder = true;
      CHECK(st.handles.empty());
      CHECK(st.certs.empty());
    }
  CHECK(has_placeholder);
  CHECK(!prefix_report(p).empty());
}

TEST_CASE("r-prefix truncation under a tiny cap") {
  BuildCaps caps;
  caps.max_core_vertices = 1;
  RPrefix p = build_R_prefix(kXY, 4, caps);
  CHECK(p.truncated);
  CHECK(!p.truncation_reason.empty());
  CHECK(p.stages.size() >= 1);
}

TEST_CASE("r-prefix directory round trip") {
  RPrefix p = build_R_prefix(kXY, 2);
  std::string dir = (std::filesystem::temp_directory_path() / "fg_prefix_rt").string();
  write_prefix(p, dir);
  RPrefix back = read_prefix(dir);
  REQUIRE(back.stages.size() == p.stages.size());
  for (size_t i = 0; i < p.stages.size(); ++i) {
    CHECK(is_isomorphic(back.stages[i].l, p.stages[i].l));
    CHECK(is_isomorphic(back.stages[i].h, p.stages[i].h));
    CHECK(is_isomorphic(back.stages[i].r, p.stages[i].r));
  }
  CHECK(back.alphabet == kXY);
  std::filesystem::remove_all(dir);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(SubgroupStream(kXY, 0), PreconditionError);
  CHECK_THROWS_AS(build_R_prefix(kXY, 0), PreconditionError);
  CHECK_THROWS_AS(build_R_prefix(Alphabet({"x"}), 1), PreconditionError);
}
