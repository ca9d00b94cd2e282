#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fg/constructions.hpp"
#include "oracles.hpp"

using namespace fg;

static const Alphabet kXY({"x", "y"});

static SubgroupHandle make(const std::vector<std::string>& gens,
                           const Alphabet& alphabet = kXY) {
  std::vector<ReducedWord> words;
  for (const auto& g : gens) words.push_back(parse_word(g, alphabet));
  return from_generators(alphabet, words);
}

static void check_envelope_clauses(const SubgroupHandle& a, const SubgroupHandle& b,
                                   const EnvelopePair& p) {
  // (a) finite-index shrink of a
  RelIndex ra = relative_index(a, p.a1);
  CHECK(ra.finite());
  // (b) finite-index shrink of b
  RelIndex rb = relative_index(b, p.b0);
  CHECK(rb.finite());
  // (c) both sit inside the envelope
  for (const auto& g : basis(p.a1)) CHECK(is_member(p.b1, g));
  for (const auto& g : basis(p.b0)) CHECK(is_member(p.b1, g));
  // (d) the envelope still has infinite index
  CHECK(!index_in_F(p.b1).finite);
}

TEST_CASE("envelope pair on the basic example") {
  StageLog log;
  EnvelopePair p = envelope_pair(make({"x"}), make({"y"}), &log);
  CHECK(is_isomorphic(p.a1, make({"x"})));
  CHECK(is_isomorphic(p.b0, make({"yy"})));
  CHECK(is_isomorphic(p.b1, make({"x", "yy"})));
  check_envelope_clauses(make({"x"}), make({"y"}), p);
  CHECK(!log.empty());
  std::string why;
  CHECK_MESSAGE(log.verify(&why), why);
}

TEST_CASE("envelope pair when b stays inside the factor") {
  SubgroupHandle a = make({"x", "yxY"});
  SubgroupHandle b = make({"x"});
  EnvelopePair p = envelope_pair(a, b);
  CHECK(is_isomorphic(p.a1, a));
  CHECK(is_isomorphic(p.b1, a));
  check_envelope_clauses(a, b, p);
}

TEST_CASE("envelope pair on random pairs") {
  std::mt19937 rng(271828);
  int done = 0;
  while (done < 12) {
    SubgroupHandle a = oracle::random_infinite_subgroup(rng, kXY, 2, 4);
    SubgroupHandle b = oracle::random_infinite_subgroup(rng, kXY, 2, 4);
    StageLog log;
    EnvelopePair p;
    try {
      p = envelope_pair(a, b, &log);
    } catch (const ResourceError&) {
      continue;  // instance too large for the pipeline caps; draw another
    }
    check_envelope_clauses(a, b, p);
    std::string why;
    CHECK_MESSAGE(log.verify(&why), why);
    ++done;
  }
}

TEST_CASE("envelope pair preconditions") {
  CHECK_THROWS_AS(envelope_pair(make({}), make({"y"})), PreconditionError);
  CHECK_THROWS_AS(envelope_pair(make({"x", "y"}), make({"y"})), PreconditionError);
  CHECK_THROWS_AS(envelope_pair(make({"x"}), make({"x", "y"})), PreconditionError);
}

TEST_CASE("family shrink on a small family") {
  StageLog log;
  FamilyShrink fam = family_shrink({make({"x"}), make({"y"})}, &log);
  REQUIRE(fam.shrunk.size() == 2);
  CHECK(relative_index(make({"x"}), fam.shrunk[0]).finite());
  CHECK(relative_index(make({"y"}), fam.shrunk[1]).finite());
  CHECK(!index_in_F(fam.joined).finite);
  std::string why;
  CHECK_MESSAGE(log.verify(&why), why);
}

TEST_CASE("family shrink on random families") {
  std::mt19937 rng(13579);
  for (int t = 0; t < 6; ++t) {
    std::vector<SubgroupHandle> family;
    int n = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i)
      family.push_back(oracle::random_infinite_subgroup(rng, kXY, 2, 3));
    FamilyShrink fam;
    try {
      fam = family_shrink(family);
    } catch (const ResourceError&) {
      continue;  // instance too large for the pipeline caps; draw another
    }
    REQUIRE(fam.shrunk.size() == family.size());
    for (size_t i = 0; i < family.size(); ++i)
      CHECK(relative_index(family[i], fam.shrunk[i]).finite());
    CHECK(!index_in_F(fam.joined).finite);
    for (const auto& s : fam.shrunk)
      for (const auto& g : basis(s)) CHECK(is_member(fam.joined, g));
  }
}

TEST_CASE("normal core of a non-normal index-3 subgroup") {
  // coset graph of the point stabilizer under x -> (0 1 2), y -> (0 1)
  SubgroupHandle u = deserialize_subgroup(
      "base=0 vertices=3 alphabet=x,y\n"
      "0 x 1\n"
      "0 y 1\n"
      "1 x 2\n"
      "1 y 0\n"
      "2 x 0\n"
      "2 y 2\n");
  SubgroupHandle f = make({"x", "y"});
  CHECK(index_in_F(u) == Index::make_finite(3));
  SubgroupHandle n = normal_core_in(u, f);
  CHECK(relative_index(f, n) == RelIndex::make_finite(6));
  for (const auto& g : basis(n)) CHECK(is_member(u, g));
  CHECK(!is_member(n, parse_word("xYXy", kXY)));
}

TEST_CASE("normal core is already there for index two") {
  SubgroupHandle b = make({"xx", "y", "xyX"});
  SubgroupHandle n = normal_core_in(b, make({"x", "y"}));
  CHECK(is_isomorphic(n, b));
}

TEST_CASE("normalized envelope on the basic example") {
  NormalizedEnvelope ne = normalized_envelope(make({"x"}), make({"y"}));
  CHECK(is_isomorphic(ne.b2, make({"x", "yy"})));
  CHECK(is_isomorphic(ne.h, make({"yy"})));
  std::string why;
  CHECK_MESSAGE(ne.log.verify(&why), why);
}

static void check_normalized_clauses(const SubgroupHandle& a, const SubgroupHandle& b,
                                     const NormalizedEnvelope& ne) {
  // (a) H is a finite-index subgroup of B
  CHECK(relative_index(b, ne.h).finite());
  // (b) H sits inside B2
  for (const auto& g : basis(ne.h)) CHECK(is_member(ne.b2, g));
  // (c) B2 has infinite index
  CHECK(!index_in_F(ne.b2).finite);
  // (d) conjugation by A's generators fixes B2 in both directions
  for (const auto& x : basis(a))
    for (const auto& v : basis(ne.b2)) {
      CHECK(is_member(ne.b2, conjugate(x, v)));
      CHECK(is_member(ne.b2, conjugate(invert(x), v)));
    }
}

TEST_CASE("normalized envelope with trivial a") {
  SubgroupHandle a = make({});
  SubgroupHandle b = make({"xy"});
  NormalizedEnvelope ne = normalized_envelope(a, b);
  check_normalized_clauses(a, b, ne);
}

TEST_CASE("normalized envelope on random pairs") {
  std::mt19937 rng(987654);
  int done = 0;
  while (done < 5) {
    SubgroupHandle a = oracle::random_infinite_subgroup(rng, kXY, 2, 3);
    SubgroupHandle b = oracle::random_infinite_subgroup(rng, kXY, 2, 3);
    NormalizedEnvelope ne;
    try {
      ne = normalized_envelope(a, b);
    } catch (const ResourceError&) {
      continue;  // instance too large for the pipeline caps; draw another
    }
    check_normalized_clauses(a, b, ne);
    std::string why;
    CHECK_MESSAGE(ne.log.verify(&why), why);
    ++done;
  }
}

TEST_CASE("small join end to end") {
  SubgroupHandle a = make({"x"});
  SubgroupHandle b = make({"y"});
  SUBCASE("no exclusions") {
    SmallJoin sj = small_join(a, b, {});
    CHECK(is_isomorphic(sj.h, make({"yy"})));
    CHECK(relative_index(b, sj.h) == RelIndex::make_finite(2));
    CHECK(!index_in_F(join(a, sj.h)).finite);
    std::string why;
    CHECK_MESSAGE(sj.log.verify(&why), why);
  }
  SUBCASE("avoiding y") {
    SmallJoin sj = small_join(a, b, {parse_word("y", kXY)});
    CHECK(relative_index(b, sj.h).finite());
    SubgroupHandle j = join(a, sj.h);
    CHECK(!index_in_F(j).finite);
    CHECK(!is_member(j, parse_word("y", kXY)));
  }
  SUBCASE("trivial b") {
    SmallJoin sj = small_join(a, make({}), {parse_word("y", kXY)});
    CHECK(sj.h.is_trivial());
  }
  SUBCASE("excluded member rejected") {
    CHECK_THROWS_AS(small_join(a, b, {parse_word("xx", kXY)}), PreconditionError);
  }
}

TEST_CASE("small join on random triples") {
  std::mt19937 rng(112358);
  int done = 0;
  while (done < 5) {
    SubgroupHandle a = oracle::random_infinite_subgroup(rng, kXY, 2, 3);
    SubgroupHandle b = oracle::random_infinite_subgroup(rng, kXY, 2, 3);
    std::vector<ReducedWord> s;
    ReducedWord w = oracle::random_word(rng, 2, 1 + static_cast<int>(rng() % 3));
    if (!is_member(a, w)) s.push_back(w);
    SmallJoin sj;
    try {
      sj = small_join(a, b, s);
    } catch (const ResourceError&) {
      continue;  // instance too large for the pipeline caps; draw another
    }
    CHECK(relative_index(b, sj.h).finite());
    SubgroupHandle j = join(a, sj.h);
    CHECK(!index_in_F(j).finite);
    for (const auto& ex : s) CHECK(!is_member(j, ex));
    ++done;
  }
}

TEST_CASE("small cancellation checker") {
  // x y x y^2 x y^3 ... x y^45: every tenth-length window straddles a fully
  // delimited run whose exponent occurs once
  std::vector<int> raw;
  for (int k = 1; k <= 45; ++k) {
    raw.push_back(positive_code(0));
    for (int t = 0; t < k; ++t) raw.push_back(positive_code(1));
  }
  ReducedWord good = ReducedWord::reduce(raw);
  std::vector<int> bad_raw(40, positive_code(0));
  ReducedWord periodic = ReducedWord::reduce(bad_raw);

  CHECK(check_smallcancel({good}, kXY, 1).ok);
  CHECK(!check_smallcancel({periodic}, kXY, 1).ok);
  // the same word twice always shares windows
  CHECK(!check_smallcancel({good, good}, kXY, 1).ok);
  // too short relative to |w|
  CHECK(!check_smallcancel({good}, kXY, 200).ok);
  CHECK_THROWS_AS(check_smallcancel({parse_word("xY", kXY)}, kXY, 1),
                  PreconditionError);
}

TEST_CASE("normal supplement witness for w = x") {
  ReducedWord w = parse_word("x", kXY);
  NormalSupplementWitness wit = normal_supplement_witness(kXY, w);
  REQUIRE(wit.u_words.size() == 4);
  REQUIRE(wit.v_words.size() == 2);
  CHECK(check_smallcancel(wit.u_words, kXY, w.length()).ok);
  CHECK(rank(wit.h) == 2);
  CHECK(!index_in_F(wit.h).finite);
  CHECK(!is_member(wit.h, parse_word("x", kXY)));
  CHECK(!is_member(wit.h, parse_word("y", kXY)));
  for (size_t i = 0; i < wit.v_words.size(); ++i) {
    ReducedWord xi = ReducedWord::letter(positive_code(static_cast<int>(i)));
    ReducedWord lhs = concat(wit.v_words[i], invert(xi));
    ReducedWord rhs = concat(conjugate(wit.u_words[2 * i], w),
                             conjugate(concat(xi, wit.u_words[2 * i + 1]), w));
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(normal_supplement_witness(Alphabet({"x"}), w), PreconditionError);
  CHECK_THROWS_AS(normal_supplement_witness(kXY, ReducedWord::identity()),
                  PreconditionError);
}
