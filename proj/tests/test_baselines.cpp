#include <doctest.h>

#include "gog/baselines.hpp"
#include "gog/bench.hpp"
#include "gog/derivation.hpp"
#include "support/fixtures.hpp"

using namespace gog;

TEST_CASE("syllable decomposition is the maximal alternation") {
  GroupSchema s = fixtures::zxz();
  auto syl = syllable_decompose(s, fixtures::parse(s, "a b b' a b"));
  REQUIRE(syl.size() == 4);
  CHECK(syl[0].word == fixtures::parse(s, "a"));
  CHECK(syl[1].word == fixtures::parse(s, "b b'"));
  CHECK(syl[2].word == fixtures::parse(s, "a"));
  CHECK(syl[3].word == fixtures::parse(s, "b"));
  for (std::size_t i = 1; i < syl.size(); ++i) {
    CHECK(syl[i - 1].vertex != syl[i].vertex);
    CHECK_FALSE(syl[i].word.empty());
  }
}

TEST_CASE("round based reducer stops after two rounds on the worked example") {
  GroupSchema s = fixtures::zxz();
  auto res = many_iterations(s, fixtures::parse(s, "a b b' a b"));
  CHECK(res.verdict == Verdict::NonTrivial);
  CHECK(res.rounds == 2);
}

TEST_CASE("empty word costs nothing") {
  GroupSchema s = fixtures::zxz();
  auto res = many_iterations(s, Word{});
  CHECK(res.verdict == Verdict::Trivial);
  CHECK(res.charge == 0);
}

TEST_CASE("staircase family is trivial and takes one round per pair") {
  GroupSchema s = fixtures::zxz();
  for (std::int64_t k = 1; k <= 8; ++k) {
    Word w = gen_slow_many(s, k);
    CHECK(w.size() == static_cast<std::size_t>(8 * k));
    auto res = many_iterations(s, w);
    CHECK(res.verdict == Verdict::Trivial);
    // One round per cancelling pair: the word holds 2k of them.
    CHECK(res.rounds == 2 * (2 * k));
    ChargeMeter m;
    CHECK(brute_force_verdict(s, w, m) == Verdict::Trivial);
  }
}

TEST_CASE("staircase letters are the documented sequence") {
  GroupSchema s = fixtures::zxz();
  CHECK(gen_slow_many(s, 1) ==
        fixtures::parse(s, "a b a b b' a' b' a'"));
}

TEST_CASE("single pass reducer handles the staircase in one pass") {
  GroupSchema s = fixtures::zxz();
  auto res = one_iteration(s, gen_slow_many(s, 2));
  CHECK(res.verdict == Verdict::Trivial);
  CHECK(res.rounds == 1);

  auto single = one_iteration(s, fixtures::parse(s, "a"));
  CHECK(single.verdict == Verdict::NonTrivial);
}

TEST_CASE("padded power family shape and verdicts") {
  GroupSchema s = fixtures::zxz();
  CHECK(gen_slow_one(s, 2) == fixtures::parse(s, "a a b b' a"));
  for (std::int64_t k = 1; k <= 9; k += 2) {
    Word w = gen_slow_one(s, k);
    CHECK(w.size() == static_cast<std::size_t>(4 * k - 3));
    // Every prefix of the a-part is nontrivial by construction.
    ChargeMeter m;
    for (std::size_t p = 1; p <= w.size(); ++p) {
      Word prefix(w.begin(), w.begin() + p);
      CHECK(brute_force_verdict(s, prefix, m) == Verdict::NonTrivial);
    }
    auto res = one_iteration(s, w);
    CHECK(res.verdict == Verdict::NonTrivial);
  }
}

TEST_CASE("single pass charge grows quadratically on the padded powers") {
  GroupSchema s = fixtures::zxz();
  std::int64_t k = 16;
  auto res = one_iteration(s, gen_slow_one(s, k));
  CHECK(res.verdict == Verdict::NonTrivial);
  CHECK(res.charge >= k * k);
}

TEST_CASE("all solvers agree on random words") {
  for (auto make : {fixtures::zxz, fixtures::f2xf2}) {
    GroupSchema s = make();
    for (int round = 0; round < 1000; ++round) {
      Word w = random_vertex_word(s, 91, round, 64);
      ChargeMeter m;
      Verdict expect = brute_force_verdict(s, w, m);
      CHECK(many_iterations(s, w).verdict == expect);
      CHECK(one_iteration(s, w).verdict == expect);
      CHECK(solve(s, w, EngineKind::TrivialEdges).verdict == expect);
    }
  }
}

TEST_CASE("slow family generators refuse k below one") {
  GroupSchema s = fixtures::zxz();
  CHECK_THROWS_AS(gen_slow_many(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_slow_one(s, 0), std::invalid_argument);
}
