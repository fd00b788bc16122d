#include <doctest.h>

#include <random>

#include "gog/baselines.hpp"
#include "gog/bench.hpp"
#include "gog/derivation.hpp"
#include "support/fixtures.hpp"

using namespace gog;

namespace {

// The element of a free-product word, with tree edges and dummies removed;
// sound because every edge of these fixtures is a tree edge.
Word strip_edges(const GroupSchema& s, WordView w) {
  Word out;
  for (GenId g : w) {
    if (s.alphabet().info(g).kind == GenKind::VertexLetter) out.push_back(g);
  }
  return out;
}

bool same_element(const GroupSchema& s, WordView a, WordView b) {
  ChargeMeter m;
  Word probe = concat(strip_edges(s, a),
                      s.alphabet().inverse_word(strip_edges(s, b)));
  return brute_force_verdict(s, probe, m) == Verdict::Trivial;
}

}  // namespace

TEST_CASE("a shortened word derives trivially") {
  GroupSchema s = fixtures::zxz();
  ChargeMeter m;
  NormalWord w = normalize(s, fixtures::parse(s, "a t b"));
  auto res = middle_derive_trivial_edges(s, w, m);
  CHECK(res.trivial_derivation);
  CHECK(res.word.pieces == w.pieces);
  CHECK(res.word.edges == w.edges);
  CHECK(res.word.lengths == w.lengths);
  // A trivial derivation certifies shortenedness.
  for (std::size_t i = 1; i <= w.path_length(); ++i) {
    ChargeMeter probe;
    CHECK_FALSE(is_reducible(s, w, i, probe).reducible);
  }
}

TEST_CASE("one derivation merges around the cancelling middle") {
  GroupSchema s = fixtures::zxz();
  ChargeMeter m;
  NormalWord w0 = normalize(s, fixtures::parse(s, "a b b' a b"));
  EngineOptions opts;
  opts.record_trace = true;
  opts.check_invariants = true;
  auto res = middle_derive_trivial_edges(s, w0, m, opts);
  CHECK_FALSE(res.trivial_derivation);

  // The reduced word carries the same element as "a a b".
  CHECK(same_element(s, res.word.flatten(s), fixtures::parse(s, "a a b")));
  CHECK(res.word.derived_total() == w0.derived_total());

  // Counter schedule: the merge starts at the cancelling pair with its
  // derived length, and the counter runs out immediately after.
  REQUIRE(res.trace.has_value());
  REQUIRE(res.trace->reduction_starts.size() == 1);
  CHECK(res.trace->reduction_starts[0] == 2);
  CHECK(res.trace->counter_starts[0] == 3);
  REQUIRE(res.trace->capped.size() == 1);
  CHECK(res.trace->capped[0] == std::pair<std::size_t, std::size_t>{2, 3});

  // Split sequence is monotone and ends at the source path length.
  const auto& split = res.trace->split_sequence;
  REQUIRE(split.size() == res.word.path_length() + 1);
  CHECK(split.front() == 0);
  CHECK(split.back() == w0.path_length());
  for (std::size_t i = 1; i < split.size(); ++i) CHECK(split[i - 1] < split[i]);
}

TEST_CASE("driver decides the worked example as nontrivial") {
  GroupSchema s = fixtures::zxz();
  SolveReport rep = solve(s, fixtures::parse(s, "a b b' a b"),
                          EngineKind::TrivialEdges);
  CHECK(rep.verdict == Verdict::NonTrivial);
  CHECK(rep.iterations <= ceil_log2(rep.normalized_length));
}

TEST_CASE("single letters are decided without derivations") {
  GroupSchema s = fixtures::zxz();
  SolveReport rep = solve(s, fixtures::parse(s, "a"), EngineKind::TrivialEdges);
  CHECK(rep.verdict == Verdict::NonTrivial);
  CHECK(rep.iterations <= 1);
}

TEST_CASE("degenerate inputs are trivial before normalization") {
  GroupSchema s = fixtures::zxz();
  CHECK(solve(s, Word{}, EngineKind::TrivialEdges).verdict == Verdict::Trivial);
  CHECK(solve(s, fixtures::parse(s, "* *' *"), EngineKind::TrivialEdges).verdict ==
        Verdict::Trivial);
}

TEST_CASE("cancelling staircases collapse within the iteration bound") {
  GroupSchema s = fixtures::zxz();
  SolveOptions opts;
  opts.check_invariants = true;
  for (std::int64_t k = 1; k <= 64; k *= 2) {
    Word w = gen_slow_many(s, k);
    SolveReport rep = solve(s, w, EngineKind::TrivialEdges, opts);
    CHECK(rep.verdict == Verdict::Trivial);
    CHECK(rep.iterations <= ceil_log2(rep.normalized_length));
  }
}

TEST_CASE("nested palindromes collapse in logarithmically many passes") {
  // Each pass reduces one nesting level and its counter budget cascades
  // through the levels formed by earlier passes, so the pass count tracks
  // the logarithm of the nesting depth.
  GroupSchema s = fixtures::zxz();
  const GenId a = s.alphabet().require("a"), ai = s.alphabet().require("a'");
  const GenId b = s.alphabet().require("b"), bi = s.alphabet().require("b'");
  SolveOptions opts;
  opts.check_invariants = true;
  for (std::size_t depth : {2u, 3u, 7u, 16u, 100u, 1024u}) {
    Word w;
    for (std::size_t j = 0; j < depth; ++j) w.push_back(j % 2 ? b : a);
    for (std::size_t j = depth; j-- > 0;) w.push_back(j % 2 ? bi : ai);
    SolveReport rep = solve(s, w, EngineKind::TrivialEdges, opts);
    CHECK(rep.verdict == Verdict::Trivial);
    CHECK(rep.iterations <= ceil_log2(rep.normalized_length));
    CHECK(rep.iterations <= ceil_log2(depth) + 3);

    // A nontrivial residue around the collapse keeps the verdict honest.
    Word v = w;
    v.insert(v.begin(), b);
    v.push_back(b);
    SolveReport rep2 = solve(s, v, EngineKind::TrivialEdges, opts);
    CHECK(rep2.verdict == Verdict::NonTrivial);
    CHECK(rep2.iterations <= ceil_log2(rep2.normalized_length));
  }
}

TEST_CASE("ledger invariants hold on random words") {
  GroupSchema s = fixtures::f2xf2();
  SolveOptions opts;
  opts.check_invariants = true;
  for (int round = 0; round < 500; ++round) {
    Word w = random_vertex_word(s, 77, round, 96);
    SolveReport rep = solve(s, w, EngineKind::TrivialEdges, opts);
    for (const auto& st : rep.invariant_log) {
      CHECK(st.derived_total ==
            static_cast<std::int64_t>(rep.normalized_length) - 1);
      CHECK(st.non_sprawling);
      CHECK(st.max_ratio <= 1.0);
    }
  }
}

TEST_CASE("derivations preserve the group element") {
  GroupSchema s = fixtures::zxz();
  ChargeMeter m;
  for (int round = 0; round < 200; ++round) {
    Word w = random_vertex_word(s, 78, round, 64);
    NormalWord cur = normalize(s, w);
    Word original = cur.flatten(s);
    while (cur.path_length() > 1) {
      auto res = middle_derive_trivial_edges(s, cur, m);
      if (res.trivial_derivation) break;
      CHECK(same_element(s, res.word.flatten(s), original));
      cur = std::move(res.word);
    }
  }
}

TEST_CASE("split sequences certify every output piece") {
  // Each output piece must equal, as a group element, the product of its
  // source range u_{k+1} t_{k+1} ... u_{k'} (with the source edges in
  // between); edges on the split boundaries must be copied verbatim.
  GroupSchema s = fixtures::zxz();
  ChargeMeter m;
  EngineOptions opts;
  opts.record_trace = true;
  for (int round = 0; round < 300; ++round) {
    Word input = random_vertex_word(s, 82, round, 48);
    NormalWord w = normalize(s, input);
    auto res = middle_derive_trivial_edges(s, w, m, opts);
    REQUIRE(res.trace.has_value());
    const auto& split = res.trace->split_sequence;
    REQUIRE(split.size() == res.word.path_length() + 1);
    CHECK(split.front() == 0);
    CHECK(split.back() == w.path_length());
    for (std::size_t i = 1; i <= res.word.path_length(); ++i) {
      CHECK(res.word.right_edge(i) == w.right_edge(split[i]));
      // Bracket product of the source range (k_{i-1}, k_i].
      Word bracket;
      for (std::size_t j = split[i - 1] + 1; j <= split[i]; ++j) {
        bracket.insert(bracket.end(), w.piece(j).begin(), w.piece(j).end());
        if (j < split[i]) {
          bracket.push_back(s.edge(w.right_edge(j)).letter);
        }
      }
      CHECK(same_element(s, res.word.piece(i), bracket));
      // Unchanged output pieces are verbatim copies.
      if (!res.trace->changed[i - 1]) {
        CHECK(res.word.piece(i) == w.piece(split[i]));
        CHECK(res.word.length(i) == w.length(split[i]));
      }
    }
  }
}

TEST_CASE("each derivation pass charges linearly in the stored word") {
  GroupSchema s = fixtures::zxz();
  for (int round = 0; round < 300; ++round) {
    Word input = random_vertex_word(s, 83, round, 128);
    NormalWord cur = normalize(s, input);
    const auto m0 = static_cast<std::int64_t>(cur.letter_length());
    while (cur.path_length() > 1) {
      ChargeMeter m;
      auto res = middle_derive_trivial_edges(s, cur, m);
      CHECK(m.total <= 4 * m0);
      if (res.trivial_derivation) break;
      cur = std::move(res.word);
    }
  }
}

TEST_CASE("engines refuse mismatched schemas") {
  GroupSchema free_product = fixtures::zxz();
  GroupSchema hnn = fixtures::hnn();
  CHECK_THROWS_AS(solve(free_product, Word{0}, EngineKind::Admissible),
                  SchemaError);
  CHECK_THROWS_AS(
      solve(hnn, fixtures::parse(hnn, "x"), EngineKind::TrivialEdges),
      SchemaError);
}

TEST_CASE("admissible engine reduces across the loop edge") {
  GroupSchema s = fixtures::hnn();
  ChargeMeter m;
  NormalWord w = normalize(s, fixtures::parse(s, "t x z t'"));
  EngineOptions opts;
  opts.check_invariants = true;
  auto res = middle_derive_admissible(s, w, m, opts);
  CHECK_FALSE(res.trivial_derivation);
  CHECK(res.word.path_length() == 1);
  // t (x z) t' = z y as an element; the flushed piece spells it.
  CHECK(res.word.piece(1) == fixtures::parse(s, "z y"));
  CHECK(res.word.derived_total() == w.derived_total());

  SolveReport rep = solve(s, fixtures::parse(s, "t x z t'"),
                          EngineKind::Admissible);
  CHECK(rep.verdict == Verdict::NonTrivial);
}

TEST_CASE("stable letter relations are trivial for the admissible engine") {
  GroupSchema s = fixtures::hnn();
  SolveOptions opts;
  opts.check_invariants = true;
  // t x t' z' and t z t' y' are the defining conjugation relations.
  CHECK(solve(s, fixtures::parse(s, "t x t' z'"), EngineKind::Admissible, opts)
            .verdict == Verdict::Trivial);
  CHECK(solve(s, fixtures::parse(s, "t z t' y'"), EngineKind::Admissible, opts)
            .verdict == Verdict::Trivial);
  CHECK(solve(s, fixtures::parse(s, "t x t' y'"), EngineKind::Admissible, opts)
            .verdict == Verdict::NonTrivial);
}

TEST_CASE("shortened admissible words derive trivially") {
  GroupSchema s = fixtures::hnn();
  ChargeMeter m;
  NormalWord w = normalize(s, fixtures::parse(s, "t y t'"));
  auto res = middle_derive_admissible(s, w, m);
  CHECK(res.trivial_derivation);
  CHECK(res.word.pieces == w.pieces);
}

TEST_CASE("inner merges fire through the central-free probe") {
  GroupSchema s = fixtures::hnn();
  ChargeMeter m;
  // Shaped so the first reduction folds x^4 z across the loop and the next
  // piece joins through the probe with a short materialized power:
  //   t x t (x x x x z) t' (y' x) t'  ==  z^2 y^4.
  Word w = fixtures::parse(s, "t x t x x x x z t' y' x t'");
  NormalWord nw = normalize(s, w);
  EngineOptions opts;
  opts.check_invariants = true;
  auto res = middle_derive_admissible(s, nw, m, opts);
  CHECK(res.stats.reductions == 1);
  CHECK(res.stats.probe_merges == 1);
  CHECK(res.word.path_length() == 1);
  CHECK(res.word.piece(1) == fixtures::parse(s, "z z y y y y"));

  ChargeMeter rm;
  CHECK(reference_reduce_verdict(s, w, rm) == Verdict::NonTrivial);
  CHECK(solve(s, w, EngineKind::Admissible).verdict == Verdict::NonTrivial);

  // Appending the inverse of the reduced element closes the loop.
  Word closed = concat(w, fixtures::parse(s, "y' y' y' y' z' z'"));
  CHECK(solve(s, closed, EngineKind::Admissible).verdict == Verdict::Trivial);
  ChargeMeter rm2;
  CHECK(reference_reduce_verdict(s, closed, rm2) == Verdict::Trivial);
}

TEST_CASE("inner merges fire through the in-group fast path") {
  GroupSchema s = fixtures::hnn();
  // Found by corpus search: the second reduction pass folds a pair of
  // neighbours that already sit in the edge group, taking the fast route.
  // Checked mode cross-validates that route against the probe route.
  Word w = fixtures::parse(
      s, "t t x' t' x' t' z y' y' x x' z z' t t' y' y' x' x' z' z");
  NormalWord cur = normalize(s, w);
  ChargeMeter m;
  DeriveStats totals;
  while (cur.path_length() > 1) {
    EngineOptions opts;
    opts.check_invariants = true;
    auto res = middle_derive_admissible(s, cur, m, opts);
    totals.fast_merges += res.stats.fast_merges;
    totals.probe_merges += res.stats.probe_merges;
    if (res.trivial_derivation) break;
    cur = std::move(res.word);
  }
  CHECK(totals.fast_merges >= 1);

  ChargeMeter rm;
  CHECK(solve(s, w, EngineKind::Admissible).verdict ==
        reference_reduce_verdict(s, w, rm));
}

TEST_CASE("admissible engine agrees with the naive reducer") {
  GroupSchema s = fixtures::hnn();
  SolveOptions opts;
  opts.check_invariants = true;
  for (int round = 0; round < 1500; ++round) {
    Word w = random_full_word(s, 79, round, 48);
    SolveReport rep = solve(s, w, EngineKind::Admissible, opts);
    ChargeMeter m;
    Verdict expect = reference_reduce_verdict(s, w, m);
    CHECK(rep.verdict == expect);
    CHECK(rep.iterations <= ceil_log2(std::max<std::size_t>(
                                rep.normalized_length, 2)));
  }
}

TEST_CASE("amalgam over a tree edge identifies the glued directions") {
  // Two copies of F2 x Z glued over Z^2 along the tree edge: w -> x and
  // p -> z hold in the amalgam because the tree letter is trivial.
  GroupSchema s = parse_schema(
      "[vertices]\nmu\nnu\nbase = mu\n"
      "[edges]\n"
      "t : reverse = t', from = mu, to = nu, in_tree = yes\n"
      "t' : reverse = t, from = nu, to = mu, in_tree = yes\n"
      "[oracles]\n"
      "mu = central_extension(free(x, y), z)\n"
      "nu = central_extension(free(p, q), w)\n"
      "[admissible]\nK = 2\nt.c = w\nt.o = p\nt'.c = z\nt'.o = x\n");
  REQUIRE(s.validate().ok());

  SolveOptions opts;
  opts.check_invariants = true;
  CHECK(solve(s, fixtures::parse(s, "w x'"), EngineKind::Admissible, opts)
            .verdict == Verdict::Trivial);
  CHECK(solve(s, fixtures::parse(s, "p z'"), EngineKind::Admissible, opts)
            .verdict == Verdict::Trivial);
  CHECK(solve(s, fixtures::parse(s, "w z'"), EngineKind::Admissible, opts)
            .verdict == Verdict::NonTrivial);
  CHECK(solve(s, fixtures::parse(s, "q y q' y'"), EngineKind::Admissible, opts)
            .verdict == Verdict::NonTrivial);
  CHECK(solve(s, fixtures::parse(s, "y p y' z'"), EngineKind::Admissible, opts)
            .verdict == Verdict::Trivial);

  for (int round = 0; round < 2000; ++round) {
    Word w = random_full_word(s, 88, round, 56);
    ChargeMeter m;
    CHECK(solve(s, w, EngineKind::Admissible, opts).verdict ==
          reference_reduce_verdict(s, w, m));
  }
}

TEST_CASE("three factor products route through longer tree geodesics") {
  GroupSchema s = parse_schema(
      "[vertices]\nu\nv\nw\nbase = u\n"
      "[edges]\n"
      "p : reverse = p', from = u, to = v, in_tree = yes\n"
      "p' : reverse = p, from = v, to = u, in_tree = yes\n"
      "q : reverse = q', from = v, to = w, in_tree = yes\n"
      "q' : reverse = q, from = w, to = v, in_tree = yes\n"
      "[oracles]\nu = free(a)\nv = free(b)\nw = free(c)\n");
  REQUIRE(s.validate().ok());
  CHECK(s.tree_path(0, 2).size() == 2);

  NormalWord nw = normalize(s, fixtures::parse(s, "a c"));
  check_normal_word(s, nw);
  CHECK(nw.letter_length() <= 3 * 2 + 3 + 1);

  SolveOptions opts;
  opts.check_invariants = true;
  for (int round = 0; round < 2000; ++round) {
    Word w = random_vertex_word(s, 84, round, 64);
    ChargeMeter m;
    Verdict expect = brute_force_verdict(s, w, m);
    CHECK(solve(s, w, EngineKind::TrivialEdges, opts).verdict == expect);
    CHECK(many_iterations(s, w).verdict == expect);
    CHECK(one_iteration(s, w).verdict == expect);
  }

  // A commutator across the two far factors is nontrivial; conjugating a
  // cancelling pair through the whole tree is trivial.
  CHECK(solve(s, fixtures::parse(s, "a c a' c'"), EngineKind::TrivialEdges)
            .verdict == Verdict::NonTrivial);
  CHECK(solve(s, fixtures::parse(s, "c b a a' b' c'"), EngineKind::TrivialEdges)
            .verdict == Verdict::Trivial);
}

TEST_CASE("a trivial edge group loop acts as a free letter") {
  // One vertex <a> with a non-tree loop s: the fundamental group is free on
  // a and s, so plain free reduction is an independent reference.
  GroupSchema s = parse_schema(
      "[vertices]\nu\n"
      "[edges]\n"
      "s : reverse = s', from = u, to = u, in_tree = no\n"
      "s' : reverse = s, from = u, to = u, in_tree = no\n"
      "[oracles]\nu = free(a)\n");
  REQUIRE(s.validate().ok());

  Alphabet free2;
  auto [fa, fai] = free2.intern_inverse_pair("a", 0);
  auto [fs, fsi] = free2.intern_inverse_pair("s", 0);
  FreeOracle reference(free2, {fa, fs});
  auto map_letter = [&](GenId g) {
    const std::string& name = s.alphabet().spell(g);
    return free2.require(name);
  };

  const GenId a = s.alphabet().require("a");
  const GenId ai = s.alphabet().require("a'");
  const GenId sl = s.alphabet().require("s");
  const GenId sli = s.alphabet().require("s'");

  SolveOptions opts;
  opts.check_invariants = true;
  std::mt19937_64 rng(86);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<std::size_t> len(0, 64);
  for (int round = 0; round < 3000; ++round) {
    Word w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(std::array<GenId, 4>{a, ai, sl, sli}[pick(rng)]);
    }
    Word image;
    for (GenId g : w) image.push_back(map_letter(g));
    ChargeMeter m;
    bool expect = reference.is_trivial(image, m);
    SolveReport rep = solve(s, w, EngineKind::TrivialEdges, opts);
    CHECK((rep.verdict == Verdict::Trivial) == expect);
  }
}

TEST_CASE("non-tree edges survive as letters next to collapsing tree edges") {
  // Two cyclic factors joined by a tree edge plus an extra non-tree edge s;
  // killing the tree edge leaves the free product <a> * <b> * <s>.
  GroupSchema s = parse_schema(
      "[vertices]\nu\nv\nbase = u\n"
      "[edges]\n"
      "t : reverse = t', from = u, to = v, in_tree = yes\n"
      "t' : reverse = t, from = v, to = u, in_tree = yes\n"
      "s : reverse = s', from = u, to = v, in_tree = no\n"
      "s' : reverse = s, from = v, to = u, in_tree = no\n"
      "[oracles]\nu = free(a)\nv = free(b)\n");
  REQUIRE(s.validate().ok());

  GroupSchema reference = parse_schema(
      "[vertices]\nx\ny\nz\nbase = x\n"
      "[edges]\n"
      "p : reverse = p', from = x, to = y, in_tree = yes\n"
      "p' : reverse = p, from = y, to = x, in_tree = yes\n"
      "q : reverse = q', from = y, to = z, in_tree = yes\n"
      "q' : reverse = q, from = z, to = y, in_tree = yes\n"
      "[oracles]\nx = free(a)\ny = free(b)\nz = free(c)\n");

  // a -> a, b -> b, s -> c, tree letters vanish.
  auto map_word = [&](WordView w) {
    Word out;
    for (GenId g : w) {
      const std::string& name = s.alphabet().spell(g);
      if (name == "t" || name == "t'" || name == "*" || name == "*'") continue;
      if (name == "s") {
        out.push_back(reference.alphabet().require("c"));
      } else if (name == "s'") {
        out.push_back(reference.alphabet().require("c'"));
      } else {
        out.push_back(reference.alphabet().require(name));
      }
    }
    return out;
  };

  SolveOptions opts;
  opts.check_invariants = true;
  for (int round = 0; round < 3000; ++round) {
    Word w = random_full_word(s, 87, round, 64);
    ChargeMeter m;
    Verdict expect = brute_force_verdict(reference, map_word(w), m);
    CHECK(solve(s, w, EngineKind::TrivialEdges, opts).verdict == expect);
  }

  // s t' is a nontrivial loop; conjugation through s of a cancelling pair
  // stays trivial.
  CHECK(solve(s, fixtures::parse(s, "s t'"), EngineKind::TrivialEdges).verdict ==
        Verdict::NonTrivial);
  CHECK(solve(s, fixtures::parse(s, "s b b' s'"), EngineKind::TrivialEdges)
            .verdict == Verdict::Trivial);
}

TEST_CASE("trivial edge engine agrees with the brute force oracle") {
  GroupSchema s = fixtures::zxz();
  for (int round = 0; round < 1500; ++round) {
    Word w = random_vertex_word(s, 80, round, 96);
    SolveReport rep = solve(s, w, EngineKind::TrivialEdges);
    ChargeMeter m;
    CHECK(rep.verdict == brute_force_verdict(s, w, m));
  }
}
