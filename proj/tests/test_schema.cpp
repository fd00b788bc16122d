#include <doctest.h>

#include "gog/config.hpp"
#include "support/fixtures.hpp"

using namespace gog;

TEST_CASE("smallest free product schema validates cleanly") {
  GroupSchema s = fixtures::zxz();
  auto report = validate_schema(s);
  CHECK(report.ok());
  CHECK(s.vertex_count() == 2);
  CHECK_FALSE(s.admissible());
}

TEST_CASE("admissible fixture validates cleanly") {
  GroupSchema s = fixtures::hnn();
  auto report = validate_schema(s);
  for (const auto& issue : report.issues) {
    CAPTURE(issue);
    CHECK(false);
  }
  CHECK(report.ok());
  CHECK(s.admissible());
  CHECK(s.sprawl_constant() == 2);
}

TEST_CASE("broken involution is reported") {
  GroupSchema s;
  VertexId u = s.add_vertex("u");
  VertexId v = s.add_vertex("v");
  auto [a, ai] = s.add_vertex_letter_pair(u, "a");
  auto [b, bi] = s.add_vertex_letter_pair(v, "b");
  (void)a;
  (void)ai;
  (void)b;
  (void)bi;
  s.set_oracle(u, std::make_shared<FreeOracle>(s.alphabet(), std::vector<GenId>{0}),
               "free(a)");
  s.set_oracle(v, std::make_shared<FreeOracle>(s.alphabet(), std::vector<GenId>{2}),
               "free(b)");
  // Both edges point u -> v, so reversing does not swap endpoints.
  EdgeId e1 = s.add_edge("t", u, v, true);
  EdgeId e2 = s.add_edge("t'", u, v, true);
  s.link_reverse(e1, e2);
  s.finalize();
  auto report = s.validate();
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& issue : report.issues) {
    if (issue.find("edge involution/endpoint mismatch") != std::string::npos) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("every generator lands in exactly one partition class") {
  GroupSchema s = fixtures::hnn();
  const Alphabet& ab = s.alphabet();
  std::size_t vertex_letters = 0, edge_letters = 0;
  for (GenId g = 0; g < ab.size(); ++g) {
    const GeneratorInfo& gi = ab.info(g);
    if (gi.kind == GenKind::VertexLetter) {
      CHECK(gi.vertex != kNoVertex);
      ++vertex_letters;
    } else {
      CHECK(gi.edge != kNoEdge);
      ++edge_letters;
    }
  }
  CHECK(vertex_letters == 6);  // x x' y y' z z'
  CHECK(edge_letters == 4);    // t t' and the dummy pair
}

TEST_CASE("edge involution is fixed point free and swaps endpoints") {
  GroupSchema s = fixtures::f2xf2();
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    CHECK(s.reverse(e) != e);
    CHECK(s.reverse(s.reverse(e)) == e);
    CHECK(s.edge(s.reverse(e)).from == s.edge(e).to);
    CHECK(s.edge(s.reverse(e)).to == s.edge(e).from);
  }
}

TEST_CASE("schema config round trips through serialization") {
  for (const char* text :
       {fixtures::kZxZ, fixtures::kF2xF2, fixtures::kHnnF2xZ}) {
    GroupSchema a = parse_schema(text);
    GroupSchema b = parse_schema(serialize_schema(a));
    CHECK(a.vertex_count() == b.vertex_count());
    CHECK(a.edge_count() == b.edge_count());
    CHECK(a.alphabet().size() == b.alphabet().size());
    CHECK(a.vertex(a.base_vertex()).name == b.vertex(b.base_vertex()).name);
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      CHECK(a.vertex(v).name == b.vertex(v).name);
      CHECK(a.vertex(v).letters.size() == b.vertex(v).letters.size());
    }
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
      CHECK(a.edge(e).name == b.edge(e).name);
      CHECK(a.edge(e).from == b.edge(e).from);
      CHECK(a.edge(e).to == b.edge(e).to);
      CHECK(a.edge(e).in_tree == b.edge(e).in_tree);
      const EdgeFrame* fa = a.frame(e);
      const EdgeFrame* fb = b.frame(e);
      CHECK((fa == nullptr) == (fb == nullptr));
      if (fa && fb) {
        CHECK(a.alphabet().spell(fa->c_letter) ==
              b.alphabet().spell(fb->c_letter));
        CHECK(a.alphabet().spell(fa->o_letter) ==
              b.alphabet().spell(fb->o_letter));
        CHECK(fa->K == fb->K);
        CHECK(fa->coset_count() == fb->coset_count());
      }
    }
  }
}

TEST_CASE("parser reports dangling references and unknown kinds") {
  CHECK_THROWS_AS(parse_schema("[vertices]\nu\n[edges]\n"
                               "t : reverse = t', from = u, to = w, in_tree = yes\n"
                               "t' : reverse = t, from = w, to = u, in_tree = yes\n"
                               "[oracles]\nu = free(a)\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_schema("[vertices]\nu\n[oracles]\nu = sporadic(5)\n"),
                  ConfigError);
  try {
    parse_schema("[vertices]\nu\n[oracles]\nu = free(a\n");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("word parser rejects letters outside the schema") {
  GroupSchema s = fixtures::zxz();
  CHECK_THROWS_AS(s.alphabet().parse_word("a q"), WordError);
  Word w = fixtures::parse(s, "a b b' a'");
  CHECK(w.size() == 4);
}
