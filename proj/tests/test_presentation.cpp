#include <doctest.h>

#include <map>

#include "qsym/fixtures.hpp"
#include "qsym/presentation.hpp"
#include "test_support.hpp"

using namespace qsym;

namespace {

std::map<RelTag, int> tag_counts(const Presentation& p) {
  std::map<RelTag, int> c;
  for (const Relation& r : p.relations) ++c[r.tag];
  return c;
}

} // namespace

TEST_CASE("relation family counts for the paired 2-cycles") {
  Triple t = fixture_triple("ex-b");
  Presentation raw = generate(t);
  auto counts = tag_counts(raw);
  const int n = 4;
  CHECK(counts[RelTag::Idempotent] == n * n);
  CHECK(counts[RelTag::RowOrthogonal] == n * n * (n - 1));
  CHECK(counts[RelTag::ColOrthogonal] == n * n * (n - 1));
  CHECK(counts[RelTag::RowSum] == n);
  CHECK(counts[RelTag::ColSum] == n);
  // |E1*E2|^2 cubic relations, none syntactically zero here.
  CHECK(counts[RelTag::Theta] == 16);
}

TEST_CASE("theta relation counts") {
  // Doubled complete graph: relations with both pairs untouched by the
  // four swaps are zero as written and never stored.
  Presentation exc = generate(fixture_triple("ex-c"));
  CHECK(tag_counts(exc)[RelTag::Theta] == 36 * 36 - 32 * 32);

  for (const auto& name : {"single-loop", "bidirected-pair", "cycle4", "k4", "petersen"}) {
    Presentation p = generate(pullback(fixture_graph(name)));
    CHECK(tag_counts(p)[RelTag::Theta] == 0);
  }
}

TEST_CASE("theta relations have a common outer letter pattern") {
  // Boundary identities force the first and third factors of both sides to
  // agree, so each relation is q_X (q_M - q_M') q_Y.
  Presentation raw = generate(fixture_triple("ex-b"));
  for (const Relation& r : relations_with_tag(raw, RelTag::Theta)) {
    REQUIRE(r.poly.term_count() == 2);
    const Word& a = r.poly.terms()[0].first;
    const Word& b = r.poly.terms()[1].first;
    REQUIRE(a.degree() == 3);
    REQUIRE(b.degree() == 3);
    CHECK(a.letters[0] == b.letters[0]);
    CHECK(a.letters[2] == b.letters[2]);
    CHECK(a.letters[1] != b.letters[1]);
  }
}

TEST_CASE("single loop presentation collapses to q00 = 1") {
  Presentation p = canonicalize(generate(pullback(fixture_graph("single-loop"))));
  REQUIRE(p.relations.size() == 2); // q00 - 1 and q00^2 - q00
  NCPoly sum = NCPoly::generator({0, 0}) - NCPoly::constant(1);
  NCPoly idem = NCPoly::generator({0, 0}).mul(NCPoly::generator({0, 0})) -
                NCPoly::generator({0, 0});
  bool has_sum = false, has_idem = false;
  for (const Relation& r : p.relations) {
    if (r.poly == sum) has_sum = true;
    if (r.poly == idem) has_idem = true;
  }
  CHECK(has_sum);
  CHECK(has_idem);
}

TEST_CASE("canonicalize merges duplicates and keeps all provenance") {
  Presentation p;
  p.n = 2;
  NCPoly poly = NCPoly::generator({0, 0}).mul(NCPoly::generator({0, 1}));
  p.relations.push_back({poly, RelTag::RowOrthogonal, {{RelTag::RowOrthogonal, {0, 0, 1}, {}}}});
  p.relations.push_back({poly.scaled(3), RelTag::EdgeVanishingG1,
                         {{RelTag::EdgeVanishingG1, {0, 1, 0}, {"a"}}}});
  Presentation c = canonicalize(p);
  REQUIRE(c.relations.size() == 1);
  CHECK(c.relations[0].tag == RelTag::RowOrthogonal); // smallest family wins
  CHECK(c.relations[0].provenance.size() == 2);
  CHECK(c.relations[0].poly.leading_coeff() == 1);
}

TEST_CASE("canonicalize drops zero polys and is idempotent") {
  Presentation p;
  p.n = 2;
  NCPoly x = NCPoly::generator({0, 0});
  p.relations.push_back({x - x, RelTag::Theta, {}});
  CHECK(canonicalize(p).relations.empty());

  for (const auto& name : {"ex-b", "ex-c"}) {
    Presentation c1 = canonicalize(generate(fixture_triple(name)));
    Presentation c2 = canonicalize(c1);
    CHECK(equal_canonical(c1, c2));
    REQUIRE(c1.relations.size() == c2.relations.size());
    for (size_t i = 0; i < c1.relations.size(); ++i)
      CHECK(c1.relations[i].poly == c2.relations[i].poly);
  }
}

TEST_CASE("conjugating a presentation") {
  Triple t = fixture_triple("ex-b");
  Presentation p = generate(t);
  int n = t.g1.vertex_count();

  SUBCASE("identity changes nothing") {
    CHECK(equal_canonical(conjugate_presentation(p, Permutation::identity(n)), p));
  }

  SUBCASE("conjugation by inverse undoes") {
    auto rng = qsym_test::rng_for(47);
    Permutation perm = qsym_test::random_permutation(n, rng);
    Presentation back =
        conjugate_presentation(conjugate_presentation(p, perm), perm.inverse());
    CHECK(equal_canonical(back, p));
  }

  SUBCASE("matches the presentation of the conjugated triple") {
    auto rng = qsym_test::rng_for(53);
    for (int i = 0; i < 5; ++i) {
      Permutation perm = qsym_test::random_permutation(n, rng);
      CHECK(equal_canonical(conjugate_presentation(generate(t), perm),
                            generate(conjugate_triple(t, perm))));
    }
  }
}

TEST_CASE("classical automorphisms satisfy every relation") {
  for (const auto& name : {"ex-b", "ex-c"}) {
    Triple t = fixture_triple(name);
    Presentation p = canonicalize(generate(t));
    for (const Permutation& perm : automorphisms(t).elements)
      for (const Relation& r : p.relations)
        CHECK(qsym_test::eval_poly_at_perm(r.poly, perm) == 0);
  }
}

TEST_CASE("degree bounds by family") {
  Presentation raw = generate(fixture_triple("ex-c"));
  for (const Relation& r : raw.relations) {
    switch (r.tag) {
      case RelTag::RowSum:
      case RelTag::ColSum:
      case RelTag::CommutantG1:
      case RelTag::CommutantG2:
        CHECK(r.poly.degree() <= 1);
        break;
      case RelTag::Theta:
        CHECK(r.poly.degree() == 3);
        break;
      default:
        CHECK(r.poly.degree() <= 2);
        break;
    }
  }
}

TEST_CASE("pullback presentations coincide with the single-graph relations") {
  for (const auto& name : {"single-loop", "bidirected-pair", "cycle4", "k4"}) {
    OneGraph g = fixture_graph(name);
    CHECK(equal_canonical(canonicalize(generate(pullback(g))),
                          canonicalize(generate_single(g))));
  }
}
