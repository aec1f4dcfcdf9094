#include <doctest.h>

#include <set>

#include "qsym/equivalence.hpp"
#include "qsym/errors.hpp"
#include "qsym/fixtures.hpp"
#include "test_support.hpp"

using namespace qsym;

TEST_CASE("permutation basics") {
  Permutation p{{1, 0, 3, 2}};
  CHECK(p.is_valid());
  CHECK(p.order() == 2);
  CHECK(p.inverse() == p);
  Permutation q{{1, 2, 3, 0}};
  CHECK(q.order() == 4);
  CHECK(q.compose(q.inverse()) == Permutation::identity(4));
  CHECK_FALSE(Permutation{{0, 0, 1, 2}}.is_valid());
}

TEST_CASE("a triple is equivalent to itself via the identity") {
  for (const auto& name : {"ex-b", "ex-c"}) {
    Triple t = fixture_triple(name);
    auto ws = is_equivalent(t, t);
    CHECK(std::count(ws.begin(), ws.end(), Permutation::identity(4)) == 1);
  }
}

TEST_CASE("conjugation round trips") {
  auto rng = qsym_test::rng_for(41);
  for (int i = 0; i < 8; ++i) {
    Triple t = qsym_test::random_triple(rng);
    int n = t.g1.vertex_count();
    Permutation p = qsym_test::random_permutation(n, rng);

    CHECK(qsym_test::same_triple(conjugate_triple(t, Permutation::identity(n)), t));
    CHECK(qsym_test::same_triple(conjugate_triple(conjugate_triple(t, p), p.inverse()), t));

    Triple c = conjugate_triple(t, p);
    CHECK(validate_triple(c).ok());
    // The witness maps the second argument's edges into the first's.
    auto forward = is_equivalent(c, t);
    CHECK(std::count(forward.begin(), forward.end(), p) == 1);
    auto backward = is_equivalent(t, c);
    CHECK(std::count(backward.begin(), backward.end(), p.inverse()) == 1);
  }
}

TEST_CASE("conjugating the paired 2-cycles by the 2-cycle swap") {
  Triple t = fixture_triple("ex-b");
  Permutation swap{{1, 0, 3, 2}};
  Triple c = conjugate_triple(t, swap);
  CHECK(validate_triple(c).ok());
  auto ws = is_equivalent(c, t);
  CHECK(std::count(ws.begin(), ws.end(), swap) == 1);
}

TEST_CASE("first-witness mode returns the lexicographic leader") {
  Triple t = fixture_triple("ex-b");
  auto all = is_equivalent(t, t, WitnessMode::AllWitnesses);
  auto first = is_equivalent(t, t, WitnessMode::FirstWitness);
  REQUIRE(first.size() == 1);
  CHECK(first[0] == all.front());
}

TEST_CASE("witness sets are inverse-closed across directions and compose") {
  auto rng = qsym_test::rng_for(43);
  for (int i = 0; i < 4; ++i) {
    Triple t1 = qsym_test::random_triple(rng, 4);
    int n = t1.g1.vertex_count();
    Triple t2 = conjugate_triple(t1, qsym_test::random_permutation(n, rng));
    Triple t3 = conjugate_triple(t1, qsym_test::random_permutation(n, rng));

    auto w12 = is_equivalent(t1, t2);
    auto w21 = is_equivalent(t2, t1);
    REQUIRE_FALSE(w12.empty());
    std::set<Permutation> w21_set(w21.begin(), w21.end());
    for (const auto& w : w12) CHECK(w21_set.count(w.inverse()) == 1);

    auto w23 = is_equivalent(t2, t3);
    auto w13 = is_equivalent(t1, t3);
    std::set<Permutation> w13_set(w13.begin(), w13.end());
    for (const auto& a : w12)
      for (const auto& b : w23) CHECK(w13_set.count(a.compose(b)) == 1);
  }
}

TEST_CASE("vertex count mismatch is an error") {
  Triple loop = pullback(fixture_graph("single-loop"));
  Triple exb = fixture_triple("ex-b");
  CHECK_THROWS_AS(is_equivalent(loop, exb), InvalidArgument);
}

TEST_CASE("automorphism groups of the fixtures") {
  SUBCASE("paired 2-cycles give the Klein four group") {
    GroupReport g = automorphisms(fixture_triple("ex-b"));
    CHECK(g.order == 4);
    CHECK(g.abelian);
    CHECK(g.name == "Z2 x Z2");
    CHECK(g.element_orders == std::map<int, int>{{1, 1}, {2, 3}});
    std::set<Permutation> expect = {Permutation::identity(4),
                                    Permutation{{1, 0, 3, 2}},
                                    Permutation{{2, 3, 0, 1}},
                                    Permutation{{3, 2, 1, 0}}};
    CHECK(std::set<Permutation>(g.elements.begin(), g.elements.end()) == expect);
  }

  SUBCASE("twisted doubled complete graph") {
    // The four vertex permutations commuting with the shipped bijection,
    // verified by independent enumeration: id, (23), (14), (14)(23) in
    // 1-based labels.
    GroupReport g = automorphisms(fixture_triple("ex-c"));
    CHECK(g.order == 4);
    CHECK(g.name == "Z2 x Z2");
    std::set<Permutation> expect = {Permutation::identity(4),
                                    Permutation{{0, 2, 1, 3}},
                                    Permutation{{3, 1, 2, 0}},
                                    Permutation{{3, 2, 1, 0}}};
    CHECK(std::set<Permutation>(g.elements.begin(), g.elements.end()) == expect);
  }

  SUBCASE("loop pullback is trivial") {
    GroupReport g = automorphisms(pullback(fixture_graph("single-loop")));
    CHECK(g.order == 1);
    CHECK(g.name == "trivial");
  }

  SUBCASE("complete graph pullback is fully symmetric") {
    GroupReport g = automorphisms(pullback(fixture_graph("k4")));
    CHECK(g.order == 24);
    CHECK(g.name == "S4");
    CHECK_FALSE(g.abelian);
  }

  SUBCASE("petersen pullback has order 120") {
    GroupReport g = automorphisms(pullback(fixture_graph("petersen")));
    CHECK(g.order == 120);
    CHECK(g.name == "order-120 group"); // S5 abstractly, but not as S_10 = 10!
  }
}

TEST_CASE("automorphisms preserve both constituent graphs") {
  auto check = [](const Triple& t) {
    VertexMatrix a1 = vertex_matrix(t.g1), a2 = vertex_matrix(t.g2);
    for (const Permutation& p : automorphisms(t).elements) {
      for (int v = 0; v < a1.dim(); ++v)
        for (int w = 0; w < a1.dim(); ++w) {
          CHECK(a1.at(w, v) == a1.at(p(w), p(v)));
          CHECK(a2.at(w, v) == a2.at(p(w), p(v)));
        }
    }
  };
  check(fixture_triple("ex-b"));
  check(fixture_triple("ex-c"));
}

TEST_CASE("group identification from invariants") {
  auto mk = [](std::vector<Permutation> els) {
    GroupReport g;
    g.elements = std::move(els);
    g.order = g.elements.size();
    g.abelian = true;
    for (size_t i = 0; i < g.elements.size() && g.abelian; ++i)
      for (size_t j = i + 1; j < g.elements.size(); ++j)
        if (!(g.elements[i].compose(g.elements[j]) ==
              g.elements[j].compose(g.elements[i]))) {
          g.abelian = false;
          break;
        }
    for (const auto& e : g.elements) ++g.element_orders[e.order()];
    return g;
  };

  // Klein four as double transpositions.
  GroupReport v4 = mk({Permutation::identity(4), Permutation{{1, 0, 3, 2}},
                       Permutation{{2, 3, 0, 1}}, Permutation{{3, 2, 1, 0}}});
  CHECK(identify_group(v4) == "Z2 x Z2");

  // Cyclic of order 4.
  Permutation c{{1, 2, 3, 0}};
  GroupReport z4 = mk({Permutation::identity(4), c, c.compose(c), c.compose(c).compose(c)});
  CHECK(identify_group(z4) == "Z4");

  GroupReport triv = mk({Permutation::identity(1)});
  CHECK(identify_group(triv) == "trivial");

  // S3 on three points.
  std::vector<Permutation> s3;
  Permutation p = Permutation::identity(3);
  do { s3.push_back(p); } while (std::next_permutation(p.images.begin(), p.images.end()));
  GroupReport s3r = mk(s3);
  CHECK(identify_group(s3r) == "S3");
}
