#include <doctest.h>

#include <set>

#include "qsym/errors.hpp"
#include "qsym/fixtures.hpp"
#include "qsym/triple.hpp"
#include "test_support.hpp"

using namespace qsym;

namespace {

std::set<std::pair<std::string, std::string>> pair_ids(const OneGraph& x,
                                                       const OneGraph& y,
                                                       const PairList& pairs) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : pairs) out.insert({x.edge(p.first).id, y.edge(p.second).id});
  return out;
}

// The 36 composable pairs of the doubled K4, by edge number.
const std::vector<std::pair<int, int>> k4_pair_table = {
    {1, 2}, {1, 10}, {1, 7},  {2, 4},  {2, 12},  {2, 1},  {3, 4},  {3, 12}, {3, 1},
    {4, 3}, {4, 9},  {4, 5},  {5, 6},  {5, 11},  {5, 8},  {6, 5},  {6, 3},  {6, 9},
    {7, 6}, {7, 11}, {7, 8},  {8, 2},  {8, 10},  {8, 7},  {9, 2},  {9, 10}, {9, 7},
    {10, 3}, {10, 9}, {10, 5}, {11, 1}, {11, 4}, {11, 12}, {12, 6}, {12, 11}, {12, 8}};

} // namespace

TEST_CASE("composable pairs of the paired 2-cycles") {
  Triple t = fixture_triple("ex-b");
  PairList pairs = composable_pairs(t.g1, t.g2);
  std::set<std::pair<std::string, std::string>> expect = {
      {"e1", "f1"}, {"e2", "f3"}, {"e3", "f2"}, {"e4", "f4"}};
  CHECK(pair_ids(t.g1, t.g2, pairs) == expect);
}

TEST_CASE("composable pairs of the doubled complete graph") {
  Triple t = fixture_triple("ex-c");
  PairList pairs = composable_pairs(t.g1, t.g2);
  REQUIRE(pairs.size() == 36);
  std::set<std::pair<std::string, std::string>> expect;
  for (auto [a, b] : k4_pair_table)
    expect.insert({"e" + std::to_string(a), "f" + std::to_string(b)});
  CHECK(pair_ids(t.g1, t.g2, pairs) == expect);
}

TEST_CASE("loop pairs with itself") {
  OneGraph g = fixture_graph("single-loop");
  PairList pairs = composable_pairs(g, g);
  REQUIRE(pairs.size() == 1);
  CHECK(g.edge(pairs[0].first).id == "a");
  CHECK(g.edge(pairs[0].second).id == "a");
}

TEST_CASE("composable pairs need a shared vertex set") {
  CHECK_THROWS_AS(
      composable_pairs(fixture_graph("single-loop"), fixture_graph("bidirected-pair")),
      InvalidArgument);
  CHECK_THROWS_AS(
      count_thetas(fixture_graph("single-loop"), fixture_graph("bidirected-pair")),
      InvalidArgument);
}

TEST_CASE("theta validation") {
  Triple t = fixture_triple("ex-b");
  CHECK(validate_theta(t).ok());

  // Redirect (e1,f1) to (f1,e4): t(e1) = vertex 2 but t(f1) = vertex 1.
  auto mapping = t.theta.mapping();
  for (auto& [from, to] : mapping) {
    if (t.g1.edge(from.first).id == "e1")
      to = {t.g2.edge_index("f1"), t.g1.edge_index("e4")};
  }
  Triple bad{t.g1, t.g2, Theta(mapping)};
  ValidationReport r = validate_theta(bad);
  REQUIRE_FALSE(r.ok());
  bool names_pair = false;
  for (const auto& v : r.violations)
    if (v.find("(e1,f1)") != std::string::npos) names_pair = true;
  CHECK(names_pair);
}

TEST_CASE("theta must cover the domain bijectively") {
  Triple t = fixture_triple("ex-b");

  SUBCASE("missing pair") {
    auto mapping = t.theta.mapping();
    mapping.pop_back();
    ValidationReport r = validate_theta({t.g1, t.g2, Theta(mapping)});
    REQUIRE_FALSE(r.ok());
    bool mentions = false;
    for (const auto& v : r.violations)
      if (v.find("has no image") != std::string::npos) mentions = true;
    CHECK(mentions);
  }

  SUBCASE("duplicated pair") {
    auto mapping = t.theta.mapping();
    mapping.push_back(mapping.front());
    ValidationReport r = validate_theta({t.g1, t.g2, Theta(mapping)});
    REQUIRE_FALSE(r.ok());
  }

  SUBCASE("image collision") {
    auto mapping = t.theta.mapping();
    mapping[1].second = mapping[0].second;
    ValidationReport r = validate_theta({t.g1, t.g2, Theta(mapping)});
    REQUIRE_FALSE(r.ok());
    bool injective_msg = false;
    for (const auto& v : r.violations)
      if (v.find("not injective") != std::string::npos) injective_msg = true;
    CHECK(injective_msg);
  }
}

TEST_CASE("identity theta on a pullback is valid") {
  for (const auto& name : {"single-loop", "bidirected-pair", "cycle4", "k4"}) {
    Triple t = pullback(fixture_graph(name));
    CHECK(validate_theta(t).ok());
  }
}

TEST_CASE("the paired 2-cycles admit exactly one theta, the shipped one") {
  Triple t = fixture_triple("ex-b");
  std::vector<Theta> all = enumerate_thetas(t.g1, t.g2);
  REQUIRE(all.size() == 1);
  CHECK(all[0].mapping() == t.theta.mapping());
  CHECK(count_thetas(t.g1, t.g2) == 1);
}

TEST_CASE("loop with itself has exactly the identity theta") {
  OneGraph g = fixture_graph("single-loop");
  std::vector<Theta> all = enumerate_thetas(g, g);
  REQUIRE(all.size() == 1);
  CHECK(all[0].mapping() == pullback(g).theta.mapping());
}

TEST_CASE("theta count for the doubled complete graph") {
  OneGraph g = fixture_graph("k4");
  BigInt expect = qsym_test::brute_theta_count(g, g);
  CHECK(expect == 5308416); // 2!^12 * 3!^4
  CHECK(count_thetas(g, g) == expect);
}

TEST_CASE("count matches enumeration and every theta validates") {
  auto rng = qsym_test::rng_for(23);
  int done = 0;
  for (int i = 0; i < 30 && done < 8; ++i) {
    Triple t = qsym_test::random_triple(rng, 4);
    BigInt count = count_thetas(t.g1, t.g2);
    CHECK(count == qsym_test::brute_theta_count(t.g1, t.g2));
    if (count > 2000) continue;
    ++done;
    std::vector<Theta> all = enumerate_thetas(t.g1, t.g2);
    CHECK(BigInt(static_cast<unsigned long>(all.size())) == count);
    for (const Theta& th : all) {
      Triple cand{t.g1, t.g2, th};
      CHECK(validate_theta(cand).ok());
    }
  }
  CHECK(done > 0);
}

TEST_CASE("enumeration respects the limit") {
  OneGraph g = fixture_graph("k4");
  std::vector<Theta> some = enumerate_thetas(g, g, 10);
  CHECK(some.size() == 10);
}

TEST_CASE("star sizes match the matrix product") {
  auto check = [](const Triple& t) {
    VertexMatrix a1 = vertex_matrix(t.g1), a2 = vertex_matrix(t.g2);
    int total = 0;
    for (int i = 0; i < a1.dim(); ++i)
      for (int j = 0; j < a1.dim(); ++j)
        for (int k = 0; k < a1.dim(); ++k) total += a1.at(i, k) * a2.at(k, j);
    CHECK(composable_pairs(t.g1, t.g2).size() == static_cast<size_t>(total));
    CHECK(composable_pairs(t.g2, t.g1).size() == static_cast<size_t>(total));
  };
  check(fixture_triple("ex-b"));
  check(fixture_triple("ex-c"));
  auto rng = qsym_test::rng_for(29);
  for (int i = 0; i < 10; ++i) check(qsym_test::random_triple(rng));
}

TEST_CASE("skeleton counts") {
  Triple exb = fixture_triple("ex-b");

  SUBCASE("degree (0,0) is the identity") {
    auto m = skeleton_count(exb, 0, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(m[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
              static_cast<std::uint64_t>(i == j));
  }

  SUBCASE("degree (1,1) equals the product of the vertex matrices") {
    VertexMatrix a1 = vertex_matrix(exb.g1), a2 = vertex_matrix(exb.g2);
    auto m = skeleton_count(exb, 1, 1);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::uint64_t prod = 0;
        for (int k = 0; k < 4; ++k)
          prod += static_cast<std::uint64_t>(a1.at(i, k) * a2.at(k, j));
        CHECK(m[static_cast<size_t>(i)][static_cast<size_t>(j)] == prod);
      }
  }

  SUBCASE("loop pullback counts a single morphism in every degree") {
    Triple t = pullback(fixture_graph("single-loop"));
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) CHECK(skeleton_count(t, m, n)[0][0] == 1);
  }

  SUBCASE("bound is enforced") {
    CHECK_THROWS_AS(skeleton_count(exb, 10, 3), InvalidArgument);
    CHECK_THROWS_AS(skeleton_count(exb, -1, 0), InvalidArgument);
    CHECK_NOTHROW(skeleton_count(exb, 10, 3, 13));
  }
}

TEST_CASE("skeleton counts match brute-force path enumeration") {
  auto rng = qsym_test::rng_for(31);
  for (int i = 0; i < 8; ++i) {
    Triple t = qsym_test::random_triple(rng);
    for (int m = 0; m + 0 <= 4; ++m)
      for (int n = 0; m + n <= 4; ++n)
        CHECK(skeleton_count(t, m, n) == qsym_test::brute_skeleton(t, m, n));
  }
}

TEST_CASE("skeleton counts do not depend on multiplication order") {
  auto rng = qsym_test::rng_for(37);
  for (int i = 0; i < 6; ++i) {
    Triple t = qsym_test::random_triple(rng);
    Triple swapped{t.g2, t.g1, qsym_test::random_theta(t.g2, t.g1, rng)};
    CHECK(skeleton_count(t, 2, 1) == skeleton_count(swapped, 1, 2));
  }
}

TEST_CASE("pullback structure") {
  SUBCASE("single loop") {
    Triple t = pullback(fixture_graph("single-loop"));
    CHECK(t.theta.size() == 1);
    CHECK(validate_triple(t).ok());
  }
  SUBCASE("paired 2-cycles, first graph") {
    Triple t = pullback(fixture_triple("ex-b").g1);
    CHECK(composable_pairs(t.g1, t.g2).size() == 4);
    CHECK(validate_triple(t).ok());
  }
  SUBCASE("identity theta maps every pair to itself") {
    Triple t = pullback(fixture_graph("cycle4"));
    for (const auto& [from, to] : t.theta.mapping()) {
      CHECK(from.first == to.first);
      CHECK(from.second == to.second);
    }
  }
}
