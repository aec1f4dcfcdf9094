#include <doctest.h>

#include "qsym/errors.hpp"
#include "qsym/fixtures.hpp"
#include "qsym/graph.hpp"
#include "test_support.hpp"

using namespace qsym;

TEST_CASE("single loop validates") {
  OneGraph g({"v"}, {{"a", 0, 0}});
  ValidationReport r = validate_graph(g);
  CHECK(r.ok());
  REQUIRE(r.notes.size() == 1); // loop is informational, not a violation
}

TEST_CASE("example graphs validate") {
  for (const auto& name : fixture_names()) {
    if (is_graph_fixture(name)) CHECK(validate_graph(fixture_graph(name)).ok());
    else CHECK(validate_triple(fixture_triple(name)).ok());
  }
}

TEST_CASE("single edge leaves a source and a sink") {
  OneGraph g({"u", "v"}, {{"a", 0, 1}});
  ValidationReport r = validate_graph(g);
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0].find("'u'") != std::string::npos);
  CHECK(r.violations[0].find("no incoming") != std::string::npos);
  CHECK(r.violations[1].find("'v'") != std::string::npos);
  CHECK(r.violations[1].find("no outgoing") != std::string::npos);
}

TEST_CASE("multiple edges and bad ids are violations") {
  OneGraph dup({"u", "v"}, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 0}});
  auto r = validate_graph(dup);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].find("multiple edges") != std::string::npos);

  OneGraph dupid({"u", "v"}, {{"a", 0, 1}, {"a", 1, 0}});
  CHECK_FALSE(validate_graph(dupid).ok());

  OneGraph noid({"u", "v"}, {{"", 0, 1}, {"b", 1, 0}});
  CHECK_FALSE(validate_graph(noid).ok());

  OneGraph range({"u", "v"}, {{"a", 0, 5}, {"b", 1, 0}});
  CHECK_FALSE(validate_graph(range).ok());
}

TEST_CASE("vertex matrices of the 4-vertex examples") {
  Triple t = fixture_triple("ex-b");
  VertexMatrix a1 = vertex_matrix(t.g1);
  // row = target, column = source
  int expect1[4][4] = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a1.at(i, j) == expect1[i][j]);

  VertexMatrix a2 = vertex_matrix(t.g2);
  int expect2[4][4] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a2.at(i, j) == expect2[i][j]);

  CHECK(check_commuting(a1, a2));
}

TEST_CASE("loop matrix is [1]") {
  VertexMatrix m = vertex_matrix(fixture_graph("single-loop"));
  CHECK(m.dim() == 1);
  CHECK(m.at(0, 0) == 1);
}

TEST_CASE("identity commutes, a shear does not") {
  VertexMatrix id(2), swap(2), shear(2);
  id.set(0, 0, 1);
  id.set(1, 1, 1);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  shear.set(0, 0, 1);
  shear.set(0, 1, 1);
  shear.set(1, 1, 1);
  CHECK(check_commuting(id, swap));
  CHECK(check_commuting(id, shear));
  CHECK_FALSE(check_commuting(swap, shear));
  VertexMatrix three(3);
  CHECK_THROWS_AS(check_commuting(swap, three), InvalidArgument);
}

TEST_CASE("vertex_matrix rejects invalid graphs") {
  OneGraph bad({"u", "v"}, {{"a", 0, 1}});
  CHECK_THROWS_AS(vertex_matrix(bad), InvalidArgument);
}

TEST_CASE("valid graphs have no zero row or column") {
  auto check_sums = [](const OneGraph& g) {
    VertexMatrix m = vertex_matrix(g);
    for (int i = 0; i < m.dim(); ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < m.dim(); ++j) {
        row += m.at(i, j);
        col += m.at(j, i);
      }
      CHECK(row >= 1);
      CHECK(col >= 1);
    }
  };
  for (const auto& name : {"single-loop", "bidirected-pair", "cycle4", "k4", "petersen"})
    check_sums(fixture_graph(name));
  auto rng = qsym_test::rng_for(0x61);
  for (int i = 0; i < 10; ++i) {
    Triple t = qsym_test::random_triple(rng);
    check_sums(t.g1);
    check_sums(t.g2);
  }
}

TEST_CASE("equal matrices mean equal edge sets") {
  auto rng = qsym_test::rng_for(17);
  for (int i = 0; i < 10; ++i) {
    Triple t = qsym_test::random_triple(rng);
    if (!(vertex_matrix(t.g1) == vertex_matrix(t.g2))) continue;
    std::set<std::pair<int, int>> e1, e2;
    for (const Edge& e : t.g1.edges()) e1.insert({e.source, e.target});
    for (const Edge& e : t.g2.edges()) e2.insert({e.source, e.target});
    CHECK(e1 == e2);
  }
}
