#include <doctest.h>

#include "qsym/analyzer.hpp"
#include "qsym/errors.hpp"
#include "qsym/fixtures.hpp"
#include "qsym/json_io.hpp"
#include "test_support.hpp"

using namespace qsym;

TEST_CASE("analysis of the paired 2-cycles") {
  AnalysisOptions opts;
  opts.degree_bound = 3;
  AnalysisReport rep = analyze(fixture_triple("ex-b"), opts);

  CHECK(rep.vertex_count == 4);
  CHECK(rep.edge_count_g1 == 4);
  CHECK(rep.edge_count_g2 == 4);
  CHECK(rep.composable_pair_count == 4);
  CHECK(rep.theta_unique);
  CHECK(rep.entry_map.zeros.empty());
  CHECK(rep.entry_map.classes.size() == 4);
  CHECK(rep.theta_redundancy.size() == 16);
  CHECK(rep.theta_relations_redundant);
  CHECK(rep.commutativity.proved);
  CHECK(rep.classical_group.order == 4);
  CHECK(rep.classical_group.name == "Z2 x Z2");
  CHECK(rep.verdict == kVerdictClassical);
  CHECK(rep.degree_bound_used == 3);
}

TEST_CASE("analysis of the twisted doubled complete graph") {
  AnalysisOptions opts;
  opts.degree_bound = 3; // the bound-4 run lives in the acceptance suite
  AnalysisReport rep = analyze(fixture_triple("ex-c"), opts);

  CHECK_FALSE(rep.theta_unique);
  std::vector<Generator> zeros = {{0, 1}, {0, 2}, {1, 0}, {1, 3},
                                  {2, 0}, {2, 3}, {3, 1}, {3, 2}};
  CHECK(rep.entry_map.zeros == zeros);
  CHECK(rep.commutativity.proved);
  CHECK_FALSE(rep.theta_relations_redundant);
  CHECK(rep.classical_group.order == 4);
  CHECK(rep.verdict == kVerdictClassical);
}

TEST_CASE("analysis of pullbacks") {
  SUBCASE("single loop") {
    AnalysisOptions opts;
    opts.degree_bound = 2;
    AnalysisReport rep = analyze(pullback(fixture_graph("single-loop")), opts);
    CHECK(rep.commutativity.proved);
    CHECK(rep.classical_group.name == "trivial");
    CHECK(rep.verdict == kVerdictClassical);
    CHECK(rep.theta_redundancy.empty());
    CHECK(rep.theta_relations_redundant); // vacuously
  }
  SUBCASE("bidirected pair is classical Z2") {
    AnalysisOptions opts;
    opts.degree_bound = 2;
    AnalysisReport rep = analyze(pullback(fixture_graph("bidirected-pair")), opts);
    CHECK(rep.commutativity.proved);
    CHECK(rep.classical_group.name == "Z2");
    CHECK(rep.classical_group.order == 2);
    CHECK(rep.verdict == kVerdictClassical);
  }
  SUBCASE("complete graph stays open") {
    AnalysisOptions opts;
    opts.degree_bound = 3;
    AnalysisReport rep = analyze(pullback(fixture_graph("k4")), opts);
    CHECK_FALSE(rep.commutativity.proved);
    CHECK(rep.classical_group.name == "S4");
    CHECK(rep.classical_group.order == 24);
    CHECK(rep.verdict == kVerdictInconclusive);
  }
}

TEST_CASE("analysis below the cubic degree still completes") {
  AnalysisOptions opts;
  opts.degree_bound = 2;
  AnalysisReport rep = analyze(fixture_triple("ex-b"), opts);
  // Cubic relations cannot be certified at bound 2.
  CHECK(rep.theta_redundancy.size() == 16);
  CHECK_FALSE(rep.theta_relations_redundant);
  CHECK(rep.entry_map.classes.size() == 4);
}

TEST_CASE("theta redundancy checks") {
  SUBCASE("paired 2-cycles: every cubic relation follows already") {
    std::vector<bool> red = check_theta_redundant(fixture_triple("ex-b"), {3});
    REQUIRE(red.size() == 16);
    for (bool b : red) CHECK(b);
  }
  SUBCASE("twisted doubled complete graph: they do real work") {
    std::vector<bool> red = check_theta_redundant(fixture_triple("ex-c"), {3});
    REQUIRE(red.size() == 36 * 36 - 32 * 32);
    CHECK(std::count(red.begin(), red.end(), false) > 0);
  }
  SUBCASE("pullbacks have nothing to check") {
    CHECK(check_theta_redundant(pullback(fixture_graph("cycle4")), {3}).empty());
  }
}

TEST_CASE("solution census") {
  CHECK(solution_census(canonicalize(generate(fixture_triple("ex-b")))) == 4);
  CHECK(solution_census(canonicalize(generate(fixture_triple("ex-c")))) == 4);
  CHECK(solution_census(canonicalize(generate(pullback(fixture_graph("single-loop"))))) == 1);
  CHECK(solution_census(canonicalize(generate(pullback(fixture_graph("k4"))))) == 24);
}

TEST_CASE("group order is conjugation invariant") {
  auto rng = qsym_test::rng_for(67);
  for (int i = 0; i < 5; ++i) {
    Triple t = qsym_test::random_triple(rng, 4);
    Permutation p = qsym_test::random_permutation(t.g1.vertex_count(), rng);
    GroupReport a = automorphisms(t);
    GroupReport b = automorphisms(conjugate_triple(t, p));
    CHECK(a.order == b.order);
    CHECK(a.name == b.name);
    CHECK(a.element_orders == b.element_orders);
  }
}

TEST_CASE("reports are deterministic") {
  AnalysisOptions opts;
  opts.degree_bound = 3;
  std::string a = serialize_analysis_report(analyze(fixture_triple("ex-b"), opts));
  std::string b = serialize_analysis_report(analyze(fixture_triple("ex-b"), opts));
  CHECK(a == b);
  opts.jobs = 2;
  std::string c = serialize_analysis_report(analyze(fixture_triple("ex-b"), opts));
  CHECK(a == c);
}

TEST_CASE("random triples pass the internal gates") {
  // The analyzer aborts if a proved zero hits a classical point or the 0/1
  // census disagrees with the group order; running it over random triples
  // exercises those gates on loops, circulants and twisted bijections.
  auto rng = qsym_test::rng_for(71);
  AnalysisOptions opts;
  opts.degree_bound = 2;
  for (int i = 0; i < 6; ++i) {
    Triple t = qsym_test::random_triple(rng, 4);
    Presentation p = canonicalize(generate(t));
    GroupReport g = automorphisms(t);
    for (const Permutation& perm : g.elements)
      for (const Relation& r : p.relations)
        CHECK(qsym_test::eval_poly_at_perm(r.poly, perm) == 0);
    CHECK(solution_census(p) == g.order);
    CHECK_NOTHROW(analyze(t, opts));
  }
}

TEST_CASE("budget exhaustion propagates") {
  AnalysisOptions opts;
  opts.degree_bound = 3;
  opts.budget = 10;
  CHECK_THROWS_AS(analyze(fixture_triple("ex-b"), opts), BudgetExceeded);
}

TEST_CASE("ideal dump is attached on request") {
  AnalysisOptions opts;
  opts.degree_bound = 2;
  opts.dump_ideal = true;
  AnalysisReport rep = analyze(pullback(fixture_graph("single-loop")), opts);
  CHECK_FALSE(rep.ideal_dump.empty());
  CHECK(rep.ideal_dump.find("degree_bound") != std::string::npos);
}
