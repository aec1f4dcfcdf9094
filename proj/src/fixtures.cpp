#include "qsym/fixtures.hpp"

#include <algorithm>
#include <map>

#include "qsym/errors.hpp"
#include "qsym/json_io.hpp"

namespace qsym {

namespace {

std::vector<std::string> labels4() { return {"1", "2", "3", "4"}; }

// Two disjoint 2-cycles: 1 <-> 2 and 3 <-> 4.
OneGraph ex_b_g1() {
  return OneGraph(labels4(), {{"e1", 0, 1}, {"e2", 1, 0}, {"e3", 3, 2}, {"e4", 2, 3}});
}

// Two disjoint 2-cycles pairing the columns: 1 <-> 4 and 2 <-> 3.
OneGraph ex_b_g2() {
  return OneGraph(labels4(), {{"f1", 3, 0}, {"f2", 0, 3}, {"f3", 2, 1}, {"f4", 1, 2}});
}

Triple make_ex_b() {
  OneGraph g1 = ex_b_g1(), g2 = ex_b_g2();
  auto pair = [&](const char* a, const char* b) {
    return ComposablePair{g1.edge_index(a), g2.edge_index(b)};
  };
  auto image = [&](const char* a, const char* b) {
    return ComposablePair{g2.edge_index(a), g1.edge_index(b)};
  };
  std::vector<std::pair<ComposablePair, ComposablePair>> mapping = {
      {pair("e1", "f1"), image("f3", "e3")},
      {pair("e2", "f3"), image("f1", "e4")},
      {pair("e3", "f2"), image("f4", "e1")},
      {pair("e4", "f4"), image("f2", "e2")},
  };
  std::sort(mapping.begin(), mapping.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return Triple{std::move(g1), std::move(g2), Theta(std::move(mapping))};
}

// Complete graph on four vertices, all twelve directed edges.
std::vector<Edge> k4_edges(const std::string& prefix) {
  // (source, target), 0-based
  const int ends[12][2] = {{2, 0}, {0, 2}, {0, 1}, {1, 0}, {3, 1}, {1, 3},
                           {3, 2}, {2, 3}, {2, 1}, {1, 2}, {0, 3}, {3, 0}};
  std::vector<Edge> es;
  for (int i = 0; i < 12; ++i)
    es.push_back({prefix + std::to_string(i + 1), ends[i][0], ends[i][1]});
  return es;
}

OneGraph make_k4() { return OneGraph(labels4(), k4_edges("e")); }

Triple make_ex_c() {
  OneGraph g1(labels4(), k4_edges("e"));
  OneGraph g2(labels4(), k4_edges("f"));

  // Four composable pairs trade places; the rest map to their twins.
  std::map<std::pair<int, int>, std::pair<int, int>> swaps = {
      {{1, 2}, {4, 3}}, {{4, 3}, {1, 2}}, {{8, 7}, {6, 5}}, {{6, 5}, {8, 7}}};

  PairList domain = composable_pairs(g1, g2);
  std::vector<std::pair<ComposablePair, ComposablePair>> mapping;
  for (const ComposablePair& p : domain) {
    // Recover the numeric labels from the ids ("e7" -> 7, "f12" -> 12).
    int a = std::stoi(g1.edge(p.first).id.substr(1));
    int b = std::stoi(g2.edge(p.second).id.substr(1));
    auto it = swaps.find({a, b});
    int ia = it == swaps.end() ? a : it->second.first;
    int ib = it == swaps.end() ? b : it->second.second;
    ComposablePair img{g2.edge_index("f" + std::to_string(ia)),
                       g1.edge_index("e" + std::to_string(ib))};
    mapping.emplace_back(p, img);
  }
  return Triple{std::move(g1), std::move(g2), Theta(std::move(mapping))};
}

OneGraph make_single_loop() { return OneGraph({"v"}, {{"a", 0, 0}}); }

OneGraph make_bidirected_pair() {
  return OneGraph({"u", "v"}, {{"a", 0, 1}, {"b", 1, 0}});
}

OneGraph make_cycle4() {
  return OneGraph(labels4(), {{"c12", 0, 1},
                              {"c21", 1, 0},
                              {"c23", 1, 2},
                              {"c32", 2, 1},
                              {"c34", 2, 3},
                              {"c43", 3, 2},
                              {"c41", 3, 0},
                              {"c14", 0, 3}});
}

OneGraph make_petersen() {
  std::vector<std::string> labels;
  for (int i = 0; i < 5; ++i) labels.push_back("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) labels.push_back("i" + std::to_string(i));
  std::vector<Edge> es;
  auto add_undirected = [&](int a, int b) {
    es.push_back({labels[static_cast<size_t>(a)] + labels[static_cast<size_t>(b)], a, b});
    es.push_back({labels[static_cast<size_t>(b)] + labels[static_cast<size_t>(a)], b, a});
  };
  for (int i = 0; i < 5; ++i) add_undirected(i, (i + 1) % 5);      // outer cycle
  for (int i = 0; i < 5; ++i) add_undirected(i, i + 5);            // spokes
  for (int i = 0; i < 5; ++i) add_undirected(5 + i, 5 + (i + 2) % 5); // pentagram
  return OneGraph(std::move(labels), std::move(es));
}

} // namespace

std::vector<std::string> fixture_names() {
  return {"ex-b", "ex-c", "single-loop", "bidirected-pair", "cycle4", "k4", "petersen"};
}

bool is_triple_fixture(const std::string& name) {
  return name == "ex-b" || name == "ex-c";
}

bool is_graph_fixture(const std::string& name) {
  return name == "single-loop" || name == "bidirected-pair" || name == "cycle4" ||
         name == "k4" || name == "petersen";
}

Triple fixture_triple(const std::string& name) {
  Triple t;
  if (name == "ex-b") t = make_ex_b();
  else if (name == "ex-c") t = make_ex_c();
  else throw InvalidArgument("unknown triple fixture '" + name + "'");
  ensure_valid(t);
  return t;
}

OneGraph fixture_graph(const std::string& name) {
  OneGraph g;
  if (name == "single-loop") g = make_single_loop();
  else if (name == "bidirected-pair") g = make_bidirected_pair();
  else if (name == "cycle4") g = make_cycle4();
  else if (name == "k4") g = make_k4();
  else if (name == "petersen") g = make_petersen();
  else throw InvalidArgument("unknown graph fixture '" + name + "'");
  ensure_valid(g);
  return g;
}

std::string fixture_json(const std::string& name) {
  if (is_triple_fixture(name)) return serialize_triple(fixture_triple(name));
  if (is_graph_fixture(name)) return serialize_graph(fixture_graph(name));
  throw InvalidArgument("unknown fixture '" + name + "'");
}

} // namespace qsym
