#ifndef QSYM_FIXTURES_HPP
#define QSYM_FIXTURES_HPP

#include <string>
#include <vector>

#include "qsym/graph.hpp"
#include "qsym/triple.hpp"

namespace qsym {

// Built-in corpus: two triples ("ex-b", "ex-c") and a handful of graphs
// usable directly or through `pullback` ("single-loop", "bidirected-pair",
// "cycle4", "k4", "petersen"). Everything validates on load and exports in
// canonical serialization.

std::vector<std::string> fixture_names();
bool is_triple_fixture(const std::string& name);
bool is_graph_fixture(const std::string& name);

Triple fixture_triple(const std::string& name);  // throws InvalidArgument
OneGraph fixture_graph(const std::string& name); // throws InvalidArgument

// Canonical JSON for any fixture name.
std::string fixture_json(const std::string& name);

} // namespace qsym

#endif
