#ifndef QSYM_JSON_IO_HPP
#define QSYM_JSON_IO_HPP

#include <string>

#include "qsym/analyzer.hpp"
#include "qsym/equivalence.hpp"
#include "qsym/graph.hpp"
#include "qsym/ncalgebra.hpp"
#include "qsym/presentation.hpp"
#include "qsym/triple.hpp"

namespace qsym {

// Graph schema:
//   {"vertices": ["v1", ...],
//    "edges": [{"id": "e1", "source": "v1", "target": "v2"}, ...]}
// Vertices are referenced by label. Parse errors carry a field-precise
// locator ("$.edges[3].source") or a byte offset for malformed JSON.
OneGraph parse_graph(const std::string& text);
std::string serialize_graph(const OneGraph& g);

// Triple schema:
//   {"graph1": <graph>, "graph2": <graph>,
//    "theta": [{"from": ["e1","f1"], "to": ["f3","e3"]}, ...]}
// "to" lists (second-graph edge, first-graph edge).
Triple parse_triple(const std::string& text);
std::string serialize_triple(const Triple& t);

bool looks_like_triple(const std::string& text); // has a "graph1" key

// Presentation schema:
//   {"n": 4, "relations": [{"tag": "theta", "provenance": [...],
//     "poly": [{"coeff": "1", "word": [[0,1],[2,3]]}, ...]}, ...]}
// Exact-rational coefficients as strings; round-trips bit-exactly.
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

std::string serialize_validation(const ValidationReport& r);
std::string serialize_pairs(const OneGraph& x, const OneGraph& y, const PairList& pairs);
std::string serialize_theta(const Triple& t);
std::string serialize_permutation(const Permutation& p);
std::string serialize_witnesses(const std::vector<Permutation>& ws);
std::string serialize_group_report(const GroupReport& g);
std::string serialize_skeleton(const std::vector<std::vector<std::uint64_t>>& m);
std::string serialize_analysis_report(const AnalysisReport& r);
std::string saturation_debug_json(const Saturation& s);

} // namespace qsym

#endif
