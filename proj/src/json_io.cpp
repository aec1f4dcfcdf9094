#include "qsym/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "qsym/errors.hpp"

namespace qsym {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& get_field(const json& j, const std::string& path, const char* key,
                      json::value_t type, const char* type_name) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key, "missing field");
  if (it->type() != type &&
      !(type == json::value_t::array && it->is_array()))
    throw ParseError(path + "." + key, std::string("expected ") + type_name);
  return *it;
}

OneGraph graph_from_json(const json& j, const std::string& path) {
  const json& verts = get_field(j, path, "vertices", json::value_t::array, "an array");
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < verts.size(); ++i) {
    const json& v = verts[i];
    std::string vp = path + ".vertices[" + std::to_string(i) + "]";
    if (!v.is_string()) throw ParseError(vp, "expected a string label");
    std::string label = v.get<std::string>();
    if (label.empty()) throw ParseError(vp, "empty vertex label");
    if (!index.emplace(label, static_cast<int>(i)).second)
      throw ParseError(vp, "duplicate vertex label '" + label + "'");
    labels.push_back(std::move(label));
  }
  if (labels.empty()) throw ParseError(path + ".vertices", "no vertices");

  const json& edges = get_field(j, path, "edges", json::value_t::array, "an array");
  std::vector<Edge> es;
  for (size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    std::string ep = path + ".edges[" + std::to_string(i) + "]";
    std::string id = get_field(e, ep, "id", json::value_t::string, "a string").get<std::string>();
    std::string src = get_field(e, ep, "source", json::value_t::string, "a string").get<std::string>();
    std::string tgt = get_field(e, ep, "target", json::value_t::string, "a string").get<std::string>();
    auto is_ = index.find(src);
    if (is_ == index.end())
      throw ParseError(ep + ".source", "unknown vertex label '" + src + "'");
    auto it_ = index.find(tgt);
    if (it_ == index.end())
      throw ParseError(ep + ".target", "unknown vertex label '" + tgt + "'");
    es.push_back({std::move(id), is_->second, it_->second});
  }
  return OneGraph(std::move(labels), std::move(es));
}

json graph_to_json(const OneGraph& g) {
  json j;
  j["vertices"] = g.vertex_labels();
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id},
                     {"source", g.vertex_labels()[static_cast<size_t>(e.source)]},
                     {"target", g.vertex_labels()[static_cast<size_t>(e.target)]}});
  }
  j["edges"] = std::move(edges);
  return j;
}

json word_to_json(const Word& w) {
  json a = json::array();
  for (Letter l : w.letters) a.push_back({letter_row(l), letter_col(l)});
  return a;
}

Word word_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of [row,col] pairs");
  Word w;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw ParseError(path + "[" + std::to_string(i) + "]", "expected [row,col]");
    int r = p[0].get<int>(), c = p[1].get<int>();
    if (r < 0 || c < 0 || r > 255 || c > 255)
      throw ParseError(path + "[" + std::to_string(i) + "]", "index out of range");
    w.letters.push_back(make_letter(r, c));
  }
  return w;
}

json poly_to_json(const NCPoly& p) {
  json a = json::array();
  for (const auto& [w, c] : p.terms())
    a.push_back({{"coeff", rat_to_string(c)}, {"word", word_to_json(w)}});
  return a;
}

NCPoly poly_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of terms");
  NCPoly p;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& t = j[i];
    std::string tp = path + "[" + std::to_string(i) + "]";
    std::string coeff =
        get_field(t, tp, "coeff", json::value_t::string, "a string").get<std::string>();
    Word w = word_from_json(get_field(t, tp, "word", json::value_t::array, "an array"),
                            tp + ".word");
    p.add_term(w, rat_from_string(coeff));
  }
  return p;
}

json provenance_to_json(const Provenance& pr) {
  json j;
  j["family"] = rel_tag_name(pr.family);
  if (!pr.indices.empty()) j["indices"] = pr.indices;
  if (!pr.edges.empty()) j["edges"] = pr.edges;
  return j;
}

Provenance provenance_from_json(const json& j, const std::string& path) {
  Provenance pr;
  pr.family = rel_tag_from_name(
      get_field(j, path, "family", json::value_t::string, "a string").get<std::string>());
  if (j.contains("indices")) pr.indices = j["indices"].get<std::vector<int>>();
  if (j.contains("edges")) pr.edges = j["edges"].get<std::vector<std::string>>();
  return pr;
}

json pair_to_json(const OneGraph& x, const OneGraph& y, const ComposablePair& p) {
  return json::array({x.edge(p.first).id, y.edge(p.second).id});
}

} // namespace

OneGraph parse_graph(const std::string& text) {
  return graph_from_json(parse_text(text), "$");
}

std::string serialize_graph(const OneGraph& g) { return dump(graph_to_json(g)); }

bool looks_like_triple(const std::string& text) {
  json j = parse_text(text);
  return j.is_object() && j.contains("graph1");
}

Triple parse_triple(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("$", "expected an object");
  if (!j.contains("graph1")) throw ParseError("$.graph1", "missing field");
  if (!j.contains("graph2")) throw ParseError("$.graph2", "missing field");
  OneGraph g1 = graph_from_json(j["graph1"], "$.graph1");
  OneGraph g2 = graph_from_json(j["graph2"], "$.graph2");

  const json& th = get_field(j, "$", "theta", json::value_t::array, "an array");
  std::vector<std::pair<ComposablePair, ComposablePair>> mapping;
  for (size_t i = 0; i < th.size(); ++i) {
    const json& m = th[i];
    std::string mp = "$.theta[" + std::to_string(i) + "]";
    const json& from = get_field(m, mp, "from", json::value_t::array, "an array");
    const json& to = get_field(m, mp, "to", json::value_t::array, "an array");
    if (from.size() != 2 || !from[0].is_string() || !from[1].is_string())
      throw ParseError(mp + ".from", "expected [edge-of-graph1, edge-of-graph2]");
    if (to.size() != 2 || !to[0].is_string() || !to[1].is_string())
      throw ParseError(mp + ".to", "expected [edge-of-graph2, edge-of-graph1]");
    int a = g1.edge_index(from[0].get<std::string>());
    if (a < 0)
      throw ParseError(mp + ".from[0]",
                       "unknown graph1 edge '" + from[0].get<std::string>() + "'");
    int b = g2.edge_index(from[1].get<std::string>());
    if (b < 0)
      throw ParseError(mp + ".from[1]",
                       "unknown graph2 edge '" + from[1].get<std::string>() + "'");
    int c = g2.edge_index(to[0].get<std::string>());
    if (c < 0)
      throw ParseError(mp + ".to[0]",
                       "unknown graph2 edge '" + to[0].get<std::string>() + "'");
    int d = g1.edge_index(to[1].get<std::string>());
    if (d < 0)
      throw ParseError(mp + ".to[1]",
                       "unknown graph1 edge '" + to[1].get<std::string>() + "'");
    mapping.push_back({{a, b}, {c, d}});
  }
  std::sort(mapping.begin(), mapping.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return Triple{std::move(g1), std::move(g2), Theta(std::move(mapping))};
}

std::string serialize_triple(const Triple& t) {
  json j;
  j["graph1"] = graph_to_json(t.g1);
  j["graph2"] = graph_to_json(t.g2);
  json th = json::array();
  for (const auto& [from, to] : t.theta.mapping()) {
    th.push_back({{"from", pair_to_json(t.g1, t.g2, from)},
                  {"to", pair_to_json(t.g2, t.g1, to)}});
  }
  j["theta"] = std::move(th);
  return dump(j);
}

Presentation parse_presentation(const std::string& text) {
  json j = parse_text(text);
  Presentation p;
  if (!j.is_object()) throw ParseError("$", "expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("$.n", "missing integer field");
  p.n = j["n"].get<int>();
  p.canonical = j.value("canonical", false);
  const json& rels = get_field(j, "$", "relations", json::value_t::array, "an array");
  for (size_t i = 0; i < rels.size(); ++i) {
    const json& r = rels[i];
    std::string rp = "$.relations[" + std::to_string(i) + "]";
    Relation rel;
    rel.tag = rel_tag_from_name(
        get_field(r, rp, "tag", json::value_t::string, "a string").get<std::string>());
    rel.poly = poly_from_json(get_field(r, rp, "poly", json::value_t::array, "an array"),
                              rp + ".poly");
    for (const auto& [w, c] : rel.poly.terms())
      for (Letter l : w.letters)
        if (letter_row(l) >= p.n || letter_col(l) >= p.n)
          throw ParseError(rp + ".poly", "generator index exceeds n");
    if (r.contains("provenance")) {
      const json& pv = r["provenance"];
      if (!pv.is_array()) throw ParseError(rp + ".provenance", "expected an array");
      for (size_t k = 0; k < pv.size(); ++k)
        rel.provenance.push_back(
            provenance_from_json(pv[k], rp + ".provenance[" + std::to_string(k) + "]"));
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  json j;
  j["n"] = p.n;
  j["canonical"] = p.canonical;
  json rels = json::array();
  for (const Relation& r : p.relations) {
    json pv = json::array();
    for (const Provenance& pr : r.provenance) pv.push_back(provenance_to_json(pr));
    rels.push_back({{"tag", rel_tag_name(r.tag)},
                    {"provenance", std::move(pv)},
                    {"poly", poly_to_json(r.poly)}});
  }
  j["relations"] = std::move(rels);
  return dump(j);
}

std::string serialize_validation(const ValidationReport& r) {
  json j;
  j["ok"] = r.ok();
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  return dump(j);
}

std::string serialize_pairs(const OneGraph& x, const OneGraph& y, const PairList& pairs) {
  json j;
  j["count"] = pairs.size();
  json a = json::array();
  for (const auto& p : pairs) a.push_back(pair_to_json(x, y, p));
  j["pairs"] = std::move(a);
  return dump(j);
}

std::string serialize_theta(const Triple& t) {
  json a = json::array();
  for (const auto& [from, to] : t.theta.mapping()) {
    a.push_back({{"from", pair_to_json(t.g1, t.g2, from)},
                 {"to", pair_to_json(t.g2, t.g1, to)}});
  }
  return dump(a);
}

std::string serialize_permutation(const Permutation& p) {
  return dump(json(p.images));
}

std::string serialize_witnesses(const std::vector<Permutation>& ws) {
  json j;
  j["equivalent"] = !ws.empty();
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.images);
  j["witnesses"] = std::move(a);
  return dump(j);
}

namespace {

json group_to_json(const GroupReport& g) {
  json j;
  j["name"] = g.name;
  j["order"] = g.order;
  j["abelian"] = g.abelian;
  json orders = json::array();
  for (const auto& [k, c] : g.element_orders)
    orders.push_back({{"order", k}, {"count", c}});
  j["element_orders"] = std::move(orders);
  json els = json::array();
  for (const auto& e : g.elements) els.push_back(e.images);
  j["elements"] = std::move(els);
  return j;
}

} // namespace

std::string serialize_group_report(const GroupReport& g) { return dump(group_to_json(g)); }

std::string serialize_skeleton(const std::vector<std::vector<std::uint64_t>>& m) {
  return dump(json(m));
}

std::string serialize_analysis_report(const AnalysisReport& r) {
  json j;
  j["triple_summary"] = {{"vertices", r.vertex_count},
                         {"edges_graph1", r.edge_count_g1},
                         {"edges_graph2", r.edge_count_g2},
                         {"composable_pairs", r.composable_pair_count}};
  j["theta_unique"] = r.theta_unique;
  json zeros = json::array();
  for (const Generator& z : r.entry_map.zeros) zeros.push_back({z.row, z.col});
  j["zero_entries"] = std::move(zeros);
  json classes = json::array();
  for (const auto& cls : r.entry_map.classes) {
    json c = json::array();
    for (const Generator& g : cls) c.push_back({g.row, g.col});
    classes.push_back(std::move(c));
  }
  j["entry_classes"] = std::move(classes);
  j["theta_relations_redundant"] = r.theta_relations_redundant;
  json red = json::array();
  for (bool b : r.theta_redundancy) red.push_back(b);
  j["theta_redundancy"] = std::move(red);
  j["commutativity"] = r.commutativity.proved ? "proved" : "inconclusive";
  json inconclusive = json::array();
  for (const auto& [a, b] : r.commutativity.inconclusive_pairs)
    inconclusive.push_back({{a.row, a.col}, {b.row, b.col}});
  j["commutativity_inconclusive_pairs"] = std::move(inconclusive);
  j["classical_group"] = group_to_json(r.classical_group);
  j["verdict"] = r.verdict;
  j["degree_bound_used"] = r.degree_bound_used;
  if (!r.ideal_dump.empty()) j["ideal_dump"] = json::parse(r.ideal_dump);
  return dump(j);
}

std::string saturation_debug_json(const Saturation& s) {
  json j;
  j["degree_bound"] = s.degree_bound();
  j["tracked_words"] = s.tracked_words();
  json basis = json::array();
  for (const NCPoly& row : s.basis()) basis.push_back(poly_to_json(row));
  j["basis"] = std::move(basis);
  return dump(j);
}

} // namespace qsym
