#include "qsym/graph.hpp"

#include <algorithm>
#include <map>

#include "qsym/errors.hpp"

namespace qsym {

OneGraph::OneGraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (size_t i = 0; i < edges_.size(); ++i) {
    by_id_.emplace(edges_[i].id, static_cast<int>(i));
  }
}

int OneGraph::edge_index(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? -1 : it->second;
}

int OneGraph::edge_between(int source, int target) const {
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].source == source && edges_[i].target == target)
      return static_cast<int>(i);
  }
  return -1;
}

ValidationReport validate_graph(const OneGraph& g) {
  ValidationReport r;
  const int n = g.vertex_count();
  if (n <= 0) {
    r.violations.push_back("graph has no vertices");
    return r;
  }

  std::vector<int> indeg(static_cast<size_t>(n), 0), outdeg(static_cast<size_t>(n), 0);
  std::map<std::pair<int, int>, std::vector<std::string>> by_ends;
  std::map<std::string, int> id_count;

  for (const Edge& e : g.edges()) {
    if (e.id.empty()) r.violations.push_back("edge with empty id");
    ++id_count[e.id];
    if (e.source < 0 || e.source >= n) {
      r.violations.push_back("edge '" + e.id + "': source index out of range");
      continue;
    }
    if (e.target < 0 || e.target >= n) {
      r.violations.push_back("edge '" + e.id + "': target index out of range");
      continue;
    }
    ++outdeg[static_cast<size_t>(e.source)];
    ++indeg[static_cast<size_t>(e.target)];
    by_ends[{e.source, e.target}].push_back(e.id);
    if (e.source == e.target) {
      r.notes.push_back("edge '" + e.id + "' is a loop at vertex '" +
                        g.vertex_labels()[static_cast<size_t>(e.source)] + "'");
    }
  }

  for (const auto& [id, count] : id_count) {
    if (count > 1)
      r.violations.push_back("duplicate edge id '" + id + "'");
  }
  for (const auto& [ends, ids] : by_ends) {
    if (ids.size() > 1) {
      std::string msg = "multiple edges " +
                        g.vertex_labels()[static_cast<size_t>(ends.first)] + " -> " +
                        g.vertex_labels()[static_cast<size_t>(ends.second)] + ":";
      for (const auto& id : ids) msg += " '" + id + "'";
      r.violations.push_back(msg);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (indeg[static_cast<size_t>(v)] == 0)
      r.violations.push_back("vertex '" + g.vertex_labels()[static_cast<size_t>(v)] +
                             "' has no incoming edge (source)");
    if (outdeg[static_cast<size_t>(v)] == 0)
      r.violations.push_back("vertex '" + g.vertex_labels()[static_cast<size_t>(v)] +
                             "' has no outgoing edge (sink)");
  }
  return r;
}

void ensure_valid(const OneGraph& g) {
  ValidationReport r = validate_graph(g);
  if (!r.ok()) {
    std::string msg = "invalid graph:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw InvalidArgument(msg);
  }
}

VertexMatrix vertex_matrix(const OneGraph& g) {
  ensure_valid(g);
  VertexMatrix m(g.vertex_count());
  for (const Edge& e : g.edges()) m.set(e.target, e.source, 1);
  return m;
}

bool check_commuting(const VertexMatrix& a, const VertexMatrix& b) {
  if (a.dim() != b.dim())
    throw InvalidArgument("check_commuting: dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int ab = 0, ba = 0;
      for (int k = 0; k < n; ++k) {
        ab += a.at(i, k) * b.at(k, j);
        ba += b.at(i, k) * a.at(k, j);
      }
      if (ab != ba) return false;
    }
  }
  return true;
}

} // namespace qsym
