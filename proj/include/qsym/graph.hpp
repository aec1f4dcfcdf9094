#ifndef QSYM_GRAPH_HPP
#define QSYM_GRAPH_HPP

#include <string>
#include <unordered_map>
#include <vector>

namespace qsym {

struct Edge {
  std::string id;
  int source = 0;
  int target = 0;
};

// Finite directed graph on labelled vertices. Edges are kept in canonical
// order (lexicographic by id). Construction never rejects data; invariants
// (no multiple edges, no sources, no sinks, unique nonempty ids) are checked
// by validate_graph, which reports violations instead of throwing.
class OneGraph {
public:
  OneGraph() = default;
  OneGraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

  // Index of the edge with the given id, or -1.
  int edge_index(const std::string& id) const;
  // Index of the edge source -> target, or -1. Meaningful on valid graphs
  // (no multiple edges); on invalid data returns the first match.
  int edge_between(int source, int target) const;

  bool same_vertex_set(const OneGraph& other) const {
    return labels_ == other.labels_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> by_id_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes; // informational (loops)
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_graph(const OneGraph& g);

// Throws InvalidArgument when the graph fails validation.
void ensure_valid(const OneGraph& g);

// 0/1 vertex matrix, row = target, column = source.
class VertexMatrix {
public:
  VertexMatrix() = default;
  explicit VertexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

  int dim() const { return n_; }
  int at(int target, int source) const {
    return a_[static_cast<size_t>(target) * n_ + source];
  }
  void set(int target, int source, int v) {
    a_[static_cast<size_t>(target) * n_ + source] = v;
  }
  bool operator==(const VertexMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<int> a_;
};

// Requires a valid graph (throws InvalidArgument otherwise).
VertexMatrix vertex_matrix(const OneGraph& g);

// AB == BA as integer matrices. Throws InvalidArgument on dimension mismatch.
bool check_commuting(const VertexMatrix& a, const VertexMatrix& b);

} // namespace qsym

#endif
