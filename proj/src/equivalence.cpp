#include "qsym/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "qsym/errors.hpp"

namespace qsym {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (size_t v = 0; v < images.size(); ++v)
    p.images[static_cast<size_t>(images[v])] = static_cast<int>(v);
  return p;
}

Permutation Permutation::compose(const Permutation& b) const {
  Permutation p;
  p.images.resize(images.size());
  for (size_t v = 0; v < images.size(); ++v)
    p.images[v] = images[static_cast<size_t>(b.images[v])];
  return p;
}

int Permutation::order() const {
  Permutation acc = *this;
  Permutation id = identity(degree());
  int k = 1;
  while (!(acc == id)) {
    acc = acc.compose(*this);
    ++k;
  }
  return k;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<size_t>(v) >= images.size() || seen[static_cast<size_t>(v)])
      return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

namespace {

struct PairHash {
  size_t operator()(const std::pair<int, int>& p) const {
    return static_cast<size_t>(p.first) * 1000003u + static_cast<size_t>(p.second);
  }
};

// theta as a hash map on (first,second) edge-index pairs.
std::unordered_map<std::pair<int, int>, std::pair<int, int>, PairHash>
theta_map(const Theta& th) {
  std::unordered_map<std::pair<int, int>, std::pair<int, int>, PairHash> m;
  for (const auto& [from, to] : th.mapping())
    m[{from.first, from.second}] = {to.first, to.second};
  return m;
}

bool theta_compatible(const Triple& t1, const Triple& t2, const Permutation& T) {
  auto th1 = theta_map(t1.theta);
  for (const auto& [from, to] : t2.theta.mapping()) {
    const Edge& e = t2.g1.edge(from.first);
    const Edge& f = t2.g2.edge(from.second);
    const Edge& mu = t2.g2.edge(to.first);
    const Edge& nu = t2.g1.edge(to.second);
    int te = t1.g1.edge_between(T(e.source), T(e.target));
    int tf = t1.g2.edge_between(T(f.source), T(f.target));
    int tmu = t1.g2.edge_between(T(mu.source), T(mu.target));
    int tnu = t1.g1.edge_between(T(nu.source), T(nu.target));
    if (te < 0 || tf < 0 || tmu < 0 || tnu < 0) return false;
    auto it = th1.find({te, tf});
    if (it == th1.end()) return false;
    if (it->second != std::make_pair(tmu, tnu)) return false;
  }
  return true;
}

struct DegreeSig {
  int out1, in1, out2, in2;
  bool operator==(const DegreeSig&) const = default;
};

std::vector<DegreeSig> degree_signatures(const Triple& t) {
  const int n = t.g1.vertex_count();
  std::vector<DegreeSig> sig(static_cast<size_t>(n), {0, 0, 0, 0});
  for (const Edge& e : t.g1.edges()) {
    ++sig[static_cast<size_t>(e.source)].out1;
    ++sig[static_cast<size_t>(e.target)].in1;
  }
  for (const Edge& e : t.g2.edges()) {
    ++sig[static_cast<size_t>(e.source)].out2;
    ++sig[static_cast<size_t>(e.target)].in2;
  }
  return sig;
}

} // namespace

std::vector<Permutation> is_equivalent(const Triple& t1, const Triple& t2,
                                       WitnessMode mode) {
  if (t1.g1.vertex_count() != t2.g1.vertex_count())
    throw InvalidArgument("is_equivalent: vertex counts differ");
  ensure_valid(t1);
  ensure_valid(t2);

  const int n = t1.g1.vertex_count();
  VertexMatrix a1 = vertex_matrix(t1.g1), b1 = vertex_matrix(t1.g2);
  VertexMatrix a2 = vertex_matrix(t2.g1), b2 = vertex_matrix(t2.g2);
  std::vector<DegreeSig> sig1 = degree_signatures(t1);
  std::vector<DegreeSig> sig2 = degree_signatures(t2);

  std::vector<Permutation> witnesses;
  std::vector<int> image(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);

  // Assign T(v) for v = 0..n-1; edge v->w in t2 must map to edge T(v)->T(w)
  // in t1 (and conversely), for both constituent graphs.
  auto consistent = [&](int v, int w) {
    if (!(sig2[static_cast<size_t>(v)] == sig1[static_cast<size_t>(w)])) return false;
    for (int u = 0; u <= v; ++u) {
      int tu = image[static_cast<size_t>(u)];
      if (tu < 0) continue;
      if (a2.at(u, v) != a1.at(tu, w)) return false;
      if (a2.at(v, u) != a1.at(w, tu)) return false;
      if (b2.at(u, v) != b1.at(tu, w)) return false;
      if (b2.at(v, u) != b1.at(w, tu)) return false;
    }
    return true;
  };

  bool stop = false;
  auto dfs = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v == n) {
      Permutation T{image};
      if (theta_compatible(t1, t2, T)) {
        witnesses.push_back(std::move(T));
        if (mode == WitnessMode::FirstWitness) stop = true;
      }
      return;
    }
    for (int w = 0; w < n && !stop; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (!consistent(v, w)) continue;
      image[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = true;
      self(self, v + 1);
      used[static_cast<size_t>(w)] = false;
      image[static_cast<size_t>(v)] = -1;
    }
  };
  dfs(dfs, 0);

  std::sort(witnesses.begin(), witnesses.end());
  return witnesses;
}

Triple conjugate_triple(const Triple& t, const Permutation& p) {
  if (!p.is_valid() || p.degree() != t.g1.vertex_count())
    throw InvalidArgument("conjugate_triple: permutation does not fit the triple");
  auto relabel = [&](const OneGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
      edges.push_back({e.id, p(e.source), p(e.target)});
    return OneGraph(g.vertex_labels(), std::move(edges));
  };
  // Edge ids survive relabelling, composability is preserved, and the
  // boundary conditions transport, so theta carries over id-for-id.
  return Triple{relabel(t.g1), relabel(t.g2), t.theta};
}

GroupReport automorphisms(const Triple& t) {
  GroupReport g;
  g.elements = is_equivalent(t, t, WitnessMode::AllWitnesses);
  g.order = g.elements.size();

  std::set<Permutation> members(g.elements.begin(), g.elements.end());
  const int n = t.g1.vertex_count();
  if (!members.count(Permutation::identity(n)))
    throw InternalError("automorphisms: identity missing from witness set");
  for (const auto& a : g.elements) {
    if (!members.count(a.inverse()))
      throw InternalError("automorphisms: witness set not inverse-closed");
    for (const auto& b : g.elements) {
      if (!members.count(a.compose(b)))
        throw InternalError("automorphisms: witness set not closed under composition");
    }
  }

  g.abelian = true;
  for (size_t i = 0; i < g.elements.size() && g.abelian; ++i)
    for (size_t j = i + 1; j < g.elements.size(); ++j)
      if (!(g.elements[i].compose(g.elements[j]) ==
            g.elements[j].compose(g.elements[i]))) {
        g.abelian = false;
        break;
      }
  for (const auto& a : g.elements) ++g.element_orders[a.order()];
  g.name = identify_group(g);
  return g;
}

std::string identify_group(const GroupReport& g) {
  const std::uint64_t o = g.order;
  auto count = [&](int k) {
    auto it = g.element_orders.find(k);
    return it == g.element_orders.end() ? 0 : it->second;
  };
  int max_order = 0;
  for (const auto& [k, c] : g.element_orders)
    if (c > 0) max_order = std::max(max_order, k);

  if (o == 1) return "trivial";
  if (!g.elements.empty()) {
    // A subgroup of S_n of order n! is the whole symmetric group.
    const int n = g.elements.front().degree();
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
    if (o == fact && o > 15) return "S" + std::to_string(n);
  }
  if (o > 15) return "order-" + std::to_string(o) + " group";

  switch (o) {
    case 2: return "Z2";
    case 3: return "Z3";
    case 4: return max_order == 4 ? "Z4" : "Z2 x Z2";
    case 5: return "Z5";
    case 6: return g.abelian ? "Z6" : "S3";
    case 7: return "Z7";
    case 8:
      if (g.abelian) {
        if (max_order == 8) return "Z8";
        if (max_order == 4) return "Z4 x Z2";
        return "Z2 x Z2 x Z2";
      }
      return count(2) == 5 ? "D4" : "Q8";
    case 9: return max_order == 9 ? "Z9" : "Z3 x Z3";
    case 10: return g.abelian ? "Z10" : "D5";
    case 11: return "Z11";
    case 12:
      if (g.abelian) return max_order == 12 ? "Z12" : "Z6 x Z2";
      if (count(2) == 3) return "A4";
      return count(2) == 7 ? "D6" : "Dic3";
    case 13: return "Z13";
    case 14: return g.abelian ? "Z14" : "D7";
    case 15: return "Z15";
    default: return "order-" + std::to_string(o) + " group";
  }
}

} // namespace qsym
