#include "qsym/triple.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qsym/errors.hpp"

namespace qsym {

PairList composable_pairs(const OneGraph& x, const OneGraph& y) {
  if (!x.same_vertex_set(y))
    throw InvalidArgument("composable_pairs: graphs do not share a vertex set");
  PairList out;
  const auto& ex = x.edges();
  const auto& ey = y.edges();
  for (size_t i = 0; i < ex.size(); ++i) {
    for (size_t j = 0; j < ey.size(); ++j) {
      if (ex[i].source == ey[j].target)
        out.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  // Edge lists are id-sorted, so index-lexicographic equals id-lexicographic.
  return out;
}

std::optional<ComposablePair> Theta::image(const ComposablePair& p) const {
  for (const auto& [from, to] : mapping_)
    if (from == p) return to;
  return std::nullopt;
}

namespace {

std::string pair_str(const OneGraph& x, const OneGraph& y, const ComposablePair& p) {
  return "(" + x.edge(p.first).id + "," + y.edge(p.second).id + ")";
}

} // namespace

ValidationReport validate_theta(const Triple& t) {
  ValidationReport r;
  PairList domain = composable_pairs(t.g1, t.g2);
  PairList codomain = composable_pairs(t.g2, t.g1);
  std::set<ComposablePair> domain_set(domain.begin(), domain.end());
  std::set<ComposablePair> codomain_set(codomain.begin(), codomain.end());

  std::set<ComposablePair> seen_from, seen_to;
  for (const auto& [from, to] : t.theta.mapping()) {
    if (!domain_set.count(from)) {
      r.violations.push_back("theta: pair " + pair_str(t.g1, t.g2, from) +
                             " is not a composable pair of (G1,G2)");
      continue;
    }
    if (!seen_from.insert(from).second)
      r.violations.push_back("theta: pair " + pair_str(t.g1, t.g2, from) +
                             " mapped more than once");
    if (!codomain_set.count(to)) {
      r.violations.push_back("theta: image " + pair_str(t.g2, t.g1, to) +
                             " of " + pair_str(t.g1, t.g2, from) +
                             " is not a composable pair of (G2,G1)");
      continue;
    }
    if (!seen_to.insert(to).second)
      r.violations.push_back("theta: image " + pair_str(t.g2, t.g1, to) +
                             " hit more than once (not injective)");
    const Edge& e = t.g1.edge(from.first);
    const Edge& f = t.g2.edge(from.second);
    const Edge& mu = t.g2.edge(to.first);
    const Edge& nu = t.g1.edge(to.second);
    if (e.target != mu.target)
      r.violations.push_back("theta: " + pair_str(t.g1, t.g2, from) + " -> " +
                             pair_str(t.g2, t.g1, to) +
                             " breaks target boundary (t(first) differs)");
    if (f.source != nu.source)
      r.violations.push_back("theta: " + pair_str(t.g1, t.g2, from) + " -> " +
                             pair_str(t.g2, t.g1, to) +
                             " breaks source boundary (s(second) differs)");
  }
  for (const auto& p : domain) {
    if (!seen_from.count(p))
      r.violations.push_back("theta: pair " + pair_str(t.g1, t.g2, p) + " has no image");
  }
  return r;
}

ValidationReport validate_triple(const Triple& t) {
  ValidationReport r;
  if (!t.g1.same_vertex_set(t.g2)) {
    r.violations.push_back("triple: graphs do not share a vertex list");
    return r;
  }
  ValidationReport r1 = validate_graph(t.g1);
  ValidationReport r2 = validate_graph(t.g2);
  for (auto& v : r1.violations) r.violations.push_back("G1: " + v);
  for (auto& v : r2.violations) r.violations.push_back("G2: " + v);
  for (auto& n : r1.notes) r.notes.push_back("G1: " + n);
  for (auto& n : r2.notes) r.notes.push_back("G2: " + n);
  if (!r.violations.empty()) return r;

  if (!check_commuting(vertex_matrix(t.g1), vertex_matrix(t.g2)))
    r.violations.push_back("triple: vertex matrices do not commute");

  ValidationReport rt = validate_theta(t);
  for (auto& v : rt.violations) r.violations.push_back(v);
  return r;
}

void ensure_valid(const Triple& t) {
  ValidationReport r = validate_triple(t);
  if (!r.ok()) {
    std::string msg = "invalid triple:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw InvalidArgument(msg);
  }
}

ThetaEnumerator::ThetaEnumerator(const OneGraph& x, const OneGraph& y) {
  ensure_valid(x);
  ensure_valid(y);
  if (!check_commuting(vertex_matrix(x), vertex_matrix(y)))
    throw InvalidArgument("enumerate_thetas: vertex matrices do not commute");

  domain_ = composable_pairs(x, y);
  codomain_ = composable_pairs(y, x);

  std::map<std::pair<int, int>, Block> by_key;
  for (size_t i = 0; i < domain_.size(); ++i) {
    const auto& p = domain_[i];
    by_key[{x.edge(p.first).target, y.edge(p.second).source}].dom.push_back(
        static_cast<int>(i));
  }
  for (size_t j = 0; j < codomain_.size(); ++j) {
    const auto& q = codomain_[j];
    by_key[{y.edge(q.first).target, x.edge(q.second).source}].cod.push_back(
        static_cast<int>(j));
  }
  total_ = 1;
  for (auto& [key, b] : by_key) {
    if (b.dom.size() != b.cod.size())
      throw InternalError("theta enumeration: mismatched boundary block sizes");
    if (b.dom.empty()) continue;
    b.perm.resize(b.dom.size());
    for (size_t k = 0; k < b.perm.size(); ++k) b.perm[k] = static_cast<int>(k);
    BigInt f = 1;
    for (size_t k = 2; k <= b.dom.size(); ++k) f *= static_cast<unsigned long>(k);
    total_ *= f;
    blocks_.push_back(std::move(b));
  }
}

bool ThetaEnumerator::next(Theta& out) {
  if (done_) return false;

  std::vector<std::pair<ComposablePair, ComposablePair>> mapping(domain_.size());
  for (const Block& b : blocks_) {
    for (size_t k = 0; k < b.dom.size(); ++k) {
      int d = b.dom[k];
      int c = b.cod[static_cast<size_t>(b.perm[k])];
      mapping[static_cast<size_t>(d)] = {domain_[static_cast<size_t>(d)],
                                         codomain_[static_cast<size_t>(c)]};
    }
  }
  out = Theta(std::move(mapping));

  // Advance the odometer: last block fastest.
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
    if (std::next_permutation(it->perm.begin(), it->perm.end())) return true;
    // wrapped to identity, carry on
  }
  done_ = true;
  return true;
}

std::vector<Theta> enumerate_thetas(const OneGraph& x, const OneGraph& y,
                                    std::optional<std::uint64_t> limit) {
  ThetaEnumerator en(x, y);
  std::vector<Theta> out;
  Theta th;
  while (en.next(th)) {
    out.push_back(std::move(th));
    if (limit && out.size() >= *limit) break;
  }
  return out;
}

BigInt count_thetas(const OneGraph& x, const OneGraph& y) {
  ensure_valid(x);
  ensure_valid(y);
  if (!x.same_vertex_set(y))
    throw InvalidArgument("count_thetas: graphs do not share a vertex set");
  VertexMatrix a = vertex_matrix(x), b = vertex_matrix(y);
  if (!check_commuting(a, b))
    throw InvalidArgument("count_thetas: vertex matrices do not commute");
  const int n = a.dim();
  BigInt total = 1;
  for (int w = 0; w < n; ++w) {
    for (int v = 0; v < n; ++v) {
      long size = 0;
      for (int u = 0; u < n; ++u) size += a.at(w, u) * b.at(u, v);
      BigInt f = 1;
      for (long k = 2; k <= size; ++k) f *= k;
      total *= f;
    }
  }
  return total;
}

std::vector<std::vector<std::uint64_t>> skeleton_count(const Triple& t, int m, int n,
                                                       int bound) {
  ensure_valid(t);
  if (m < 0 || n < 0) throw InvalidArgument("skeleton_count: degrees must be >= 0");
  if (m + n > bound)
    throw InvalidArgument("skeleton_count: m + n = " + std::to_string(m + n) +
                          " exceeds bound " + std::to_string(bound));
  const int dim = t.g1.vertex_count();
  VertexMatrix a1 = vertex_matrix(t.g1), a2 = vertex_matrix(t.g2);

  std::vector<std::vector<std::uint64_t>> acc(
      static_cast<size_t>(dim), std::vector<std::uint64_t>(static_cast<size_t>(dim), 0));
  for (int i = 0; i < dim; ++i) acc[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

  auto mul = [dim](const std::vector<std::vector<std::uint64_t>>& x,
                   const VertexMatrix& y) {
    std::vector<std::vector<std::uint64_t>> r(
        static_cast<size_t>(dim), std::vector<std::uint64_t>(static_cast<size_t>(dim), 0));
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k)
        for (int j = 0; j < dim; ++j) {
          if (y.at(k, j) == 0) continue;
          auto& cell = r[static_cast<size_t>(i)][static_cast<size_t>(j)];
          std::uint64_t add = x[static_cast<size_t>(i)][static_cast<size_t>(k)];
          if (__builtin_add_overflow(cell, add, &cell))
            throw InvalidArgument("skeleton_count: count overflow; lower the bound");
        }
    return r;
  };
  for (int i = 0; i < m; ++i) acc = mul(acc, a1);
  for (int i = 0; i < n; ++i) acc = mul(acc, a2);
  return acc;
}

Triple pullback(const OneGraph& g) {
  ensure_valid(g);
  PairList pairs = composable_pairs(g, g);
  std::vector<std::pair<ComposablePair, ComposablePair>> mapping;
  mapping.reserve(pairs.size());
  for (const auto& p : pairs) mapping.emplace_back(p, p);
  return Triple{g, g, Theta(std::move(mapping))};
}

} // namespace qsym
