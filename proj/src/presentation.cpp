#include "qsym/presentation.hpp"

#include <algorithm>
#include <map>

#include "qsym/errors.hpp"

namespace qsym {

const char* rel_tag_name(RelTag t) {
  switch (t) {
    case RelTag::Idempotent: return "idempotent";
    case RelTag::RowOrthogonal: return "row-orthogonal";
    case RelTag::ColOrthogonal: return "col-orthogonal";
    case RelTag::RowSum: return "row-sum";
    case RelTag::ColSum: return "col-sum";
    case RelTag::EdgeVanishingG1: return "edge-vanishing-G1";
    case RelTag::EdgeVanishingG2: return "edge-vanishing-G2";
    case RelTag::CommutantG1: return "commutant-G1";
    case RelTag::CommutantG2: return "commutant-G2";
    case RelTag::Theta: return "theta";
  }
  return "?";
}

RelTag rel_tag_from_name(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(RelTag::Theta); ++i) {
    RelTag t = static_cast<RelTag>(i);
    if (s == rel_tag_name(t)) return t;
  }
  throw ParseError("tag", "unknown relation tag '" + s + "'");
}

namespace {

NCPoly gen(int i, int j) { return NCPoly::generator({i, j}); }

void push(std::vector<Relation>& out, NCPoly poly, RelTag tag, Provenance prov) {
  if (poly.is_zero()) return; // zero as written, nothing to state
  prov.family = tag;
  out.push_back({std::move(poly), tag, {std::move(prov)}});
}

void magic_relations(int n, std::vector<Relation>& out) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      push(out, gen(i, j).mul(gen(i, j)) - gen(i, j), RelTag::Idempotent,
           {{}, {i, j}, {}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (j != k)
          push(out, gen(i, j).mul(gen(i, k)), RelTag::RowOrthogonal, {{}, {i, j, k}, {}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (j != k)
          push(out, gen(j, i).mul(gen(k, i)), RelTag::ColOrthogonal, {{}, {i, j, k}, {}});
  for (int i = 0; i < n; ++i) {
    NCPoly row = NCPoly::constant(-1), col = NCPoly::constant(-1);
    for (int l = 0; l < n; ++l) {
      row += gen(i, l);
      col += gen(l, i);
    }
    push(out, std::move(row), RelTag::RowSum, {{}, {i}, {}});
    push(out, std::move(col), RelTag::ColSum, {{}, {i}, {}});
  }
}

void edge_vanishing_relations(const OneGraph& g, const VertexMatrix& adj, RelTag tag,
                              std::vector<Relation>& out) {
  const int n = adj.dim();
  for (const Edge& e : g.edges()) {
    const int s = e.source, t = e.target;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (adj.at(k, i) != 0) continue; // (i,k) is an edge
        push(out, gen(s, i).mul(gen(t, k)), tag, {{}, {i, k, 0}, {e.id}});
        push(out, gen(t, k).mul(gen(s, i)), tag, {{}, {i, k, 1}, {e.id}});
        push(out, gen(i, s).mul(gen(k, t)), tag, {{}, {i, k, 2}, {e.id}});
        push(out, gen(k, t).mul(gen(i, s)), tag, {{}, {i, k, 3}, {e.id}});
      }
    }
  }
}

void commutant_relations(const VertexMatrix& adj, RelTag tag, std::vector<Relation>& out) {
  const int n = adj.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      NCPoly p;
      for (int k = 0; k < n; ++k) {
        if (adj.at(k, j)) p += gen(i, k);  // (Q A)_{ij}
        if (adj.at(i, k)) p -= gen(k, j);  // (A Q)_{ij}
      }
      push(out, std::move(p), tag, {{}, {i, j}, {}});
    }
  }
}

} // namespace

Presentation generate(const Triple& t) {
  ensure_valid(t);
  const int n = t.g1.vertex_count();
  VertexMatrix a1 = vertex_matrix(t.g1), a2 = vertex_matrix(t.g2);

  Presentation p;
  p.n = n;
  magic_relations(n, p.relations);
  edge_vanishing_relations(t.g1, a1, RelTag::EdgeVanishingG1, p.relations);
  edge_vanishing_relations(t.g2, a2, RelTag::EdgeVanishingG2, p.relations);
  commutant_relations(a1, RelTag::CommutantG1, p.relations);
  commutant_relations(a2, RelTag::CommutantG2, p.relations);

  // Cubic family: one relation per ordered pair of composable pairs. With
  // theta(alpha,beta) = (mu,nu) and theta(alpha',beta') = (mu',nu'):
  //   q_{t(mu')t(mu)} q_{s(mu')s(mu)} q_{s(nu')s(nu)}
  //     = q_{t(alpha')t(alpha)} q_{s(alpha')s(alpha)} q_{s(beta')s(beta)}.
  const auto& mapping = t.theta.mapping();
  for (const auto& [p0, q0] : mapping) {
    const Edge& alpha = t.g1.edge(p0.first);
    const Edge& beta = t.g2.edge(p0.second);
    const Edge& mu = t.g2.edge(q0.first);
    const Edge& nu = t.g1.edge(q0.second);
    for (const auto& [p1, q1] : mapping) {
      const Edge& alpha_p = t.g1.edge(p1.first);
      const Edge& beta_p = t.g2.edge(p1.second);
      const Edge& mu_p = t.g2.edge(q1.first);
      const Edge& nu_p = t.g1.edge(q1.second);
      NCPoly lhs = gen(mu_p.target, mu.target)
                       .mul(gen(mu_p.source, mu.source))
                       .mul(gen(nu_p.source, nu.source));
      NCPoly rhs = gen(alpha_p.target, alpha.target)
                       .mul(gen(alpha_p.source, alpha.source))
                       .mul(gen(beta_p.source, beta.source));
      push(p.relations, lhs - rhs, RelTag::Theta,
           {{}, {}, {alpha.id, beta.id, alpha_p.id, beta_p.id}});
    }
  }
  return p;
}

Presentation generate_single(const OneGraph& g) {
  ensure_valid(g);
  VertexMatrix adj = vertex_matrix(g);
  Presentation p;
  p.n = g.vertex_count();
  magic_relations(p.n, p.relations);
  edge_vanishing_relations(g, adj, RelTag::EdgeVanishingG1, p.relations);
  commutant_relations(adj, RelTag::CommutantG1, p.relations);
  return p;
}

Presentation canonicalize(const Presentation& p) {
  struct PolyLess {
    bool operator()(const NCPoly& a, const NCPoly& b) const {
      return NCPoly::compare(a, b) == std::strong_ordering::less;
    }
  };
  std::map<NCPoly, Relation, PolyLess> merged;
  for (const Relation& r : p.relations) {
    NCPoly poly = r.poly;
    if (poly.is_zero()) continue;
    poly.make_monic();
    auto it = merged.find(poly);
    if (it == merged.end()) {
      Relation c{poly, r.tag, r.provenance};
      merged.emplace(std::move(poly), std::move(c));
    } else {
      if (static_cast<int>(r.tag) < static_cast<int>(it->second.tag))
        it->second.tag = r.tag;
      it->second.provenance.insert(it->second.provenance.end(), r.provenance.begin(),
                                   r.provenance.end());
    }
  }
  Presentation out;
  out.n = p.n;
  out.canonical = true;
  out.relations.reserve(merged.size());
  for (auto& [poly, rel] : merged) out.relations.push_back(std::move(rel));
  return out;
}

Presentation conjugate_presentation(const Presentation& p, const Permutation& perm) {
  if (!perm.is_valid() || perm.degree() != p.n)
    throw InvalidArgument("conjugate_presentation: permutation does not fit");
  Presentation out;
  out.n = p.n;
  out.canonical = false;
  out.relations.reserve(p.relations.size());
  for (const Relation& r : p.relations) {
    NCPoly q;
    for (const auto& [w, c] : r.poly.terms()) {
      Word mapped;
      mapped.letters.reserve(w.letters.size());
      for (Letter l : w.letters)
        mapped.letters.push_back(make_letter(perm(letter_row(l)), perm(letter_col(l))));
      q.add_term(mapped, c);
    }
    out.relations.push_back({std::move(q), r.tag, r.provenance});
  }
  return out;
}

bool equal_canonical(const Presentation& a, const Presentation& b) {
  Presentation ca = a.canonical ? a : canonicalize(a);
  Presentation cb = b.canonical ? b : canonicalize(b);
  if (ca.n != cb.n || ca.relations.size() != cb.relations.size()) return false;
  for (size_t i = 0; i < ca.relations.size(); ++i) {
    if (ca.relations[i].tag != cb.relations[i].tag) return false;
    if (!(ca.relations[i].poly == cb.relations[i].poly)) return false;
  }
  return true;
}

std::vector<Relation> relations_with_tag(const Presentation& p, RelTag tag) {
  std::vector<Relation> out;
  for (const Relation& r : p.relations)
    if (r.tag == tag) out.push_back(r);
  return out;
}

Presentation without_theta(const Presentation& p) {
  Presentation out;
  out.n = p.n;
  out.canonical = p.canonical;
  for (const Relation& r : p.relations)
    if (r.tag != RelTag::Theta) out.relations.push_back(r);
  return out;
}

} // namespace qsym
