#include "qsym/analyzer.hpp"

#include <algorithm>
#include <numeric>

#include "qsym/errors.hpp"
#include "qsym/json_io.hpp"

namespace qsym {

namespace {

std::vector<bool> theta_redundancy_impl(const std::vector<Relation>& theta_rels,
                                        const Presentation& canonical_full,
                                        const RewriteSystem& rs,
                                        const SaturationOptions& opts) {
  std::vector<bool> out(theta_rels.size(), true);
  if (theta_rels.empty()) return out;
  Presentation reduced = canonicalize(without_theta(canonical_full));
  Saturation sat = Saturation::build(reduced, rs, opts);
  for (size_t i = 0; i < theta_rels.size(); ++i) {
    // The monomial rules all come from non-theta relations, so testing the
    // normal form is equivalent; anything still over the bound is simply
    // not provable there.
    NCPoly v = rs.normalize(theta_rels[i].poly);
    out[i] = v.degree() <= opts.degree_bound && sat.proves(v);
  }
  return out;
}

} // namespace

AnalysisReport analyze(const Triple& t, const AnalysisOptions& opts) {
  ensure_valid(t);
  AnalysisReport rep;
  rep.degree_bound_used = opts.degree_bound;
  rep.vertex_count = t.g1.vertex_count();
  rep.edge_count_g1 = static_cast<int>(t.g1.edges().size());
  rep.edge_count_g2 = static_cast<int>(t.g2.edges().size());
  rep.composable_pair_count = static_cast<int>(composable_pairs(t.g1, t.g2).size());
  rep.theta_unique = count_thetas(t.g1, t.g2) == 1;

  SaturationOptions sopts{opts.degree_bound, opts.budget, opts.jobs};
  Presentation raw = generate(t);
  Presentation pres = canonicalize(raw);
  RewriteSystem rs(t);
  Saturation sat = Saturation::build(pres, rs, sopts);

  const int n = rep.vertex_count;
  rep.entry_map = derived_entry_map(sat, n);
  rep.commutativity = prove_commutativity(sat, n);

  std::vector<Relation> theta_rels = relations_with_tag(raw, RelTag::Theta);
  rep.theta_redundancy = theta_redundancy_impl(theta_rels, pres, rs, sopts);
  rep.theta_relations_redundant =
      std::all_of(rep.theta_redundancy.begin(), rep.theta_redundancy.end(),
                  [](bool b) { return b; });

  rep.classical_group = automorphisms(t);

  // Consistency gate: a proved-zero entry must vanish on every classical
  // automorphism, else the engine proved something false.
  for (const Generator& z : rep.entry_map.zeros) {
    for (const Permutation& p : rep.classical_group.elements) {
      if (p(z.col) == z.row)
        throw InternalError("analyze: q_" + std::to_string(z.row) + "," +
                            std::to_string(z.col) +
                            " proved zero but a classical automorphism hits it");
    }
  }

  rep.verdict = rep.commutativity.proved ? kVerdictClassical : kVerdictInconclusive;

  if (rep.commutativity.proved && n <= 6) {
    std::uint64_t census = solution_census(pres);
    if (census != rep.classical_group.order)
      throw InternalError("analyze: 0/1 solution census " + std::to_string(census) +
                          " != classical group order " +
                          std::to_string(rep.classical_group.order));
  }

  if (opts.dump_ideal) rep.ideal_dump = saturation_debug_json(sat);
  return rep;
}

std::vector<bool> check_theta_redundant(const Triple& t, const SaturationOptions& opts) {
  ensure_valid(t);
  Presentation raw = generate(t);
  std::vector<Relation> theta_rels = relations_with_tag(raw, RelTag::Theta);
  return theta_redundancy_impl(theta_rels, canonicalize(raw), RewriteSystem(t), opts);
}

std::uint64_t solution_census(const Presentation& p) {
  const int n = p.n;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Relation& r : p.relations) {
      Rat sum = 0;
      for (const auto& [w, c] : r.poly.terms()) {
        bool one = true;
        for (Letter l : w.letters) {
          if (perm[static_cast<size_t>(letter_col(l))] != letter_row(l)) {
            one = false;
            break;
          }
        }
        if (one) sum += c;
      }
      if (sum != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

} // namespace qsym
