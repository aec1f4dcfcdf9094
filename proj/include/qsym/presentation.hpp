#ifndef QSYM_PRESENTATION_HPP
#define QSYM_PRESENTATION_HPP

#include <string>
#include <vector>

#include "qsym/equivalence.hpp"
#include "qsym/ncpoly.hpp"
#include "qsym/triple.hpp"

namespace qsym {

enum class RelTag {
  Idempotent,
  RowOrthogonal,
  ColOrthogonal,
  RowSum,
  ColSum,
  EdgeVanishingG1,
  EdgeVanishingG2,
  CommutantG1,
  CommutantG2,
  Theta,
};

const char* rel_tag_name(RelTag t);
RelTag rel_tag_from_name(const std::string& s); // throws ParseError

// What produced a relation: the family plus its indices/edges. Merged
// duplicates keep one entry per origin.
struct Provenance {
  RelTag family = RelTag::Idempotent;
  std::vector<int> indices;       // family-specific (i,j[,k], variant, ...)
  std::vector<std::string> edges; // edge ids involved, when any
  bool operator==(const Provenance&) const = default;
};

struct Relation {
  NCPoly poly; // the relation is poly = 0; never zero as stored
  RelTag tag = RelTag::Idempotent;
  std::vector<Provenance> provenance;
};

struct Presentation {
  int n = 0;
  std::vector<Relation> relations;
  bool canonical = false;
};

// Defining presentation of the quantum automorphism group of a triple:
// magic-unitary relations, edge-vanishing for both graphs, linear commutant
// relations for both vertex matrices, and the cubic theta family (one
// relation per ordered pair of composable pairs). Relations that are zero
// as written (identity theta) are not emitted.
Presentation generate(const Triple& t);

// The relations of the quantum automorphism group of a single graph (magic,
// edge-vanishing, commutant; tags use the G1 variants). Used to compare
// against pullback presentations.
Presentation generate_single(const OneGraph& g);

// Sorted monic relations, zero polys dropped, duplicates merged (tag becomes
// the smallest family, provenance concatenated). Idempotent.
Presentation canonicalize(const Presentation& p);

// Relabels every generator q_ij -> q_{perm(i),perm(j)}. Output is not
// canonical; provenance is carried over unchanged.
Presentation conjugate_presentation(const Presentation& p, const Permutation& perm);

// Equality of canonical forms: same n and same (tag, poly) sequence.
bool equal_canonical(const Presentation& a, const Presentation& b);

// Canonical relations with the given tag, in canonical order.
std::vector<Relation> relations_with_tag(const Presentation& p, RelTag tag);

// Copy without the theta family (canonical stays canonical).
Presentation without_theta(const Presentation& p);

} // namespace qsym

#endif
