#ifndef QSYM_EQUIVALENCE_HPP
#define QSYM_EQUIVALENCE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsym/triple.hpp"

namespace qsym {

// Vertex permutation, images[v] = T(v).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int v) const { return images[static_cast<size_t>(v)]; }
  Permutation inverse() const;
  // (a.compose(b))(v) = a(b(v)).
  Permutation compose(const Permutation& b) const;
  int order() const;
  bool is_valid() const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

enum class WitnessMode { FirstWitness, AllWitnesses };

// Every permutation T with T*A2 = A1*T, T*B2 = B1*T (as matrices, so T maps
// edges of t2 into edges of t1) that intertwines the thetas:
// theta1(T(p)) = T(theta2(p)) for every composable pair p of t2.
// Empty result means not equivalent. Witnesses come out sorted by image tuple.
std::vector<Permutation> is_equivalent(const Triple& t1, const Triple& t2,
                                       WitnessMode mode = WitnessMode::AllWitnesses);

// Pushforward relabelling: edge v->w becomes p(v)->p(w) in both graphs (ids
// kept), theta transported along. is_equivalent(conjugate_triple(t,p), t)
// contains p.
Triple conjugate_triple(const Triple& t, const Permutation& p);

struct GroupReport {
  std::vector<Permutation> elements; // sorted, closed, contains identity
  std::uint64_t order = 0;
  bool abelian = true;
  std::map<int, int> element_orders; // order -> multiplicity
  std::string name;
};

// Self-equivalences of the triple, with group axioms verified and the group
// identified by (order, abelianness, element-order multiset).
GroupReport automorphisms(const Triple& t);

// Naming: order 1 "trivial"; full symmetric group "Sn"; orders <= 15 via the
// invariant triple (sufficient there); otherwise "order-N group".
std::string identify_group(const GroupReport& g);

} // namespace qsym

#endif
