#ifndef QSYM_TRIPLE_HPP
#define QSYM_TRIPLE_HPP

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <utility>
#include <vector>

#include "qsym/graph.hpp"

namespace qsym {

using BigInt = mpz_class;

// A composable pair (e, f): e from graph X, f from graph Y, source(e) = target(f).
// Stored as edge indices into the canonical edge lists of X and Y.
struct ComposablePair {
  int first = -1;
  int second = -1;
  bool operator==(const ComposablePair&) const = default;
  auto operator<=>(const ComposablePair&) const = default;
};

using PairList = std::vector<ComposablePair>;

// All pairs (e in x, f in y) with source(e) = target(f), lexicographic by
// (id of e, id of f). Throws InvalidArgument when vertex sets differ.
PairList composable_pairs(const OneGraph& x, const OneGraph& y);

// Boundary-preserving bijection E1*E2 -> E2*E1, stored extensionally.
// Domain pairs are kept in canonical order.
class Theta {
public:
  Theta() = default;
  explicit Theta(std::vector<std::pair<ComposablePair, ComposablePair>> mapping)
      : mapping_(std::move(mapping)) {}

  const std::vector<std::pair<ComposablePair, ComposablePair>>& mapping() const {
    return mapping_;
  }
  size_t size() const { return mapping_.size(); }

  // Image of a domain pair; returns nullopt when absent.
  std::optional<ComposablePair> image(const ComposablePair& p) const;

private:
  std::vector<std::pair<ComposablePair, ComposablePair>> mapping_;
};

struct Triple {
  OneGraph g1;
  OneGraph g2;
  Theta theta;
};

// Theta invariants: domain is exactly the composable-pair list of (g1, g2),
// images lie in the composable pairs of (g2, g1), the map is a bijection,
// and each mapping preserves the outer boundary. Violations name the pair.
ValidationReport validate_theta(const Triple& t);

// All Triple invariants: shared vertex list, both graphs valid, commuting
// vertex matrices, valid theta.
ValidationReport validate_triple(const Triple& t);
void ensure_valid(const Triple& t);

// Streaming enumeration of every boundary-preserving bijection, grouped
// block-by-block (blocks share the outer boundary (target(first),
// source(second))). Deterministic order; the first block varies slowest.
class ThetaEnumerator {
public:
  ThetaEnumerator(const OneGraph& x, const OneGraph& y);
  bool next(Theta& out);
  const BigInt& total() const { return total_; }

private:
  PairList domain_;
  PairList codomain_;
  // Per block: positions into domain_ / codomain_ plus the current matching.
  struct Block {
    std::vector<int> dom;
    std::vector<int> cod;
    std::vector<int> perm; // perm[k]: dom[k] maps to cod[perm[k]]
  };
  std::vector<Block> blocks_;
  bool done_ = false;
  BigInt total_;
};

// Materializing wrapper; stops after `limit` bijections when given.
std::vector<Theta> enumerate_thetas(const OneGraph& x, const OneGraph& y,
                                    std::optional<std::uint64_t> limit = std::nullopt);

// Number of boundary-preserving bijections (product of factorials of the
// boundary-block sizes), without materializing them.
BigInt count_thetas(const OneGraph& x, const OneGraph& y);

// Entry [w][v] = number of degree-(m,n) morphisms v -> w = (A1^m A2^n)[w][v].
// Throws InvalidArgument when m + n exceeds `bound`.
std::vector<std::vector<std::uint64_t>> skeleton_count(const Triple& t, int m, int n,
                                                       int bound = 12);

// (g, g, identity theta).
Triple pullback(const OneGraph& g);

} // namespace qsym

#endif
