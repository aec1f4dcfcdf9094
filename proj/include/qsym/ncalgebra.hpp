#ifndef QSYM_NCALGEBRA_HPP
#define QSYM_NCALGEBRA_HPP

#include <cstddef>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qsym/ncpoly.hpp"
#include "qsym/presentation.hpp"
#include "qsym/triple.hpp"

namespace qsym {

// Confluent, length-nonincreasing monomial rules derived from the magic and
// edge-vanishing relations of a pair of vertex matrices:
//   q_ij q_ij -> q_ij;  q_ij q_ik -> 0 (j != k);  q_ji q_ki -> 0 (j != k);
//   edge-vanishing two-letter patterns -> 0; and letters whose square is a
//   zero pattern -> 0 (loop/non-loop interplay).
class RewriteSystem {
public:
  RewriteSystem(int n, const VertexMatrix& a1, const VertexMatrix& a2);
  explicit RewriteSystem(const Triple& t);
  explicit RewriteSystem(const OneGraph& g); // single-graph rules

  int dim() const { return n_; }
  bool zero_pair(Letter a, Letter b) const {
    return zero_pair_[index(a) * static_cast<size_t>(n_ * n_) + index(b)] != 0;
  }
  bool zero_letter(Letter a) const { return zero_letter_[index(a)] != 0; }

  // Fixpoint of leftmost rule application: 0 or a single word of degree
  // less than or equal to the input's.
  NCPoly normal_form(const Word& w) const;
  bool is_normal(const Word& w) const;
  NCPoly normalize(const NCPoly& p) const;

  // Applies applicable rules in random order; same fixpoint as normal_form
  // when the system is confluent (exercised by tests).
  NCPoly normal_form_random(const Word& w, std::mt19937_64& rng) const;

private:
  size_t index(Letter l) const {
    return static_cast<size_t>(letter_row(l)) * n_ + letter_col(l);
  }
  void classify(const VertexMatrix& a1, const VertexMatrix& a2);
  int n_ = 0;
  std::vector<unsigned char> zero_pair_;
  std::vector<unsigned char> zero_letter_;
};

struct SaturationOptions {
  int degree_bound = 4;
  std::size_t budget = 2'000'000; // max distinct normal words tracked
  int jobs = 1;
};

enum class MembershipResult { Proved, NotProvableAtBound };

// Row-reduced exact-rational basis of the degree-truncated two-sided ideal
// generated by a presentation's relations (closed under the involution).
// Sound: everything in the span lies in the ideal. Incomplete: membership
// can miss true members whose certificates exceed the degree bound.
class Saturation {
public:
  static Saturation build(const Presentation& p, const RewriteSystem& rs,
                          const SaturationOptions& opts = {});

  // Throws InvalidArgument when degree(x) exceeds the bound.
  MembershipResult membership(const NCPoly& x) const;
  bool proves(const NCPoly& x) const {
    return membership(x) == MembershipResult::Proved;
  }

  int degree_bound() const { return opts_.degree_bound; }
  std::size_t tracked_words() const { return tracked_.size(); }
  const std::vector<NCPoly>& basis() const { return rows_; }
  const RewriteSystem& rewrite_system() const { return rs_; }

private:
  explicit Saturation(const RewriteSystem& rs, const SaturationOptions& opts)
      : rs_(rs), opts_(opts) {}

  NCPoly reduce(NCPoly x) const;
  bool insert(NCPoly x); // reduce, register, enqueue; true if a new pivot
  void track(const NCPoly& x);
  void close();
  void to_reduced_echelon();

  RewriteSystem rs_;
  SaturationOptions opts_;
  std::vector<NCPoly> rows_; // monic, distinct leading words
  std::unordered_map<Word, int, WordHash> pivot_;
  std::unordered_set<Word, WordHash> tracked_;
  std::vector<int> queue_;
};

struct CommutativityResult {
  bool proved = false;
  std::vector<std::pair<Generator, Generator>> inconclusive_pairs;
};

// Proved iff every commutator q_ij q_kl - q_kl q_ij of distinct generators
// is in the truncated ideal. "Not proved" is not a disproof.
CommutativityResult prove_commutativity(const Saturation& s, int n);

struct EntryMap {
  std::vector<Generator> zeros;               // entries proved zero
  std::vector<std::vector<Generator>> classes; // partition of the survivors
};

// Tests q_ij and q_ij - q_kl for all entries; returns proved zeros and the
// induced partition of the surviving entries.
EntryMap derived_entry_map(const Saturation& s, int n);

} // namespace qsym

#endif
