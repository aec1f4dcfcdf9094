#ifndef QSYM_ANALYZER_HPP
#define QSYM_ANALYZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsym/equivalence.hpp"
#include "qsym/ncalgebra.hpp"
#include "qsym/presentation.hpp"
#include "qsym/triple.hpp"

namespace qsym {

struct AnalysisOptions {
  int degree_bound = 4;
  std::size_t budget = 2'000'000;
  int jobs = 1;
  bool dump_ideal = false; // fill AnalysisReport::ideal_dump
};

inline constexpr const char* kVerdictClassical = "classical-and-identified";
inline constexpr const char* kVerdictInconclusive = "inconclusive-possibly-quantum";

struct AnalysisReport {
  int vertex_count = 0;
  int edge_count_g1 = 0;
  int edge_count_g2 = 0;
  int composable_pair_count = 0;
  bool theta_unique = false;
  EntryMap entry_map;
  // One flag per generated (nonzero) theta relation, in generation order;
  // true = provable from the presentation without the theta family.
  std::vector<bool> theta_redundancy;
  bool theta_relations_redundant = false; // all of the above (vacuously true)
  CommutativityResult commutativity;
  GroupReport classical_group;
  std::string verdict; // kVerdictClassical | kVerdictInconclusive
  int degree_bound_used = 0;
  std::string ideal_dump; // JSON, only when requested
};

// generate -> saturate -> derived_entry_map -> prove_commutativity ->
// theta-redundancy -> automorphisms, with consistency gates: every proved
// zero must vanish on every classical automorphism, and when commutativity
// is proved the 0/1 magic-matrix solution census must equal the classical
// group order (checked for n <= 6). Gate failures throw InternalError.
AnalysisReport analyze(const Triple& t, const AnalysisOptions& opts = {});

// Membership of each generated theta relation in the saturation of the
// presentation without the theta family.
std::vector<bool> check_theta_redundant(const Triple& t,
                                        const SaturationOptions& opts = {});

// Number of 0/1 magic-matrix solutions of the presentation (equivalently,
// permutation matrices satisfying every relation).
std::uint64_t solution_census(const Presentation& p);

} // namespace qsym

#endif
