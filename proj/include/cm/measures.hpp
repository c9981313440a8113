#pragma once

#include "cm/knowledge_base.hpp"
#include "cm/mcsp.hpp"
#include "cm/mus.hpp"
#include "cm/mus_graph.hpp"

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cm {

enum class Backend { BruteForce, BranchBound };
enum class Mode { Exact, LowerBound };

struct MeasureOptions {
  Backend backend = Backend::BranchBound;
  EnumerationLimits limits;
  /// Per branch-and-bound solve.
  std::optional<std::chrono::milliseconds> time_limit;
  unsigned workers = 1;
};

/// |MUSes(K)|
std::size_t i_mi(const MusSet &muses);

/// |MSSes(K)| + |selfC(K)| - 1. When every formula is self-contradictory the
/// empty set is the single MSS.
long i_m(const KnowledgeBase &kb, const EnumerationLimits &limits = {});
long i_m(const MssSet &msses, const MusSet &muses);

/// Sum over MUS-decomposition components of |MSSes(K_i)|, plus |selfC(K)|;
/// 0 for a consistent KB.
std::size_t i_m_prime(const KnowledgeBase &kb, const Decomposition &dec,
                      const EnumerationLimits &limits = {});

/// Size of a minimum hitting set of the MUSes; 0 when there are none.
std::size_t delta_hs(const MusSet &muses);

/// Decomposition-based measure with a per-component weight: one per
/// component, or the component's MUS count.
enum class ComponentWeight { One, MusCount };
std::size_t decomposition_measure(const Decomposition &dec, ComponentWeight weight);

/// The closed-packing instance for one component: its MUSes over its own
/// formulas, renumbered 1..k in ascending index order.
struct ComponentFamily {
  SetFamily family;
  std::vector<int> formula_of_element; // element e -> KB index, at e-1
  std::vector<std::size_t> mus_of_set; // set i -> MUS id, at i-1
};
ComponentFamily component_family(const MusSet &muses, const Component &component);
/// All MUSes as one family over the KB indices.
SetFamily mus_family(const KnowledgeBase &kb, const MusSet &muses);

struct DistributionIndex {
  std::size_t value = 0;
  bool optimal = true;
  /// One maximum closed packing per component, as MUS ids.
  std::vector<std::vector<std::size_t>> packings;
};

/// Maximum number of pairwise disjoint MUSes whose union contains no other
/// MUS, solved per MUS-decomposition component and summed.
DistributionIndex distribution_index(const KnowledgeBase &kb, const MusSet &muses,
                                     const MeasureOptions &options = {});
/// distribution_index(...).value; throws ResourceLimitError when a solve timed out.
std::size_t i_d(const KnowledgeBase &kb, const MusSet &muses, Backend backend = Backend::BranchBound);

struct PartialMusDecomposition {
  std::vector<IndexSet> groups;
  std::vector<std::vector<std::size_t>> mus_ids_per_group;
  std::size_t size() const { return groups.size(); }
};

/// Checks the three defining conditions against the given (complete) MUS list:
/// every group contains a MUS, groups are pairwise disjoint, and every MUS
/// inside the union of the groups lies inside a single group.
bool is_partial_mus_decomposition(const MusSet &muses, const std::vector<IndexSet> &groups);

/// A maximum closed packing per component, then each remaining MUS of the
/// component is absorbed, in canonical order, into the first group that
/// keeps the decomposition valid. Groups are maximal on return.
PartialMusDecomposition distributable_decomposition(const KnowledgeBase &kb, const MusSet &muses,
                                                    const MeasureOptions &options = {});

/// True iff no group's MUS set can be extended by another MUS of its
/// component without breaking the decomposition.
bool groups_are_maximal(const KnowledgeBase &kb, const MusSet &muses, const PartialMusDecomposition &dec);

struct RepairReport {
  std::vector<IndexSet> removed;        // per group
  std::vector<IndexSet> repaired;       // per group, group minus removed
  bool repaired_groups_consistent = false;
  bool each_repair_consistent = false;
  IndexSet residue;                     // K minus the union of the groups
  bool with_residue_consistent = false;
};

/// Repairs each group by removing a minimum hitting set of its MUSes
/// (lexicographically smallest among minimum ones), then checks the merge.
RepairReport repair_merge_check(const KnowledgeBase &kb, const MusSet &muses,
                                const PartialMusDecomposition &dec);
/// Same checks with caller-supplied repaired groups (each a subset of its group).
RepairReport repair_merge_check(const KnowledgeBase &kb, const PartialMusDecomposition &dec,
                                const std::vector<IndexSet> &repaired);

// ---------------------------------------------------------------- report

enum class Measure { IMi, IM, IMPrime, DeltaHs, ID };
std::string measure_name(Measure m);
Measure parse_measure(const std::string &name);
/// "all" or a comma-separated list of measure names.
std::set<Measure> parse_measure_selection(const std::string &spec);

struct MeasureReport {
  std::optional<std::size_t> i_mi;
  std::optional<long> i_m;
  std::optional<std::size_t> i_m_prime;
  std::optional<std::size_t> delta_hs;
  std::optional<std::size_t> i_d;
  Mode mode = Mode::Exact;
  std::vector<std::size_t> components; // formula count per MUS-decomposition component
  double time_ms = 0;
};

/// Computes the selected measures. With `given` (for example an imported,
/// partial MUS list) the MUS-based measures use it and the report is labelled
/// a lower bound unless the list is complete.
MeasureReport compute_measures(const KnowledgeBase &kb, const std::set<Measure> &selection,
                               const MeasureOptions &options = {}, const MusSet *given = nullptr);

} // namespace cm
