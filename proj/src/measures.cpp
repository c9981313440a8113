#include "cm/measures.hpp"

#include "cm/error.hpp"
#include "cm/hitting_sets.hpp"
#include "cm/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cm {

std::size_t i_mi(const MusSet &muses) { return muses.size(); }

long i_m(const MssSet &msses, const MusSet &muses) {
  const auto self_c = std::count_if(muses.muses.begin(), muses.muses.end(),
                                    [](const IndexSet &m) { return m.size() == 1; });
  return static_cast<long>(msses.size()) + static_cast<long>(self_c) - 1;
}

long i_m(const KnowledgeBase &kb, const EnumerationLimits &limits) {
  const Enumeration e = enumerate(kb, limits);
  return i_m(e.msses, e.muses);
}

std::size_t i_m_prime(const KnowledgeBase &kb, const Decomposition &dec, const EnumerationLimits &limits) {
  if (dec.components.empty()) return 0;
  std::size_t total = 0;
  for (const auto &c : dec.components) {
    total += enumerate_msses(kb.subset(c.formulas), limits).size();
    if (c.formulas.size() == 1) ++total; // a singleton component is a self-contradictory formula
  }
  return total;
}

std::size_t delta_hs(const MusSet &muses) { return minimum_hitting_set(muses.muses).size(); }

std::size_t decomposition_measure(const Decomposition &dec, ComponentWeight weight) {
  if (weight == ComponentWeight::One) return dec.components.size();
  std::size_t total = 0;
  for (const auto &c : dec.components) total += c.mus_ids.size();
  return total;
}

ComponentFamily component_family(const MusSet &muses, const Component &component) {
  ComponentFamily out;
  std::map<int, int> element_of;
  for (int f : component.formulas) {
    out.formula_of_element.push_back(f);
    element_of[f] = static_cast<int>(out.formula_of_element.size());
  }
  std::vector<IndexSet> sets;
  for (std::size_t id : component.mus_ids) {
    std::vector<int> elems;
    for (int f : muses[id]) elems.push_back(element_of.at(f));
    sets.emplace_back(std::move(elems));
    out.mus_of_set.push_back(id);
  }
  out.family = SetFamily(static_cast<int>(out.formula_of_element.size()), std::move(sets));
  return out;
}

SetFamily mus_family(const KnowledgeBase &kb, const MusSet &muses) {
  return SetFamily(static_cast<int>(kb.size()), muses.muses);
}

namespace {

PackingSolution solve_packing(const SetFamily &f, const MeasureOptions &options) {
  if (options.backend == Backend::BruteForce) return mcsp_bruteforce(f);
  return mcsp_branch_bound(f, {options.time_limit});
}

} // namespace

DistributionIndex distribution_index(const KnowledgeBase &kb, const MusSet &muses,
                                     const MeasureOptions &options) {
  const Decomposition dec = mus_decomposition(kb, muses);
  std::vector<PackingSolution> solutions(dec.components.size());
  std::vector<ComponentFamily> families;
  for (const auto &c : dec.components) families.push_back(component_family(muses, c));
  parallel_for(dec.components.size(), options.workers,
               [&](std::size_t i) { solutions[i] = solve_packing(families[i].family, options); });

  DistributionIndex out;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    out.value += solutions[i].cardinality;
    out.optimal = out.optimal && solutions[i].optimal;
    std::vector<std::size_t> ids;
    for (int s : solutions[i].selected) ids.push_back(families[i].mus_of_set[static_cast<std::size_t>(s - 1)]);
    out.packings.push_back(std::move(ids));
  }
  return out;
}

std::size_t i_d(const KnowledgeBase &kb, const MusSet &muses, Backend backend) {
  MeasureOptions options;
  options.backend = backend;
  const auto d = distribution_index(kb, muses, options);
  if (!d.optimal) throw ResourceLimitError("distribution index search timed out");
  return d.value;
}

bool is_partial_mus_decomposition(const MusSet &muses, const std::vector<IndexSet> &groups) {
  IndexSet all;
  for (const auto &g : groups) {
    if (g.intersects(all)) return false;
    all = all.united(g);
    const bool inconsistent = std::any_of(muses.muses.begin(), muses.muses.end(),
                                          [&](const IndexSet &m) { return m.is_subset_of(g); });
    if (!inconsistent) return false;
  }
  for (const auto &m : muses.muses) {
    if (!m.is_subset_of(all)) continue;
    const bool inside_one = std::any_of(groups.begin(), groups.end(),
                                        [&](const IndexSet &g) { return m.is_subset_of(g); });
    if (!inside_one) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> muses_inside(const MusSet &muses, const IndexSet &group) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < muses.size(); ++i)
    if (muses[i].is_subset_of(group)) ids.push_back(i);
  return ids;
}

// Component position of every MUS id.
std::vector<std::size_t> component_of_mus(const Decomposition &dec, std::size_t mus_count) {
  std::vector<std::size_t> out(mus_count, 0);
  for (std::size_t c = 0; c < dec.components.size(); ++c)
    for (std::size_t id : dec.components[c].mus_ids) out[id] = c;
  return out;
}

bool can_absorb(const MusSet &muses, const std::vector<IndexSet> &groups, std::size_t g, std::size_t id) {
  std::vector<IndexSet> trial = groups;
  trial[g] = trial[g].united(muses[id]);
  return is_partial_mus_decomposition(muses, trial);
}

} // namespace

PartialMusDecomposition distributable_decomposition(const KnowledgeBase &kb, const MusSet &muses,
                                                    const MeasureOptions &options) {
  const Decomposition dec = mus_decomposition(kb, muses);
  const DistributionIndex index = distribution_index(kb, muses, options);
  if (!index.optimal) throw ResourceLimitError("distribution index search timed out");
  const auto component = component_of_mus(dec, muses.size());

  PartialMusDecomposition out;
  std::vector<std::size_t> group_component;
  for (std::size_t c = 0; c < index.packings.size(); ++c)
    for (std::size_t id : index.packings[c]) {
      out.groups.push_back(muses[id]);
      group_component.push_back(c);
    }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t id = 0; id < muses.size(); ++id) {
      const bool placed = std::any_of(out.groups.begin(), out.groups.end(),
                                      [&](const IndexSet &g) { return muses[id].is_subset_of(g); });
      if (placed) continue;
      for (std::size_t g = 0; g < out.groups.size(); ++g) {
        if (group_component[g] != component[id] || !can_absorb(muses, out.groups, g, id)) continue;
        out.groups[g] = out.groups[g].united(muses[id]);
        changed = true;
        break;
      }
    }
  }
  for (const auto &g : out.groups) out.mus_ids_per_group.push_back(muses_inside(muses, g));
  if (!is_partial_mus_decomposition(muses, out.groups) || !groups_are_maximal(kb, muses, out))
    throw std::logic_error("distributable decomposition failed its own verification");
  return out;
}

bool groups_are_maximal(const KnowledgeBase &kb, const MusSet &muses, const PartialMusDecomposition &dec) {
  const Decomposition md = mus_decomposition(kb, muses);
  const auto component = component_of_mus(md, muses.size());
  for (std::size_t g = 0; g < dec.groups.size(); ++g) {
    const auto inside = muses_inside(muses, dec.groups[g]);
    if (inside.empty()) return false;
    const std::size_t c = component[inside.front()];
    for (std::size_t id : md.components[c].mus_ids) {
      if (muses[id].is_subset_of(dec.groups[g])) continue;
      if (can_absorb(muses, dec.groups, g, id)) return false;
    }
  }
  return true;
}

RepairReport repair_merge_check(const KnowledgeBase &kb, const PartialMusDecomposition &dec,
                                const std::vector<IndexSet> &repaired) {
  if (repaired.size() != dec.groups.size())
    throw PreconditionError("one repaired group is needed per decomposition group");
  ConsistencyChecker oracle(kb);
  RepairReport r;
  IndexSet all_groups, merged;
  r.each_repair_consistent = true;
  for (std::size_t g = 0; g < dec.groups.size(); ++g) {
    if (!repaired[g].is_subset_of(dec.groups[g]))
      throw PreconditionError("repaired group " + repaired[g].to_string() + " is not inside " +
                              dec.groups[g].to_string());
    r.removed.push_back(dec.groups[g].minus(repaired[g]));
    r.repaired.push_back(repaired[g]);
    r.each_repair_consistent = r.each_repair_consistent && oracle.consistent(repaired[g]);
    all_groups = all_groups.united(dec.groups[g]);
    merged = merged.united(repaired[g]);
  }
  r.residue = kb.all_indices().minus(all_groups);
  r.repaired_groups_consistent = oracle.consistent(merged);
  r.with_residue_consistent = oracle.consistent(merged.united(r.residue));
  return r;
}

RepairReport repair_merge_check(const KnowledgeBase &kb, const MusSet &muses,
                                const PartialMusDecomposition &dec) {
  std::vector<IndexSet> repaired;
  for (const auto &g : dec.groups) {
    std::vector<IndexSet> inside;
    for (std::size_t id : muses_inside(muses, g)) inside.push_back(muses[id]);
    repaired.push_back(g.minus(minimum_hitting_set(inside)));
  }
  return repair_merge_check(kb, dec, repaired);
}

std::string measure_name(Measure m) {
  switch (m) {
  case Measure::IMi: return "i_mi";
  case Measure::IM: return "i_m";
  case Measure::IMPrime: return "i_m_prime";
  case Measure::DeltaHs: return "delta_hs";
  case Measure::ID: return "i_d";
  }
  return {};
}

Measure parse_measure(const std::string &name) {
  for (Measure m : {Measure::IMi, Measure::IM, Measure::IMPrime, Measure::DeltaHs, Measure::ID})
    if (measure_name(m) == name) return m;
  throw std::invalid_argument("unknown measure '" + name + "'");
}

std::set<Measure> parse_measure_selection(const std::string &spec) {
  if (spec == "all") return {Measure::IMi, Measure::IM, Measure::IMPrime, Measure::DeltaHs, Measure::ID};
  std::set<Measure> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(parse_measure(item));
  if (out.empty()) throw std::invalid_argument("empty measure selection");
  return out;
}

MeasureReport compute_measures(const KnowledgeBase &kb, const std::set<Measure> &selection,
                               const MeasureOptions &options, const MusSet *given) {
  const auto start = std::chrono::steady_clock::now();
  MeasureReport r;
  std::optional<Enumeration> full;
  auto enumeration = [&]() -> const Enumeration & {
    if (!full) full = enumerate(kb, options.limits);
    return *full;
  };
  const MusSet &muses = given ? *given : enumeration().muses;
  r.mode = muses.complete ? Mode::Exact : Mode::LowerBound;

  const Decomposition dec = mus_decomposition(kb, muses);
  for (const auto &c : dec.components) r.components.push_back(c.formulas.size());

  if (selection.count(Measure::IMi)) r.i_mi = i_mi(muses);
  if (selection.count(Measure::IM)) r.i_m = i_m(enumeration().msses, enumeration().muses);
  if (selection.count(Measure::IMPrime)) r.i_m_prime = i_m_prime(kb, dec, options.limits);
  if (selection.count(Measure::DeltaHs)) r.delta_hs = delta_hs(muses);
  if (selection.count(Measure::ID)) {
    const auto d = distribution_index(kb, muses, options);
    if (!d.optimal) throw ResourceLimitError("distribution index search timed out");
    r.i_d = d.value;
  }
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace cm
