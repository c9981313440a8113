// Reference implementations used to cross-check the library. Everything here
// is exhaustive and only meant for tiny inputs.
#pragma once

#include "cm/formula.hpp"
#include "cm/index_set.hpp"
#include "cm/knowledge_base.hpp"
#include "cm/mcsp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using cm::Formula;
using cm::IndexSet;
using cm::KnowledgeBase;

inline bool eval(const Formula &f, const std::map<std::string, bool> &v) {
  switch (f.kind()) {
  case Formula::Kind::Var: return v.at(f.name());
  case Formula::Kind::True: return true;
  case Formula::Kind::False: return false;
  case Formula::Kind::Not: return !eval(f.child(0), v);
  case Formula::Kind::And: return eval(f.child(0), v) && eval(f.child(1), v);
  case Formula::Kind::Or: return eval(f.child(0), v) || eval(f.child(1), v);
  case Formula::Kind::Implies: return !eval(f.child(0), v) || eval(f.child(1), v);
  }
  return false;
}

// Truth-table satisfiability of the selected formulas.
inline bool consistent(const KnowledgeBase &kb, const IndexSet &s) {
  std::set<std::string> names;
  for (int i : s) kb[i].collect_variables(names);
  const std::vector<std::string> vars(names.begin(), names.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
    std::map<std::string, bool> v;
    for (std::size_t k = 0; k < vars.size(); ++k) v[vars[k]] = (bits >> k) & 1;
    bool all = true;
    for (int i : s) all = all && eval(kb[i], v);
    if (all) return true;
  }
  return false;
}

inline IndexSet from_mask(std::uint64_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1) v.push_back(i + 1);
  return IndexSet(v);
}

inline std::vector<IndexSet> sorted(std::vector<IndexSet> v) {
  std::sort(v.begin(), v.end(), [](const IndexSet &a, const IndexSet &b) {
    return a.size() != b.size() ? a.size() < b.size() : a.values() < b.values();
  });
  return v;
}

// Power-set MUSes: inconsistent subsets all of whose proper subsets (one
// element removed) are consistent.
inline std::vector<IndexSet> muses(const KnowledgeBase &kb) {
  const std::uint64_t n = kb.size();
  std::vector<char> cons(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < cons.size(); ++m) cons[m] = consistent(kb, from_mask(m));
  std::vector<IndexSet> out;
  for (std::uint64_t m = 0; m < cons.size(); ++m) {
    if (cons[m]) continue;
    bool minimal = true;
    for (std::uint64_t b = 0; b < n; ++b)
      if (((m >> b) & 1) && !cons[m & ~(std::uint64_t{1} << b)]) minimal = false;
    if (minimal) out.push_back(from_mask(m));
  }
  return sorted(out);
}

inline std::vector<IndexSet> msses(const KnowledgeBase &kb) {
  const std::uint64_t n = kb.size();
  std::vector<char> cons(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < cons.size(); ++m) cons[m] = consistent(kb, from_mask(m));
  std::vector<IndexSet> out;
  for (std::uint64_t m = 0; m < cons.size(); ++m) {
    if (!cons[m]) continue;
    bool maximal = true;
    for (std::uint64_t b = 0; b < n; ++b)
      if (!((m >> b) & 1) && cons[m | (std::uint64_t{1} << b)]) maximal = false;
    if (maximal) out.push_back(from_mask(m));
  }
  return sorted(out);
}

// Smallest number of elements hitting every set.
inline std::size_t min_hitting_set_size(const std::vector<IndexSet> &sets) {
  if (sets.empty()) return 0;
  std::set<int> universe;
  for (const auto &s : sets) universe.insert(s.begin(), s.end());
  const std::vector<int> u(universe.begin(), universe.end());
  std::size_t best = u.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << u.size()); ++m) {
    std::vector<int> h;
    for (std::size_t k = 0; k < u.size(); ++k)
      if ((m >> k) & 1) h.push_back(u[k]);
    if (h.size() >= best) continue;
    const IndexSet hs(h);
    if (std::all_of(sets.begin(), sets.end(), [&](const IndexSet &s) { return s.intersects(hs); })) best = h.size();
  }
  return best;
}

inline bool disjoint(const std::vector<IndexSet> &chosen) {
  IndexSet seen;
  for (const auto &s : chosen) {
    if (s.intersects(seen)) return false;
    seen = seen.united(s);
  }
  return true;
}

inline bool closed(const std::vector<IndexSet> &all, const std::vector<IndexSet> &chosen) {
  IndexSet u;
  for (const auto &s : chosen) u = u.united(s);
  for (const auto &s : all) {
    if (!s.is_subset_of(u)) continue;
    if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) return false;
  }
  return true;
}

// Largest disjoint (optionally closed) subfamily, by exploring every
// disjoint subfamily.
inline std::size_t best_packing(const std::vector<IndexSet> &all, bool need_closed) {
  std::size_t best = 0;
  std::vector<IndexSet> chosen;
  auto rec = [&](auto &&self, std::size_t from) -> void {
    if ((!need_closed || closed(all, chosen)) && chosen.size() > best) best = chosen.size();
    for (std::size_t i = from; i < all.size(); ++i) {
      chosen.push_back(all[i]);
      if (disjoint(chosen)) self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

inline std::size_t msp(const cm::SetFamily &f) { return best_packing(f.sets(), false); }
inline std::size_t mcsp(const cm::SetFamily &f) { return best_packing(f.sets(), true); }

// Distribution index straight from the definition: the largest set of
// pairwise disjoint MUSes whose union contains no further MUS.
inline std::size_t distribution_index(const KnowledgeBase &kb) { return best_packing(muses(kb), true); }

} // namespace oracle
