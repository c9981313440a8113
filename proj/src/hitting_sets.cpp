#include "cm/hitting_sets.hpp"

#include "cm/error.hpp"

#include <algorithm>
#include <limits>

namespace cm {

bool is_hitting_set(const IndexSet &h, const std::vector<IndexSet> &family) {
  return std::all_of(family.begin(), family.end(),
                     [&](const IndexSet &s) { return h.intersects(s); });
}

namespace {

void remove_non_minimal(std::vector<IndexSet> &sets) {
  canonicalize(sets);
  std::vector<IndexSet> kept;
  for (const auto &s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const IndexSet &k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  sets = std::move(kept);
}

} // namespace

std::vector<IndexSet> minimal_hitting_sets(const std::vector<IndexSet> &family) {
  std::vector<IndexSet> sorted = family;
  canonicalize(sorted);
  if (!sorted.empty() && sorted.front().empty()) return {};
  std::vector<IndexSet> current{IndexSet{}};
  for (const auto &f : sorted) {
    std::vector<IndexSet> next;
    for (const auto &h : current) {
      if (h.intersects(f)) {
        next.push_back(h);
        continue;
      }
      for (int e : f) {
        IndexSet extended = h;
        extended.insert(e);
        next.push_back(std::move(extended));
      }
    }
    remove_non_minimal(next);
    current = std::move(next);
  }
  return current;
}

namespace {

class MinHittingSetSearch {
public:
  explicit MinHittingSetSearch(const std::vector<IndexSet> &family) : family_(family) {
    IndexSet all;
    for (const auto &s : family_) all = all.united(s);
    elements_ = all.values();
    hits_.assign(family_.size(), 0);
  }

  IndexSet run() {
    best_size_ = elements_.size() + 1;
    std::vector<int> chosen;
    search(0, chosen);
    return best_;
  }

private:
  // Pairwise-disjoint unhit sets, restricted to undecided elements, each
  // need a distinct element.
  std::size_t lower_bound(std::size_t pos) const {
    const int first_open = pos < elements_.size() ? elements_[pos] : std::numeric_limits<int>::max();
    std::vector<IndexSet> picked;
    for (std::size_t i = 0; i < family_.size(); ++i) {
      if (hits_[i] > 0) continue;
      IndexSet open;
      for (int e : family_[i])
        if (e >= first_open) open.insert(e);
      if (open.empty()) return elements_.size() + 1; // dead: cannot be hit any more
      if (std::none_of(picked.begin(), picked.end(),
                       [&](const IndexSet &p) { return p.intersects(open); }))
        picked.push_back(std::move(open));
    }
    return picked.size();
  }

  bool all_hit() const {
    return std::all_of(hits_.begin(), hits_.end(), [](int h) { return h > 0; });
  }

  void set_hits(int e, int delta) {
    for (std::size_t i = 0; i < family_.size(); ++i)
      if (family_[i].contains(e)) hits_[i] += delta;
  }

  void search(std::size_t pos, std::vector<int> &chosen) {
    if (all_hit()) {
      if (chosen.size() < best_size_) {
        best_size_ = chosen.size();
        best_ = IndexSet(chosen);
      }
      return;
    }
    if (pos == elements_.size()) return;
    if (chosen.size() + lower_bound(pos) >= best_size_) return;
    const int e = elements_[pos];
    chosen.push_back(e);
    set_hits(e, +1);
    search(pos + 1, chosen);
    set_hits(e, -1);
    chosen.pop_back();
    search(pos + 1, chosen);
  }

  const std::vector<IndexSet> &family_;
  std::vector<int> elements_;
  std::vector<int> hits_;
  std::size_t best_size_ = 0;
  IndexSet best_;
};

} // namespace

IndexSet minimum_hitting_set(const std::vector<IndexSet> &family) {
  for (const auto &s : family)
    if (s.empty()) throw PreconditionError("the empty set has no hitting set");
  if (family.empty()) return {};
  return MinHittingSetSearch(family).run();
}

} // namespace cm
