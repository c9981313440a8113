#include "cm/index_set.hpp"

#include <algorithm>
#include <sstream>

namespace cm {

IndexSet::IndexSet(std::initializer_list<int> items) : IndexSet(std::vector<int>(items)) {}

IndexSet::IndexSet(std::vector<int> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet IndexSet::range(int n) {
  IndexSet out;
  out.items_.reserve(n > 0 ? static_cast<std::size_t>(n) : 0);
  for (int i = 1; i <= n; ++i) out.items_.push_back(i);
  return out;
}

bool IndexSet::contains(int index) const {
  return std::binary_search(items_.begin(), items_.end(), index);
}

void IndexSet::insert(int index) {
  auto it = std::lower_bound(items_.begin(), items_.end(), index);
  if (it == items_.end() || *it != index) items_.insert(it, index);
}

void IndexSet::erase(int index) {
  auto it = std::lower_bound(items_.begin(), items_.end(), index);
  if (it != items_.end() && *it == index) items_.erase(it);
}

bool IndexSet::intersects(const IndexSet &other) const {
  auto a = items_.begin(), b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a < *b) ++a;
    else if (*b < *a) ++b;
    else return true;
  }
  return false;
}

bool IndexSet::is_subset_of(const IndexSet &other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

IndexSet IndexSet::united(const IndexSet &other) const {
  IndexSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

IndexSet IndexSet::intersection(const IndexSet &other) const {
  IndexSet out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
  return out;
}

IndexSet IndexSet::minus(const IndexSet &other) const {
  IndexSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream out;
  out << *this;
  return out.str();
}

bool canonical_less(const IndexSet &a, const IndexSet &b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void canonicalize(std::vector<IndexSet> &family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::ostream &operator<<(std::ostream &out, const IndexSet &set) {
  out << '{';
  bool first = true;
  for (int i : set) {
    if (!first) out << ',';
    out << i;
    first = false;
  }
  return out << '}';
}

} // namespace cm
