#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace cm {

/// Sorted, duplicate-free set of 1-based indices. Used for formula subsets
/// of a knowledge base and for element subsets of a set family.
class IndexSet {
public:
  using value_type = int;
  using const_iterator = std::vector<int>::const_iterator;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> items);
  explicit IndexSet(std::vector<int> items);

  /// {1, ..., n}
  static IndexSet range(int n);

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  int front() const { return items_.front(); }
  int back() const { return items_.back(); }
  const std::vector<int> &values() const { return items_; }

  bool contains(int index) const;
  void insert(int index);
  void erase(int index);

  bool intersects(const IndexSet &other) const;
  bool is_subset_of(const IndexSet &other) const;

  IndexSet united(const IndexSet &other) const;
  IndexSet intersection(const IndexSet &other) const;
  IndexSet minus(const IndexSet &other) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet &, const IndexSet &) = default;
  /// Plain lexicographic order on the sorted sequences.
  friend std::strong_ordering operator<=>(const IndexSet &a, const IndexSet &b) {
    return a.items_ <=> b.items_;
  }

private:
  std::vector<int> items_;
};

/// Canonical order used for every reported family: size first, then
/// lexicographic.
bool canonical_less(const IndexSet &a, const IndexSet &b);
void canonicalize(std::vector<IndexSet> &family);

std::ostream &operator<<(std::ostream &out, const IndexSet &set);

} // namespace cm
