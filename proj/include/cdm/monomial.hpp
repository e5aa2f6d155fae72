#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cdm/scalar.hpp"

namespace cdm {

/// Commutative exponent vector, stored sparsely as (variable, exponent) pairs
/// sorted by variable with no zero exponents. The empty index is the degree-0
/// monomial.
class MultiIndex {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  MultiIndex() = default;
  /// Sorts, merges repeated variables and drops zero exponents.
  explicit MultiIndex(std::vector<Entry> entries);

  static MultiIndex variable(std::uint32_t var, std::uint32_t exponent = 1) {
    MultiIndex m;
    if (exponent > 0) {
      m.entries_.emplace_back(var, exponent);
      m.degree_ = exponent;
    }
    return m;
  }

  std::span<const Entry> entries() const { return entries_; }
  std::uint32_t degree() const { return degree_; }
  bool empty() const { return entries_.empty(); }
  std::uint32_t exponent(std::uint32_t var) const;
  /// One past the largest variable index; 0 for the empty index.
  std::uint32_t variable_bound() const {
    return entries_.empty() ? 0 : entries_.back().first + 1;
  }

  /// Exponent-wise sum.
  friend MultiIndex operator*(const MultiIndex& a, const MultiIndex& b);
  /// Copy with the exponent of `var` replaced (0 removes it).
  MultiIndex with_exponent(std::uint32_t var, std::uint32_t exponent) const;
  /// Copy with every variable index increased by `offset`.
  MultiIndex shifted(std::uint32_t offset) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ == b.entries_;
  }
  /// Graded lexicographic: lower degree first, then larger exponents of
  /// lower-numbered variables first.
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b);

 private:
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

/// Finitely supported map key -> nonzero scalar.
template <class Key>
using CoeffMap = std::map<Key, Scalar>;

/// Adds `value` at `key`, erasing the entry if it cancels.
template <class Key>
void accumulate(CoeffMap<Key>& map, const Key& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) map.erase(it);
  }
}

template <class Key>
void accumulate(CoeffMap<Key>& map, Key&& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = map.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) map.erase(it);
  }
}

}  // namespace cdm
