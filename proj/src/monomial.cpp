#include "cdm/monomial.hpp"

#include <algorithm>

namespace cdm {

MultiIndex::MultiIndex(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [var, exp] : entries) {
    if (exp == 0) continue;
    if (!entries_.empty() && entries_.back().first == var) {
      entries_.back().second += exp;
    } else {
      entries_.emplace_back(var, exp);
    }
    degree_ += exp;
  }
}

std::uint32_t MultiIndex::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), var,
      [](const Entry& e, std::uint32_t v) { return e.first < v; });
  return it != entries_.end() && it->first == var ? it->second : 0;
}

MultiIndex operator*(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

MultiIndex MultiIndex::with_exponent(std::uint32_t var,
                                     std::uint32_t exponent) const {
  MultiIndex out;
  out.entries_.reserve(entries_.size() + 1);
  bool placed = false;
  for (const auto& e : entries_) {
    if (!placed && e.first >= var) {
      if (exponent > 0) out.entries_.emplace_back(var, exponent);
      placed = true;
      if (e.first == var) continue;
    }
    out.entries_.push_back(e);
  }
  if (!placed && exponent > 0) out.entries_.emplace_back(var, exponent);
  for (const auto& e : out.entries_) out.degree_ += e.second;
  return out;
}

MultiIndex MultiIndex::shifted(std::uint32_t offset) const {
  MultiIndex out = *this;
  for (auto& e : out.entries_) e.first += offset;
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  std::size_t n = std::min(a.entries_.size(), b.entries_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& ea = a.entries_[k];
    const auto& eb = b.entries_[k];
    // A smaller variable index means a nonzero exponent where the other has 0.
    if (ea.first != eb.first) {
      return ea.first < eb.first ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
    if (ea.second != eb.second) {
      return ea.second > eb.second ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
  }
  // Equal degree and common prefix: sizes must match as well.
  return a.entries_.size() <=> b.entries_.size();
}

}  // namespace cdm
