#pragma once

// Brute-force recomputations used only by the tests. They deliberately share
// nothing with the main implementations except the element containers and
// scalar arithmetic.

#include <cstdint>
#include <map>
#include <span>

#include "cdm/divided_power.hpp"
#include "cdm/power_series.hpp"
#include "cdm/zinbiel.hpp"

namespace cdm::oracle {

/// v < w by running through every permutation of the letters after v_1 and
/// keeping the ones that preserve the order inside each word.
std::map<Word, std::uint64_t> shuffle_enum(const Word& v, const Word& w);
ZinElement half_shuffle_enum(const ZinElement& a, const ZinElement& b);

/// Monomials of Gamma expanded as the set of distinct words obtained by
/// permuting all letters.
ZinElement symmetrized_expand(const DPElement& f);

/// Substitution by expanding every product in full, with dense exponent
/// vectors, and truncating once at the end.
SeriesElement naive_substitute(const SeriesElement& f,
                               std::span<const SeriesElement> args,
                               const SeriesShape& target);

}  // namespace cdm::oracle
