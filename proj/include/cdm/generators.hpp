#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cdm/theory.hpp"

namespace cdm {

/// splitmix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9,
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB,
/// z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi], by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// The splitmix64 output function on its own.
std::uint64_t mix64(std::uint64_t z);
/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);
/// Seed of trial `index` of the named axiom in a run started from `base`.
std::uint64_t trial_seed(std::uint64_t base, std::string_view axiom,
                         std::uint64_t index);

/// Size limits for random elements. max_degree is the word length for
/// Zinbiel; coefficients are drawn from [coeff_min, coeff_max] minus the
/// values that vanish in the field.
struct GenBounds {
  std::uint32_t max_arity = 2;
  std::uint32_t max_degree = 3;
  std::uint32_t max_terms = 3;
  std::int64_t coeff_min = -3;
  std::int64_t coeff_max = 3;
};

/// Bounds tuned so a full axiom suite stays fast.
GenBounds default_bounds(const PowerSeriesTheory& t);
GenBounds default_bounds(const DividedPowerTheory& t);
GenBounds default_bounds(const ZinbielTheory& t);
GenBounds default_bounds(const TrivialTheory& t);

/// A nonzero field element from the coefficient range.
Scalar random_coefficient(SplitMix64& rng, const FieldSpec& field,
                          const GenBounds& b);

/// Random elements over n variables. They are nonzero whenever n >= 1.
SeriesElement random_element(SplitMix64& rng, const PowerSeriesTheory& t,
                             std::uint32_t n, const GenBounds& b);
DPElement random_element(SplitMix64& rng, const DividedPowerTheory& t,
                         std::uint32_t n, const GenBounds& b);
ZinElement random_element(SplitMix64& rng, const ZinbielTheory& t,
                          std::uint32_t n, const GenBounds& b);
LinearForm random_element(SplitMix64& rng, const TrivialTheory& t,
                          std::uint32_t n, const GenBounds& b);

/// Every monomial (or word) of degree 1..max_degree over n variables, plus
/// the constant 1 for polynomials, in canonical order. Throws TooLarge past
/// 10^5 elements.
std::vector<SeriesElement> enumerate_basis(const PowerSeriesTheory& t,
                                           std::uint32_t n,
                                           std::uint32_t max_degree);
std::vector<DPElement> enumerate_basis(const DividedPowerTheory& t,
                                       std::uint32_t n,
                                       std::uint32_t max_degree);
std::vector<ZinElement> enumerate_basis(const ZinbielTheory& t,
                                        std::uint32_t n,
                                        std::uint32_t max_degree);
std::vector<LinearForm> enumerate_basis(const TrivialTheory& t, std::uint32_t n,
                                        std::uint32_t max_degree);

/// Exponent vectors of total degree exactly d over n variables.
std::vector<MultiIndex> monomials_of_degree(std::uint32_t n, std::uint32_t d);

}  // namespace cdm
