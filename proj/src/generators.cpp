#include "cdm/generators.hpp"

#include <algorithm>
#include <limits>

#include "cdm/errors.hpp"

namespace cdm {

namespace {

constexpr std::size_t kMaxBasis = 100000;

MultiIndex random_monomial(SplitMix64& rng, std::uint32_t n, std::uint32_t d) {
  std::vector<MultiIndex::Entry> e;
  for (std::uint32_t k = 0; k < d; ++k) {
    e.emplace_back(static_cast<std::uint32_t>(rng.uniform(0, n - 1)), 1);
  }
  return MultiIndex(std::move(e));
}

// Draws up to `terms` distinct keys with nonzero coefficients.
template <class Key, class Draw>
CoeffMap<Key> random_terms(SplitMix64& rng, const FieldSpec& field,
                           const GenBounds& b, Draw draw) {
  CoeffMap<Key> t;
  auto terms = static_cast<std::uint32_t>(rng.uniform(1, b.max_terms));
  for (std::uint32_t attempt = 0; t.size() < terms && attempt < 4 * terms;
       ++attempt) {
    Key k = draw();
    if (t.count(k)) continue;
    t.emplace(std::move(k), random_coefficient(rng, field, b));
  }
  return t;
}

void check_size(std::size_t n) {
  if (n > kMaxBasis) {
    throw TooLarge("basis enumeration exceeds " + std::to_string(kMaxBasis) +
                   " elements");
  }
}

void monomials_rec(std::uint32_t var, std::uint32_t n, std::uint32_t left,
                   std::vector<MultiIndex::Entry>& e,
                   std::vector<MultiIndex>& out) {
  if (var + 1 == n) {
    if (left > 0) e.emplace_back(var, left);
    out.emplace_back(e);
    if (left > 0) e.pop_back();
    return;
  }
  for (std::uint32_t k = left + 1; k-- > 0;) {
    if (k > 0) e.emplace_back(var, k);
    monomials_rec(var + 1, n, left - k, e, out);
    if (k > 0) e.pop_back();
    check_size(out.size());
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t trial_seed(std::uint64_t base, std::string_view axiom,
                         std::uint64_t index) {
  return mix64(mix64(base ^ fnv1a(axiom)) + index);
}

GenBounds default_bounds(const PowerSeriesTheory& t) {
  if (t.is_polynomial()) return {3, 4, 4, -3, 3};
  return {3, std::min<std::uint32_t>(*t.cap(), 4), 4, -3, 3};
}

GenBounds default_bounds(const DividedPowerTheory&) { return {3, 4, 4, -3, 3}; }

GenBounds default_bounds(const ZinbielTheory&) { return {3, 3, 4, -3, 3}; }

GenBounds default_bounds(const TrivialTheory&) { return {3, 1, 3, -3, 3}; }

Scalar random_coefficient(SplitMix64& rng, const FieldSpec& field,
                          const GenBounds& b) {
  while (true) {
    Scalar c = Scalar::from_int(static_cast<long>(rng.uniform(b.coeff_min, b.coeff_max)),
                                field);
    if (!c.is_zero()) return c;
  }
}

SeriesElement random_element(SplitMix64& rng, const PowerSeriesTheory& t,
                             std::uint32_t n, const GenBounds& b) {
  SeriesShape shape = t.shape(n);
  std::uint32_t lo = shape.reduced ? 1 : 0;
  std::uint32_t hi = b.max_degree;
  if (shape.cap) hi = std::min(hi, *shape.cap);
  if (n == 0) {
    if (shape.reduced) return SeriesElement::zero(shape);
    hi = 0;
  }
  auto terms = random_terms<MultiIndex>(rng, t.field(), b, [&] {
    auto d = static_cast<std::uint32_t>(rng.uniform(lo, hi));
    return random_monomial(rng, n, d);
  });
  return SeriesElement(shape, std::move(terms));
}

DPElement random_element(SplitMix64& rng, const DividedPowerTheory& t,
                         std::uint32_t n, const GenBounds& b) {
  if (n == 0) return DPElement::zero(0, t.field());
  auto terms = random_terms<MultiIndex>(rng, t.field(), b, [&] {
    auto d = static_cast<std::uint32_t>(rng.uniform(1, b.max_degree));
    return random_monomial(rng, n, d);
  });
  return DPElement(n, t.field(), std::move(terms));
}

ZinElement random_element(SplitMix64& rng, const ZinbielTheory& t,
                          std::uint32_t n, const GenBounds& b) {
  if (n == 0) return ZinElement::zero(0, t.field());
  auto terms = random_terms<Word>(rng, t.field(), b, [&] {
    auto len = static_cast<std::uint32_t>(rng.uniform(1, b.max_degree));
    Word w;
    for (std::uint32_t k = 0; k < len; ++k) {
      w.letters.push_back(static_cast<std::uint32_t>(rng.uniform(0, n - 1)));
    }
    return w;
  });
  return ZinElement(n, t.field(), std::move(terms));
}

LinearForm random_element(SplitMix64& rng, const TrivialTheory& t,
                          std::uint32_t n, const GenBounds& b) {
  if (n == 0) return LinearForm(0, t.field());
  std::vector<Scalar> c(n, Scalar::zero(t.field()));
  auto terms = static_cast<std::uint32_t>(rng.uniform(1, std::min(b.max_terms, n)));
  for (std::uint32_t k = 0; k < terms; ++k) {
    c[static_cast<std::size_t>(rng.uniform(0, n - 1))] =
        random_coefficient(rng, t.field(), b);
  }
  return LinearForm(t.field(), std::move(c));
}

std::vector<MultiIndex> monomials_of_degree(std::uint32_t n, std::uint32_t d) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<MultiIndex::Entry> e;
  monomials_rec(0, n, d, e, out);
  return out;
}

std::vector<SeriesElement> enumerate_basis(const PowerSeriesTheory& t,
                                           std::uint32_t n,
                                           std::uint32_t max_degree) {
  SeriesShape shape = t.shape(n);
  if (shape.cap) max_degree = std::min(max_degree, *shape.cap);
  std::vector<SeriesElement> out;
  for (std::uint32_t d = shape.reduced ? 1 : 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(n, d)) {
      out.push_back(SeriesElement::monomial(m, Scalar::one(t.field()), shape));
      check_size(out.size());
    }
  }
  return out;
}

std::vector<DPElement> enumerate_basis(const DividedPowerTheory& t,
                                       std::uint32_t n,
                                       std::uint32_t max_degree) {
  std::vector<DPElement> out;
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(n, d)) {
      out.push_back(DPElement::monomial(m, Scalar::one(t.field()), n, t.field()));
      check_size(out.size());
    }
  }
  return out;
}

std::vector<ZinElement> enumerate_basis(const ZinbielTheory& t,
                                        std::uint32_t n,
                                        std::uint32_t max_degree) {
  std::vector<ZinElement> out;
  if (n == 0) return out;
  for (std::uint32_t len = 1; len <= max_degree; ++len) {
    std::vector<std::uint32_t> letters(len, 0);
    while (true) {
      out.push_back(ZinElement::word(letters, n, t.field()));
      check_size(out.size());
      // Odometer increment, last letter fastest.
      std::size_t k = len;
      while (k > 0 && letters[k - 1] + 1 == n) letters[--k] = 0;
      if (k == 0) break;
      ++letters[k - 1];
    }
  }
  return out;
}

std::vector<LinearForm> enumerate_basis(const TrivialTheory& t, std::uint32_t n,
                                        std::uint32_t max_degree) {
  std::vector<LinearForm> out;
  if (max_degree == 0) return out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(t.eta(i, n));
  return out;
}

}  // namespace cdm
