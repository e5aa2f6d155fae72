#include "cdm/power_series.hpp"

#include <string>

#include "cdm/errors.hpp"

namespace cdm {

namespace {

void require_same_shape(const SeriesShape& a, const SeriesShape& b) {
  if (!(a == b)) {
    throw ShapeMismatch("power series shapes differ (arity " +
                        std::to_string(a.arity) + " vs " +
                        std::to_string(b.arity) + ")");
  }
}

}  // namespace

SeriesElement::SeriesElement(const SeriesShape& shape, Terms terms)
    : shape_(shape) {
  for (auto& [m, c] : terms) {
    if (!(c.field() == shape.field)) {
      throw MixedFields("coefficient from " + c.field().name() +
                        " in a series over " + shape.field.name());
    }
    if (m.variable_bound() > shape.arity) {
      throw ArityError("variable x" + std::to_string(m.variable_bound()) +
                       " outside arity " + std::to_string(shape.arity));
    }
    if (shape.reduced && m.degree() == 0 && !c.is_zero()) {
      throw NotReduced("constant term in a reduced series");
    }
    if (shape.cap && m.degree() > *shape.cap) continue;
    if (c.is_zero()) continue;
    terms_.emplace(m, c);
  }
}

SeriesElement SeriesElement::variable(std::uint32_t i,
                                      const SeriesShape& shape) {
  return monomial(MultiIndex::variable(i), Scalar::one(shape.field), shape);
}

SeriesElement SeriesElement::monomial(const MultiIndex& m, const Scalar& c,
                                      const SeriesShape& shape) {
  Terms t;
  t.emplace(m, c);
  return SeriesElement(shape, std::move(t));
}

Scalar SeriesElement::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(shape_.field) : it->second;
}

bool operator==(const SeriesElement& a, const SeriesElement& b) {
  require_same_shape(a.shape_, b.shape_);
  return a.terms_ == b.terms_;
}

namespace ps {

SeriesElement add(const SeriesElement& f, const SeriesElement& g) {
  require_same_shape(f.shape(), g.shape());
  SeriesElement::Terms t = f.terms();
  for (const auto& [m, c] : g.terms()) accumulate(t, m, c);
  return SeriesElement(f.shape(), std::move(t));
}

SeriesElement neg(const SeriesElement& f) {
  SeriesElement::Terms t;
  for (const auto& [m, c] : f.terms()) t.emplace(m, -c);
  return SeriesElement(f.shape(), std::move(t));
}

SeriesElement sub(const SeriesElement& f, const SeriesElement& g) {
  return add(f, neg(g));
}

SeriesElement scale(const SeriesElement& f, const Scalar& s) {
  SeriesElement::Terms t;
  for (const auto& [m, c] : f.terms()) t.emplace(m, c * s);
  return SeriesElement(f.shape(), std::move(t));
}

SeriesElement mul(const SeriesElement& f, const SeriesElement& g) {
  require_same_shape(f.shape(), g.shape());
  const auto& cap = f.shape().cap;
  SeriesElement::Terms t;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      if (cap && mf.degree() + mg.degree() > *cap) continue;
      accumulate(t, mf * mg, cf * cg);
    }
  }
  return SeriesElement(f.shape(), std::move(t));
}

SeriesElement power(const SeriesElement& f, std::uint32_t k) {
  if (k == 0) {
    return SeriesElement::monomial(MultiIndex(), Scalar::one(f.field()),
                                   f.shape());
  }
  SeriesElement out = f;
  for (std::uint32_t j = 1; j < k; ++j) out = mul(out, f);
  return out;
}

SeriesElement substitute(const SeriesElement& f,
                         std::span<const SeriesElement> args,
                         const SeriesShape& target) {
  if (args.size() != f.arity()) {
    throw ShapeMismatch("substitution needs " + std::to_string(f.arity()) +
                        " arguments, got " + std::to_string(args.size()));
  }
  if (!(f.field() == target.field) || f.shape().cap != target.cap) {
    throw ShapeMismatch("substitution across different fields or caps");
  }
  for (const auto& a : args) {
    require_same_shape(a.shape(), target);
    if (target.cap && !a.coefficient(MultiIndex()).is_zero()) {
      throw NonReducedArgument(
          "capped series cannot absorb an argument with a constant term");
    }
  }
  if (target.reduced && !f.coefficient(MultiIndex()).is_zero()) {
    throw NotReduced("constant term substituted into a reduced shape");
  }

  SeriesShape unreduced = target;
  unreduced.reduced = false;

  // powers[i][k - 1] = args[i]^k, built lazily.
  std::vector<std::vector<SeriesElement>> powers(args.size());
  auto power_of = [&](std::uint32_t i, std::uint32_t k) -> const SeriesElement& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(unreduced, args[i].terms());
    while (cache.size() < k) cache.push_back(mul(cache.back(), cache.front()));
    return cache[k - 1];
  };

  SeriesElement::Terms out;
  for (const auto& [m, c] : f.terms()) {
    if (m.empty()) {
      accumulate(out, MultiIndex(), c);
      continue;
    }
    SeriesElement term = SeriesElement::monomial(MultiIndex(), c, unreduced);
    for (const auto& [var, exp] : m.entries()) {
      term = mul(term, power_of(var, exp));
      if (term.is_zero()) break;
    }
    for (const auto& [mt, ct] : term.terms()) accumulate(out, mt, ct);
  }
  return SeriesElement(target, std::move(out));
}

SeriesElement partial(const SeriesElement& f, std::uint32_t i) {
  if (i >= f.arity()) {
    throw ArityError("partial derivative in variable " + std::to_string(i) +
                     " of an arity-" + std::to_string(f.arity()) + " series");
  }
  SeriesShape shape = f.shape();
  shape.reduced = false;
  if (shape.cap) shape.cap = *shape.cap == 0 ? 0 : *shape.cap - 1;
  SeriesElement::Terms t;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t k = m.exponent(i);
    if (k == 0) continue;
    accumulate(t, m.with_exponent(i, k - 1),
               c * Scalar::from_int(static_cast<long>(k), f.field()));
  }
  return SeriesElement(shape, std::move(t));
}

SeriesElement partial_combinator(const SeriesElement& f) {
  const std::uint32_t n = f.arity();
  SeriesElement::Terms t;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [var, exp] : m.entries()) {
      MultiIndex d = m.with_exponent(var, exp - 1) *
                     MultiIndex::variable(n + var);
      accumulate(t, d, c * Scalar::from_int(static_cast<long>(exp), f.field()));
    }
  }
  return SeriesElement(f.shape().with_arity(2 * n), std::move(t));
}

SeriesElement eta(std::uint32_t i, const SeriesShape& shape) {
  if (i >= shape.arity) {
    throw ArityError("unit x" + std::to_string(i + 1) + " outside arity " +
                     std::to_string(shape.arity));
  }
  return SeriesElement::variable(i, shape);
}

std::vector<Scalar> counit(const SeriesElement& f) {
  std::vector<Scalar> out(f.arity(), Scalar::zero(f.field()));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 1) out[m.entries()[0].first] = c;
  }
  return out;
}

SeriesElement truncate(const SeriesElement& f, std::uint32_t n) {
  if (f.shape().cap && n > *f.shape().cap) {
    throw ShapeMismatch("cannot truncate a cap-" +
                        std::to_string(*f.shape().cap) + " series at " +
                        std::to_string(n));
  }
  SeriesShape shape = f.shape();
  shape.cap = n;
  return SeriesElement(shape, f.terms());
}

}  // namespace ps

}  // namespace cdm
