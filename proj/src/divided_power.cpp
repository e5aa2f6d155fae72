#include "cdm/divided_power.hpp"

#include <map>
#include <string>

#include "cdm/errors.hpp"

namespace cdm {

namespace {

void require_same_shape(const DPElement& f, const DPElement& g) {
  if (f.arity() != g.arity() || !(f.field() == g.field())) {
    throw ShapeMismatch("divided power elements over different arities or "
                        "fields (" +
                        std::to_string(f.arity()) + ", " +
                        std::to_string(g.arity()) + ")");
  }
}

// Integer coefficient of m1 * m2 as divided power monomials.
mpz_class product_coeff(const MultiIndex& a, const MultiIndex& b) {
  mpz_class c = 1;
  for (const auto& [var, k] : a.entries()) {
    std::uint32_t l = b.exponent(var);
    if (l > 0) c *= comb::binomial(k + l, k);
  }
  return c;
}

MultiIndex scaled(const MultiIndex& m, std::uint32_t n) {
  std::vector<MultiIndex::Entry> e(m.entries().begin(), m.entries().end());
  for (auto& [var, k] : e) k *= n;
  return MultiIndex(std::move(e));
}

}  // namespace

DPElement::DPElement(std::uint32_t arity, const FieldSpec& field, Terms terms)
    : arity_(arity), field_(field) {
  for (auto& [m, c] : terms) {
    if (!(c.field() == field)) {
      throw MixedFields("coefficient from " + c.field().name() +
                        " in a divided power element over " + field.name());
    }
    if (m.variable_bound() > arity) {
      throw ArityError("variable x" + std::to_string(m.variable_bound()) +
                       " outside arity " + std::to_string(arity));
    }
    if (c.is_zero()) continue;
    if (m.degree() == 0) throw NotReduced("constant divided power monomial");
    terms_.emplace(m, c);
  }
}

DPElement DPElement::variable(std::uint32_t i, std::uint32_t arity,
                              const FieldSpec& field, std::uint32_t k) {
  return monomial(MultiIndex::variable(i, k), Scalar::one(field), arity, field);
}

DPElement DPElement::monomial(const MultiIndex& m, const Scalar& c,
                              std::uint32_t arity, const FieldSpec& field) {
  Terms t;
  t.emplace(m, c);
  return DPElement(arity, field, std::move(t));
}

Scalar DPElement::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

DPElement DPElement::widened(std::uint32_t arity) const {
  if (arity < arity_) {
    throw ShapeMismatch("cannot narrow a divided power element");
  }
  DPElement out(arity, field_);
  out.terms_ = terms_;
  return out;
}

bool operator==(const DPElement& a, const DPElement& b) {
  require_same_shape(a, b);
  return a.terms_ == b.terms_;
}

namespace dp {

DPElement add(const DPElement& f, const DPElement& g) {
  require_same_shape(f, g);
  DPElement::Terms t = f.terms();
  for (const auto& [m, c] : g.terms()) accumulate(t, m, c);
  return DPElement(f.arity(), f.field(), std::move(t));
}

DPElement neg(const DPElement& f) {
  DPElement::Terms t;
  for (const auto& [m, c] : f.terms()) t.emplace(m, -c);
  return DPElement(f.arity(), f.field(), std::move(t));
}

DPElement sub(const DPElement& f, const DPElement& g) { return add(f, neg(g)); }

DPElement scale(const DPElement& f, const Scalar& s) {
  DPElement::Terms t;
  for (const auto& [m, c] : f.terms()) t.emplace(m, c * s);
  return DPElement(f.arity(), f.field(), std::move(t));
}

DPElement mul(const DPElement& f, const DPElement& g) {
  require_same_shape(f, g);
  DPElement::Terms t;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      Scalar k = Scalar::embed(product_coeff(mf, mg), f.field());
      if (k.is_zero()) continue;
      accumulate(t, mf * mg, cf * cg * k);
    }
  }
  return DPElement(f.arity(), f.field(), std::move(t));
}

DPElement mul_power(const DPElement& f, std::uint32_t n) {
  if (n == 0) throw NotReduced("zeroth power in a non-unital algebra");
  DPElement out = f;
  for (std::uint32_t j = 1; j < n; ++j) out = mul(out, f);
  return out;
}

mpz_class monomial_power_coeff(const MultiIndex& m, std::uint32_t n) {
  // (a * b)^[n] = a^{*n} * b^[n], peeling one variable at a time, then
  // (x^[k])^[n] = (nk)! / (n! (k!)^n) x^[nk] for the last one.
  // a^{*n} for a = x^[k] is (nk)! / (k!)^n x^[nk].
  auto entries = m.entries();
  if (entries.empty()) throw NotReduced("divided power of a constant");
  mpz_class c = 1;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    std::uint32_t k = entries[i].second;
    mpz_class den = 1;
    mpz_class kf = comb::factorial(k);
    for (std::uint32_t j = 0; j < n; ++j) den *= kf;
    c *= comb::factorial(n * k) / den;
  }
  c *= comb::dp_power_coeff(n, entries.back().second);
  return c;
}

std::vector<DPElement> power_table(const DPElement& f, std::uint32_t n) {
  std::vector<DPElement> table;
  if (n == 0) return table;
  if (f.is_zero()) {
    table.assign(n, f);
    return table;
  }
  const std::uint32_t arity = f.arity();
  const FieldSpec& field = f.field();

  // (c m)^[k] = c^k m^[k].
  auto term_powers = [&](const MultiIndex& m, const Scalar& c) {
    std::vector<DPElement> t;
    t.reserve(n);
    Scalar ck = c;
    for (std::uint32_t k = 1; k <= n; ++k) {
      Scalar coeff = ck * Scalar::embed(monomial_power_coeff(m, k), field);
      t.push_back(DPElement::monomial(scaled(m, k), coeff, arity, field));
      ck *= c;
    }
    return t;
  };

  // (S + T)^[k] = S^[k] + sum_{0<l<k} S^[k-l] * T^[l] + T^[k], one term T at
  // a time.
  auto it = f.terms().begin();
  table = term_powers(it->first, it->second);
  for (++it; it != f.terms().end(); ++it) {
    std::vector<DPElement> t = term_powers(it->first, it->second);
    std::vector<DPElement> next;
    next.reserve(n);
    for (std::uint32_t k = 1; k <= n; ++k) {
      DPElement s = add(table[k - 1], t[k - 1]);
      for (std::uint32_t l = 1; l < k; ++l) {
        s = add(s, mul(table[k - l - 1], t[l - 1]));
      }
      next.push_back(std::move(s));
    }
    table = std::move(next);
  }
  return table;
}

DPElement power(const DPElement& f, std::uint32_t n) {
  if (n == 0) throw NotReduced("zeroth divided power");
  return power_table(f, n).back();
}

DPElement substitute(const DPElement& f, std::span<const DPElement> args,
                     std::uint32_t arity) {
  if (args.size() != f.arity()) {
    throw ShapeMismatch("substitution needs " + std::to_string(f.arity()) +
                        " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (a.arity() != arity || !(a.field() == f.field())) {
      throw ShapeMismatch("substitution argument of the wrong shape");
    }
  }
  std::vector<std::uint32_t> max_power(args.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [var, k] : m.entries()) {
      max_power[var] = std::max(max_power[var], k);
    }
  }
  std::vector<std::vector<DPElement>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    powers[i] = power_table(args[i], max_power[i]);
  }

  DPElement out(arity, f.field());
  for (const auto& [m, c] : f.terms()) {
    auto entries = m.entries();
    DPElement term = scale(powers[entries[0].first][entries[0].second - 1], c);
    for (std::size_t j = 1; j < entries.size() && !term.is_zero(); ++j) {
      term = mul(term, powers[entries[j].first][entries[j].second - 1]);
    }
    out = add(out, term);
  }
  return out;
}

std::pair<DPElement, Scalar> partial(const DPElement& f, std::uint32_t i) {
  if (i >= f.arity()) {
    throw ArityError("derivative in variable " + std::to_string(i) +
                     " of an arity-" + std::to_string(f.arity()) + " element");
  }
  DPElement::Terms t;
  Scalar constant = Scalar::zero(f.field());
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t k = m.exponent(i);
    if (k == 0) continue;
    MultiIndex lowered = m.with_exponent(i, k - 1);
    if (lowered.empty()) {
      constant += c;
    } else {
      accumulate(t, lowered, c);
    }
  }
  return {DPElement(f.arity(), f.field(), std::move(t)), constant};
}

DPElement partial_combinator(const DPElement& f) {
  const std::uint32_t n = f.arity();
  DPElement out(2 * n, f.field());
  for (std::uint32_t i = 0; i < n; ++i) {
    auto [reduced, constant] = partial(f, i);
    DPElement y = DPElement::variable(n + i, 2 * n, f.field());
    out = add(out, mul(reduced.widened(2 * n), y));
    out = add(out, scale(y, constant));
  }
  return out;
}

DPElement partial_combinator_direct(const DPElement& f) {
  const std::uint32_t n = f.arity();
  DPElement::Terms t;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [var, k] : m.entries()) {
      std::vector<MultiIndex::Entry> e(m.entries().begin(), m.entries().end());
      for (auto& entry : e) {
        if (entry.first == var) entry.second = k - 1;
      }
      e.emplace_back(n + var, 1);
      accumulate(t, MultiIndex(std::move(e)), c);
    }
  }
  return DPElement(2 * n, f.field(), std::move(t));
}

DPElement eta(std::uint32_t i, std::uint32_t arity, const FieldSpec& field) {
  if (i >= arity) {
    throw ArityError("unit x" + std::to_string(i + 1) + " outside arity " +
                     std::to_string(arity));
  }
  return DPElement::variable(i, arity, field);
}

std::vector<Scalar> counit(const DPElement& f) {
  std::vector<Scalar> out(f.arity(), Scalar::zero(f.field()));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 1) out[m.entries()[0].first] = c;
  }
  return out;
}

SeriesElement to_power_series(const DPElement& f) {
  if (!f.field().is_rational()) {
    throw ShapeMismatch("x^[k] -> x^k/k! needs characteristic 0");
  }
  SeriesShape shape{f.arity(), std::nullopt, true, f.field()};
  SeriesElement::Terms t;
  for (const auto& [m, c] : f.terms()) {
    mpz_class den = 1;
    for (const auto& [var, k] : m.entries()) den *= comb::factorial(k);
    t.emplace(m, c * Scalar::fraction(1, den, f.field()));
  }
  return SeriesElement(shape, std::move(t));
}

}  // namespace dp

}  // namespace cdm
