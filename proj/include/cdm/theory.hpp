#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdm/divided_power.hpp"
#include "cdm/expr.hpp"
#include "cdm/linear.hpp"
#include "cdm/power_series.hpp"
#include "cdm/scalar.hpp"
#include "cdm/zinbiel.hpp"

namespace cdm {

// Each theory bundles an element type with the operations of its differential
// monad: zero, add, scale, eta, counit, substitute and the partial
// combinator. They are used as template parameters, never polymorphically.

/// Reduced power series truncated at a cap, or (via polynomial()) ordinary
/// polynomials with constant terms and no truncation.
class PowerSeriesTheory {
 public:
  using Element = SeriesElement;

  static PowerSeriesTheory series(const FieldSpec& field, std::uint32_t cap) {
    return PowerSeriesTheory(field, cap);
  }
  static PowerSeriesTheory polynomial(const FieldSpec& field) {
    return PowerSeriesTheory(field, std::nullopt);
  }

  std::string name() const { return cap_ ? "power" : "poly"; }
  const FieldSpec& field() const { return field_; }
  std::optional<std::uint32_t> cap() const { return cap_; }
  bool is_polynomial() const { return !cap_; }
  SeriesShape shape(std::uint32_t n) const {
    return cap_ ? SeriesShape::series(n, *cap_, field_)
                : SeriesShape::polynomial(n, field_);
  }

  Element zero(std::uint32_t n) const { return Element::zero(shape(n)); }
  Element eta(std::uint32_t i, std::uint32_t n) const {
    return ps::eta(i, shape(n));
  }
  Element add(const Element& a, const Element& b) const { return ps::add(a, b); }
  Element scale(const Element& a, const Scalar& s) const {
    return ps::scale(a, s);
  }
  Element substitute(const Element& f, std::span<const Element> args,
                     std::uint32_t n) const {
    return ps::substitute(f, args, shape(n));
  }
  Element partial_combinator(const Element& f) const {
    return ps::partial_combinator(f);
  }
  std::vector<Scalar> counit(const Element& f) const { return ps::counit(f); }
  std::uint32_t arity(const Element& f) const { return f.arity(); }

  std::string format(const Element& f, const VariableNames& names) const {
    return cdm::format(f, names);
  }
  Element parse(std::string_view text, const VariableNames& names) const {
    return parse_series(text, shape(names.size()), names);
  }

 private:
  PowerSeriesTheory(const FieldSpec& field, std::optional<std::uint32_t> cap)
      : field_(field), cap_(cap) {}

  FieldSpec field_;
  std::optional<std::uint32_t> cap_;
};

class DividedPowerTheory {
 public:
  using Element = DPElement;

  explicit DividedPowerTheory(const FieldSpec& field) : field_(field) {}

  std::string name() const { return "divided"; }
  const FieldSpec& field() const { return field_; }
  std::optional<std::uint32_t> cap() const { return std::nullopt; }

  Element zero(std::uint32_t n) const { return Element::zero(n, field_); }
  Element eta(std::uint32_t i, std::uint32_t n) const {
    return dp::eta(i, n, field_);
  }
  Element add(const Element& a, const Element& b) const { return dp::add(a, b); }
  Element scale(const Element& a, const Scalar& s) const {
    return dp::scale(a, s);
  }
  Element substitute(const Element& f, std::span<const Element> args,
                     std::uint32_t n) const {
    return dp::substitute(f, args, n);
  }
  Element partial_combinator(const Element& f) const {
    return dp::partial_combinator(f);
  }
  std::vector<Scalar> counit(const Element& f) const { return dp::counit(f); }
  std::uint32_t arity(const Element& f) const { return f.arity(); }

  std::string format(const Element& f, const VariableNames& names) const {
    return cdm::format(f, names);
  }
  Element parse(std::string_view text, const VariableNames& names) const {
    return parse_divided(text, names.size(), field_, names);
  }

 private:
  FieldSpec field_;
};

class ZinbielTheory {
 public:
  using Element = ZinElement;

  explicit ZinbielTheory(const FieldSpec& field) : field_(field) {}

  std::string name() const { return "zinbiel"; }
  const FieldSpec& field() const { return field_; }
  std::optional<std::uint32_t> cap() const { return std::nullopt; }

  Element zero(std::uint32_t n) const { return Element::zero(n, field_); }
  Element eta(std::uint32_t i, std::uint32_t n) const {
    return zin::eta(i, n, field_);
  }
  Element add(const Element& a, const Element& b) const {
    return zin::add(a, b);
  }
  Element scale(const Element& a, const Scalar& s) const {
    return zin::scale(a, s);
  }
  Element substitute(const Element& f, std::span<const Element> args,
                     std::uint32_t n) const {
    return zin::substitute(f, args, n);
  }
  Element partial_combinator(const Element& f) const {
    return zin::partial_combinator(f);
  }
  std::vector<Scalar> counit(const Element& f) const { return zin::counit(f); }
  std::uint32_t arity(const Element& f) const { return f.arity(); }

  std::string format(const Element& f, const VariableNames& names) const {
    return cdm::format(f, names);
  }
  Element parse(std::string_view text, const VariableNames& names) const {
    return parse_zinbiel(text, names.size(), field_, names);
  }

 private:
  FieldSpec field_;
};

/// The identity monad: morphisms are matrices and the partial combinator is
/// the second projection.
class TrivialTheory {
 public:
  using Element = LinearForm;

  explicit TrivialTheory(const FieldSpec& field) : field_(field) {}

  std::string name() const { return "trivial"; }
  const FieldSpec& field() const { return field_; }
  std::optional<std::uint32_t> cap() const { return std::nullopt; }

  Element zero(std::uint32_t n) const { return Element(n, field_); }
  Element eta(std::uint32_t i, std::uint32_t n) const {
    return Element::variable(i, n, field_);
  }
  Element add(const Element& a, const Element& b) const {
    return lin::add(a, b);
  }
  Element scale(const Element& a, const Scalar& s) const {
    return lin::scale(a, s);
  }
  Element substitute(const Element& f, std::span<const Element> args,
                     std::uint32_t n) const {
    return lin::substitute(f, args, n);
  }
  Element partial_combinator(const Element& f) const {
    return lin::partial_combinator(f);
  }
  std::vector<Scalar> counit(const Element& f) const { return f.coeffs(); }
  std::uint32_t arity(const Element& f) const { return f.arity(); }

  std::string format(const Element& f, const VariableNames& names) const {
    return cdm::format(f, names);
  }
  Element parse(std::string_view text, const VariableNames& names) const {
    return parse_linear(text, names.size(), field_, names);
  }

 private:
  FieldSpec field_;
};

/// A theory whose partial combinator has been replaced, for checking that the
/// axiom harness notices broken derivatives.
template <class Base>
class Mutated : public Base {
 public:
  using Element = typename Base::Element;
  using Partial = std::function<Element(const Element&)>;

  Mutated(Base base, std::string mutation, Partial partial)
      : Base(std::move(base)),
        mutation_(std::move(mutation)),
        partial_(std::move(partial)) {}

  const std::string& mutation() const { return mutation_; }
  Element partial_combinator(const Element& f) const { return partial_(f); }

 private:
  std::string mutation_;
  Partial partial_;
};

namespace mutations {

/// Stars the last letter of each word instead of the first.
Mutated<ZinbielTheory> zinbiel_last_letter(const FieldSpec& field);
/// Leaves out the summand for the first variable.
Mutated<PowerSeriesTheory> power_drop_first(const FieldSpec& field,
                                            std::uint32_t cap);
/// Multiplies the summand for x_i^[k] by an extra binomial(k, 1).
Mutated<DividedPowerTheory> divided_extra_binomial(const FieldSpec& field);

}  // namespace mutations

}  // namespace cdm
