#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdm/monomial.hpp"
#include "cdm/scalar.hpp"

namespace cdm {

/// Everything two series must agree on before they can be combined.
struct SeriesShape {
  std::uint32_t arity = 0;
  /// Degree cap; nullopt means polynomials (no truncation).
  std::optional<std::uint32_t> cap;
  /// Reduced elements have no degree-0 term.
  bool reduced = true;
  FieldSpec field;

  static SeriesShape series(std::uint32_t arity, std::uint32_t cap,
                            FieldSpec field) {
    return {arity, cap, true, field};
  }
  static SeriesShape polynomial(std::uint32_t arity, FieldSpec field) {
    return {arity, std::nullopt, false, field};
  }
  SeriesShape with_arity(std::uint32_t n) const {
    SeriesShape s = *this;
    s.arity = n;
    return s;
  }
  bool admits(std::uint32_t degree) const {
    return (!cap || degree <= *cap) && (!reduced || degree >= 1);
  }

  friend bool operator==(const SeriesShape&, const SeriesShape&) = default;
};

/// A truncated multivariable power series (or a polynomial when the shape has
/// no cap), in canonical form.
class SeriesElement {
 public:
  using Terms = CoeffMap<MultiIndex>;

  explicit SeriesElement(const SeriesShape& shape) : shape_(shape) {}
  /// Drops zero coefficients and terms above the cap. Throws ArityError for a
  /// variable outside the arity, NotReduced for a constant term in a reduced
  /// shape and MixedFields for a coefficient from another field.
  SeriesElement(const SeriesShape& shape, Terms terms);

  static SeriesElement zero(const SeriesShape& shape) {
    return SeriesElement(shape);
  }
  /// The degree-1 monomial x_i.
  static SeriesElement variable(std::uint32_t i, const SeriesShape& shape);
  static SeriesElement monomial(const MultiIndex& m, const Scalar& c,
                                const SeriesShape& shape);

  const SeriesShape& shape() const { return shape_; }
  std::uint32_t arity() const { return shape_.arity; }
  const FieldSpec& field() const { return shape_.field; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const MultiIndex& m) const;

  /// Throws ShapeMismatch when the shapes differ.
  friend bool operator==(const SeriesElement& a, const SeriesElement& b);

 private:
  SeriesShape shape_;
  Terms terms_;
};

namespace ps {

SeriesElement add(const SeriesElement& f, const SeriesElement& g);
SeriesElement sub(const SeriesElement& f, const SeriesElement& g);
SeriesElement neg(const SeriesElement& f);
SeriesElement scale(const SeriesElement& f, const Scalar& s);
SeriesElement mul(const SeriesElement& f, const SeriesElement& g);
SeriesElement power(const SeriesElement& f, std::uint32_t k);

/// f(args[0], ..., args[m-1]); every arg has shape `target`. Over a capped
/// shape every arg must be free of constant terms (NonReducedArgument).
SeriesElement substitute(const SeriesElement& f,
                         std::span<const SeriesElement> args,
                         const SeriesShape& target);

/// d f / d x_i. The result is not reduced and carries cap - 1.
SeriesElement partial(const SeriesElement& f, std::uint32_t i);
/// sum_i (d f / d x_i) * x_{n+i}, over 2n variables with f's cap.
SeriesElement partial_combinator(const SeriesElement& f);

SeriesElement eta(std::uint32_t i, const SeriesShape& shape);
/// Degree-1 coefficients.
std::vector<Scalar> counit(const SeriesElement& f);
/// Drops every term of degree > n and lowers the cap to n.
SeriesElement truncate(const SeriesElement& f, std::uint32_t n);

}  // namespace ps

}  // namespace cdm
