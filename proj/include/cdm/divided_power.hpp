#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cdm/monomial.hpp"
#include "cdm/power_series.hpp"
#include "cdm/scalar.hpp"

namespace cdm {

/// A reduced divided power polynomial. The exponent k of variable x in a
/// MultiIndex stands for x^[k].
class DPElement {
 public:
  using Terms = CoeffMap<MultiIndex>;

  DPElement(std::uint32_t arity, const FieldSpec& field)
      : arity_(arity), field_(field) {}
  /// Drops zero coefficients. Throws ArityError, NotReduced (a degree-0
  /// monomial) or MixedFields.
  DPElement(std::uint32_t arity, const FieldSpec& field, Terms terms);

  static DPElement zero(std::uint32_t arity, const FieldSpec& field) {
    return DPElement(arity, field);
  }
  /// x_i^[k].
  static DPElement variable(std::uint32_t i, std::uint32_t arity,
                            const FieldSpec& field, std::uint32_t k = 1);
  static DPElement monomial(const MultiIndex& m, const Scalar& c,
                            std::uint32_t arity, const FieldSpec& field);

  std::uint32_t arity() const { return arity_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const MultiIndex& m) const;

  /// Same terms viewed over a larger variable set.
  DPElement widened(std::uint32_t arity) const;

  /// Throws ShapeMismatch when arity or field differ.
  friend bool operator==(const DPElement& a, const DPElement& b);

 private:
  std::uint32_t arity_;
  FieldSpec field_;
  Terms terms_;
};

namespace dp {

DPElement add(const DPElement& f, const DPElement& g);
DPElement sub(const DPElement& f, const DPElement& g);
DPElement neg(const DPElement& f);
DPElement scale(const DPElement& f, const Scalar& s);
/// x^[k] * x^[l] = binomial(k+l, k) x^[k+l], variable by variable.
DPElement mul(const DPElement& f, const DPElement& g);
/// n-fold product f * ... * f (the ordinary power a^{*n}).
DPElement mul_power(const DPElement& f, std::uint32_t n);

/// Integer coefficient of m^[n] for a single monomial m.
mpz_class monomial_power_coeff(const MultiIndex& m, std::uint32_t n);
/// f^[n] for n >= 1.
DPElement power(const DPElement& f, std::uint32_t n);
/// f^[1], ..., f^[n] in one pass.
std::vector<DPElement> power_table(const DPElement& f, std::uint32_t n);

/// Replaces x_i^[r] by args[i]^[r]; each arg lives over `arity` variables.
DPElement substitute(const DPElement& f, std::span<const DPElement> args,
                     std::uint32_t arity);

/// Divided-power derivative d/dx_i as (reduced part, constant part).
std::pair<DPElement, Scalar> partial(const DPElement& f, std::uint32_t i);
/// sum_i (d f/dx_i) * x_{n+i}^[1] over 2n variables, assembled from partial().
DPElement partial_combinator(const DPElement& f);
/// The same map computed monomial by monomial: each x_i^[r_i] in turn is
/// lowered to x_i^[r_i - 1] and tagged with x_{n+i}^[1].
DPElement partial_combinator_direct(const DPElement& f);

DPElement eta(std::uint32_t i, std::uint32_t arity, const FieldSpec& field);
std::vector<Scalar> counit(const DPElement& f);

/// x^[k] -> x^k / k!; only defined over the rationals. The result is an
/// uncapped reduced series.
SeriesElement to_power_series(const DPElement& f);

}  // namespace dp

}  // namespace cdm
