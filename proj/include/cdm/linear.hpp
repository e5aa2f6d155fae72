#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdm/scalar.hpp"

namespace cdm {

/// A linear form sum_i c_i x_i: the elements of the identity monad's theory.
class LinearForm {
 public:
  LinearForm(std::uint32_t arity, const FieldSpec& field)
      : field_(field), coeffs_(arity, Scalar::zero(field)) {}
  /// Throws MixedFields if a coefficient is from another field.
  LinearForm(const FieldSpec& field, std::vector<Scalar> coeffs);

  static LinearForm variable(std::uint32_t i, std::uint32_t arity,
                             const FieldSpec& field);

  std::uint32_t arity() const {
    return static_cast<std::uint32_t>(coeffs_.size());
  }
  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Throws ShapeMismatch when arity or field differ.
  friend bool operator==(const LinearForm& a, const LinearForm& b);

 private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

namespace lin {

LinearForm add(const LinearForm& f, const LinearForm& g);
LinearForm scale(const LinearForm& f, const Scalar& s);
/// sum_i f_i args[i]; every arg has `arity` variables.
LinearForm substitute(const LinearForm& f, std::span<const LinearForm> args,
                      std::uint32_t arity);
/// The second projection: f over n variables becomes f(x_{n+1}, ..., x_{2n}).
LinearForm partial_combinator(const LinearForm& f);

}  // namespace lin

}  // namespace cdm
