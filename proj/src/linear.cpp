#include "cdm/linear.hpp"

#include <string>

#include "cdm/errors.hpp"

namespace cdm {

namespace {

void require_same_shape(const LinearForm& f, const LinearForm& g) {
  if (f.arity() != g.arity() || !(f.field() == g.field())) {
    throw ShapeMismatch("linear forms over different arities or fields (" +
                        std::to_string(f.arity()) + ", " +
                        std::to_string(g.arity()) + ")");
  }
}

}  // namespace

LinearForm::LinearForm(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field)) {
      throw MixedFields("coefficient from " + c.field().name() +
                        " in a linear form over " + field.name());
    }
  }
}

LinearForm LinearForm::variable(std::uint32_t i, std::uint32_t arity,
                                const FieldSpec& field) {
  if (i >= arity) {
    throw ArityError("variable x" + std::to_string(i + 1) + " outside arity " +
                     std::to_string(arity));
  }
  LinearForm f(arity, field);
  f.coeffs_[i] = Scalar::one(field);
  return f;
}

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  require_same_shape(a, b);
  return a.coeffs_ == b.coeffs_;
}

namespace lin {

LinearForm add(const LinearForm& f, const LinearForm& g) {
  require_same_shape(f, g);
  std::vector<Scalar> c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs()[i];
  return LinearForm(f.field(), std::move(c));
}

LinearForm scale(const LinearForm& f, const Scalar& s) {
  std::vector<Scalar> c = f.coeffs();
  for (auto& x : c) x *= s;
  return LinearForm(f.field(), std::move(c));
}

LinearForm substitute(const LinearForm& f, std::span<const LinearForm> args,
                      std::uint32_t arity) {
  if (args.size() != f.arity()) {
    throw ShapeMismatch("substitution needs " + std::to_string(f.arity()) +
                        " arguments, got " + std::to_string(args.size()));
  }
  LinearForm out(arity, f.field());
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].arity() != arity) {
      throw ShapeMismatch("substitution argument of the wrong arity");
    }
    out = add(out, scale(args[i], f.coeffs()[i]));
  }
  return out;
}

LinearForm partial_combinator(const LinearForm& f) {
  std::vector<Scalar> c(f.arity(), Scalar::zero(f.field()));
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return LinearForm(f.field(), std::move(c));
}

}  // namespace lin

}  // namespace cdm
