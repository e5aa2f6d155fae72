#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace cdm {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// The base field: the rationals or F_p for a prime p < 2^20.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 20;

  /// Defaults to the rationals.
  constexpr FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws std::invalid_argument unless p is a prime below 2^20.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q" or "F<p>", e.g. "F7".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rationals; }
  /// Characteristic; 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  constexpr FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Zero in the rationals.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field) { return Scalar(field); }
  static Scalar one(const FieldSpec& field) { return from_int(1, field); }
  static Scalar from_int(long value, const FieldSpec& field);
  /// n/1 in Q, n mod p in F_p.
  static Scalar embed(const mpz_class& n, const FieldSpec& field);
  /// num/den; throws DivisionByZero when den vanishes in the field.
  static Scalar fraction(const mpz_class& num, const mpz_class& den,
                         const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over Q.
  const mpq_class& rational() const { return q_; }
  /// Only meaningful over F_p.
  std::uint32_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  /// Throws MixedFields when the operands live in different fields.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "-3", "2/5" over Q; the canonical residue over F_p.
  std::string to_string() const;

 private:
  explicit Scalar(const FieldSpec& field) : field_(field) {}
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

/// Integer structure constants. Everything is computed over Z and only then
/// embedded into a field.
namespace comb {

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);
/// (sum parts)! / prod(parts_i!).
mpz_class multinomial(std::span<const unsigned> parts);
/// (mn)! / (m! (n!)^m): the coefficient of (a^[n])^[m]. Throws
/// NonIntegralQuotient if the division is inexact.
mpz_class dp_power_coeff(unsigned m, unsigned n);

}  // namespace comb

}  // namespace cdm
