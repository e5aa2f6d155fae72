#include "cdm/scalar.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cdm/errors.hpp"

namespace cdm {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= kMaxPrime) {
    throw std::invalid_argument("prime field characteristic " +
                                std::to_string(p) + " exceeds 2^20");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint32_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return prime(p);
    }
  }
  throw std::invalid_argument("unknown field '" + std::string(text) +
                              "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(long value, const FieldSpec& field) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = value;
  } else {
    long p = field.characteristic();
    long r = value % p;
    s.r_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  return s;
}

Scalar Scalar::embed(const mpz_class& n, const FieldSpec& field) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = n;
  } else {
    s.r_ = static_cast<std::uint32_t>(
        mpz_fdiv_ui(n.get_mpz_t(), field.characteristic()));
  }
  return s;
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den,
                        const FieldSpec& field) {
  Scalar d = embed(den, field);
  if (d.is_zero()) throw DivisionByZero("zero denominator");
  if (field.is_rational()) {
    Scalar s(field);
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  return embed(num, field) * d.inverse();
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw MixedFields("scalars from " + field_.name() + " and " +
                      other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    std::uint32_t p = field_.characteristic();
    std::uint32_t sum = r_ + rhs.r_;
    r_ = sum >= p ? sum - p : sum;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    std::uint64_t prod = std::uint64_t{r_} * rhs.r_;
    r_ = static_cast<std::uint32_t>(prod % field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
    return s;
  }
  // Fermat: a^(p-2).
  return pow(field_.characteristic() - 2);
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

namespace comb {
namespace {

constexpr unsigned kFactorialTable = 256;
constexpr unsigned kBinomialTable = 128;

const std::vector<mpz_class>& factorial_table() {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t(kFactorialTable);
    t[0] = 1;
    for (unsigned i = 1; i < kFactorialTable; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

const std::vector<std::vector<mpz_class>>& binomial_table() {
  static const std::vector<std::vector<mpz_class>> table = [] {
    std::vector<std::vector<mpz_class>> t(kBinomialTable);
    for (unsigned n = 0; n < kBinomialTable; ++n) {
      t[n].resize(n + 1);
      t[n][0] = t[n][n] = 1;
      for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw NonIntegralQuotient(num.get_str() + " / " + den.get_str());
  }
  return q;
}

}  // namespace

mpz_class factorial(unsigned n) {
  if (n < kFactorialTable) return factorial_table()[n];
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n < kBinomialTable) return binomial_table()[n][k];
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class multinomial(std::span<const unsigned> parts) {
  // Product of binomials keeps every intermediate integral.
  mpz_class out = 1;
  unsigned total = 0;
  for (unsigned part : parts) {
    total += part;
    out *= binomial(total, part);
  }
  return out;
}

mpz_class dp_power_coeff(unsigned m, unsigned n) {
  mpz_class den = factorial(m);
  mpz_class nf = factorial(n);
  for (unsigned i = 0; i < m; ++i) den *= nf;
  return exact_quotient(factorial(m * n), den);
}

}  // namespace comb

}  // namespace cdm
