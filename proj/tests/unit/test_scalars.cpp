#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "cdm/errors.hpp"
#include "cdm/generators.hpp"
#include "cdm/scalar.hpp"

using namespace cdm;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long num, long den = 1) { return Scalar::fraction(num, den, Q); }

Scalar random_scalar(SplitMix64& rng, const FieldSpec& f) {
  long num = rng.uniform(-50, 50);
  long den = f.is_rational() ? rng.uniform(1, 9) : 1;
  return Scalar::fraction(num, den, f);
}

mpz_class naive_factorial(unsigned n) {
  mpz_class r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Pascal's triangle, built by repeated addition.
std::vector<std::vector<mpz_class>> pascal(unsigned rows) {
  std::vector<std::vector<mpz_class>> t(rows + 1);
  for (unsigned n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("F7").characteristic() == 7);
  CHECK(FieldSpec::parse("F7").name() == "F7");
  CHECK_THROWS_AS(FieldSpec::parse("F8"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("F1"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("R"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(1u << 20), std::invalid_argument);
  CHECK(FieldSpec::prime(1048573).characteristic() == 1048573);

  int primes_below_100 = 0;
  for (std::uint32_t n = 0; n < 100; ++n) primes_below_100 += is_prime(n);
  CHECK(primes_below_100 == 25);
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK(q(4, -6).to_string() == "-2/3");
  CHECK((q(3) / q(4)).to_string() == "3/4");
  CHECK(q(7, 7).is_one());
  CHECK((q(2, 3) - q(2, 3)).is_zero());
  CHECK(q(-2, 3).pow(3) == q(-8, 27));
  CHECK_THROWS_AS(q(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::fraction(1, 0, Q), DivisionByZero);
}

TEST_CASE("prime field inverse agrees with exhaustive search") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    FieldSpec f = FieldSpec::prime(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      std::uint32_t found = 0;
      for (std::uint32_t b = 1; b < p; ++b) {
        if ((a * b) % p == 1) found = b;
      }
      CHECK(Scalar::from_int(a, f).inverse().residue() == found);
    }
  }
  CHECK(Scalar::from_int(3, FieldSpec::prime(7)).inverse().residue() == 5);
  CHECK_THROWS_AS(Scalar::zero(FieldSpec::prime(7)).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::fraction(1, 7, FieldSpec::prime(7)), DivisionByZero);
  CHECK(Scalar::fraction(1, 2, FieldSpec::prime(7)).residue() == 4);
}

TEST_CASE("integer embedding") {
  CHECK(Scalar::embed(2, FieldSpec::prime(2)).is_zero());
  CHECK(Scalar::embed(-1, FieldSpec::prime(5)).residue() == 4);
  CHECK(Scalar::embed(6, Q) == q(6));
  CHECK(Scalar::embed(6, Q).to_string() == "6");
  mpz_class big = naive_factorial(30);
  CHECK(Scalar::embed(big, FieldSpec::prime(31)).residue() ==
        mpz_class(big % 31).get_ui());
}

TEST_CASE("mixed fields are rejected") {
  Scalar a = Scalar::one(Q);
  Scalar b = Scalar::one(FieldSpec::prime(5));
  CHECK_THROWS_AS(a + b, MixedFields);
  CHECK_THROWS_AS(a * b, MixedFields);
  CHECK_THROWS_AS((void)(a == b), MixedFields);
  CHECK_THROWS_AS(Scalar::one(FieldSpec::prime(3)) +
                      Scalar::one(FieldSpec::prime(5)),
                  MixedFields);
}

TEST_CASE("field axioms on random triples") {
  for (const FieldSpec& f :
       {Q, FieldSpec::prime(2), FieldSpec::prime(5), FieldSpec::prime(101)}) {
    SplitMix64 rng(0x5eed + f.characteristic());
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    for (int i = 0; i < 100; ++i) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f),
             c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * one == a);
      CHECK(a + zero == a);
      CHECK(a + (-a) == zero);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
    }
  }
}

TEST_CASE("factorial and binomial against naive oracles") {
  auto tri = pascal(12);
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(comb::factorial(n) == naive_factorial(n));
    for (unsigned k = 0; k <= n; ++k) CHECK(comb::binomial(n, k) == tri[n][k]);
  }
  CHECK(comb::binomial(5, 2) == 10);
  CHECK(comb::binomial(3, 5) == 0);
}

TEST_CASE("multinomial counts arrangements") {
  std::vector<unsigned> parts = {2, 1, 1};
  CHECK(comb::multinomial(parts) == 12);

  // Count distinct arrangements of aabc directly.
  std::vector<int> letters = {0, 0, 1, 2};
  int arrangements = 0;
  do ++arrangements;
  while (std::next_permutation(letters.begin(), letters.end()));
  CHECK(arrangements == 12);

  for (unsigned a = 0; a <= 4; ++a) {
    for (unsigned b = 0; b <= 4; ++b) {
      for (unsigned c = 0; c <= 4; ++c) {
        std::vector<unsigned> p = {a, b, c};
        CHECK(comb::multinomial(p) ==
              naive_factorial(a + b + c) /
                  (naive_factorial(a) * naive_factorial(b) *
                   naive_factorial(c)));
      }
    }
  }
}

TEST_CASE("divided power coefficient") {
  CHECK(comb::dp_power_coeff(2, 2) == 3);
  // (y^[2] z)^[2] = 2! (y^[2])^[2] z^[2] = 4!/(2!)^2 y^[4] z^[2].
  CHECK(comb::factorial(2) * comb::dp_power_coeff(2, 2) == 6);
  CHECK(comb::dp_power_coeff(3, 2) == 15);
  CHECK(comb::dp_power_coeff(2, 3) == 10);
  CHECK(comb::dp_power_coeff(0, 4) == 1);
  CHECK(comb::dp_power_coeff(1, 4) == 1);
  CHECK_THROWS_AS(comb::dp_power_coeff(2, 0), NonIntegralQuotient);
  for (unsigned m = 0; m <= 6; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      mpz_class nf = naive_factorial(n), lhs = comb::dp_power_coeff(m, n);
      lhs *= naive_factorial(m);
      for (unsigned i = 0; i < m; ++i) lhs *= nf;
      CHECK(lhs == naive_factorial(m * n));
    }
  }
}
