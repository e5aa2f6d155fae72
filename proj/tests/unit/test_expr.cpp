#include <doctest.h>

#include <string>

#include "cdm/errors.hpp"
#include "cdm/expr.hpp"
#include "cdm/generators.hpp"
#include "cdm/theory.hpp"

using namespace cdm;

namespace {

const FieldSpec Q = FieldSpec::rationals();

template <class Theory>
void round_trip(const Theory& t, const typename Theory::Element& e,
                std::uint32_t n) {
  VariableNames names = VariableNames::standard(n);
  std::string text = t.format(e, names);
  CAPTURE(text);
  auto back = t.parse(text, names);
  CHECK(back == e);
  CHECK(t.format(back, names) == text);
}

template <class Theory>
void round_trips(const Theory& t, std::uint32_t max_degree) {
  for (std::uint32_t n = 1; n <= 2; ++n) {
    for (const auto& e : enumerate_basis(t, n, max_degree)) round_trip(t, e, n);
  }
  SplitMix64 rng(fnv1a(t.name()) ^ t.field().characteristic());
  GenBounds b{3, 4, 4, -9, 9};
  for (int i = 0; i < 500; ++i) {
    auto n = static_cast<std::uint32_t>(rng.uniform(1, 3));
    round_trip(t, random_element(rng, t, n, b), n);
  }
}

}  // namespace

TEST_CASE("variable names") {
  auto names = VariableNames::standard(2);
  CHECK(names.name(1) == "x2");
  CHECK(names.index_of("x2") == 1u);
  CHECK_FALSE(names.index_of("x3"));
  auto d = names.doubled();
  REQUIRE(d.size() == 4);
  CHECK(d.name(2) == "dx1");
  CHECK(d.name(3) == "dx2");
  auto dd = d.doubled();
  CHECK(dd.name(4) == "ddx1");
  CHECK(dd.name(5) == "ddx2");
  CHECK(dd.name(6) == "dddx1");
  CHECK(dd.name(7) == "dddx2");
}

TEST_CASE("parsing examples") {
  auto s = SeriesShape::series(2, 6, Q);
  auto m = parse_series("3*x1^2*x2", s, VariableNames::standard(2));
  REQUIRE(m.terms().size() == 1);
  CHECK(m.coefficient(MultiIndex({{0, 2}, {1, 1}})) == Scalar::from_int(3, Q));

  auto d = parse_divided("x1^[2]*x2^[1] + 2*x1^[1]", 2, Q, VariableNames::standard(2));
  CHECK(d.terms().size() == 2);
  CHECK(d.coefficient(MultiIndex::variable(0)) == Scalar::from_int(2, Q));

  auto z = parse_zinbiel("x1.x2.x1 - x2.x1.x1", 2, Q, VariableNames::standard(2));
  CHECK(z.terms().size() == 2);
  CHECK(z.coefficient(Word{{1, 0, 0}}) == Scalar::from_int(-1, Q));

  CHECK(parse_series("x1*x1", s, VariableNames::standard(2)) ==
        parse_series("x1^2", s, VariableNames::standard(2)));
  CHECK(parse_divided("x1*x1", 1, Q, VariableNames::standard(1)) ==
        parse_divided("2*x1^[2]", 1, Q, VariableNames::standard(1)));
  CHECK(parse_series("0", s, VariableNames::standard(2)).is_zero());
  CHECK(parse_series(" - 1/2 * x1 +x2", s, VariableNames::standard(2))
            .coefficient(MultiIndex::variable(0)) == Scalar::fraction(-1, 2, Q));
  CHECK(parse_linear("2*x1 - x2 + x1", 2, Q, VariableNames::standard(2)).coeffs() ==
        std::vector<Scalar>{Scalar::from_int(3, Q), Scalar::from_int(-1, Q)});
  auto p = SeriesShape::polynomial(1, Q);
  CHECK(parse_series("2 + x1", p, VariableNames::standard(1))
            .coefficient(MultiIndex()) == Scalar::from_int(2, Q));
}

TEST_CASE("doubled names parse") {
  auto names = VariableNames::standard(2).doubled();
  auto e = parse_zinbiel("dx1.x2", 4, Q, names);
  CHECK(e == ZinElement::word({2, 1}, 4, Q));
  CHECK(format(e, names) == "dx1.x2");
}

TEST_CASE("errors") {
  auto s = SeriesShape::series(2, 6, Q);
  auto names = VariableNames::standard(2);
  CHECK_THROWS_AS(parse_series("", s, names), ParseError);
  CHECK_THROWS_AS(parse_series("x1 +", s, names), ParseError);
  CHECK_THROWS_AS(parse_series("x1 x2", s, names), ParseError);
  CHECK_THROWS_AS(parse_series("2 + x1", s, names), ParseError);
  CHECK_THROWS_AS(parse_series("x1^0", s, names), ParseError);
  CHECK_THROWS_AS(parse_series("y", s, names), ParseError);
  CHECK_THROWS_AS(parse_series("x3", s, names), ArityError);
  CHECK_THROWS_AS(parse_series("dx1", s, names), ArityError);
  CHECK_THROWS_AS(parse_series("1/0*x1", s, names), ParseError);
  CHECK_THROWS_AS(parse_divided("x1^[0]", 2, Q, names), ParseError);
  CHECK_THROWS_AS(parse_divided("x1^[2", 2, Q, names), ParseError);
  CHECK_THROWS_AS(parse_zinbiel("x1.", 2, Q, names), ParseError);
  CHECK_THROWS_AS(parse_series("1/5*x1", SeriesShape::series(2, 6, FieldSpec::prime(5)),
                               names),
                  ParseError);
  try {
    parse_series("x1 + * x2", s, names);
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("formatting") {
  auto names = VariableNames::standard(2);
  auto s = SeriesShape::series(2, 6, Q);
  CHECK(format(parse_series("x2 - 2*x1 + 1/3*x1*x2^2", s, names), names) ==
        "-2*x1 + x2 + 1/3*x1*x2^2");
  CHECK(format(SeriesElement::zero(s), names) == "0");
  CHECK(format(parse_divided("x1 + 3*x1^[2]*x2", 2, Q, names), names) ==
        "x1^[1] + 3*x1^[2]*x2^[1]");
  auto f5 = FieldSpec::prime(5);
  CHECK(format(parse_zinbiel("-x1.x2", 2, f5, names), names) == "4*x1.x2");
  CHECK(format(parse_linear("x2 - x1", 2, Q, names), names) == "-x1 + x2");
}

TEST_CASE("round trips") {
  for (const auto& f : {Q, FieldSpec::prime(2), FieldSpec::prime(7)}) {
    round_trips(PowerSeriesTheory::series(f, 4), 4);
    round_trips(PowerSeriesTheory::polynomial(f), 3);
    round_trips(DividedPowerTheory(f), 4);
    round_trips(ZinbielTheory(f), 4);
    round_trips(TrivialTheory(f), 1);
  }
}
