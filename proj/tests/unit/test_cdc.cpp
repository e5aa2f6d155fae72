#include <doctest.h>

#include <string>
#include <vector>

#include "cdm/cdc.hpp"
#include "cdm/errors.hpp"
#include "cdm/generators.hpp"
#include "cdm/theory.hpp"

using namespace cdm;

namespace {

const FieldSpec Q = FieldSpec::rationals();

template <class Theory>
Morphism<typename Theory::Element> mor(const Theory& t, std::uint32_t n,
                                       const std::vector<std::string>& comps) {
  Morphism<typename Theory::Element> p{n, {}};
  for (const auto& c : comps) p.components.push_back(t.parse(c, VariableNames::standard(n)));
  return p;
}

template <class Theory>
Morphism<typename Theory::Element> random_map(SplitMix64& rng, const Theory& t,
                                              std::uint32_t n, std::uint32_t m,
                                              const GenBounds& b) {
  Morphism<typename Theory::Element> p{n, {}};
  for (std::uint32_t j = 0; j < m; ++j) p.components.push_back(random_element(rng, t, n, b));
  return p;
}

template <class Theory>
void structural_maps_are_linear(const Theory& t) {
  DiffCategory<Theory> cat(t);
  for (std::uint32_t n = 1; n <= 2; ++n) {
    for (std::uint32_t m = 1; m <= 2; ++m) {
      CHECK(cat.is_dlinear(cat.identity(n)));
      CHECK(cat.is_dlinear(cat.proj0(n, m)));
      CHECK(cat.is_dlinear(cat.proj1(n, m)));
      CHECK(cat.is_dlinear(cat.inject0(n, m)));
      CHECK(cat.is_dlinear(cat.inject1(n, m)));
      CHECK(cat.is_dlinear(cat.zero_map(n, m)));
    }
    CHECK(cat.is_dlinear(cat.diag(n)));
    CHECK(cat.is_dlinear(cat.codiag(n)));
    CHECK(cat.is_dlinear(cat.ell(n)));
    CHECK(cat.is_dlinear(cat.swap_c(n)));
  }
}

template <class Theory>
void composition_laws(const Theory& t, const GenBounds& b, std::uint64_t seed) {
  DiffCategory<Theory> cat(t);
  SplitMix64 rng(seed);
  for (int i = 0; i < 40; ++i) {
    auto k = static_cast<std::uint32_t>(rng.uniform(1, 3));
    auto n = static_cast<std::uint32_t>(rng.uniform(1, 3));
    auto m = static_cast<std::uint32_t>(rng.uniform(1, 3));
    auto l = static_cast<std::uint32_t>(rng.uniform(1, 2));
    auto p = random_map(rng, t, k, n, b);
    auto q = random_map(rng, t, n, m, b);
    auto r = random_map(rng, t, m, l, b);
    CHECK(cat.equal(cat.compose(r, cat.compose(q, p)), cat.compose(cat.compose(r, q), p)));
    CHECK(cat.equal(cat.compose(cat.identity(n), p), p));
    CHECK(cat.equal(cat.compose(p, cat.identity(k)), p));

    // Linear maps compose to linear maps, and the two tests agree.
    Morphism<typename Theory::Element> u{k, {}}, v{n, {}};
    for (std::uint32_t j = 0; j < n; ++j) {
      std::vector<Scalar> c;
      for (std::uint32_t x = 0; x < k; ++x) c.push_back(Scalar::from_int(rng.uniform(-2, 2), t.field()));
      u.components.push_back(cat.eta_of(c, k));
    }
    for (std::uint32_t j = 0; j < m; ++j) {
      std::vector<Scalar> c;
      for (std::uint32_t x = 0; x < n; ++x) c.push_back(Scalar::from_int(rng.uniform(-2, 2), t.field()));
      v.components.push_back(cat.eta_of(c, n));
    }
    CHECK(cat.is_dlinear(u));
    CHECK(cat.is_dlinear(cat.compose(v, u)));
    CHECK(cat.is_dlinear(p) == cat.dlinear_by_counit(p));
  }
}

}  // namespace

TEST_CASE("structural maps as explicit tuples") {
  PowerSeriesTheory t = PowerSeriesTheory::series(Q, 4);
  DiffCategory<PowerSeriesTheory> cat(t);
  CHECK(cat.equal(cat.proj0(1, 1), mor(t, 2, {"x1"})));
  CHECK(cat.equal(cat.proj1(1, 2), mor(t, 3, {"x2", "x3"})));
  CHECK(cat.equal(cat.codiag(1), mor(t, 2, {"x1 + x2"})));
  CHECK(cat.equal(cat.inject0(1, 1), mor(t, 1, {"x1", "0"})));
  CHECK(cat.equal(cat.inject1(1, 1), mor(t, 1, {"0", "x1"})));
  CHECK(cat.equal(cat.diag(2), mor(t, 2, {"x1", "x2", "x1", "x2"})));
  CHECK(cat.equal(cat.ell(1), mor(t, 2, {"x1", "0", "0", "x2"})));
  CHECK(cat.equal(cat.swap_c(1), mor(t, 4, {"x1", "x3", "x2", "x4"})));
  CHECK(cat.equal(cat.swap_c(2), mor(t, 8, {"x1", "x2", "x5", "x6", "x3", "x4", "x7", "x8"})));
  CHECK(cat.equal(cat.zero_map(2, 1), mor(t, 2, {"0"})));
  CHECK(cat.equal(cat.product(mor(t, 1, {"x1^2"}), mor(t, 1, {"2*x1"})),
                  mor(t, 2, {"x1^2", "2*x2"})));
  CHECK(cat.equal(cat.sum(mor(t, 1, {"x1"}), mor(t, 1, {"x1^2"})), mor(t, 1, {"x1 + x1^2"})));
  CHECK(cat.equal(cat.scale(mor(t, 1, {"x1"}), Scalar::from_int(3, Q)), mor(t, 1, {"3*x1"})));
  CHECK(cat.format(mor(t, 2, {"x1", "x1*x2"})) == "[x1, x1*x2]");
  CHECK(cat.differentiate(mor(t, 2, {"x1"})).source == 4);
}

TEST_CASE("shape errors") {
  PowerSeriesTheory t = PowerSeriesTheory::series(Q, 4);
  DiffCategory<PowerSeriesTheory> cat(t);
  CHECK_THROWS_AS(cat.compose(mor(t, 2, {"x1"}), mor(t, 1, {"x1"})), ShapeMismatch);
  CHECK_THROWS_AS(cat.pair(mor(t, 2, {"x1"}), mor(t, 1, {"x1"})), ShapeMismatch);
  CHECK_THROWS_AS(cat.sum(mor(t, 1, {"x1"}), mor(t, 1, {"x1", "x1"})), ShapeMismatch);
  Morphism<SeriesElement> bad{2, {t.eta(0, 1)}};
  CHECK_THROWS_AS(cat.validate(bad), ShapeMismatch);
  CHECK_FALSE(cat.equal(mor(t, 1, {"x1"}), mor(t, 2, {"x1"})));
}

TEST_CASE("composition examples") {
  ZinbielTheory zt(Q);
  DiffCategory<ZinbielTheory> zc(zt);
  CHECK(zc.equal(zc.compose(mor(zt, 2, {"x1.x2.x1"}), mor(zt, 3, {"x1.x2", "x3"})),
                 mor(zt, 3, {"x1.x2.x3.x1.x2 + x1.x3.x2.x1.x2 + 2*x1.x3.x1.x2.x2"})));

  for (const auto& [field, expected] :
       std::vector<std::pair<FieldSpec, std::string>>{{Q, "6*x1^[4]*x2^[2]"},
                                                      {FieldSpec::prime(2), "0"},
                                                      {FieldSpec::prime(5), "x1^[4]*x2^[2]"}}) {
    DividedPowerTheory dt(field);
    DiffCategory<DividedPowerTheory> dc(dt);
    auto out = dc.compose(mor(dt, 1, {"x1^[2]"}), mor(dt, 2, {"x1^[2]*x2"}));
    CHECK(dc.equal(out, mor(dt, 2, {expected})));
  }
}

TEST_CASE("differentiation examples") {
  auto t = PowerSeriesTheory::series(Q, 4);
  DiffCategory<PowerSeriesTheory> cat(t);
  CHECK(cat.equal(cat.differentiate(cat.identity(1)), cat.proj1(1, 1)));
  CHECK(cat.equal(cat.differentiate(mor(t, 2, {"x1*x2"})), mor(t, 4, {"x2*x3 + x1*x4"})));
  auto names = VariableNames::standard(2).doubled();
  CHECK(cat.format(cat.differentiate(mor(t, 2, {"x1*x2"})), names) == "[x1*dx2 + x2*dx1]");

  ZinbielTheory zt(Q);
  DiffCategory<ZinbielTheory> zc(zt);
  CHECK(zc.equal(zc.differentiate(mor(zt, 2, {"x1.x2"})), mor(zt, 4, {"x3.x2"})));
  CHECK(zc.format(zc.differentiate(mor(zt, 2, {"x1.x2"})), names) == "[dx1.x2]");

  TrivialTheory tt(Q);
  DiffCategory<TrivialTheory> tc(tt);
  CHECK(tc.equal(tc.differentiate(mor(tt, 2, {"x1 - 2*x2"})), mor(tt, 4, {"x3 - 2*x4"})));
}

TEST_CASE("linearization") {
  auto t = PowerSeriesTheory::series(Q, 4);
  DiffCategory<PowerSeriesTheory> cat(t);
  CHECK(cat.equal(cat.linearize(mor(t, 1, {"x1 + x1^2"})), mor(t, 1, {"x1"})));
  CHECK(cat.is_dlinear(mor(t, 2, {"2*x1 + 3*x2"})));
  CHECK_FALSE(cat.is_dlinear(mor(t, 2, {"x1*x2"})));

  DividedPowerTheory dt(Q);
  DiffCategory<DividedPowerTheory> dc(dt);
  CHECK_FALSE(dc.is_dlinear(mor(dt, 1, {"x1^[2]"})));
  CHECK(dc.equal(dc.linearize(mor(dt, 1, {"x1^[2]"})), mor(dt, 1, {"0"})));

  ZinbielTheory zt(Q);
  DiffCategory<ZinbielTheory> zc(zt);
  // eta o epsilon fixes exactly the length-1 elements.
  for (const auto& e : enumerate_basis(zt, 2, 3)) {
    Morphism<ZinElement> p{2, {e}};
    bool length_one = e.terms().begin()->first.size() == 1;
    CHECK(zc.dlinear_by_counit(p) == length_one);
    CHECK(zc.is_dlinear(p) == length_one);
  }
}

TEST_CASE("structural maps are linear") {
  structural_maps_are_linear(PowerSeriesTheory::series(Q, 3));
  structural_maps_are_linear(PowerSeriesTheory::polynomial(FieldSpec::prime(3)));
  structural_maps_are_linear(DividedPowerTheory(FieldSpec::prime(2)));
  structural_maps_are_linear(ZinbielTheory(Q));
  structural_maps_are_linear(TrivialTheory(Q));
}

TEST_CASE("composition laws in every theory") {
  composition_laws(PowerSeriesTheory::series(Q, 4), GenBounds{3, 3, 3, -3, 3}, 1);
  composition_laws(PowerSeriesTheory::series(FieldSpec::prime(5), 4), GenBounds{3, 3, 3, -3, 3}, 2);
  composition_laws(PowerSeriesTheory::polynomial(Q), GenBounds{3, 2, 3, -3, 3}, 3);
  composition_laws(DividedPowerTheory(FieldSpec::prime(3)), GenBounds{3, 2, 3, -3, 3}, 4);
  composition_laws(ZinbielTheory(Q), GenBounds{3, 2, 3, -3, 3}, 5);
  composition_laws(TrivialTheory(Q), GenBounds{3, 1, 3, -3, 3}, 6);
}
