#include "cdm/theory.hpp"

namespace cdm::mutations {

Mutated<ZinbielTheory> zinbiel_last_letter(const FieldSpec& field) {
  return Mutated<ZinbielTheory>(
      ZinbielTheory(field), "zinbiel-last-letter", [](const ZinElement& f) {
        const std::uint32_t n = f.arity();
        ZinElement::Terms t;
        for (const auto& [w, c] : f.terms()) {
          Word d = w;
          d.letters.back() += n;
          accumulate(t, std::move(d), c);
        }
        return ZinElement(2 * n, f.field(), std::move(t));
      });
}

Mutated<PowerSeriesTheory> power_drop_first(const FieldSpec& field,
                                            std::uint32_t cap) {
  return Mutated<PowerSeriesTheory>(
      PowerSeriesTheory::series(field, cap), "power-drop-first",
      [](const SeriesElement& f) {
        const std::uint32_t n = f.arity();
        SeriesElement::Terms t;
        for (const auto& [m, c] : f.terms()) {
          for (const auto& [var, exp] : m.entries()) {
            if (var == 0) continue;
            accumulate(t,
                       m.with_exponent(var, exp - 1) *
                           MultiIndex::variable(n + var),
                       c * Scalar::from_int(static_cast<long>(exp), f.field()));
          }
        }
        return SeriesElement(f.shape().with_arity(2 * n), std::move(t));
      });
}

Mutated<DividedPowerTheory> divided_extra_binomial(const FieldSpec& field) {
  return Mutated<DividedPowerTheory>(
      DividedPowerTheory(field), "divided-extra-binomial",
      [](const DPElement& f) {
        const std::uint32_t n = f.arity();
        DPElement::Terms t;
        for (const auto& [m, c] : f.terms()) {
          for (const auto& [var, k] : m.entries()) {
            MultiIndex d =
                m.with_exponent(var, k - 1) * MultiIndex::variable(n + var);
            accumulate(t, d,
                       c * Scalar::embed(comb::binomial(k, 1), f.field()));
          }
        }
        return DPElement(2 * n, f.field(), std::move(t));
      });
}

}  // namespace cdm::mutations
