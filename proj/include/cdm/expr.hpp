#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdm/divided_power.hpp"
#include "cdm/linear.hpp"
#include "cdm/power_series.hpp"
#include "cdm/zinbiel.hpp"

namespace cdm {

/// Display names for the variables of an element, x1..xn by default.
class VariableNames {
 public:
  explicit VariableNames(std::vector<std::string> names);
  static VariableNames standard(std::uint32_t n);

  /// Names for twice as many variables: the originals followed by a "d"
  /// prefixed copy of each (more d's if a name would clash), so x1 gives
  /// x1, dx1 and then x1, dx1, ddx1, dddx1.
  VariableNames doubled() const;

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(names_.size());
  }
  const std::string& name(std::uint32_t i) const { return names_.at(i); }
  std::optional<std::uint32_t> index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

// Grammar shared by all theories: a sum of terms separated by + or -, each
// term an optional coefficient (integer or fraction) followed by `*` and a
// body. Bodies are monomials `x1^2*x2` for series, `x1^[2]*x2^[1]` for
// divided powers (bare `x1` means `x1^[1]`), words `x1.x2.x1` for Zinbiel
// and single variables for linear forms. Whitespace is ignored; `0` is zero.

SeriesElement parse_series(std::string_view text, const SeriesShape& shape,
                           const VariableNames& names);
DPElement parse_divided(std::string_view text, std::uint32_t arity,
                        const FieldSpec& field, const VariableNames& names);
ZinElement parse_zinbiel(std::string_view text, std::uint32_t arity,
                         const FieldSpec& field, const VariableNames& names);
LinearForm parse_linear(std::string_view text, std::uint32_t arity,
                        const FieldSpec& field, const VariableNames& names);

std::string format(const SeriesElement& f, const VariableNames& names);
std::string format(const DPElement& f, const VariableNames& names);
std::string format(const ZinElement& f, const VariableNames& names);
std::string format(const LinearForm& f, const VariableNames& names);

}  // namespace cdm
