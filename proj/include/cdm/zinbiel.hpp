#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cdm/divided_power.hpp"
#include "cdm/monomial.hpp"
#include "cdm/scalar.hpp"

namespace cdm {

/// A nonempty word in the variables, ordered by length and then
/// lexicographically.
struct Word {
  std::vector<std::uint32_t> letters;

  std::size_t size() const { return letters.size(); }
  std::uint32_t variable_bound() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }
};

/// An element of the free Zinbiel algebra: a linear combination of words.
class ZinElement {
 public:
  using Terms = CoeffMap<Word>;

  ZinElement(std::uint32_t arity, const FieldSpec& field)
      : arity_(arity), field_(field) {}
  /// Drops zero coefficients. Throws ArityError, NotReduced (empty word) or
  /// MixedFields.
  ZinElement(std::uint32_t arity, const FieldSpec& field, Terms terms);

  static ZinElement zero(std::uint32_t arity, const FieldSpec& field) {
    return ZinElement(arity, field);
  }
  static ZinElement word(std::vector<std::uint32_t> letters,
                         std::uint32_t arity, const FieldSpec& field);

  std::uint32_t arity() const { return arity_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  /// Same words viewed over a larger variable set.
  ZinElement widened(std::uint32_t arity) const;

  /// Throws ShapeMismatch when arity or field differ.
  friend bool operator==(const ZinElement& a, const ZinElement& b);

 private:
  std::uint32_t arity_;
  FieldSpec field_;
  Terms terms_;
};

namespace zin {

/// Every interleaving of a and b with its multiplicity.
std::map<Word, std::uint64_t> shuffle_words(std::span<const std::uint32_t> a,
                                            std::span<const std::uint32_t> b);
/// v < w on words: v_1 followed by the shuffles of v_2..v_n with w.
std::map<Word, std::uint64_t> half_shuffle_words(const Word& v, const Word& w);

ZinElement add(const ZinElement& f, const ZinElement& g);
ZinElement sub(const ZinElement& f, const ZinElement& g);
ZinElement neg(const ZinElement& f);
ZinElement scale(const ZinElement& f, const Scalar& s);

ZinElement half_shuffle(const ZinElement& a, const ZinElement& b);
/// a < b + b < a.
ZinElement shuffle(const ZinElement& a, const ZinElement& b);
/// e_1 < (e_2 < (... < e_k)).
ZinElement right_nested(std::span<const ZinElement> elems);

/// Replaces each word y_{i1}...y_{il} by args[i1] < (... < args[il]).
ZinElement substitute(const ZinElement& f, std::span<const ZinElement> args,
                      std::uint32_t arity);

/// Removes a leading x_i (the word x_i alone goes to the constant part).
std::pair<ZinElement, Scalar> partial(const ZinElement& f, std::uint32_t i);
/// Moves the first letter x_i of each word to x_{n+i}, over 2n variables.
ZinElement partial_combinator(const ZinElement& f);

ZinElement eta(std::uint32_t i, std::uint32_t arity, const FieldSpec& field);
std::vector<Scalar> counit(const ZinElement& f);

/// x_1^[r_1]...x_p^[r_p] -> sum of the distinct rearrangements of the word
/// with x_i repeated r_i times.
ZinElement gamma_to_zin(const DPElement& f);

/// Experimental integral: over 2n variables, x_{n+i} and x_i both go to x_i.
ZinElement integral_candidate(const ZinElement& g);

}  // namespace zin

}  // namespace cdm
