#include "cdm/zinbiel.hpp"

#include <algorithm>
#include <string>

#include "cdm/errors.hpp"

namespace cdm {

namespace {

void require_same_shape(const ZinElement& f, const ZinElement& g) {
  if (f.arity() != g.arity() || !(f.field() == g.field())) {
    throw ShapeMismatch("Zinbiel elements over different arities or fields (" +
                        std::to_string(f.arity()) + ", " +
                        std::to_string(g.arity()) + ")");
  }
}

constexpr std::size_t kMaxShuffleLength = 60;

void interleave(std::span<const std::uint32_t> a,
                std::span<const std::uint32_t> b,
                std::vector<std::uint32_t>& prefix,
                std::map<Word, std::uint64_t>& out) {
  if (a.empty() || b.empty()) {
    Word w{prefix};
    w.letters.insert(w.letters.end(), a.begin(), a.end());
    w.letters.insert(w.letters.end(), b.begin(), b.end());
    ++out[std::move(w)];
    return;
  }
  prefix.push_back(a.front());
  interleave(a.subspan(1), b, prefix, out);
  prefix.back() = b.front();
  interleave(a, b.subspan(1), prefix, out);
  prefix.pop_back();
}

}  // namespace

std::uint32_t Word::variable_bound() const {
  std::uint32_t bound = 0;
  for (auto l : letters) bound = std::max(bound, l + 1);
  return bound;
}

ZinElement::ZinElement(std::uint32_t arity, const FieldSpec& field,
                       Terms terms)
    : arity_(arity), field_(field) {
  for (auto& [w, c] : terms) {
    if (!(c.field() == field)) {
      throw MixedFields("coefficient from " + c.field().name() +
                        " in a Zinbiel element over " + field.name());
    }
    if (w.letters.empty()) throw NotReduced("empty word");
    if (w.variable_bound() > arity) {
      throw ArityError("variable x" + std::to_string(w.variable_bound()) +
                       " outside arity " + std::to_string(arity));
    }
    if (c.is_zero()) continue;
    terms_.emplace(w, c);
  }
}

ZinElement ZinElement::word(std::vector<std::uint32_t> letters,
                            std::uint32_t arity, const FieldSpec& field) {
  Terms t;
  t.emplace(Word{std::move(letters)}, Scalar::one(field));
  return ZinElement(arity, field, std::move(t));
}

Scalar ZinElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

ZinElement ZinElement::widened(std::uint32_t arity) const {
  if (arity < arity_) throw ShapeMismatch("cannot narrow a Zinbiel element");
  ZinElement out(arity, field_);
  out.terms_ = terms_;
  return out;
}

bool operator==(const ZinElement& a, const ZinElement& b) {
  require_same_shape(a, b);
  return a.terms_ == b.terms_;
}

namespace zin {

std::map<Word, std::uint64_t> shuffle_words(std::span<const std::uint32_t> a,
                                            std::span<const std::uint32_t> b) {
  if (a.size() + b.size() > kMaxShuffleLength) {
    throw TooLarge("shuffle of words longer than " +
                   std::to_string(kMaxShuffleLength));
  }
  std::map<Word, std::uint64_t> out;
  std::vector<std::uint32_t> prefix;
  prefix.reserve(a.size() + b.size());
  interleave(a, b, prefix, out);
  return out;
}

std::map<Word, std::uint64_t> half_shuffle_words(const Word& v,
                                                 const Word& w) {
  std::span<const std::uint32_t> tail(v.letters);
  std::map<Word, std::uint64_t> out;
  for (auto& [word, count] : shuffle_words(tail.subspan(1), w.letters)) {
    Word full;
    full.letters.reserve(word.size() + 1);
    full.letters.push_back(v.letters.front());
    full.letters.insert(full.letters.end(), word.letters.begin(),
                        word.letters.end());
    out.emplace(std::move(full), count);
  }
  return out;
}

ZinElement add(const ZinElement& f, const ZinElement& g) {
  require_same_shape(f, g);
  ZinElement::Terms t = f.terms();
  for (const auto& [w, c] : g.terms()) accumulate(t, w, c);
  return ZinElement(f.arity(), f.field(), std::move(t));
}

ZinElement neg(const ZinElement& f) {
  ZinElement::Terms t;
  for (const auto& [w, c] : f.terms()) t.emplace(w, -c);
  return ZinElement(f.arity(), f.field(), std::move(t));
}

ZinElement sub(const ZinElement& f, const ZinElement& g) {
  return add(f, neg(g));
}

ZinElement scale(const ZinElement& f, const Scalar& s) {
  ZinElement::Terms t;
  for (const auto& [w, c] : f.terms()) t.emplace(w, c * s);
  return ZinElement(f.arity(), f.field(), std::move(t));
}

ZinElement half_shuffle(const ZinElement& a, const ZinElement& b) {
  require_same_shape(a, b);
  ZinElement::Terms t;
  for (const auto& [v, cv] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      Scalar c = cv * cw;
      for (auto& [word, count] : half_shuffle_words(v, w)) {
        accumulate(t, word,
                   c * Scalar::embed(mpz_class(static_cast<unsigned long>(count)),
                                     a.field()));
      }
    }
  }
  return ZinElement(a.arity(), a.field(), std::move(t));
}

ZinElement shuffle(const ZinElement& a, const ZinElement& b) {
  return add(half_shuffle(a, b), half_shuffle(b, a));
}

ZinElement right_nested(std::span<const ZinElement> elems) {
  if (elems.empty()) throw ShapeMismatch("right-nested product of nothing");
  ZinElement out = elems.back();
  for (std::size_t k = elems.size() - 1; k-- > 0;) {
    out = half_shuffle(elems[k], out);
  }
  return out;
}

ZinElement substitute(const ZinElement& f, std::span<const ZinElement> args,
                      std::uint32_t arity) {
  if (args.size() != f.arity()) {
    throw ShapeMismatch("substitution needs " + std::to_string(f.arity()) +
                        " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (a.arity() != arity || !(a.field() == f.field())) {
      throw ShapeMismatch("substitution argument of the wrong shape");
    }
  }
  // Words of f often share suffixes; memoize the nested product per suffix.
  std::map<std::vector<std::uint32_t>, ZinElement> suffix_cache;
  auto nested = [&](auto& self, std::span<const std::uint32_t> letters)
      -> const ZinElement& {
    std::vector<std::uint32_t> key(letters.begin(), letters.end());
    if (auto it = suffix_cache.find(key); it != suffix_cache.end()) {
      return it->second;
    }
    ZinElement value = letters.size() == 1
                           ? args[letters[0]]
                           : half_shuffle(args[letters[0]],
                                          self(self, letters.subspan(1)));
    return suffix_cache.emplace(std::move(key), std::move(value)).first->second;
  };

  ZinElement::Terms t;
  for (const auto& [w, c] : f.terms()) {
    const ZinElement& value = nested(nested, w.letters);
    for (const auto& [word, cw] : value.terms()) accumulate(t, word, c * cw);
  }
  return ZinElement(arity, f.field(), std::move(t));
}

std::pair<ZinElement, Scalar> partial(const ZinElement& f, std::uint32_t i) {
  if (i >= f.arity()) {
    throw ArityError("derivative in variable " + std::to_string(i) +
                     " of an arity-" + std::to_string(f.arity()) + " element");
  }
  ZinElement::Terms t;
  Scalar constant = Scalar::zero(f.field());
  for (const auto& [w, c] : f.terms()) {
    if (w.letters.front() != i) continue;
    if (w.size() == 1) {
      constant += c;
    } else {
      accumulate(t, Word{{w.letters.begin() + 1, w.letters.end()}}, c);
    }
  }
  return {ZinElement(f.arity(), f.field(), std::move(t)), constant};
}

ZinElement partial_combinator(const ZinElement& f) {
  const std::uint32_t n = f.arity();
  ZinElement::Terms t;
  for (const auto& [w, c] : f.terms()) {
    Word d = w;
    d.letters.front() += n;
    t.emplace(std::move(d), c);
  }
  return ZinElement(2 * n, f.field(), std::move(t));
}

ZinElement eta(std::uint32_t i, std::uint32_t arity, const FieldSpec& field) {
  if (i >= arity) {
    throw ArityError("unit x" + std::to_string(i + 1) + " outside arity " +
                     std::to_string(arity));
  }
  return ZinElement::word({i}, arity, field);
}

std::vector<Scalar> counit(const ZinElement& f) {
  std::vector<Scalar> out(f.arity(), Scalar::zero(f.field()));
  for (const auto& [w, c] : f.terms()) {
    if (w.size() == 1) out[w.letters.front()] = c;
  }
  return out;
}

ZinElement gamma_to_zin(const DPElement& f) {
  ZinElement::Terms t;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> letters;
    for (const auto& [var, k] : m.entries()) letters.insert(letters.end(), k, var);
    // `letters` starts sorted, so this visits each distinct arrangement once.
    do {
      accumulate(t, Word{letters}, c);
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  return ZinElement(f.arity(), f.field(), std::move(t));
}

ZinElement integral_candidate(const ZinElement& g) {
  if (g.arity() % 2 != 0) {
    throw ShapeMismatch("integral expects an even number of variables");
  }
  const std::uint32_t n = g.arity() / 2;
  ZinElement::Terms t;
  for (const auto& [w, c] : g.terms()) {
    Word folded = w;
    for (auto& l : folded.letters) l %= n;
    accumulate(t, std::move(folded), c);
  }
  return ZinElement(n, g.field(), std::move(t));
}

}  // namespace zin

}  // namespace cdm
