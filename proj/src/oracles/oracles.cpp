#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "cdm/errors.hpp"

namespace cdm::oracle {

namespace {

constexpr std::size_t kMaxLetters = 9;

using Dense = std::map<std::vector<std::uint32_t>, Scalar>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.try_emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  return out;
}

}  // namespace

std::map<Word, std::uint64_t> shuffle_enum(const Word& v, const Word& w) {
  std::vector<std::uint32_t> rest(v.letters.begin() + 1, v.letters.end());
  const std::size_t split = rest.size();
  rest.insert(rest.end(), w.letters.begin(), w.letters.end());
  if (rest.size() > kMaxLetters) throw TooLarge("shuffle_enum input too long");

  // perm[k] is the position (in rest) of the k-th output letter.
  std::vector<std::size_t> perm(rest.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Word, std::uint64_t> out;
  do {
    bool keeps_order = true;
    std::size_t last_a = 0, last_b = split;
    bool seen_a = false, seen_b = false;
    for (std::size_t p : perm) {
      if (p < split) {
        if (seen_a && p < last_a) keeps_order = false;
        last_a = p;
        seen_a = true;
      } else {
        if (seen_b && p < last_b) keeps_order = false;
        last_b = p;
        seen_b = true;
      }
    }
    if (!keeps_order) continue;
    Word word{{v.letters.front()}};
    for (std::size_t p : perm) word.letters.push_back(rest[p]);
    ++out[word];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ZinElement half_shuffle_enum(const ZinElement& a, const ZinElement& b) {
  ZinElement::Terms t;
  for (const auto& [v, cv] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      for (const auto& [word, count] : shuffle_enum(v, w)) {
        Scalar c = cv * cw *
                   Scalar::embed(mpz_class(static_cast<unsigned long>(count)),
                                 a.field());
        auto [it, fresh] = t.try_emplace(word, c);
        if (!fresh) it->second += c;
      }
    }
  }
  return ZinElement(a.arity(), a.field(), std::move(t));
}

ZinElement symmetrized_expand(const DPElement& f) {
  ZinElement::Terms t;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> letters;
    for (const auto& [var, k] : m.entries()) {
      for (std::uint32_t j = 0; j < k; ++j) letters.push_back(var);
    }
    if (letters.size() > kMaxLetters) {
      throw TooLarge("symmetrized_expand input too long");
    }
    std::vector<std::size_t> perm(letters.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<std::uint32_t>> words;
    do {
      std::vector<std::uint32_t> word;
      for (std::size_t p : perm) word.push_back(letters[p]);
      words.insert(word);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& word : words) {
      auto [it, fresh] = t.try_emplace(Word{word}, c);
      if (!fresh) it->second += c;
    }
  }
  return ZinElement(f.arity(), f.field(), std::move(t));
}

SeriesElement naive_substitute(const SeriesElement& f,
                               std::span<const SeriesElement> args,
                               const SeriesShape& target) {
  if (args.size() != f.arity()) throw ShapeMismatch("argument count");
  const std::uint32_t n = target.arity;
  std::vector<Dense> dense_args;
  for (const auto& a : args) {
    Dense d;
    for (const auto& [m, c] : a.terms()) {
      std::vector<std::uint32_t> e(n, 0);
      for (const auto& [var, k] : m.entries()) e[var] = k;
      d.emplace(e, c);
    }
    dense_args.push_back(std::move(d));
  }
  Dense total;
  for (const auto& [m, c] : f.terms()) {
    Dense term;
    term.emplace(std::vector<std::uint32_t>(n, 0), c);
    for (std::uint32_t var = 0; var < f.arity(); ++var) {
      for (std::uint32_t k = 0; k < m.exponent(var); ++k) {
        term = dense_mul(term, dense_args[var]);
      }
    }
    for (const auto& [e, x] : term) {
      auto [it, fresh] = total.try_emplace(e, x);
      if (!fresh) it->second += x;
    }
  }
  SeriesElement::Terms t;
  for (const auto& [e, c] : total) {
    std::vector<MultiIndex::Entry> entries;
    for (std::uint32_t i = 0; i < n; ++i) entries.emplace_back(i, e[i]);
    MultiIndex m(std::move(entries));
    if (target.cap && m.degree() > *target.cap) continue;
    if (!c.is_zero()) t.emplace(m, c);
  }
  return SeriesElement(target, std::move(t));
}

}  // namespace cdm::oracle
