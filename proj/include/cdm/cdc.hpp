#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdm/errors.hpp"
#include "cdm/expr.hpp"

namespace cdm {

/// A morphism n -> m of a theory's Lawvere category: m elements over n
/// variables.
template <class Element>
struct Morphism {
  std::uint32_t source = 0;
  std::vector<Element> components;

  std::uint32_t target() const {
    return static_cast<std::uint32_t>(components.size());
  }
};

/// The Cartesian differential category of a theory: composition by
/// substitution, products as sums of arities, D by the partial combinator.
template <class Theory>
class DiffCategory {
 public:
  using Element = typename Theory::Element;
  using Map = Morphism<Element>;

  explicit DiffCategory(const Theory& theory) : theory_(theory) {}

  const Theory& theory() const { return theory_; }

  /// Throws ShapeMismatch unless P's components all have arity P.source.
  void validate(const Map& p) const {
    for (const auto& c : p.components) {
      if (theory_.arity(c) != p.source) {
        throw ShapeMismatch("component over " +
                            std::to_string(theory_.arity(c)) +
                            " variables in a morphism from " +
                            std::to_string(p.source));
      }
    }
  }

  /// q o p.
  Map compose(const Map& q, const Map& p) const {
    if (q.source != p.target()) {
      throw ShapeMismatch("cannot compose " + std::to_string(q.source) +
                          " -> " + std::to_string(q.target()) + " after " +
                          std::to_string(p.source) + " -> " +
                          std::to_string(p.target()));
    }
    Map out{p.source, {}};
    out.components.reserve(q.components.size());
    for (const auto& c : q.components) {
      out.components.push_back(
          theory_.substitute(c, p.components, p.source));
    }
    return out;
  }

  Map identity(std::uint32_t n) const { return variables(n, 0, n); }
  /// n + m -> n.
  Map proj0(std::uint32_t n, std::uint32_t m) const {
    return variables(n + m, 0, n);
  }
  /// n + m -> m.
  Map proj1(std::uint32_t n, std::uint32_t m) const {
    return variables(n + m, n, m);
  }
  Map zero_map(std::uint32_t n, std::uint32_t m) const {
    return Map{n, std::vector<Element>(m, theory_.zero(n))};
  }
  /// <p, q>.
  Map pair(const Map& p, const Map& q) const {
    if (p.source != q.source) {
      throw ShapeMismatch("pairing morphisms with different sources");
    }
    Map out = p;
    out.components.insert(out.components.end(), q.components.begin(),
                          q.components.end());
    return out;
  }
  /// p x q = <p o pi_0, q o pi_1>.
  Map product(const Map& p, const Map& q) const {
    return pair(compose(p, proj0(p.source, q.source)),
                compose(q, proj1(p.source, q.source)));
  }
  /// n -> n + m, <1, 0>.
  Map inject0(std::uint32_t n, std::uint32_t m) const {
    return pair(identity(n), zero_map(n, m));
  }
  /// m -> n + m, <0, 1>.
  Map inject1(std::uint32_t n, std::uint32_t m) const {
    return pair(zero_map(m, n), identity(m));
  }
  Map sum(const Map& p, const Map& q) const {
    if (p.source != q.source || p.target() != q.target()) {
      throw ShapeMismatch("adding morphisms of different types");
    }
    Map out{p.source, {}};
    for (std::size_t j = 0; j < p.components.size(); ++j) {
      out.components.push_back(theory_.add(p.components[j], q.components[j]));
    }
    return out;
  }
  Map scale(const Map& p, const Scalar& s) const {
    Map out{p.source, {}};
    for (const auto& c : p.components) out.components.push_back(theory_.scale(c, s));
    return out;
  }
  /// n -> 2n, <1, 1>.
  Map diag(std::uint32_t n) const { return pair(identity(n), identity(n)); }
  /// 2n -> n, pi_0 + pi_1.
  Map codiag(std::uint32_t n) const { return sum(proj0(n, n), proj1(n, n)); }
  /// 2n -> 4n, iota_0 x iota_1.
  Map ell(std::uint32_t n) const {
    return product(inject0(n, n), inject1(n, n));
  }
  /// 4n -> 4n, <pi_0 x pi_0, pi_1 x pi_1>: (a, b, c, d) -> (a, c, b, d).
  Map swap_c(std::uint32_t n) const {
    return pair(product(proj0(n, n), proj0(n, n)),
                product(proj1(n, n), proj1(n, n)));
  }

  /// D[p]: 2n -> m.
  Map differentiate(const Map& p) const {
    Map out{2 * p.source, {}};
    out.components.reserve(p.components.size());
    for (const auto& c : p.components) {
      out.components.push_back(theory_.partial_combinator(c));
    }
    return out;
  }
  /// D[p] o iota_1.
  Map linearize(const Map& p) const {
    return compose(differentiate(p), inject1(p.source, p.source));
  }
  bool is_dlinear(const Map& p) const { return equal(linearize(p), p); }
  /// Whether every component is fixed by eta o epsilon, i.e. is a linear
  /// combination of the variables.
  bool dlinear_by_counit(const Map& p) const {
    for (const auto& c : p.components) {
      if (!(eta_of(theory_.counit(c), p.source) == c)) return false;
    }
    return true;
  }
  /// sum_i v_i x_i.
  Element eta_of(const std::vector<Scalar>& v, std::uint32_t n) const {
    Element out = theory_.zero(n);
    for (std::uint32_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        out = theory_.add(out, theory_.scale(theory_.eta(i, n), v[i]));
      }
    }
    return out;
  }

  bool equal(const Map& p, const Map& q) const {
    if (p.source != q.source || p.target() != q.target()) return false;
    for (std::size_t j = 0; j < p.components.size(); ++j) {
      if (!(p.components[j] == q.components[j])) return false;
    }
    return true;
  }

  /// "[c1, c2]" with variables x1..xn.
  std::string format(const Map& p) const {
    return format(p, VariableNames::standard(p.source));
  }
  std::string format(const Map& p, const VariableNames& names) const {
    std::string out = "[";
    for (std::size_t j = 0; j < p.components.size(); ++j) {
      if (j) out += ", ";
      out += theory_.format(p.components[j], names);
    }
    return out + "]";
  }

 private:
  // n-variable morphism <x_{first+1}, ..., x_{first+count}>.
  Map variables(std::uint32_t n, std::uint32_t first,
                std::uint32_t count) const {
    Map out{n, {}};
    out.components.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      out.components.push_back(theory_.eta(first + i, n));
    }
    return out;
  }

  Theory theory_;
};

}  // namespace cdm
