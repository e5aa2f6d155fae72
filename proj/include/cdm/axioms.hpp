#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cdm/cdc.hpp"
#include "cdm/generators.hpp"

namespace cdm {

/// One failing trial: its seed, the generated inputs and both sides.
struct Failure {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  nlohmann::ordered_json inputs;
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  std::string axiom;
  std::uint64_t trials = 0;
  /// Number of failing trials; `failures` keeps the first few in trial order.
  std::uint64_t failed_trials = 0;
  std::vector<Failure> failures;
  double millis = 0;

  bool passed() const { return failed_trials == 0; }
};

inline constexpr std::size_t kRecordedFailures = 10;

/// Field order is fixed so reports serialize byte-for-byte reproducibly.
/// Timings vary between runs, so `millis` is null unless requested.
nlohmann::ordered_json to_json(const AxiomReport& r, bool timing);

/// CD.1 .. CD.7.
const std::vector<std::string>& cdc_axioms();
/// dc.1 .. dc.6 in their monad (dual) form.
const std::vector<std::string>& dc_axioms();
/// Associativity and both unit laws of substitution, du.1 and du.2.
const std::vector<std::string>& monad_axioms();
/// All of the above, in that order.
const std::vector<std::string>& all_axioms();
bool is_axiom(std::string_view id);

enum class Execution { Serial, Parallel };

/// Result of a single trial.
struct TrialOutcome {
  bool passed = true;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string lhs;
  std::string rhs;
};

namespace detail {

template <class Theory>
class Trial {
 public:
  using Element = typename Theory::Element;
  using Map = Morphism<Element>;

  Trial(const DiffCategory<Theory>& cat, std::uint64_t seed,
        const GenBounds& bounds)
      : cat_(cat), rng_(seed), bounds_(bounds) {}

  const DiffCategory<Theory>& cat() const { return cat_; }
  const Theory& theory() const { return cat_.theory(); }
  TrialOutcome& outcome() { return out_; }

  std::uint32_t arity() {
    return static_cast<std::uint32_t>(rng_.uniform(1, bounds_.max_arity));
  }
  std::uint32_t index(std::uint32_t n) {
    return static_cast<std::uint32_t>(rng_.uniform(0, n - 1));
  }
  Scalar coefficient() {
    return random_coefficient(rng_, theory().field(), bounds_);
  }

  Map morphism(const char* label, std::uint32_t n, std::uint32_t m) {
    Map p{n, {}};
    for (std::uint32_t j = 0; j < m; ++j) {
      p.components.push_back(random_element(rng_, theory(), n, bounds_));
    }
    record(label, p);
    return p;
  }
  Element element(const char* label, std::uint32_t n) {
    Element e = random_element(rng_, theory(), n, bounds_);
    record(label, Map{n, {e}});
    return e;
  }
  std::vector<Element> elements(const char* label, std::uint32_t n,
                                std::uint32_t m) {
    return morphism(label, n, m).components;
  }
  // Nested substitution multiplies degrees, so these draws are kept short.
  Element short_element(const char* label, std::uint32_t n) {
    Element e = random_element(rng_, theory(), n, short_bounds());
    record(label, Map{n, {e}});
    return e;
  }
  std::vector<Element> short_elements(const char* label, std::uint32_t n,
                                      std::uint32_t m) {
    Map p{n, {}};
    for (std::uint32_t j = 0; j < m; ++j) {
      p.components.push_back(random_element(rng_, theory(), n, short_bounds()));
    }
    record(label, p);
    return p.components;
  }

  void record(const char* label, const Map& p) {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    VariableNames names = VariableNames::standard(p.source);
    for (const auto& c : p.components) {
      comps.push_back(theory().format(c, names));
    }
    out_.inputs[label] = {{"arity", p.source}, {"components", comps}};
  }

  bool same(const char* what, const Map& lhs, const Map& rhs) {
    if (cat_.equal(lhs, rhs)) return true;
    return fail(what, cat_.format(lhs), cat_.format(rhs));
  }
  bool same(const char* what, const Element& lhs, const Element& rhs,
            std::uint32_t n) {
    if (lhs == rhs) return true;
    VariableNames names = VariableNames::standard(n);
    return fail(what, theory().format(lhs, names),
                theory().format(rhs, names));
  }
  bool same(const char* what, const std::vector<Scalar>& lhs,
            const std::vector<Scalar>& rhs) {
    if (lhs == rhs) return true;
    return fail(what, vector_text(lhs), vector_text(rhs));
  }

 private:
  bool fail(const char* what, std::string lhs, std::string rhs) {
    out_.passed = false;
    out_.lhs = std::string(what) + ": " + std::move(lhs);
    out_.rhs = std::move(rhs);
    return false;
  }
  GenBounds short_bounds() const {
    GenBounds b = bounds_;
    b.max_degree = std::min<std::uint32_t>(b.max_degree, 2);
    return b;
  }
  static std::string vector_text(const std::vector<Scalar>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i].to_string();
    }
    return s + ")";
  }

  const DiffCategory<Theory>& cat_;
  SplitMix64 rng_;
  GenBounds bounds_;
  TrialOutcome out_;
};

// Substitutes linear combinations of variables: args[i] = sum_j
// rows[i][j] x_j over n variables, given as (index, coefficient) lists.
template <class Theory>
std::vector<typename Theory::Element> linear_args(
    const Theory& t, std::uint32_t n,
    const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<typename Theory::Element> args;
  args.reserve(rows.size());
  for (const auto& row : rows) {
    auto e = t.zero(n);
    for (auto j : row) e = t.add(e, t.eta(j, n));
    args.push_back(std::move(e));
  }
  return args;
}

template <class Theory>
bool check_cdc(Trial<Theory>& tr, std::string_view axiom) {
  const auto& cat = tr.cat();
  if (axiom == "CD.1") {
    auto n = tr.arity(), m = tr.arity();
    auto f = tr.morphism("f", n, m);
    auto g = tr.morphism("g", n, m);
    return tr.same("D[f+g]", cat.differentiate(cat.sum(f, g)),
                   cat.sum(cat.differentiate(f), cat.differentiate(g))) &&
           tr.same("D[0]", cat.differentiate(cat.zero_map(n, m)),
                   cat.zero_map(2 * n, m));
  }
  if (axiom == "CD.2") {
    auto n = tr.arity(), m = tr.arity();
    auto f = tr.morphism("f", n, m);
    auto df = cat.differentiate(f);
    auto one = cat.identity(n);
    auto lhs = cat.compose(df, cat.product(one, cat.codiag(n)));
    auto rhs = cat.sum(cat.compose(df, cat.product(one, cat.proj0(n, n))),
                       cat.compose(df, cat.product(one, cat.proj1(n, n))));
    return tr.same("D[f] o (1 x nabla)", lhs, rhs) &&
           tr.same("D[f] o iota_0", cat.compose(df, cat.inject0(n, n)),
                   cat.zero_map(n, m));
  }
  if (axiom == "CD.3") {
    auto a = tr.arity(), b = tr.arity();
    auto s = a + b;
    return tr.same("D[1]", cat.differentiate(cat.identity(a)),
                   cat.proj1(a, a)) &&
           tr.same("D[pi_0]", cat.differentiate(cat.proj0(a, b)),
                   cat.compose(cat.proj0(a, b), cat.proj1(s, s))) &&
           tr.same("D[pi_1]", cat.differentiate(cat.proj1(a, b)),
                   cat.compose(cat.proj1(a, b), cat.proj1(s, s)));
  }
  if (axiom == "CD.4") {
    auto n = tr.arity(), m1 = tr.arity(), m2 = tr.arity();
    auto f = tr.morphism("f", n, m1);
    auto g = tr.morphism("g", n, m2);
    return tr.same("D[<f,g>]", cat.differentiate(cat.pair(f, g)),
                   cat.pair(cat.differentiate(f), cat.differentiate(g)));
  }
  if (axiom == "CD.5") {
    auto n = tr.arity(), m = tr.arity(), k = tr.arity();
    auto f = tr.morphism("f", n, m);
    auto g = tr.morphism("g", m, k);
    auto rhs = cat.compose(
        cat.differentiate(g),
        cat.pair(cat.compose(f, cat.proj0(n, n)), cat.differentiate(f)));
    return tr.same("D[g o f]", cat.differentiate(cat.compose(g, f)), rhs);
  }
  if (axiom == "CD.6") {
    auto n = tr.arity(), m = tr.arity();
    auto f = tr.morphism("f", n, m);
    auto df = cat.differentiate(f);
    return tr.same("D[D[f]] o ell",
                   cat.compose(cat.differentiate(df), cat.ell(n)), df);
  }
  if (axiom == "CD.7") {
    auto n = tr.arity(), m = tr.arity();
    auto f = tr.morphism("f", n, m);
    auto ddf = cat.differentiate(cat.differentiate(f));
    return tr.same("D[D[f]] o c", cat.compose(ddf, cat.swap_c(n)), ddf);
  }
  throw std::invalid_argument("unknown axiom " + std::string(axiom));
}

template <class Theory>
bool check_dc(Trial<Theory>& tr, std::string_view axiom) {
  const Theory& t = tr.theory();
  auto range = [](std::uint32_t from, std::uint32_t count) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint32_t i = 0; i < count; ++i) rows.push_back({from + i});
    return rows;
  };
  auto zeros = [](std::uint32_t count) {
    return std::vector<std::vector<std::uint32_t>>(count);
  };
  auto concat = [](auto a, const auto& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  if (axiom == "dc.1") {
    // x -> x, y -> 0 kills the derivative.
    auto n = tr.arity();
    auto f = tr.element("f", n);
    auto args = linear_args(t, n, concat(range(0, n), zeros(n)));
    return tr.same("partial(f)(x, 0)",
                   t.substitute(t.partial_combinator(f), args, n), t.zero(n),
                   n);
  }
  if (axiom == "dc.2") {
    // Additivity in the direction: y -> y + z over 3n variables.
    auto n = tr.arity();
    auto f = tr.element("f", n);
    auto df = t.partial_combinator(f);
    std::vector<std::vector<std::uint32_t>> both = range(0, n);
    for (std::uint32_t i = 0; i < n; ++i) both.push_back({n + i, 2 * n + i});
    auto lhs = t.substitute(df, linear_args(t, 3 * n, both), 3 * n);
    auto rhs = t.add(
        t.substitute(df, linear_args(t, 3 * n, concat(range(0, n), range(n, n))),
                     3 * n),
        t.substitute(df,
                     linear_args(t, 3 * n, concat(range(0, n), range(2 * n, n))),
                     3 * n));
    return tr.same("partial(f)(x, y + z)", lhs, rhs, 3 * n);
  }
  if (axiom == "dc.3") {
    auto n = tr.arity();
    auto i = tr.index(n);
    auto f = tr.element("f", n);
    std::vector<Scalar> expected(n, Scalar::zero(t.field()));
    auto ef = t.counit(f);
    expected.insert(expected.end(), ef.begin(), ef.end());
    return tr.same("partial(eta(x_i))", t.partial_combinator(t.eta(i, n)),
                   t.eta(n + i, 2 * n), 2 * n) &&
           tr.same("epsilon(partial(f))", t.counit(t.partial_combinator(f)),
                   expected);
  }
  if (axiom == "dc.4") {
    auto n = tr.arity(), m = tr.arity();
    auto f = tr.element("f", m);
    auto g = tr.elements("g", n, m);
    auto lhs = t.partial_combinator(t.substitute(f, g, n));
    auto first = linear_args(t, 2 * n, range(0, n));
    std::vector<typename Theory::Element> args;
    for (const auto& gj : g) args.push_back(t.substitute(gj, first, 2 * n));
    for (const auto& gj : g) args.push_back(t.partial_combinator(gj));
    auto rhs = t.substitute(t.partial_combinator(f), args, 2 * n);
    return tr.same("partial(f(g))", lhs, rhs, 2 * n);
  }
  if (axiom == "dc.5") {
    // Blocks (a, b, c, d) of partial(partial(f)) with a -> x, b -> 0, c -> 0,
    // d -> y.
    auto n = tr.arity();
    auto f = tr.element("f", n);
    auto df = t.partial_combinator(f);
    auto ddf = t.partial_combinator(df);
    auto rows = concat(concat(range(0, n), zeros(2 * n)), range(n, n));
    return tr.same("partial(partial(f))(x, 0, 0, y)",
                   t.substitute(ddf, linear_args(t, 2 * n, rows), 2 * n), df,
                   2 * n);
  }
  if (axiom == "dc.6") {
    auto n = tr.arity();
    auto f = tr.element("f", n);
    auto ddf = t.partial_combinator(t.partial_combinator(f));
    auto rows = concat(concat(range(0, n), range(2 * n, n)),
                       concat(range(n, n), range(3 * n, n)));
    return tr.same("partial(partial(f))(a, c, b, d)",
                   t.substitute(ddf, linear_args(t, 4 * n, rows), 4 * n), ddf,
                   4 * n);
  }
  throw std::invalid_argument("unknown axiom " + std::string(axiom));
}

template <class Theory>
bool check_monad(Trial<Theory>& tr, std::string_view axiom) {
  const Theory& t = tr.theory();
  const auto& cat = tr.cat();
  if (axiom == "monad.assoc") {
    auto k = tr.arity(), n = tr.arity(), m = tr.arity();
    auto f = tr.short_element("f", m);
    auto g = tr.short_elements("g", n, m);
    auto h = tr.short_elements("h", k, n);
    std::vector<typename Theory::Element> gh;
    for (const auto& gj : g) gh.push_back(t.substitute(gj, h, k));
    return tr.same("f(g)(h)", t.substitute(t.substitute(f, g, n), h, k),
                   t.substitute(f, gh, k), k);
  }
  if (axiom == "monad.left_unit") {
    auto n = tr.arity();
    auto f = tr.element("f", n);
    return tr.same("f(x_1, ..., x_n)",
                   t.substitute(f, cat.identity(n).components, n), f, n);
  }
  if (axiom == "monad.right_unit") {
    auto n = tr.arity(), m = tr.arity();
    auto g = tr.elements("g", n, m);
    auto i = tr.index(m);
    return tr.same("x_i(g)", t.substitute(t.eta(i, m), g, n), g[i], n);
  }
  if (axiom == "du.1") {
    auto n = tr.arity();
    std::vector<Scalar> v;
    for (std::uint32_t i = 0; i < n; ++i) {
      v.push_back(tr.index(2) ? tr.coefficient() : Scalar::zero(t.field()));
    }
    return tr.same("epsilon(eta(v))", t.counit(cat.eta_of(v, n)), v);
  }
  if (axiom == "du.2") {
    // x -> 0, y -> x in partial(f) gives eta(epsilon(f)).
    auto n = tr.arity();
    auto f = tr.element("f", n);
    std::vector<std::vector<std::uint32_t>> rows(n);
    for (std::uint32_t i = 0; i < n; ++i) rows.push_back({i});
    return tr.same("partial(f)(0, x)",
                   t.substitute(t.partial_combinator(f),
                                linear_args(t, n, rows), n),
                   cat.eta_of(t.counit(f), n), n);
  }
  throw std::invalid_argument("unknown axiom " + std::string(axiom));
}

}  // namespace detail

/// Runs one trial of `axiom` from its own seed.
template <class Theory>
TrialOutcome run_trial(const DiffCategory<Theory>& cat, std::string_view axiom,
                       std::uint64_t seed, const GenBounds& bounds) {
  detail::Trial<Theory> tr(cat, seed, bounds);
  try {
    if (axiom.starts_with("CD.")) {
      detail::check_cdc(tr, axiom);
    } else if (axiom.starts_with("dc.")) {
      detail::check_dc(tr, axiom);
    } else {
      detail::check_monad(tr, axiom);
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    tr.outcome().passed = false;
    tr.outcome().lhs = std::string("exception: ") + e.what();
    tr.outcome().rhs = "";
  }
  return std::move(tr.outcome());
}

/// `trials` seeded trials of one axiom. The parallel path spreads trials over
/// OpenMP threads; both paths merge results by trial index, so the report
/// does not depend on scheduling.
template <class Theory>
AxiomReport run_axiom(const DiffCategory<Theory>& cat, const std::string& axiom,
                      std::uint64_t base_seed, std::uint64_t trials,
                      const GenBounds& bounds,
                      Execution exec = Execution::Parallel, int threads = 0) {
  if (!is_axiom(axiom)) throw std::invalid_argument("unknown axiom " + axiom);
  auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(trials);
  std::vector<std::uint64_t> seeds(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    seeds[i] = trial_seed(base_seed, axiom, i);
  }
  const auto count = static_cast<std::int64_t>(trials);
  if (exec == Execution::Parallel) {
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
      outcomes[i] = run_trial(cat, axiom, seeds[i], bounds);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      outcomes[i] = run_trial(cat, axiom, seeds[i], bounds);
    }
  }

  AxiomReport report;
  report.axiom = axiom;
  report.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (outcomes[i].passed) continue;
    ++report.failed_trials;
    if (report.failures.size() < kRecordedFailures) {
      report.failures.push_back(Failure{seeds[i], i,
                                        std::move(outcomes[i].inputs),
                                        std::move(outcomes[i].lhs),
                                        std::move(outcomes[i].rhs)});
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

template <class Theory>
std::vector<AxiomReport> run_suite(const DiffCategory<Theory>& cat,
                                   const std::vector<std::string>& axioms,
                                   std::uint64_t base_seed,
                                   std::uint64_t trials,
                                   const GenBounds& bounds,
                                   Execution exec = Execution::Parallel,
                                   int threads = 0) {
  std::vector<AxiomReport> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) {
    out.push_back(run_axiom(cat, a, base_seed, trials, bounds, exec, threads));
  }
  return out;
}

}  // namespace cdm
