#include "cdm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "cdm/axioms.hpp"
#include "cdm/cdc.hpp"
#include "cdm/errors.hpp"
#include "cdm/expr.hpp"
#include "cdm/generators.hpp"
#include "cdm/theory.hpp"

namespace cdm {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string theory = "power";
  std::string field = "Q";
  std::uint32_t cap = 6;
  bool json = false;
  std::optional<std::uint32_t> arity;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  std::uint64_t trials = 200;
  int threads = 0;
  std::string mutate;
  std::vector<std::string> axioms;
  std::optional<std::uint64_t> replay;
  bool timing = false;
  bool serial = false;
};

/// Components of a morphism given on the command line.
struct MorphismText {
  std::optional<std::uint32_t> arity;
  std::vector<std::string> components;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// Arguments are expressions separated by commas, or @file.json holding
// {"arity": n, "components": [...]}.
MorphismText read_morphism(const std::vector<std::string>& args) {
  MorphismText m;
  for (const auto& arg : args) {
    if (!arg.empty() && arg.front() == '@') {
      std::ifstream in(arg.substr(1));
      if (!in) throw UsageError("cannot read " + arg.substr(1));
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
        if (j.contains("arity")) m.arity = j.at("arity").get<std::uint32_t>();
        for (const auto& c : j.at("components")) {
          m.components.push_back(c.get<std::string>());
        }
      } catch (const nlohmann::json::exception& e) {
        throw UsageError("malformed morphism file " + arg.substr(1) + ": " +
                         e.what());
      }
      continue;
    }
    std::stringstream ss(arg);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      piece = trim(piece);
      if (piece.empty()) throw UsageError("empty component in '" + arg + "'");
      m.components.push_back(piece);
    }
  }
  if (m.components.empty()) throw UsageError("no expression given");
  return m;
}

// Largest k among variables x<k> (with any number of leading d's).
std::uint32_t infer_arity(const std::vector<std::string>& texts) {
  static const std::regex var("(^|[^A-Za-z0-9_])d*x([0-9]+)");
  std::uint32_t n = 0;
  for (const auto& t : texts) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), var);
         it != std::sregex_iterator(); ++it) {
      n = std::max<std::uint32_t>(n, std::stoul((*it)[2].str()));
    }
  }
  return n;
}

std::uint32_t arity_for(const Common& c, const MorphismText& m) {
  if (c.arity) return *c.arity;
  if (m.arity) return *m.arity;
  return infer_arity(m.components);
}

template <class Theory>
Morphism<typename Theory::Element> parse_morphism(const Theory& t,
                                                  const MorphismText& m,
                                                  std::uint32_t n) {
  Morphism<typename Theory::Element> p{n, {}};
  VariableNames names = VariableNames::standard(n);
  for (const auto& c : m.components) p.components.push_back(t.parse(c, names));
  return p;
}

template <class Theory>
void emit(std::ostream& out, const Common& c, const Theory& t,
          const std::vector<typename Theory::Element>& elems,
          const VariableNames& names) {
  if (c.json) {
    Json comps = Json::array();
    for (const auto& e : elems) comps.push_back(t.format(e, names));
    Json j;
    j["arity"] = names.size();
    j["components"] = std::move(comps);
    out << j.dump(2) << "\n";
    return;
  }
  std::string line;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (k) line += ", ";
    line += t.format(elems[k], names);
  }
  out << line << "\n";
}

template <class F>
int with_theory(const Common& c, F&& f) {
  FieldSpec field = FieldSpec::parse(c.field);
  if (c.theory == "power") {
    if (c.cap == 0) throw UsageError("--cap must be at least 1");
    return f(PowerSeriesTheory::series(field, c.cap));
  }
  if (c.theory == "poly") return f(PowerSeriesTheory::polynomial(field));
  if (c.theory == "divided") return f(DividedPowerTheory(field));
  if (c.theory == "zinbiel") return f(ZinbielTheory(field));
  if (c.theory == "trivial") return f(TrivialTheory(field));
  throw UsageError("unknown theory '" + c.theory + "'");
}

template <class Theory>
int run_check(std::ostream& out, const CheckOptions& o,
              const Theory& theory) {
  DiffCategory<Theory> cat(theory);
  GenBounds bounds = default_bounds(theory);
  std::vector<std::string> axioms = o.axioms.empty() ? all_axioms() : o.axioms;
  for (const auto& a : axioms) {
    if (!is_axiom(a)) throw UsageError("unknown axiom '" + a + "'");
  }

  if (o.replay) {
    if (axioms.size() != 1) {
      throw UsageError("--replay needs exactly one --axiom");
    }
    TrialOutcome r = run_trial(cat, axioms.front(), *o.replay, bounds);
    Json j;
    j["axiom"] = axioms.front();
    j["seed"] = *o.replay;
    j["passed"] = r.passed;
    j["inputs"] = r.inputs;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    out << j.dump(2) << "\n";
    return r.passed ? 0 : 1;
  }

  auto reports =
      run_suite(cat, axioms, o.seed, o.trials, bounds,
                o.serial ? Execution::Serial : Execution::Parallel, o.threads);
  bool passed = std::all_of(reports.begin(), reports.end(),
                            [](const AxiomReport& r) { return r.passed(); });
  Json j;
  j["version"] = 1;
  j["theory"] = theory.name();
  j["field"] = theory.field().name();
  j["cap"] = theory.cap() ? Json(*theory.cap()) : Json(nullptr);
  j["mutation"] = o.mutate.empty() ? Json(nullptr) : Json(o.mutate);
  j["seed"] = o.seed;
  j["trials"] = o.trials;
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(to_json(r, o.timing));
  j["reports"] = std::move(rs);
  j["passed"] = passed;
  out << j.dump(2) << "\n";
  return passed ? 0 : 1;
}

int check_command(std::ostream& out, const Common& c, const CheckOptions& o) {
  if (o.mutate.empty()) {
    return with_theory(c, [&](const auto& t) { return run_check(out, o, t); });
  }
  FieldSpec field = FieldSpec::parse(c.field);
  if (o.mutate == "zinbiel-last-letter") {
    if (c.theory != "zinbiel") throw UsageError(o.mutate + " needs --theory zinbiel");
    return run_check(out, o, mutations::zinbiel_last_letter(field));
  }
  if (o.mutate == "power-drop-first") {
    if (c.theory != "power") throw UsageError(o.mutate + " needs --theory power");
    return run_check(out, o, mutations::power_drop_first(field, c.cap));
  }
  if (o.mutate == "divided-extra-binomial") {
    if (c.theory != "divided") throw UsageError(o.mutate + " needs --theory divided");
    return run_check(out, o, mutations::divided_extra_binomial(field));
  }
  throw UsageError("unknown mutation '" + o.mutate + "'");
}

int derive_command(std::ostream& out, const Common& c,
                   const std::vector<std::string>& args) {
  MorphismText m = read_morphism(args);
  std::uint32_t n = arity_for(c, m);
  return with_theory(c, [&](const auto& t) {
    DiffCategory cat(t);
    auto d = cat.differentiate(parse_morphism(t, m, n));
    emit(out, c, t, d.components, VariableNames::standard(n).doubled());
    return 0;
  });
}

int compose_command(std::ostream& out, const Common& c,
                    const std::vector<std::string>& args) {
  auto slash = std::find(args.begin(), args.end(), "/");
  if (slash == args.end()) {
    throw UsageError("compose expects OUTER / INNER");
  }
  MorphismText outer = read_morphism({args.begin(), slash});
  MorphismText inner = read_morphism({slash + 1, args.end()});
  std::uint32_t n = arity_for(c, inner);
  auto m = static_cast<std::uint32_t>(inner.components.size());
  if (outer.arity && *outer.arity != m) {
    throw UsageError("outer morphism has arity " +
                     std::to_string(*outer.arity) + " but there are " +
                     std::to_string(m) + " inner components");
  }
  return with_theory(c, [&](const auto& t) {
    DiffCategory cat(t);
    auto q = parse_morphism(t, outer, m);
    auto p = parse_morphism(t, inner, n);
    emit(out, c, t, cat.compose(q, p).components, VariableNames::standard(n));
    return 0;
  });
}

int mul_command(std::ostream& out, const Common& c,
                const std::vector<std::string>& args, bool half) {
  MorphismText m = read_morphism(args);
  if (m.components.size() != 2) throw UsageError("mul expects two factors");
  std::uint32_t n = arity_for(c, m);
  return with_theory(c, [&](const auto& t) -> int {
    using T = std::decay_t<decltype(t)>;
    auto p = parse_morphism(t, m, n);
    const auto& a = p.components[0];
    const auto& b = p.components[1];
    VariableNames names = VariableNames::standard(n);
    if (half && !std::is_same_v<T, ZinbielTheory>) {
      throw UsageError("--half is only meaningful for zinbiel");
    }
    if constexpr (std::is_same_v<T, PowerSeriesTheory>) {
      emit(out, c, t, {ps::mul(a, b)}, names);
    } else if constexpr (std::is_same_v<T, DividedPowerTheory>) {
      emit(out, c, t, {dp::mul(a, b)}, names);
    } else if constexpr (std::is_same_v<T, ZinbielTheory>) {
      emit(out, c, t, {half ? zin::half_shuffle(a, b) : zin::shuffle(a, b)},
           names);
    } else {
      throw UsageError("the trivial theory has no product");
    }
    return 0;
  });
}

int dpow_command(std::ostream& out, const Common& c,
                 const std::vector<std::string>& args, std::uint32_t power) {
  if (c.theory != "divided") throw UsageError("dpow needs --theory divided");
  if (power == 0) throw UsageError("the divided power must be at least 1");
  MorphismText m = read_morphism(args);
  std::uint32_t n = arity_for(c, m);
  DividedPowerTheory t(FieldSpec::parse(c.field));
  auto p = parse_morphism(t, m, n);
  std::vector<DPElement> out_elems;
  for (const auto& e : p.components) out_elems.push_back(dp::power(e, power));
  emit(out, c, t, out_elems, VariableNames::standard(n));
  return 0;
}

int convert_command(std::ostream& out, const Common& c,
                    const std::vector<std::string>& args,
                    const std::string& to) {
  if (c.theory != "divided") throw UsageError("convert reads --theory divided");
  MorphismText m = read_morphism(args);
  std::uint32_t n = arity_for(c, m);
  FieldSpec field = FieldSpec::parse(c.field);
  DividedPowerTheory t(field);
  auto p = parse_morphism(t, m, n);
  VariableNames names = VariableNames::standard(n);
  if (to == "zinbiel") {
    std::vector<ZinElement> z;
    for (const auto& e : p.components) z.push_back(zin::gamma_to_zin(e));
    emit(out, c, ZinbielTheory(field), z, names);
    return 0;
  }
  if (to == "power") {
    if (!field.is_rational()) {
      throw UsageError("conversion to power series needs --field Q");
    }
    std::vector<SeriesElement> s;
    for (const auto& e : p.components) s.push_back(dp::to_power_series(e));
    emit(out, c, PowerSeriesTheory::polynomial(field), s, names);
    return 0;
  }
  throw UsageError("unknown conversion target '" + to + "'");
}

int integrate_command(std::ostream& out, const Common& c,
                      const std::vector<std::string>& args) {
  if (c.theory != "zinbiel") throw UsageError("integrate needs --theory zinbiel");
  MorphismText m = read_morphism(args);
  std::uint32_t n = c.arity ? *c.arity : (m.arity ? *m.arity / 2 : infer_arity(m.components));
  ZinbielTheory t(FieldSpec::parse(c.field));
  VariableNames doubled = VariableNames::standard(n).doubled();
  std::vector<ZinElement> result;
  for (const auto& text : m.components) {
    result.push_back(zin::integral_candidate(t.parse(text, doubled)));
  }
  emit(out, c, t, result, VariableNames::standard(n));
  return 0;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--theory", c.theory,
                  "poly, power, divided, zinbiel or trivial")
      ->check(CLI::IsMember({"poly", "power", "divided", "zinbiel", "trivial"}));
  cmd->add_option("--field", c.field, "Q or F<p>");
  cmd->add_option("--cap", c.cap, "degree cap for power series");
  cmd->add_option("--arity", c.arity, "number of source variables");
  cmd->add_flag("--json", c.json, "print JSON");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cartesian differential monads: exact computations and axiom checks"};
  app.require_subcommand(1);

  Common common;
  CheckOptions check;
  std::vector<std::string> exprs;
  bool half = false;
  std::uint32_t power = 2;
  std::string target;

  auto* derive = app.add_subcommand("derive", "apply D to a morphism");
  auto* compose = app.add_subcommand("compose", "substitute: OUTER / INNER");
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  auto* dpow = app.add_subcommand("dpow", "divided power f^[n]");
  auto* convert = app.add_subcommand("convert", "map divided powers elsewhere");
  auto* checkc = app.add_subcommand("check", "run the axiom suites");
  auto* integrate = app.add_subcommand("integrate", "experimental Zinbiel integral");

  for (auto* cmd : {derive, compose, mul, dpow, convert, checkc, integrate}) {
    add_common(cmd, common);
  }
  for (auto* cmd : {derive, compose, mul, dpow, convert, integrate}) {
    cmd->add_option("expr", exprs, "expressions")->required();
  }
  mul->add_flag("--half", half, "half-shuffle instead of shuffle (zinbiel)");
  dpow->add_option("-n,--power", power, "which divided power")->required();
  convert->add_option("--to", target, "zinbiel or power")->required();
  checkc->add_option("--seed", check.seed, "base seed");
  checkc->add_option("--trials", check.trials, "trials per axiom");
  checkc->add_option("--threads", check.threads, "OpenMP threads (0 = default)");
  checkc->add_option("--mutate", check.mutate,
                     "zinbiel-last-letter, power-drop-first or "
                     "divided-extra-binomial");
  checkc->add_option("--axiom", check.axioms, "only these axioms");
  checkc->add_option("--replay", check.replay, "rerun one trial from its seed");
  checkc->add_flag("--timing", check.timing, "include timings in the report");
  checkc->add_flag("--serial", check.serial, "run trials without OpenMP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*derive) return derive_command(out, common, exprs);
    if (*compose) return compose_command(out, common, exprs);
    if (*mul) return mul_command(out, common, exprs, half);
    if (*dpow) return dpow_command(out, common, exprs, power);
    if (*convert) return convert_command(out, common, exprs, target);
    if (*integrate) return integrate_command(out, common, exprs);
    if (*checkc) return check_command(out, common, check);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cdm
