#include "cdm/expr.hpp"

#include <cctype>
#include <regex>
#include <set>
#include <utility>

#include "cdm/errors.hpp"

namespace cdm {

VariableNames::VariableNames(std::vector<std::string> names)
    : names_(std::move(names)) {}

VariableNames VariableNames::standard(std::uint32_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableNames(std::move(names));
}

VariableNames VariableNames::doubled() const {
  std::set<std::string> taken(names_.begin(), names_.end());
  std::vector<std::string> out = names_;
  for (const auto& name : names_) {
    std::string d = "d" + name;
    while (taken.count(d)) d = "d" + d;
    taken.insert(d);
    out.push_back(d);
  }
  return VariableNames(std::move(out));
}

std::optional<std::uint32_t> VariableNames::index_of(
    std::string_view name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  void expect(char c) {
    skip();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  mpz_class number() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t small_number() {
    std::size_t start = (skip(), pos_);
    mpz_class n = number();
    if (n > 1000000) throw ParseError("exponent too large", start);
    return static_cast<std::uint32_t>(n.get_ui());
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a variable", start);
    }
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint32_t read_variable(Cursor& cur, const VariableNames& names) {
  cur.skip();
  std::size_t start = cur.pos();
  std::string name = cur.name();
  if (auto i = names.index_of(name)) return *i;
  static const std::regex indexed("d*x[0-9]+");
  if (std::regex_match(name, indexed)) {
    throw ArityError("variable '" + name + "' outside arity " +
                     std::to_string(names.size()) + " at position " +
                     std::to_string(start));
  }
  throw ParseError("unknown variable '" + name + "'", start);
}

Scalar read_coefficient(Cursor& cur, const FieldSpec& field) {
  mpz_class num = cur.number();
  cur.skip();
  if (cur.peek() != '/') return Scalar::embed(num, field);
  cur.advance();
  std::size_t at = (cur.skip(), cur.pos());
  mpz_class den = cur.number();
  try {
    return Scalar::fraction(num, den, field);
  } catch (const DivisionByZero&) {
    throw ParseError("denominator vanishes in " + field.name(), at);
  }
}

// Calls on_term(cursor, coefficient) for every term with a body and
// on_constant(position, coefficient) for bare numbers.
template <class OnTerm, class OnConstant>
void parse_terms(std::string_view text, const FieldSpec& field,
                 OnTerm on_term, OnConstant on_constant) {
  Cursor cur(text);
  cur.skip();
  if (cur.at_end()) throw ParseError("empty expression", 0);
  bool first = true;
  while (true) {
    cur.skip();
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      negative = cur.peek() == '-';
      cur.advance();
      cur.skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", cur.pos());
    }
    std::size_t start = cur.pos();
    Scalar coeff = Scalar::one(field);
    bool constant = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = read_coefficient(cur, field);
      cur.skip();
      if (cur.peek() == '*') {
        cur.advance();
      } else {
        constant = true;
      }
    }
    if (negative) coeff = -coeff;
    if (constant) {
      on_constant(start, coeff);
    } else {
      on_term(cur, coeff);
    }
    first = false;
    cur.skip();
    if (cur.at_end()) break;
  }
}

void reject_constant(std::size_t pos, const Scalar& c) {
  if (!c.is_zero()) throw ParseError("constant term in a reduced theory", pos);
}

std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    std::string text;
    if (body.empty()) {
      text = magnitude.to_string();
    } else if (magnitude.is_one()) {
      text = body;
    } else {
      text = magnitude.to_string() + "*" + body;
    }
    if (first) {
      out = negative ? "-" + text : text;
    } else {
      out += negative ? " - " : " + ";
      out += text;
    }
    first = false;
  }
  return out;
}

}  // namespace

SeriesElement parse_series(std::string_view text, const SeriesShape& shape,
                           const VariableNames& names) {
  if (names.size() != shape.arity) {
    throw ShapeMismatch("variable names do not match the arity");
  }
  SeriesElement::Terms terms;
  parse_terms(
      text, shape.field,
      [&](Cursor& cur, const Scalar& c) {
        std::vector<MultiIndex::Entry> entries;
        while (true) {
          std::uint32_t var = read_variable(cur, names);
          std::uint32_t exp = 1;
          cur.skip();
          if (cur.peek() == '^') {
            cur.advance();
            std::size_t at = (cur.skip(), cur.pos());
            exp = cur.small_number();
            if (exp == 0) throw ParseError("zero exponent", at);
          }
          entries.emplace_back(var, exp);
          cur.skip();
          if (cur.peek() != '*') break;
          cur.advance();
        }
        accumulate(terms, MultiIndex(std::move(entries)), c);
      },
      [&](std::size_t pos, const Scalar& c) {
        if (shape.reduced) reject_constant(pos, c);
        accumulate(terms, MultiIndex(), c);
      });
  return SeriesElement(shape, std::move(terms));
}

DPElement parse_divided(std::string_view text, std::uint32_t arity,
                        const FieldSpec& field, const VariableNames& names) {
  if (names.size() != arity) {
    throw ShapeMismatch("variable names do not match the arity");
  }
  DPElement out(arity, field);
  parse_terms(
      text, field,
      [&](Cursor& cur, const Scalar& c) {
        std::optional<DPElement> term;
        while (true) {
          std::uint32_t var = read_variable(cur, names);
          std::uint32_t k = 1;
          cur.skip();
          if (cur.peek() == '^') {
            cur.advance();
            cur.expect('[');
            std::size_t at = (cur.skip(), cur.pos());
            k = cur.small_number();
            if (k == 0) throw ParseError("zeroth divided power", at);
            cur.expect(']');
          }
          DPElement factor = DPElement::variable(var, arity, field, k);
          term = term ? dp::mul(*term, factor) : factor;
          cur.skip();
          if (cur.peek() != '*') break;
          cur.advance();
        }
        out = dp::add(out, dp::scale(*term, c));
      },
      reject_constant);
  return out;
}

ZinElement parse_zinbiel(std::string_view text, std::uint32_t arity,
                         const FieldSpec& field, const VariableNames& names) {
  if (names.size() != arity) {
    throw ShapeMismatch("variable names do not match the arity");
  }
  ZinElement::Terms terms;
  parse_terms(
      text, field,
      [&](Cursor& cur, const Scalar& c) {
        Word w;
        while (true) {
          w.letters.push_back(read_variable(cur, names));
          cur.skip();
          if (cur.peek() != '.') break;
          cur.advance();
        }
        accumulate(terms, std::move(w), c);
      },
      reject_constant);
  return ZinElement(arity, field, std::move(terms));
}

LinearForm parse_linear(std::string_view text, std::uint32_t arity,
                        const FieldSpec& field, const VariableNames& names) {
  if (names.size() != arity) {
    throw ShapeMismatch("variable names do not match the arity");
  }
  LinearForm out(arity, field);
  parse_terms(
      text, field,
      [&](Cursor& cur, const Scalar& c) {
        std::uint32_t var = read_variable(cur, names);
        out = lin::add(out, lin::scale(LinearForm::variable(var, arity, field), c));
      },
      reject_constant);
  return out;
}

std::string format(const SeriesElement& f, const VariableNames& names) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [m, c] : f.terms()) {
    std::string body;
    for (const auto& [var, exp] : m.entries()) {
      if (!body.empty()) body += "*";
      body += names.name(var);
      if (exp > 1) body += "^" + std::to_string(exp);
    }
    terms.emplace_back(c, std::move(body));
  }
  return format_sum(terms);
}

std::string format(const DPElement& f, const VariableNames& names) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [m, c] : f.terms()) {
    std::string body;
    for (const auto& [var, k] : m.entries()) {
      if (!body.empty()) body += "*";
      body += names.name(var) + "^[" + std::to_string(k) + "]";
    }
    terms.emplace_back(c, std::move(body));
  }
  return format_sum(terms);
}

std::string format(const ZinElement& f, const VariableNames& names) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [w, c] : f.terms()) {
    std::string body;
    for (auto l : w.letters) {
      if (!body.empty()) body += ".";
      body += names.name(l);
    }
    terms.emplace_back(c, std::move(body));
  }
  return format_sum(terms);
}

std::string format(const LinearForm& f, const VariableNames& names) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    if (!f.coeffs()[i].is_zero()) terms.emplace_back(f.coeffs()[i], names.name(i));
  }
  return format_sum(terms);
}

}  // namespace cdm
