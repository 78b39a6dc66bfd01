#include <cctype>
#include <sstream>

#include "semiglue/checked.hpp"
#include "semiglue/error.hpp"
#include "semiglue/polynomial.hpp"

namespace semiglue {

VariableNames indexed_names(std::string_view stem, std::size_t count) {
  VariableNames names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(stem) + std::to_string(i));
  return names;
}

VariableNames block_names(std::size_t l, std::size_t k) {
  VariableNames names = indexed_names("x", l);
  for (auto& n : indexed_names("y", k)) names.push_back(std::move(n));
  return names;
}

std::string to_string(const Monomial& m, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f, const VariableNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Coefficient magnitude = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += to_string(t.monomial, names);
    } else {
      out += magnitude.get_str() + '*' + to_string(t.monomial, names);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names, std::size_t nvars)
      : text_(text), names_(names), nvars_(nvars) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = take();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    if (out.empty()) fail("expected a number");
    return out;
  }

  Term term(bool negative) {
    Term t{Monomial(nvars_), negative ? -1 : 1};
    factor(t);
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        num += '/' + digits();
      }
      Coefficient c(num);
      if (c == 0 && num.find('/') != std::string::npos) fail("zero denominator");
      c.canonicalize();
      t.coefficient *= c;
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') fail("expected a factor");
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += take();
    std::size_t slot = names_.size();
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) slot = i;
    }
    if (slot >= nvars_) fail("unknown variable '" + name + "'");
    Exponent power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::string e = digits();
      if (e.size() > 9) fail("exponent too large");
      power = static_cast<Exponent>(std::stol(e));
    }
    t.monomial.set(slot, checked_add(t.monomial[slot], power));
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& names, OrderPtr order) {
  const std::size_t nvars = order->nvars();
  if (names.size() < nvars) throw Error(Errc::ArityMismatch, "fewer variable names than slots");
  Parser parser(text, names, nvars);
  return Polynomial(std::move(order), parser.parse());
}

}  // namespace semiglue
