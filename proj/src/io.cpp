#include "arapath/io.hpp"

#include <cctype>
#include <sstream>

namespace arapath {

namespace {

class Cursor {
public:
  Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  std::size_t pos() const { return pos_; }

  bool at_digit() const {
    return !done() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  /// Reads a decimal integer reduced mod p as it goes (no overflow).
  std::uint32_t take_integer_mod(const PrimeField& F) {
    std::uint64_t acc = 0;
    while (at_digit()) {
      acc = (acc * 10 + static_cast<std::uint64_t>(take() - '0')) %
            F.characteristic();
    }
    return static_cast<std::uint32_t>(acc);
  }

  /// Reads a plain decimal integer (for indices and exponents).
  std::int64_t take_integer() {
    std::int64_t acc = 0;
    while (at_digit()) {
      acc = acc * 10 + (take() - '0');
      if (acc > (1ll << 40)) throw ParseError("integer too large", pos_);
    }
    return acc;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial::VarExp parse_var(Cursor& cur, const Ring& ring) {
  std::size_t at = cur.pos();
  cur.take();  // 'x'
  if (!cur.at_digit()) throw ParseError("expected variable index after 'x'", cur.pos());
  std::int64_t index = cur.take_integer();
  if (index < 1 || index > ring.nvars()) {
    throw ParseError("variable index " + std::to_string(index) +
                         " outside 1.." + std::to_string(ring.nvars()),
                     at);
  }
  std::int64_t exp = 1;
  cur.skip_ws();
  if (!cur.done() && cur.peek() == '^') {
    cur.take();
    cur.skip_ws();
    if (!cur.at_digit()) throw ParseError("expected exponent after '^'", cur.pos());
    exp = cur.take_integer();
  }
  return {static_cast<std::int32_t>(index), static_cast<std::int32_t>(exp)};
}

Polynomial::RawTerm parse_term(Cursor& cur, const Ring& ring) {
  cur.skip_ws();
  std::size_t start = cur.pos();
  std::int64_t coeff = 1;
  bool saw_anything = false;
  if (cur.at_digit()) {
    coeff = cur.take_integer_mod(ring.field());
    saw_anything = true;
  }
  std::vector<Monomial::VarExp> factors;
  for (;;) {
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '*') {
      std::size_t star = cur.pos();
      cur.take();
      cur.skip_ws();
      if (cur.done() || cur.peek() != 'x') {
        throw ParseError("expected variable after '*'", star + 1);
      }
      factors.push_back(parse_var(cur, ring));
      saw_anything = true;
    } else if (!cur.done() && cur.peek() == 'x') {
      factors.push_back(parse_var(cur, ring));
      saw_anything = true;
    } else {
      break;
    }
  }
  if (!saw_anything) throw ParseError("expected a term", start);
  return {coeff, Monomial::from_pairs(std::move(factors))};
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Cursor cur(text);
  std::vector<Polynomial::RawTerm> terms;
  cur.skip_ws();
  if (cur.done()) throw ParseError("empty polynomial", 0);
  std::int64_t sign = 1;
  if (cur.peek() == '+' || cur.peek() == '-') {
    sign = cur.take() == '-' ? -1 : 1;
  }
  for (;;) {
    Polynomial::RawTerm t = parse_term(cur, ring);
    t.coeff *= sign;
    terms.push_back(std::move(t));
    cur.skip_ws();
    if (cur.done()) break;
    char op = cur.peek();
    if (op != '+' && op != '-') {
      throw ParseError(std::string("unexpected character '") + op + "'", cur.pos());
    }
    cur.take();
    sign = op == '-' ? -1 : 1;
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) {
  // tolerate one outer pair of parentheses
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  if (lo < hi && text[lo] == '(' && text[hi - 1] == ')') {
    ++lo;
    --hi;
  }
  std::string_view body = text.substr(lo, hi - lo);

  std::vector<Monomial> gens;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = body.substr(start, end - start);
    bool blank = true;
    for (char c : piece) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) return;
    Polynomial f = parse_polynomial(piece, ring);
    if (f.is_zero()) return;
    if (f.term_count() != 1) {
      throw ParseError("ideal generators must be monomials", lo + start);
    }
    gens.push_back(f.terms().front().mono);
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == ';' || body[i] == '\n') {
      flush(i);
      start = i + 1;
    }
  }
  flush(body.size());
  return MonomialIdeal(ring, std::move(gens));
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [var, exp] : m.factors()) {
    if (!first) out << '*';
    out << 'x' << var;
    if (exp != 1) out << '^' << exp;
    first = false;
  }
  return out.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const std::uint32_t p = f.ring().characteristic();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    // symmetric representative: small magnitude, explicit sign
    bool negative = t.coeff > p - t.coeff;
    std::uint32_t mag = negative ? p - t.coeff : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (t.mono.is_unit()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << to_string(t.mono);
    }
    first = false;
  }
  return out.str();
}

std::string to_string(const MonomialIdeal& m) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& g : m.generators()) {
    if (!first) out << "; ";
    out << to_string(g);
    first = false;
  }
  return out.str();
}

}  // namespace arapath
