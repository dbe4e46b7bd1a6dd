#ifndef NCREG_PRESENTATION_HPP
#define NCREG_PRESENTATION_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncreg/field.hpp"
#include "ncreg/poly.hpp"

namespace ncreg {

struct Generator {
  std::string name;
  int degree = 1;  // >= 1

  friend bool operator==(const Generator&, const Generator&) = default;
};

enum class MonomialOrder { deglex };

/// A connected graded algebra given by weighted generators and homogeneous
/// relations of degree >= 2 (zero constant and linear parts come for free).
template <class K>
struct Presentation {
  K field;
  std::vector<Generator> generators;
  std::vector<Poly<K>> relations;
  Grading grading;
  MonomialOrder order = MonomialOrder::deglex;

  int max_relation_degree() const {
    int m = 0;
    for (const auto& r : relations) {
      int d = poly_degree(grading, r);
      m = d > m ? d : m;
    }
    return m;
  }

  bool generated_in_degree_one() const {
    for (const auto& g : generators)
      if (g.degree != 1) return false;
    return true;
  }

  /// The opposite algebra: same generators, every relation word reversed.
  Presentation opposite() const {
    Presentation op = *this;
    for (auto& r : op.relations) {
      std::vector<typename Poly<K>::Term> raw;
      raw.reserve(r.terms.size());
      for (const auto& t : r.terms)
        raw.emplace_back(t.first.reversed(), t.second);
      r = poly_from_terms<K>(field, std::move(raw));
    }
    return op;
  }
};

// ---------------------------------------------------------------------------
// Field-independent parse tree, so the caller can pick the field type after
// reading the `field` statement.

struct RawTerm {
  std::int64_t num = 1;
  std::int64_t den = 1;
  std::vector<int> letters;  // generator indices
};

struct RawPresentation {
  FieldSpec field;
  std::vector<Generator> generators;
  std::vector<std::vector<RawTerm>> relations;
};

namespace detail {

class PresentationLexer {
 public:
  explicit PresentationLexer(const std::string& text) : text_(text) {}

  struct Token {
    enum Kind { ident, integer, punct, end } kind = end;
    std::string text;
    std::int64_t value = 0;
    int line = 1, col = 1;
  };

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        t.text.push_back(take());
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::integer;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text.push_back(take());
      try {
        t.value = std::stoll(t.text);
      } catch (const std::exception&) {
        throw ParseError("integer out of range", t.line, t.col);
      }
      return t;
    }
    if (std::string(";:+-*^/,").find(c) != std::string::npos) {
      t.kind = Token::punct;
      t.text.push_back(take());
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

 private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

/// Pull-parser over the token stream shared by algebra and module files.
class PresentationParser {
 public:
  explicit PresentationParser(const std::string& text) : lex_(text) {
    advance();
  }

  const PresentationLexer::Token& peek() const { return tok_; }
  bool at_end() const { return tok_.kind == PresentationLexer::Token::end; }

  bool accept_punct(char c) {
    if (tok_.kind == PresentationLexer::Token::punct && tok_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect_punct(char c) {
    if (!accept_punct(c))
      throw ParseError(std::string("expected '") + c + "'", tok_.line,
                       tok_.col);
  }
  bool accept_ident(const std::string& s) {
    if (tok_.kind == PresentationLexer::Token::ident && tok_.text == s) {
      advance();
      return true;
    }
    return false;
  }
  std::string expect_ident() {
    if (tok_.kind != PresentationLexer::Token::ident)
      throw ParseError("expected identifier", tok_.line, tok_.col);
    std::string s = tok_.text;
    advance();
    return s;
  }
  std::int64_t expect_integer() {
    if (tok_.kind != PresentationLexer::Token::integer)
      throw ParseError("expected integer", tok_.line, tok_.col);
    std::int64_t v = tok_.value;
    advance();
    return v;
  }

  /// poly := ['-'] term (('+'|'-') term)*
  /// term := coef ['*' factors] | factors; factors := name['^'e] ('*' ...)*
  std::vector<RawTerm> parse_poly(const std::map<std::string, int>& gen_index) {
    std::vector<RawTerm> terms;
    bool negate = accept_punct('-');
    for (;;) {
      RawTerm t = parse_term(gen_index);
      if (negate) t.num = -t.num;
      terms.push_back(std::move(t));
      if (accept_punct('+'))
        negate = false;
      else if (accept_punct('-'))
        negate = true;
      else
        break;
    }
    return terms;
  }

  void advance() { tok_ = lex_.next(); }

 private:
  RawTerm parse_term(const std::map<std::string, int>& gen_index) {
    RawTerm t;
    bool have_factor = false;
    if (tok_.kind == PresentationLexer::Token::integer) {
      t.num *= expect_integer();
      if (accept_punct('/')) t.den = expect_integer();
      if (!accept_punct('*')) return t;  // bare scalar term
    }
    for (;;) {
      auto pos = tok_;
      std::string name = expect_ident();
      auto it = gen_index.find(name);
      if (it == gen_index.end())
        throw ParseError("unknown generator " + name, pos.line, pos.col);
      std::int64_t e = 1;
      if (accept_punct('^')) {
        e = expect_integer();
        if (e < 0) throw ParseError("negative exponent", pos.line, pos.col);
      }
      for (std::int64_t i = 0; i < e; ++i) t.letters.push_back(it->second);
      have_factor = true;
      if (!accept_punct('*')) break;
      if (tok_.kind == PresentationLexer::Token::integer) {
        t.num *= expect_integer();
        if (accept_punct('/')) t.den *= expect_integer();
        if (!accept_punct('*')) break;
      }
    }
    (void)have_factor;
    return t;
  }

  PresentationLexer lex_;
  PresentationLexer::Token tok_;
};

}  // namespace detail

/// Parse the algebra file grammar:
///   field Q; | field F <prime>;
///   gens <name>:<deg> ...;
///   rels <poly>; <poly>; ...
inline RawPresentation parse_presentation_raw(const std::string& text) {
  detail::PresentationParser p(text);
  RawPresentation raw;
  bool saw_field = false, saw_gens = false;
  std::map<std::string, int> gen_index;

  while (!p.at_end()) {
    if (p.accept_ident("field")) {
      auto pos = p.peek();
      if (p.accept_ident("Q")) {
        raw.field = {FieldSpec::Kind::rationals, 0};
      } else if (p.accept_ident("F")) {
        std::int64_t ch = p.expect_integer();
        if (!is_prime(ch))
          throw ParseError("characteristic " + std::to_string(ch) +
                               " is not prime",
                           pos.line, pos.col);
        raw.field = {FieldSpec::Kind::prime_field, ch};
      } else {
        throw ParseError("expected Q or F <prime>", pos.line, pos.col);
      }
      p.expect_punct(';');
      saw_field = true;
    } else if (p.accept_ident("gens")) {
      do {
        auto pos = p.peek();
        Generator g;
        g.name = p.expect_ident();
        if (g.name == "field" || g.name == "gens" || g.name == "rels" ||
            g.name == "cover" || g.name == "rel")
          throw ParseError("reserved word used as generator name", pos.line,
                           pos.col);
        p.expect_punct(':');
        g.degree = static_cast<int>(p.expect_integer());
        if (g.degree < 1)
          throw ParseError("generator degree must be >= 1", pos.line, pos.col);
        if (gen_index.count(g.name))
          throw ParseError("duplicate generator name " + g.name, pos.line,
                           pos.col);
        gen_index[g.name] = static_cast<int>(raw.generators.size());
        raw.generators.push_back(std::move(g));
      } while (!p.accept_punct(';'));
      saw_gens = true;
    } else if (p.accept_ident("rels")) {
      if (!saw_gens)
        throw ParseError("rels before gens", p.peek().line, p.peek().col);
      if (p.accept_punct(';')) continue;  // empty relation list
      for (;;) {
        raw.relations.push_back(p.parse_poly(gen_index));
        if (!p.accept_punct(';')) break;
        if (p.at_end()) break;
        if (p.peek().kind == detail::PresentationLexer::Token::ident &&
            (p.peek().text == "field" || p.peek().text == "gens" ||
             p.peek().text == "rels"))
          break;
      }
    } else {
      throw ParseError("expected field, gens or rels", p.peek().line,
                       p.peek().col);
    }
  }
  if (!saw_field)
    throw ParseError("missing field statement", 1, 1);
  if (!saw_gens)
    throw ParseError("missing gens statement", 1, 1);
  return raw;
}

template <class K>
Poly<K> bind_poly(const K& field, const std::vector<RawTerm>& raw) {
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw) {
    std::u16string s;
    s.reserve(t.letters.size());
    for (int g : t.letters) s.push_back(static_cast<char16_t>(g));
    terms.emplace_back(Word(std::move(s)), field.from_fraction(t.num, t.den));
  }
  return poly_from_terms<K>(field, std::move(terms));
}

/// Validate and bind a raw presentation over a concrete field. Relations are
/// normalized (sorted words, merged coefficients) and checked homogeneous of
/// degree >= 2.
template <class K>
Presentation<K> bind_presentation(const RawPresentation& raw, K field) {
  if (field.spec() != raw.field)
    throw Error("presentation declares a different field");
  Presentation<K> pres{std::move(field), raw.generators, {}, Grading{}};
  std::vector<int> degs;
  degs.reserve(raw.generators.size());
  for (const auto& g : raw.generators) degs.push_back(g.degree);
  pres.grading = Grading(std::move(degs));

  for (const auto& r : raw.relations) {
    Poly<K> p = bind_poly(pres.field, r);
    if (p.is_zero()) continue;
    int d = -1;
    for (const auto& t : p.terms) {
      int td = pres.grading.degree(t.first);
      if (d < 0) d = td;
      if (td != d) throw Error("inhomogeneous relation");
    }
    if (d < 2) throw Error("relation of degree < 2");
    pres.relations.push_back(std::move(p));
  }
  return pres;
}

template <class K>
Presentation<K> parse_presentation(const std::string& text, K field) {
  return bind_presentation(parse_presentation_raw(text), std::move(field));
}

// ---------------------------------------------------------------------------
// Canonical text form (used for round-trips, cache keys and display).

template <class K>
std::string word_to_string(const Presentation<K>& pres, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w.letter(j) == w.letter(i)) ++j;
    if (!out.empty()) out += "*";
    out += pres.generators[w.letter(i)].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

template <class K>
std::string poly_to_string(const Presentation<K>& pres, const Poly<K>& p) {
  if (p.is_zero()) return "0";
  const K& F = pres.field;
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms) {
    std::string cs = F.to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (cs == "1" && !w.empty()) {
      out += word_to_string(pres, w);
    } else if (w.empty()) {
      out += cs;
    } else {
      out += cs + "*" + word_to_string(pres, w);
    }
  }
  return out;
}

template <class K>
std::string serialize_presentation(const Presentation<K>& pres) {
  std::string out;
  const FieldSpec spec = pres.field.spec();
  out += spec.kind == FieldSpec::Kind::rationals
             ? "field Q;\n"
             : "field F " + std::to_string(spec.characteristic) + ";\n";
  out += "gens";
  for (const auto& g : pres.generators)
    out += " " + g.name + ":" + std::to_string(g.degree);
  out += ";\n";
  if (!pres.relations.empty()) {
    out += "rels";
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
      out += (i == 0 ? " " : "  ");
      out += poly_to_string(pres, pres.relations[i]) + ";";
      out += i + 1 < pres.relations.size() ? "\n" : "";
    }
    out += "\n";
  }
  return out;
}

}  // namespace ncreg

#endif
