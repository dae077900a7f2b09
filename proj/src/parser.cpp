// SPDX-License-Identifier: Apache-2.0

#include "hli/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "hli/error.hpp"

namespace hli {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Dot,
  Slash,
  Tilde,
  WeakAnd,
  WeakOr,
  StrongAnd,
  StrongOr,
  Arrow,
  Equals,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", span(pos_, pos_)});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  SourceSpan span(std::size_t start, std::size_t end) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < start && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {start, end, line, column};
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token fixed(Tok kind, std::size_t len) {
    Token t{kind, std::string(src_.substr(pos_, len)), span(pos_, pos_ + len)};
    pos_ += len;
    return t;
  }

  Token next() {
    const unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), span(start, pos_)};
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Number, std::string(src_.substr(start, pos_ - start)), span(start, pos_)};
    }
    if (starts_with("/\\")) return fixed(Tok::WeakAnd, 2);
    if (starts_with("\\/")) return fixed(Tok::WeakOr, 2);
    if (starts_with("|+|")) return fixed(Tok::StrongOr, 3);
    if (starts_with("->")) return fixed(Tok::Arrow, 2);
    switch (c) {
      case '(': return fixed(Tok::LParen, 1);
      case ')': return fixed(Tok::RParen, 1);
      case ',': return fixed(Tok::Comma, 1);
      case '.': return fixed(Tok::Dot, 1);
      case '/': return fixed(Tok::Slash, 1);
      case '~': return fixed(Tok::Tilde, 1);
      case '&': return fixed(Tok::StrongAnd, 1);
      case '=': return fixed(Tok::Equals, 1);
      default: break;
    }
    throw ParseError(ErrorKind::SyntaxError, span(pos_, pos_ + 1),
                     std::string("unexpected character '") + src_[pos_] + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

SourceSpan join(const SourceSpan& a, const SourceSpan& b) { return {a.start, b.end, a.line, a.column}; }

class Parser {
 public:
  Parser(std::string_view text, Vocabulary voc, bool infer)
      : tokens_(Lexer(text).run()), voc_(std::move(voc)), infer_(infer) {}

  Formula parse_top() {
    Formula f = parse_implication();
    if (peek().kind == Tok::Equals) {
      const Token eq = take();
      const auto* lhs = f.as<Quantified>();
      if (lhs == nullptr) {
        throw ParseError(ErrorKind::SyntaxError, eq.span, "'=' may only relate quantifier expressions");
      }
      if (!voc_.has_eq()) {
        if (!infer_) throw ParseError(ErrorKind::FlagMissing, eq.span, "quantifier equality is not enabled");
        voc_.set_has_eq(true);
      }
      const Token& rhs_start = peek();
      Formula rhs_formula = parse_implication();
      const auto* rhs = rhs_formula.as<Quantified>();
      if (rhs == nullptr) {
        throw ParseError(ErrorKind::SyntaxError, rhs_start.span, "'=' may only relate quantifier expressions");
      }
      f = QuantifierEquality{*lhs, *rhs};
    }
    if (peek().kind != Tok::End) {
      throw ParseError(ErrorKind::SyntaxError, peek().span, "unexpected '" + peek().text + "'");
    }
    return f;
  }

  const Vocabulary& vocabulary() const { return voc_; }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
      throw ParseError(ErrorKind::SyntaxError, peek().span, std::string("expected ") + what + ", got " + got);
    }
    return take();
  }

  Formula parse_implication() {
    Formula lhs = parse_lattice();
    if (peek().kind == Tok::Arrow) {
      take();
      return implies(lhs, parse_implication());
    }
    return lhs;
  }

  Formula parse_lattice() {
    Formula lhs = parse_strong();
    for (;;) {
      if (peek().kind == Tok::WeakAnd) {
        take();
        lhs = weak_and(lhs, parse_strong());
      } else if (peek().kind == Tok::WeakOr) {
        take();
        lhs = weak_or(lhs, parse_strong());
      } else {
        return lhs;
      }
    }
  }

  Formula parse_strong() {
    Formula lhs = parse_unary();
    for (;;) {
      if (peek().kind == Tok::StrongAnd) {
        take();
        lhs = strong_and(lhs, parse_unary());
      } else if (peek().kind == Tok::StrongOr) {
        take();
        lhs = strong_or(lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Formula parse_unary() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      take();
      return negation(parse_unary());
    }
    if (t.kind == Tok::Ident && (t.text == "ALL" || t.text == "EX")) {
      const bool universal = t.text == "ALL";
      take();
      const Token var = expect(Tok::Ident, "a variable");
      check_binder(var);
      expect(Tok::Dot, "'.'");
      Formula body = parse_implication();
      return universal ? forall(var.text, body) : exists(var.text, body);
    }
    return parse_primary();
  }

  void check_binder(const Token& var) {
    if (is_reserved_name(var.text)) {
      throw ParseError(ErrorKind::SyntaxError, var.span, "reserved word '" + var.text + "' used as a variable");
    }
    if (voc_.declares(var.text)) {
      throw ParseError(ErrorKind::SyntaxError, var.span, "symbol '" + var.text + "' cannot be bound");
    }
  }

  Formula parse_primary() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      take();
      Formula inner = parse_implication();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) {
      const std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
      throw ParseError(ErrorKind::SyntaxError, t.span, "expected a formula, got " + got);
    }
    if (t.text == "INT") {
      take();
      Formula body = parse_implication();
      const Token d = peek();
      if (d.kind != Tok::Ident || d.text.size() < 2 || d.text.front() != 'd') {
        const std::string got = d.kind == Tok::End ? "end of input" : "'" + d.text + "'";
        throw ParseError(ErrorKind::SyntaxError, d.span, "expected 'd<var>' closing INT, got " + got);
      }
      take();
      Token var = d;
      var.text = d.text.substr(1);
      check_binder(var);
      return integral(var.text, body);
    }
    if (t.text == "rat") return parse_truth_constant();
    return parse_atom();
  }

  Formula parse_truth_constant() {
    const Token start = take();
    expect(Tok::LParen, "'('");
    const Token num = expect(Tok::Number, "a numerator");
    std::string text = num.text;
    if (peek().kind == Tok::Slash) {
      take();
      text += "/" + expect(Tok::Number, "a denominator").text;
    }
    const Token close = expect(Tok::RParen, "')'");
    try {
      return truth_constant(Rational01::parse(text));
    } catch (const Error& e) {
      throw ParseError(e.kind(), join(start.span, close.span), "bad truth constant rat(" + text + ")");
    }
  }

  Formula parse_atom() {
    const Token name = take();
    if (is_reserved_name(name.text) && name.text != kEqPredicate && name.text != kApproxPredicate) {
      throw ParseError(ErrorKind::SyntaxError, name.span, "unexpected '" + name.text + "'");
    }
    if (peek().kind != Tok::LParen) {
      throw ParseError(ErrorKind::SyntaxError, name.span, "expected a formula, got '" + name.text + "'");
    }
    take();
    std::vector<Term> args = parse_term_list();
    const Token close = expect(Tok::RParen, "')'");
    const SourceSpan whole = join(name.span, close.span);

    std::optional<std::size_t> arity;
    if (name.text == kEqPredicate || name.text == kApproxPredicate) {
      const bool is_eq = name.text == kEqPredicate;
      if (!(is_eq ? voc_.has_eq() : voc_.has_approx())) {
        if (!infer_) throw ParseError(ErrorKind::FlagMissing, name.span, name.text + " is not enabled");
        is_eq ? voc_.set_has_eq(true) : voc_.set_has_approx(true);
      }
      arity = 2;
    } else {
      arity = voc_.predicate_arity(name.text);
      if (!arity) {
        if (!infer_ || voc_.declares(name.text)) {
          throw ParseError(ErrorKind::UnknownSymbol, name.span, "unknown predicate '" + name.text + "'");
        }
        voc_.add_predicate(name.text, args.size());
        arity = args.size();
      }
    }
    if (*arity != args.size()) {
      throw ParseError(ErrorKind::ArityMismatch, whole,
                       name.text + " expects " + std::to_string(*arity) + " arguments, got " +
                           std::to_string(args.size()));
    }
    return atom(name.text, std::move(args));
  }

  std::vector<Term> parse_term_list() {
    std::vector<Term> args;
    args.push_back(parse_term());
    while (peek().kind == Tok::Comma) {
      take();
      args.push_back(parse_term());
    }
    return args;
  }

  Term parse_term() {
    const Token name = expect(Tok::Ident, "a term");
    if (is_reserved_name(name.text)) {
      throw ParseError(ErrorKind::SyntaxError, name.span, "reserved word '" + name.text + "' used as a term");
    }
    if (peek().kind == Tok::LParen) {
      take();
      std::vector<Term> args = parse_term_list();
      const Token close = expect(Tok::RParen, "')'");
      auto arity = voc_.function_arity(name.text);
      if (!arity) {
        if (!infer_ || voc_.declares(name.text)) {
          throw ParseError(ErrorKind::UnknownSymbol, name.span, "unknown function '" + name.text + "'");
        }
        voc_.add_function(name.text, args.size());
        arity = args.size();
      }
      if (*arity != args.size()) {
        throw ParseError(ErrorKind::ArityMismatch, join(name.span, close.span),
                         name.text + " expects " + std::to_string(*arity) + " arguments, got " +
                             std::to_string(args.size()));
      }
      return Term::apply(name.text, std::move(args));
    }
    if (voc_.has_constant(name.text)) return Term::constant(name.text);
    if (voc_.function_arity(name.text)) {
      throw ParseError(ErrorKind::ArityMismatch, name.span, "function '" + name.text + "' used without arguments");
    }
    if (voc_.predicate_arity(name.text)) {
      throw ParseError(ErrorKind::SyntaxError, name.span, "predicate '" + name.text + "' used as a term");
    }
    return Term::variable(name.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Vocabulary voc_;
  bool infer_;
};

// ---- Printing ---------------------------------------------------------------

constexpr int kImpliesPrec = 1;
constexpr int kLatticePrec = 2;
constexpr int kStrongPrec = 3;
constexpr int kUnaryPrec = 4;

int precedence(Connective op) {
  switch (op) {
    case Connective::Implies: return kImpliesPrec;
    case Connective::WeakAnd:
    case Connective::WeakOr: return kLatticePrec;
    case Connective::StrongAnd:
    case Connective::StrongOr: return kStrongPrec;
  }
  return kImpliesPrec;
}

const char* symbol(Connective op) {
  switch (op) {
    case Connective::Implies: return " -> ";
    case Connective::WeakAnd: return " /\\ ";
    case Connective::WeakOr: return " \\/ ";
    case Connective::StrongAnd: return " & ";
    case Connective::StrongOr: return " |+| ";
  }
  return " ? ";
}

void print_term_to(const Term& t, std::string& out) {
  out += t.name();
  if (t.kind() != Term::Kind::Apply) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i > 0) out += ',';
    print_term_to(t.args()[i], out);
  }
  out += ')';
}

// `followed` is true when an operator token will be printed right after this
// formula; ALL/EX then need parentheses since their body extends rightwards.
void print_to(const Formula& phi, int min_prec, bool followed, std::string& out);

void print_quantified(const Quantified& q, bool followed, std::string& out) {
  if (q.quantifier == Quantifier::Integral) {
    out += "INT ";
    print_to(q.body, kImpliesPrec, false, out);
    out += " d";
    out += q.var;
    return;
  }
  if (followed) out += '(';
  out += q.quantifier == Quantifier::Forall ? "ALL " : "EX ";
  out += q.var;
  out += ". ";
  print_to(q.body, kImpliesPrec, false, out);
  if (followed) out += ')';
}

void print_to(const Formula& phi, int min_prec, bool followed, std::string& out) {
  std::visit(overloaded{
                 [&](const Atom& a) {
                   out += a.predicate;
                   out += '(';
                   for (std::size_t i = 0; i < a.args.size(); ++i) {
                     if (i > 0) out += ',';
                     print_term_to(a.args[i], out);
                   }
                   out += ')';
                 },
                 [&](const TruthConstant& c) {
                   out += "rat(";
                   out += c.value.str();
                   out += ')';
                 },
                 [&](const Negation& n) {
                   out += '~';
                   print_to(n.body, kUnaryPrec, followed, out);
                 },
                 [&](const Binary& b) {
                   const int p = precedence(b.op);
                   const bool parens = p < min_prec;
                   const bool tail = parens ? false : followed;
                   if (parens) out += '(';
                   if (b.op == Connective::Implies) {
                     print_to(b.lhs, p + 1, true, out);
                     out += symbol(b.op);
                     print_to(b.rhs, p, tail, out);
                   } else {
                     print_to(b.lhs, p, true, out);
                     out += symbol(b.op);
                     print_to(b.rhs, p + 1, tail, out);
                   }
                   if (parens) out += ')';
                 },
                 [&](const Quantified& q) { print_quantified(q, followed, out); },
                 [&](const QuantifierEquality& e) {
                   print_quantified(e.lhs, false, out);
                   out += " = ";
                   print_quantified(e.rhs, false, out);
                 },
             },
             phi.node().data);
}

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& voc) { return Parser(text, voc, false).parse_top(); }

InferredFormula parse_formula_inferring(std::string_view text, FreeNames mode, const Vocabulary& base) {
  Parser parser(text, base, true);
  Formula phi = parser.parse_top();
  Vocabulary voc = parser.vocabulary();
  if (mode == FreeNames::AsConstants) {
    for (const auto& name : free_vars(phi)) {
      voc.add_constant(name);
      phi = substitute(phi, name, Term::constant(name));
    }
  }
  return {phi, voc};
}

std::string print_formula(const Formula& phi) {
  std::string out;
  print_to(phi, kImpliesPrec, false, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

}  // namespace hli
