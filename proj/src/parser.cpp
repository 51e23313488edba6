#include "gforge/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gforge {

namespace {

enum class Tok {
  Ident,
  Comma,
  Colon,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Amp,
  Pipe,
  Equals,
  Arrow,
  Dot,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'=>'";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const std::set<std::string> kKeywords = {"theory", "sorts",  "relations", "axioms",
                                         "exists", "true",   "false"};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourceSpan span{i, i + 1, line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        advance(1);
      span.end = i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), span});
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Pipe; break;
      case '.': kind = Tok::Dot; break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
        } else {
          kind = Tok::Equals;
        }
        break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", span);
    }
    span.end = i + len;
    out.push_back({kind, std::string(text.substr(i, len)), span});
    advance(len);
  }
  out.push_back({Tok::End, "", {i, i, line, col}});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  Theory theory;
  std::map<std::string, SourceSpan> axiom_spans;

  const Token& peek(std::size_t ahead = 0) const {
    return toks[std::min(pos + ahead, toks.size() - 1)];
  }

  Token take() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

  [[noreturn]] void fail(const std::string& message, SourceSpan span,
                         std::vector<std::string> expected = {}) {
    std::ostringstream os;
    os << "parse error at line " << span.line << ", column " << span.column << ": " << message;
    if (!expected.empty()) {
      os << " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? " or " : "") << expected[i];
      os << ")";
    }
    throw parse_error(os.str(), span, std::move(expected));
  }

  Token expect(Tok kind, const std::string& context) {
    if (peek().kind != kind)
      fail("unexpected " + std::string(tok_name(peek().kind)) + " in " + context, peek().span,
           {tok_name(kind)});
    return take();
  }

  bool at_keyword(const std::string& kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  Token expect_keyword(const std::string& kw) {
    if (!at_keyword(kw)) fail("expected '" + kw + ":'", peek().span, {"'" + kw + "'"});
    return take();
  }

  bool at_plain_ident() const {
    return peek().kind == Tok::Ident && !kKeywords.count(peek().text);
  }

  Token expect_plain_ident(const std::string& what) {
    if (peek().kind != Tok::Ident)
      fail("expected " + what, peek().span, {tok_name(Tok::Ident)});
    if (kKeywords.count(peek().text))
      fail("keyword '" + peek().text + "' cannot be used as " + what, peek().span);
    return take();
  }

  // ---- sections ----

  void parse_file() {
    if (at_keyword("theory")) {
      take();
      theory.name = expect_plain_ident("theory name").text;
    }
    expect_keyword("sorts");
    expect(Tok::Colon, "sorts section");
    parse_sort_list();
    expect_keyword("relations");
    expect(Tok::Colon, "relations section");
    parse_relation_list();
    expect_keyword("axioms");
    expect(Tok::Colon, "axioms section");
    while (at_plain_ident()) parse_axiom();
    if (peek().kind != Tok::End)
      fail("unexpected " + std::string(tok_name(peek().kind)) + " after axioms", peek().span,
           {tok_name(Tok::End)});
  }

  void parse_sort_list() {
    if (!at_plain_ident()) return;
    while (true) {
      Token name = expect_plain_ident("sort name");
      if (theory.sort(name.text)) fail("duplicate sort '" + name.text + "'", name.span);
      theory.sorts.push_back(plain_sort(name.text));
      if (peek().kind != Tok::Comma) break;
      take();
    }
  }

  void parse_relation_list() {
    if (!at_plain_ident()) return;
    while (true) {
      Token name = expect_plain_ident("relation name");
      if (theory.relation(name.text)) fail("duplicate relation '" + name.text + "'", name.span);
      std::vector<std::string> signature;
      if (peek().kind == Tok::LParen) {
        take();
        if (peek().kind != Tok::RParen) {
          while (true) {
            Token s = expect_plain_ident("sort name");
            if (!theory.sort(s.text)) fail("undeclared sort '" + s.text + "'", s.span);
            signature.push_back(s.text);
            if (peek().kind != Tok::Comma) break;
            take();
          }
        }
        expect(Tok::RParen, "relation signature");
      }
      theory.relations.push_back(plain_relation(name.text, std::move(signature)));
      if (peek().kind != Tok::Comma) break;
      take();
    }
  }

  void parse_axiom() {
    Token label = expect_plain_ident("axiom label");
    for (const Sequent& ax : theory.axioms)
      if (ax.label == label.text) fail("duplicate axiom label '" + label.text + "'", label.span);
    expect(Tok::Colon, "axiom");
    expect(Tok::LBracket, "axiom context");

    Sequent ax;
    ax.label = label.text;
    std::map<std::string, std::string> scope;
    if (peek().kind != Tok::RBracket) {
      while (true) {
        Token var = expect_plain_ident("context variable");
        expect(Tok::Colon, "context entry");
        Token sort = expect_plain_ident("sort name");
        if (!theory.sort(sort.text)) fail("undeclared sort '" + sort.text + "'", sort.span);
        if (scope.count(var.text))
          fail("duplicate context variable '" + var.text + "'", var.span);
        scope[var.text] = sort.text;
        ax.context.emplace_back(var.text, sort.text);
        if (peek().kind != Tok::Comma) break;
        take();
      }
    }
    expect(Tok::RBracket, "axiom context");
    ax.premise = parse_formula(scope);
    expect(Tok::Arrow, "axiom");
    ax.conclusion = parse_formula(scope);
    axiom_spans[ax.label] = label.span;
    theory.axioms.push_back(std::move(ax));
  }

  // ---- formulas ----
  // formula := 'exists' v ':' S '.' formula | disj
  // disj    := conj ('|' operand)*        operand may start a fresh 'exists'
  // conj    := atom ('&' operand)*

  using Scope = std::map<std::string, std::string>;

  Formula parse_formula(const Scope& scope) {
    if (at_keyword("exists")) return parse_exists(scope);
    return parse_disj(scope);
  }

  Formula parse_exists(const Scope& scope) {
    take();  // 'exists'
    Token var = expect_plain_ident("bound variable");
    if (scope.count(var.text))
      fail("variable '" + var.text + "' shadows an enclosing binding", var.span);
    expect(Tok::Colon, "exists");
    Token sort = expect_plain_ident("sort name");
    if (!theory.sort(sort.text)) fail("undeclared sort '" + sort.text + "'", sort.span);
    expect(Tok::Dot, "exists");
    Scope inner = scope;
    inner[var.text] = sort.text;
    Formula body = parse_formula(inner);
    return Formula::exists(var.text, sort.text, std::move(body));
  }

  Formula parse_disj(const Scope& scope) {
    Formula first = parse_conj(scope);
    if (peek().kind != Tok::Pipe) return first;
    std::vector<Formula> parts;
    parts.push_back(std::move(first));
    while (peek().kind == Tok::Pipe) {
      take();
      if (at_keyword("exists")) {
        parts.push_back(parse_exists(scope));
        break;  // exists swallows the rest
      }
      parts.push_back(parse_conj(scope));
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula parse_conj(const Scope& scope) {
    Formula first = parse_atom(scope);
    if (peek().kind != Tok::Amp) return first;
    std::vector<Formula> parts;
    parts.push_back(std::move(first));
    while (peek().kind == Tok::Amp) {
      take();
      if (at_keyword("exists")) {
        parts.push_back(parse_exists(scope));
        break;
      }
      parts.push_back(parse_atom(scope));
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula parse_atom(const Scope& scope) {
    if (at_keyword("true")) {
      take();
      return Formula::top();
    }
    if (at_keyword("false")) {
      take();
      return Formula::bottom();
    }
    if (peek().kind == Tok::LParen) {
      take();
      Formula inner = parse_formula(scope);
      expect(Tok::RParen, "parenthesized formula");
      return inner;
    }
    Token head = expect_plain_ident("formula");
    if (peek().kind == Tok::LParen) return parse_rel_atom(head, scope);
    if (peek().kind == Tok::Equals) return parse_equality(head, scope);
    fail("unexpected " + std::string(tok_name(peek().kind)) + " after '" + head.text + "'",
         peek().span, {"'('", "'='"});
  }

  Formula parse_rel_atom(const Token& head, const Scope& scope) {
    const RelationSymbol* rel = theory.relation(head.text);
    if (!rel) fail("unknown relation '" + head.text + "'", head.span);
    take();  // '('
    std::vector<std::string> args;
    std::vector<Token> arg_toks;
    if (peek().kind != Tok::RParen) {
      while (true) {
        Token v = expect_plain_ident("argument variable");
        args.push_back(v.text);
        arg_toks.push_back(v);
        if (peek().kind != Tok::Comma) break;
        take();
      }
    }
    Token close = expect(Tok::RParen, "relation atom");
    SourceSpan atom_span = head.span;
    atom_span.end = close.span.end;
    if (args.size() != rel->arity())
      fail("arity mismatch: relation '" + head.text + "' expects " +
               std::to_string(rel->arity()) + " arguments, got " + std::to_string(args.size()),
           atom_span);
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto it = scope.find(args[i]);
      if (it == scope.end()) fail("unbound variable '" + args[i] + "'", arg_toks[i].span);
      if (it->second != rel->signature[i])
        fail("argument " + std::to_string(i + 1) + " of '" + head.text + "' has sort " +
                 rel->signature[i] + " but variable '" + args[i] + "' has sort " + it->second,
             arg_toks[i].span);
    }
    return Formula::rel(head.text, std::move(args));
  }

  Formula parse_equality(const Token& lhs, const Scope& scope) {
    take();  // '='
    Token rhs = expect_plain_ident("variable");
    auto li = scope.find(lhs.text);
    if (li == scope.end()) fail("unbound variable '" + lhs.text + "'", lhs.span);
    auto ri = scope.find(rhs.text);
    if (ri == scope.end()) fail("unbound variable '" + rhs.text + "'", rhs.span);
    if (li->second != ri->second) {
      SourceSpan span = lhs.span;
      span.end = rhs.span.end;
      fail("equality between variables of different sorts (" + li->second + " vs " +
               ri->second + "); functions must be encoded as relations",
           span);
    }
    return Formula::equality(li->second, lhs.text, rhs.text);
  }
};

// ---- rendering ----

// Binding strength: exists 0, | 1, & 2, atoms 3. A child is parenthesized
// when its level is below the minimum its position requires; same-kind
// nesting is parenthesized so reparsing preserves the tree shape.
int formula_level(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Disjunction: return f.children.empty() ? 3 : 1;
    case Formula::Kind::Conjunction: return f.children.empty() ? 3 : 2;
    default: return 3;
  }
}

void render_formula(const Formula& f, int min_level, std::string& out) {
  const int level = formula_level(f);
  const bool parens = level < min_level;
  if (parens) out += "(";
  switch (f.kind) {
    case Formula::Kind::Top:
      out += "true";
      break;
    case Formula::Kind::Disjunction:
      if (f.children.empty()) {
        out += "false";
      } else if (f.children.size() == 1) {
        render_formula(f.children[0], min_level, out);
      } else {
        for (std::size_t i = 0; i < f.children.size(); ++i) {
          if (i) out += " | ";
          render_formula(f.children[i], 2, out);
        }
      }
      break;
    case Formula::Kind::Conjunction:
      if (f.children.empty()) {
        out += "true";
      } else if (f.children.size() == 1) {
        render_formula(f.children[0], min_level, out);
      } else {
        for (std::size_t i = 0; i < f.children.size(); ++i) {
          if (i) out += " & ";
          render_formula(f.children[i], 3, out);
        }
      }
      break;
    case Formula::Kind::RelAtom: {
      out += f.symbol;
      out += "(";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ", ";
        out += f.vars[i];
      }
      out += ")";
      break;
    }
    case Formula::Kind::Equality:
      out += f.vars[0] + " = " + f.vars[1];
      break;
    case Formula::Kind::Exists:
      out += "exists " + f.vars[0] + ":" + f.symbol + ". ";
      render_formula(f.children[0], 0, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

Theory parse_theory(std::string_view text) {
  Parser p;
  p.toks = lex(text);
  p.parse_file();

  // The inline checks above should leave nothing for the validator; run it
  // anyway and surface anything it finds with the offending axiom's span.
  ValidationReport report = validate_theory(p.theory);
  if (!report.ok()) {
    const Diagnostic& d = report.diagnostics.front();
    SourceSpan span{};
    auto it = p.axiom_spans.find(d.axiom);
    if (it != p.axiom_spans.end()) span = it->second;
    throw parse_error(d.message + (d.axiom.empty() ? "" : " at axiom " + d.axiom), span);
  }
  return p.theory;
}

std::string render_theory(const Theory& t) {
  std::string out;
  if (!t.name.empty()) out += "theory " + t.name + "\n";
  out += "sorts:";
  for (std::size_t i = 0; i < t.sorts.size(); ++i)
    out += (i ? ", " : " ") + t.sorts[i].name;
  out += "\nrelations:";
  for (std::size_t i = 0; i < t.relations.size(); ++i) {
    out += (i ? ", " : " ") + t.relations[i].name + "(";
    for (std::size_t j = 0; j < t.relations[i].signature.size(); ++j) {
      if (j) out += ", ";
      out += t.relations[i].signature[j];
    }
    out += ")";
  }
  out += "\naxioms:\n";
  for (const Sequent& ax : t.axioms) {
    out += "  " + ax.label + ": [";
    for (std::size_t i = 0; i < ax.context.size(); ++i) {
      if (i) out += ", ";
      out += ax.context[i].first + ":" + ax.context[i].second;
    }
    out += "] ";
    render_formula(ax.premise, 0, out);
    out += " => ";
    render_formula(ax.conclusion, 0, out);
    out += "\n";
  }
  return out;
}

}  // namespace gforge
