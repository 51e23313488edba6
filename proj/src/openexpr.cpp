#include "gforge/openexpr.hpp"

#include <cctype>

namespace gforge {

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;
  const Theory& base;
  const FramePresentation& pres;

  ExprParser(std::string_view t, const Theory& b, const FramePresentation& p)
      : text(t), base(b), pres(p) {}

  [[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument("open expression: " + message + " (at offset " +
                                std::to_string(pos) + ")");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '$'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(text.substr(start, pos - start));
  }

  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected index");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  Open parse() {
    Open result = parse_expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return result;
  }

  Open parse_expr() {
    Open acc = parse_term();
    while (eat('|')) acc = join(acc, parse_term());
    return acc;
  }

  Open parse_term() {
    Open acc = parse_factor();
    while (eat('&')) acc = meet(acc, parse_factor());
    return acc;
  }

  Open parse_factor() {
    if (eat('(')) {
      Open inner = parse_expr();
      expect(')');
      return inner;
    }
    std::string head = ident();
    if (head == "true") return Open::top();
    if (head == "false") return Open::bottom();
    Generator g = parse_generator(head);
    if (!pres.owns(g)) fail("unknown generator " + g.text());
    return Open::atom(g);
  }

  Generator parse_generator(const std::string& head) {
    // per / per1 / per2 / per3
    if (head == "per" || head == "per1" || head == "per2" || head == "per3") {
      CopyTag copy = CopyTag::None;
      if (head.size() == 4) copy = static_cast<CopyTag>(head[3] - '0');
      expect('.');
      std::string sort = ident();
      expect('(');
      int n = integer();
      expect(',');
      int m = integer();
      expect(')');
      return Generator::per(std::move(sort), n, m, copy);
    }
    // alpha / beta / gamma
    for (IsoTag iso : {IsoTag::Alpha, IsoTag::Beta, IsoTag::Gamma})
      if (head == iso_tag_name(iso)) {
        expect('.');
        std::string sort = ident();
        expect('(');
        int n = integer();
        expect(')');
        expect('=');
        int m = integer();
        return Generator::alpha(iso, std::move(sort), n, m);
      }
    // relation, possibly with a trailing copy digit
    std::string name = head;
    CopyTag copy = CopyTag::None;
    if (!base.relation(name) && name.size() > 1) {
      char last = name.back();
      if (last >= '1' && last <= '3' && base.relation(name.substr(0, name.size() - 1))) {
        copy = static_cast<CopyTag>(last - '0');
        name = name.substr(0, name.size() - 1);
      }
    }
    const RelationSymbol* rel = base.relation(name);
    if (!rel) fail("unknown relation '" + head + "'");
    expect('(');
    std::vector<int> args;
    if (!eat(')')) {
      while (true) {
        args.push_back(integer());
        if (eat(')')) break;
        expect(',');
      }
    }
    if (args.size() != rel->arity())
      fail("relation '" + name + "' expects " + std::to_string(rel->arity()) + " indices");
    return Generator::rel(std::move(name), std::move(args), copy);
  }
};

}  // namespace

Open parse_open(std::string_view text, const Theory& base, const FramePresentation& pres) {
  ExprParser p(text, base, pres);
  return p.parse();
}

}  // namespace gforge
