#include "hrc/spec.hpp"

#include <algorithm>
#include <cctype>

#include "hrc/error.hpp"

namespace hrc {

ExprPtr Expr::constant(bool v, int line, int col) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Const;
  e->value = v;
  e->line = line;
  e->col = col;
  return e;
}

ExprPtr Expr::ref(std::string name, int line, int col) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Ref;
  e->name = std::move(name);
  e->line = line;
  e->col = col;
  return e;
}

ExprPtr Expr::unary(Kind k, ExprPtr operand, int line, int col) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(operand);
  e->line = line;
  e->col = col;
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr lhs, ExprPtr rhs, int line, int col) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  e->line = line;
  e->col = col;
  return e;
}

const PortSpec *SpecDocument::find_port(const std::string &name) const {
  for (const PortSpec &p : ports)
    if (p.decl.name == name) return &p;
  return nullptr;
}

namespace {

// ---------------------------------------------------------------- lexer --

enum class Tok {
  Ident,
  Number,
  KwPorts,
  KwAssertion,
  KwContract,
  KwComponent,
  KwAssume,
  KwPromise,
  KwLength,
  KwBool,
  KwLocal,
  KwControlled,
  KwUncontrolled,
  KwContracts,
  KwImplementation,
  KwTrue,
  KwFalse,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Colon,
  Semi,
  Comma,
  Assign,   // :=
  EqEq,     // ==
  NotEq,    // !=
  AndAnd,   // &&
  OrOr,     // ||
  Bang,     // !
  Implies,  // =>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void parse_fail(int line, int col, const std::string &message) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                  std::to_string(col) + ": " + message);
}

[[noreturn]] void type_fail(int line, int col, const std::string &message) {
  fail(ErrorKind::TypeError, "line " + std::to_string(line) + ", column " +
                                 std::to_string(col) + ": " + message);
}

Tok keyword_kind(const std::string &word) {
  if (word == "ports") return Tok::KwPorts;
  if (word == "assertion") return Tok::KwAssertion;
  if (word == "contract") return Tok::KwContract;
  if (word == "component") return Tok::KwComponent;
  if (word == "assume") return Tok::KwAssume;
  if (word == "promise") return Tok::KwPromise;
  if (word == "length") return Tok::KwLength;
  if (word == "bool") return Tok::KwBool;
  if (word == "local") return Tok::KwLocal;
  if (word == "controlled") return Tok::KwControlled;
  if (word == "uncontrolled") return Tok::KwUncontrolled;
  if (word == "contracts") return Tok::KwContracts;
  if (word == "implementation") return Tok::KwImplementation;
  if (word == "true") return Tok::KwTrue;
  if (word == "false") return Tok::KwFalse;
  return Tok::Ident;
}

std::vector<Token> lex(const std::string &text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string t, int l, int c) {
    out.push_back({kind, std::move(t), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      push(keyword_kind(word), word, tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      push(Tok::Number, text.substr(i, j - i), tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two(':', '=')) {
      push(Tok::Assign, ":=", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (two('=', '=')) {
      push(Tok::EqEq, "==", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (two('=', '>')) {
      push(Tok::Implies, "=>", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (two('!', '=')) {
      push(Tok::NotEq, "!=", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (two('&', '&')) {
      push(Tok::AndAnd, "&&", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (two('|', '|')) {
      push(Tok::OrOr, "||", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    switch (c) {
      case '{':
        push(Tok::LBrace, "{", tl, tc);
        break;
      case '}':
        push(Tok::RBrace, "}", tl, tc);
        break;
      case '(':
        push(Tok::LParen, "(", tl, tc);
        break;
      case ')':
        push(Tok::RParen, ")", tl, tc);
        break;
      case ':':
        push(Tok::Colon, ":", tl, tc);
        break;
      case ';':
        push(Tok::Semi, ";", tl, tc);
        break;
      case ',':
        push(Tok::Comma, ",", tl, tc);
        break;
      case '!':
        push(Tok::Bang, "!", tl, tc);
        break;
      default:
        parse_fail(tl, tc, std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// --------------------------------------------------------------- parser --

class Parser {
 public:
  explicit Parser(const std::string &text) : tokens_(lex(text)) {}

  SpecDocument parse() {
    if (at(Tok::KwLength)) parse_length();
    while (!at(Tok::End)) {
      if (at(Tok::KwPorts)) {
        parse_ports_block();
      } else if (at(Tok::KwAssertion)) {
        parse_assertion_def();
      } else if (at(Tok::KwContract)) {
        parse_contract_def();
      } else if (at(Tok::KwComponent)) {
        parse_component_def();
      } else if (at(Tok::KwLength)) {
        parse_fail(peek().line, peek().col,
                   "'length' must appear once, before any declaration");
      } else {
        parse_fail(peek().line, peek().col,
                   "expected 'ports', 'assertion', 'contract' or 'component'");
      }
    }
    return std::move(doc_);
  }

 private:
  const Token &peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }

  Token expect(Tok kind, const char *what) {
    if (!at(kind))
      parse_fail(peek().line, peek().col,
                 std::string("expected ") + what + ", found '" + peek().text +
                     "'");
    return tokens_[pos_++];
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  void declare(const std::string &name, int line, int col) {
    if (!names_.insert(name).second)
      fail(ErrorKind::DuplicateName, "line " + std::to_string(line) +
                                         ", column " + std::to_string(col) +
                                         ": duplicate definition of '" + name +
                                         "'");
  }

  void parse_length() {
    Token kw = expect(Tok::KwLength, "'length'");
    Token num = expect(Tok::Number, "a number");
    expect(Tok::Semi, "';'");
    unsigned long value = 0;
    try {
      value = std::stoul(num.text);
    } catch (const std::exception &) {
      value = 0;
    }
    if (value < 1 || value > 64)
      parse_fail(num.line, num.col, "trace length must be between 1 and 64");
    doc_.trace_length = static_cast<unsigned>(value);
    doc_.explicit_length = true;
    (void)kw;
  }

  void parse_ports_block() {
    expect(Tok::KwPorts, "'ports'");
    expect(Tok::LBrace, "'{'");
    parse_port_decl();
    while (accept(Tok::Semi)) parse_port_decl();
    expect(Tok::RBrace, "'}'");
  }

  void parse_port_decl() {
    Token name = expect(Tok::Ident, "a port name");
    declare(name.text, name.line, name.col);
    expect(Tok::Colon, "':'");
    PortSpec spec;
    spec.decl.name = name.text;
    if (accept(Tok::KwBool)) {
      spec.decl.domain = {"false", "true"};
      spec.is_bool = true;
    } else if (at(Tok::LBrace)) {
      ++pos_;
      spec.is_bool = false;
      Token v = expect(Tok::Ident, "a domain value");
      spec.decl.domain.push_back(v.text);
      while (accept(Tok::Comma)) {
        Token w = expect(Tok::Ident, "a domain value");
        for (const std::string &d : spec.decl.domain)
          if (d == w.text)
            parse_fail(w.line, w.col,
                       "duplicate domain value '" + w.text + "'");
        spec.decl.domain.push_back(w.text);
      }
      expect(Tok::RBrace, "'}'");
    } else {
      parse_fail(peek().line, peek().col, "expected 'bool' or '{'");
    }
    if (accept(Tok::KwLocal)) spec.local_marker = true;
    if (accept(Tok::KwControlled))
      spec.control = ControlMarker::Controlled;
    else if (accept(Tok::KwUncontrolled))
      spec.control = ControlMarker::Uncontrolled;
    doc_.ports.push_back(std::move(spec));
  }

  void parse_assertion_def() {
    expect(Tok::KwAssertion, "'assertion'");
    Token name = expect(Tok::Ident, "an assertion name");
    declare(name.text, name.line, name.col);
    expect(Tok::Assign, "':='");
    ExprPtr expr = parse_expr();
    require_bool(expr);
    doc_.assertions.push_back({name.text, std::move(expr)});
    doc_.definition_order.emplace_back(SpecDocument::ItemKind::Assertion,
                                       doc_.assertions.size() - 1);
  }

  void parse_contract_def() {
    expect(Tok::KwContract, "'contract'");
    Token name = expect(Tok::Ident, "a contract name");
    declare(name.text, name.line, name.col);
    expect(Tok::LBrace, "'{'");
    expect(Tok::KwAssume, "'assume'");
    ExprPtr assume = parse_expr();
    require_bool(assume);
    expect(Tok::Semi, "';'");
    expect(Tok::KwPromise, "'promise'");
    ExprPtr promise = parse_expr();
    require_bool(promise);
    expect(Tok::Semi, "';'");
    expect(Tok::RBrace, "'}'");
    doc_.contracts.push_back({name.text, std::move(assume), std::move(promise)});
    doc_.definition_order.emplace_back(SpecDocument::ItemKind::Contract,
                                       doc_.contracts.size() - 1);
  }

  void parse_component_def() {
    expect(Tok::KwComponent, "'component'");
    Token name = expect(Tok::Ident, "a component name");
    declare(name.text, name.line, name.col);
    expect(Tok::LBrace, "'{'");
    ComponentDef def;
    def.name = name.text;

    expect(Tok::KwContracts, "'contracts'");
    expect(Tok::Colon, "':'");
    do {
      Token ref = expect(Tok::Ident, "a contract name");
      bool known = false;
      for (const ContractDef &c : doc_.contracts)
        if (c.name == ref.text) known = true;
      if (!known)
        fail(ErrorKind::UnknownName,
             "line " + std::to_string(ref.line) + ", column " +
                 std::to_string(ref.col) + ": undefined contract '" +
                 ref.text + "'");
      def.contract_refs.push_back(ref.text);
    } while (accept(Tok::Comma));
    expect(Tok::Semi, "';'");

    if (accept(Tok::KwLocal)) {
      expect(Tok::Colon, "':'");
      do {
        Token p = expect(Tok::Ident, "a port name");
        if (!doc_.find_port(p.text))
          fail(ErrorKind::UnknownName, "line " + std::to_string(p.line) +
                                           ", column " + std::to_string(p.col) +
                                           ": undefined port '" + p.text + "'");
        def.local_ports.push_back(p.text);
      } while (accept(Tok::Comma));
      expect(Tok::Semi, "';'");
    }

    if (accept(Tok::KwImplementation)) {
      expect(Tok::Colon, "':'");
      def.implementation = parse_expr();
      require_bool(def.implementation);
      expect(Tok::Semi, "';'");
    }

    expect(Tok::RBrace, "'}'");
    doc_.components.push_back(std::move(def));
    doc_.definition_order.emplace_back(SpecDocument::ItemKind::Component,
                                       doc_.components.size() - 1);
  }

  // ---- expressions: ! > ==,!= > && > || > => (right-assoc) ----

  ExprPtr parse_expr() { return parse_implies(); }

  ExprPtr parse_implies() {
    ExprPtr lhs = parse_or();
    if (at(Tok::Implies)) {
      Token op = tokens_[pos_++];
      ExprPtr rhs = parse_implies();
      return Expr::binary(Expr::Kind::Implies, std::move(lhs), std::move(rhs),
                          op.line, op.col);
    }
    return lhs;
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(Tok::OrOr)) {
      Token op = tokens_[pos_++];
      ExprPtr rhs = parse_and();
      lhs = Expr::binary(Expr::Kind::Or, std::move(lhs), std::move(rhs),
                         op.line, op.col);
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_equality();
    while (at(Tok::AndAnd)) {
      Token op = tokens_[pos_++];
      ExprPtr rhs = parse_equality();
      lhs = Expr::binary(Expr::Kind::And, std::move(lhs), std::move(rhs),
                         op.line, op.col);
    }
    return lhs;
  }

  ExprPtr parse_equality() {
    ExprPtr lhs = parse_unary();
    while (at(Tok::EqEq) || at(Tok::NotEq)) {
      Token op = tokens_[pos_++];
      ExprPtr rhs = parse_unary();
      lhs = Expr::binary(
          op.kind == Tok::EqEq ? Expr::Kind::Eq : Expr::Kind::Ne,
          std::move(lhs), std::move(rhs), op.line, op.col);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Bang)) {
      Token op = tokens_[pos_++];
      return Expr::unary(Expr::Kind::Not, parse_unary(), op.line, op.col);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    if (at(Tok::KwTrue)) {
      Token t = tokens_[pos_++];
      return Expr::constant(true, t.line, t.col);
    }
    if (at(Tok::KwFalse)) {
      Token t = tokens_[pos_++];
      return Expr::constant(false, t.line, t.col);
    }
    if (at(Tok::Ident)) {
      Token t = tokens_[pos_++];
      return Expr::ref(t.text, t.line, t.col);
    }
    if (at(Tok::LParen)) {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    parse_fail(peek().line, peek().col,
               "expected an expression, found '" + peek().text + "'");
  }

  // ---- type checking against the ports declared so far ----

  enum class Ty { Bool, EnumPort, Symbol };

  struct TypeInfo {
    Ty ty;
    const PortSpec *port = nullptr;  // EnumPort
  };

  bool is_symbol(const std::string &name) const {
    for (const PortSpec &p : doc_.ports)
      if (!p.is_bool)
        for (const std::string &v : p.decl.domain)
          if (v == name) return true;
    return false;
  }

  TypeInfo type_of(const ExprPtr &e) {
    switch (e->kind) {
      case Expr::Kind::Const:
        return {Ty::Bool};
      case Expr::Kind::Ref: {
        const PortSpec *p = doc_.find_port(e->name);
        if (p) return p->is_bool ? TypeInfo{Ty::Bool} : TypeInfo{Ty::EnumPort, p};
        if (is_symbol(e->name)) return {Ty::Symbol};
        fail(ErrorKind::UnknownName, "line " + std::to_string(e->line) +
                                         ", column " + std::to_string(e->col) +
                                         ": undefined name '" + e->name + "'");
      }
      case Expr::Kind::Not: {
        require_bool(e->lhs);
        return {Ty::Bool};
      }
      case Expr::Kind::And:
      case Expr::Kind::Or:
      case Expr::Kind::Implies: {
        require_bool(e->lhs);
        require_bool(e->rhs);
        return {Ty::Bool};
      }
      case Expr::Kind::Eq:
      case Expr::Kind::Ne: {
        TypeInfo l = type_of(e->lhs);
        TypeInfo r = type_of(e->rhs);
        if (l.ty == Ty::Bool && r.ty == Ty::Bool) return {Ty::Bool};
        if (l.ty == Ty::EnumPort && r.ty == Ty::Symbol) {
          require_symbol_in_domain(e->rhs, l.port);
          return {Ty::Bool};
        }
        if (l.ty == Ty::Symbol && r.ty == Ty::EnumPort) {
          require_symbol_in_domain(e->lhs, r.port);
          return {Ty::Bool};
        }
        if (l.ty == Ty::EnumPort && r.ty == Ty::EnumPort) {
          if (l.port->decl.domain != r.port->decl.domain)
            type_fail(e->line, e->col,
                      "cannot compare ports '" + l.port->decl.name + "' and '" +
                          r.port->decl.name + "' with different domains");
          return {Ty::Bool};
        }
        type_fail(e->line, e->col,
                  "comparison requires two boolean operands, or an "
                  "enumerated port against a domain value or same-domain port");
      }
    }
    type_fail(e->line, e->col, "malformed expression");
  }

  void require_symbol_in_domain(const ExprPtr &sym, const PortSpec *port) {
    for (const std::string &v : port->decl.domain)
      if (v == sym->name) return;
    type_fail(sym->line, sym->col, "value '" + sym->name +
                                       "' is not in the domain of port '" +
                                       port->decl.name + "'");
  }

  void require_bool(const ExprPtr &e) {
    TypeInfo t = type_of(e);
    if (t.ty == Ty::EnumPort)
      type_fail(e->line, e->col,
                "enumerated port '" + e->name +
                    "' can only be used in a comparison");
    if (t.ty == Ty::Symbol)
      type_fail(e->line, e->col, "domain value '" + e->name +
                                     "' can only be used in a comparison");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SpecDocument doc_;
  std::set<std::string> names_;
};

}  // namespace

SpecDocument parse_document(const std::string &text) {
  return Parser(text).parse();
}

// ------------------------------------------------------------- printing --

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Implies:
      return 1;
    case Expr::Kind::Or:
      return 2;
    case Expr::Kind::And:
      return 3;
    case Expr::Kind::Eq:
    case Expr::Kind::Ne:
      return 4;
    case Expr::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

void print_expr(const ExprPtr &e, int min_prec, std::string &out) {
  int prec = precedence(e->kind);
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (e->kind) {
    case Expr::Kind::Const:
      out += e->value ? "true" : "false";
      break;
    case Expr::Kind::Ref:
      out += e->name;
      break;
    case Expr::Kind::Not:
      out += "!";
      print_expr(e->lhs, prec, out);
      break;
    case Expr::Kind::And:
      print_expr(e->lhs, prec, out);
      out += " && ";
      print_expr(e->rhs, prec + 1, out);
      break;
    case Expr::Kind::Or:
      print_expr(e->lhs, prec, out);
      out += " || ";
      print_expr(e->rhs, prec + 1, out);
      break;
    case Expr::Kind::Implies:
      print_expr(e->lhs, prec + 1, out);
      out += " => ";
      print_expr(e->rhs, prec, out);
      break;
    case Expr::Kind::Eq:
    case Expr::Kind::Ne:
      print_expr(e->lhs, prec, out);
      out += e->kind == Expr::Kind::Eq ? " == " : " != ";
      print_expr(e->rhs, prec + 1, out);
      break;
  }
  if (parens) out += ")";
}

std::string expr_text(const ExprPtr &e) {
  std::string out;
  print_expr(e, 0, out);
  return out;
}

}  // namespace

std::string print_document(const SpecDocument &doc) {
  std::string out;
  if (doc.explicit_length || doc.trace_length != 1) {
    out += "length " + std::to_string(doc.trace_length) + ";\n\n";
  }
  if (!doc.ports.empty()) {
    out += "ports {\n";
    for (std::size_t i = 0; i < doc.ports.size(); ++i) {
      const PortSpec &p = doc.ports[i];
      out += "  " + p.decl.name + ": ";
      if (p.is_bool) {
        out += "bool";
      } else {
        out += "{";
        for (std::size_t v = 0; v < p.decl.domain.size(); ++v) {
          if (v) out += ", ";
          out += p.decl.domain[v];
        }
        out += "}";
      }
      if (p.local_marker) out += " local";
      if (p.control == ControlMarker::Controlled) out += " controlled";
      if (p.control == ControlMarker::Uncontrolled) out += " uncontrolled";
      if (i + 1 < doc.ports.size()) out += ";";
      out += "\n";
    }
    out += "}\n";
  }
  for (const auto &[kind, index] : doc.definition_order) {
    out += "\n";
    switch (kind) {
      case SpecDocument::ItemKind::Assertion: {
        const AssertionDef &d = doc.assertions[index];
        out += "assertion " + d.name + " := " + expr_text(d.expr) + "\n";
        break;
      }
      case SpecDocument::ItemKind::Contract: {
        const ContractDef &d = doc.contracts[index];
        out += "contract " + d.name + " {\n";
        out += "  assume " + expr_text(d.assume) + ";\n";
        out += "  promise " + expr_text(d.promise) + ";\n";
        out += "}\n";
        break;
      }
      case SpecDocument::ItemKind::Component: {
        const ComponentDef &d = doc.components[index];
        out += "component " + d.name + " {\n";
        out += "  contracts: ";
        for (std::size_t i = 0; i < d.contract_refs.size(); ++i) {
          if (i) out += ", ";
          out += d.contract_refs[i];
        }
        out += ";\n";
        if (!d.local_ports.empty()) {
          out += "  local: ";
          for (std::size_t i = 0; i < d.local_ports.size(); ++i) {
            if (i) out += ", ";
            out += d.local_ports[i];
          }
          out += ";\n";
        }
        if (d.implementation)
          out += "  implementation: " + expr_text(d.implementation) + ";\n";
        out += "}\n";
        break;
      }
    }
  }
  return out;
}

// ----------------------------------------------------------- evaluation --

namespace {

bool is_bool_domain(const std::vector<std::string> &domain) {
  return domain.size() == 2 && domain[0] == "false" && domain[1] == "true";
}

// Runs whose (port, step) digit equals `value`.
Bitset digit_equals(const Alphabet &alphabet, std::size_t port, unsigned step,
                    unsigned value) {
  Bitset out(alphabet.universe_size(), false);
  for (std::uint64_t i = 0; i < alphabet.universe_size(); ++i)
    if (alphabet.digit(i, port, step) == value) out.set(i);
  return out;
}

Bitset eval_step(const ExprPtr &e, const Alphabet &alphabet, unsigned step) {
  switch (e->kind) {
    case Expr::Kind::Const:
      return Bitset(alphabet.universe_size(), e->value);
    case Expr::Kind::Ref: {
      std::size_t p = alphabet.port_index(e->name);
      return digit_equals(alphabet, p, step, 1);  // "true" is digit 1
    }
    case Expr::Kind::Not:
      return ~eval_step(e->lhs, alphabet, step);
    case Expr::Kind::And:
      return eval_step(e->lhs, alphabet, step) &
             eval_step(e->rhs, alphabet, step);
    case Expr::Kind::Or:
      return eval_step(e->lhs, alphabet, step) |
             eval_step(e->rhs, alphabet, step);
    case Expr::Kind::Implies:
      return ~eval_step(e->lhs, alphabet, step) |
             eval_step(e->rhs, alphabet, step);
    case Expr::Kind::Eq:
    case Expr::Kind::Ne: {
      const ExprPtr &l = e->lhs;
      const ExprPtr &r = e->rhs;
      auto enum_port = [&](const ExprPtr &x) -> int {
        if (x->kind == Expr::Kind::Ref && alphabet.has_port(x->name)) {
          std::size_t pi = alphabet.port_index(x->name);
          if (!is_bool_domain(alphabet.port(pi).domain))
            return static_cast<int>(pi);
        }
        return -1;
      };
      int lp = enum_port(l);
      int rp = enum_port(r);
      Bitset eq(alphabet.universe_size(), false);
      if (lp >= 0 && rp >= 0) {
        std::size_t n = alphabet.port(lp).domain.size();
        for (unsigned v = 0; v < n; ++v)
          eq |= digit_equals(alphabet, lp, step, v) &
                digit_equals(alphabet, rp, step, v);
      } else if (lp >= 0 || rp >= 0) {
        std::size_t pi = static_cast<std::size_t>(lp >= 0 ? lp : rp);
        const ExprPtr &sym = lp >= 0 ? r : l;
        const std::vector<std::string> &domain = alphabet.port(pi).domain;
        unsigned value = 0;
        for (std::size_t v = 0; v < domain.size(); ++v)
          if (domain[v] == sym->name) value = static_cast<unsigned>(v);
        eq = digit_equals(alphabet, pi, step, value);
      } else {
        Bitset a = eval_step(l, alphabet, step);
        Bitset b = eval_step(r, alphabet, step);
        eq = (a & b) | (~a & ~b);
      }
      return e->kind == Expr::Kind::Eq ? eq : ~eq;
    }
  }
  fail(ErrorKind::InvalidArgument, "malformed expression");
}

}  // namespace

Assertion eval_expr(const ExprPtr &expr, const Alphabet &alphabet) {
  if (alphabet.universe_size() > alphabet.max_universe())
    fail(ErrorKind::UniverseTooLarge,
         "universe too large: " + std::to_string(alphabet.universe_size()) +
             " runs exceeds cap " + std::to_string(alphabet.max_universe()));
  Bitset acc(alphabet.universe_size(), true);
  for (unsigned s = 0; s < alphabet.trace_length(); ++s)
    acc &= eval_step(expr, alphabet, s);
  return Assertion::from_predicate(
      alphabet, [&acc](std::uint64_t i) { return acc.test(i); });
}

void collect_ports(const ExprPtr &expr, const SpecDocument &doc,
                   std::set<std::string> &out) {
  if (!expr) return;
  if (expr->kind == Expr::Kind::Ref) {
    if (doc.find_port(expr->name)) out.insert(expr->name);
    return;
  }
  collect_ports(expr->lhs, doc, out);
  collect_ports(expr->rhs, doc, out);
}

// ----------------------------------------------------------- elaboration --

namespace {

Profile induced_profile(const SpecDocument &doc,
                        const std::set<std::string> &mentioned,
                        const std::set<std::string> &component_local) {
  std::set<std::string> visible, local, uncontrolled, controlled;
  for (const PortSpec &p : doc.ports) {
    const std::string &name = p.decl.name;
    bool marker_applies = mentioned.count(name) != 0;
    bool is_local = component_local.count(name) != 0 ||
                    (p.local_marker && marker_applies);
    bool is_controlled =
        p.control == ControlMarker::Controlled && marker_applies;
    (is_local ? local : visible).insert(name);
    (is_controlled ? controlled : uncontrolled).insert(name);
  }
  return Profile::make(std::move(visible), std::move(local),
                       std::move(uncontrolled), std::move(controlled));
}

}  // namespace

Model elaborate(const SpecDocument &doc, std::uint64_t max_universe) {
  Model model;
  std::vector<PortDecl> decls;
  decls.reserve(doc.ports.size());
  for (const PortSpec &p : doc.ports) decls.push_back(p.decl);
  model.alphabet = Alphabet::make(std::move(decls), doc.trace_length,
                                  max_universe);
  if (model.alphabet.universe_size() > max_universe)
    fail(ErrorKind::UniverseTooLarge,
         "universe too large: " +
             std::to_string(model.alphabet.universe_size()) +
             " runs exceeds cap " + std::to_string(max_universe));

  for (const AssertionDef &d : doc.assertions)
    model.assertions.emplace(d.name, eval_expr(d.expr, model.alphabet));

  for (const ContractDef &d : doc.contracts) {
    Assertion a = eval_expr(d.assume, model.alphabet);
    Assertion g = eval_expr(d.promise, model.alphabet);
    Contract c = Contract::make(a, g);
    std::set<std::string> mentioned;
    collect_ports(d.assume, doc, mentioned);
    collect_ports(d.promise, doc, mentioned);
    model.profiled_contracts.emplace(
        d.name,
        ProfiledContract::make(induced_profile(doc, mentioned, {}), c));
    model.contracts.emplace(d.name, std::move(c));
  }

  for (const ComponentDef &d : doc.components) {
    Model::ComponentEntry entry;
    entry.name = d.name;
    std::set<std::string> component_local(d.local_ports.begin(),
                                          d.local_ports.end());
    // A component has a single port-role assignment, so markers are applied
    // to the union of the ports its contracts and implementation mention;
    // this gives every attached contract the same profile.
    std::set<std::string> mentioned;
    for (const std::string &ref : d.contract_refs) {
      for (const ContractDef &cd : doc.contracts)
        if (cd.name == ref) {
          collect_ports(cd.assume, doc, mentioned);
          collect_ports(cd.promise, doc, mentioned);
        }
    }
    if (d.implementation) collect_ports(d.implementation, doc, mentioned);
    Profile profile = induced_profile(doc, mentioned, component_local);
    for (const std::string &ref : d.contract_refs)
      entry.contracts.push_back(
          ProfiledContract::make(profile, model.contracts.at(ref)));
    if (d.implementation) {
      entry.impl_profile = profile;
      entry.impl_behavior = eval_expr(d.implementation, model.alphabet);
    }
    model.components.emplace(d.name, std::move(entry));
  }
  return model;
}

}  // namespace hrc
