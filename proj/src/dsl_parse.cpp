#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rexp/dsl.hpp"

namespace rexp::dsl {

namespace {

const std::string kEpsilon = "ε";

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Kind { LParen, RParen, Quote, String, Keyword, Atom, Integer, End };

  Kind kind{};
  std::string text;         // atom text, keyword name (without #:), string content
  std::int64_t number = 0;  // Integer
  char paren = 0;           // delimiter character for LParen/RParen
  int line = 1;
  int column = 1;           // code points, 1-based
  std::size_t offset = 0;   // byte offset into the source
  std::size_t byte_len = 0;
};

bool is_delimiter(char ch) {
  return ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == '"' || ch == '\'' ||
         ch == ';' || ch == '#';
}

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n';
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space_and_comments();
      Token t = next_token();
      bool end = t.kind == Token::Kind::End;
      tokens.push_back(std::move(t));
      if (end) break;
    }
    return tokens;
  }

 private:
  [[noreturn]] void fail(const std::string& message, int line, int column, int length) {
    throw ParseError{message, SourceSpan{file_, line, column, length}};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool done() const { return pos_ >= text_.size(); }

  // Consumes one code point, maintaining the line/column counters.
  void advance() {
    char ch = text_[pos_];
    ++pos_;
    while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xc0) == 0x80) {
      ++pos_;  // continuation bytes belong to the same code point
    }
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
  }

  void skip_space_and_comments() {
    for (;;) {
      if (done()) return;
      char ch = peek();
      if (is_space(ch)) {
        advance();
      } else if (ch == ';') {
        while (!done() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token start_token(Token::Kind kind) {
    Token t;
    t.kind = kind;
    t.line = line_;
    t.column = column_;
    t.offset = pos_;
    return t;
  }

  Token finish_token(Token t) {
    t.byte_len = pos_ - t.offset;
    return t;
  }

  Token next_token() {
    if (done()) return finish_token(start_token(Token::Kind::End));
    char ch = peek();
    if (ch == '(' || ch == '[') {
      Token t = start_token(Token::Kind::LParen);
      t.paren = ch;
      advance();
      return finish_token(std::move(t));
    }
    if (ch == ')' || ch == ']') {
      Token t = start_token(Token::Kind::RParen);
      t.paren = ch;
      advance();
      return finish_token(std::move(t));
    }
    if (ch == '\'') {
      Token t = start_token(Token::Kind::Quote);
      advance();
      return finish_token(std::move(t));
    }
    if (ch == '"') return lex_string();
    if (ch == '#') return lex_keyword();
    return lex_atom();
  }

  Token lex_string() {
    Token t = start_token(Token::Kind::String);
    advance();  // opening quote
    std::string content;
    for (;;) {
      if (done() || peek() == '\n') {
        fail("unterminated string literal", t.line, t.column, 1);
      }
      char ch = peek();
      if (ch == '"') {
        advance();
        t.text = std::move(content);
        return finish_token(std::move(t));
      }
      if (ch == '\\') {
        advance();
        if (done()) fail("unterminated string literal", t.line, t.column, 1);
        char esc = peek();
        if (esc != '"' && esc != '\\') {
          fail(std::string("unsupported escape sequence: \\") + esc, line_, column_, 1);
        }
        content.push_back(esc);
        advance();
      } else {
        std::size_t start = pos_;
        advance();
        content.append(text_.substr(start, pos_ - start));
      }
    }
  }

  Token lex_keyword() {
    Token t = start_token(Token::Kind::Keyword);
    advance();  // '#'
    if (done() || peek() != ':') {
      fail("unexpected character: #", t.line, t.column, 1);
    }
    advance();  // ':'
    std::size_t start = pos_;
    while (!done() && !is_space(peek()) && !is_delimiter(peek())) advance();
    if (pos_ == start) fail("expected a keyword name after #:", t.line, t.column, 2);
    t.text = std::string(text_.substr(start, pos_ - start));
    return finish_token(std::move(t));
  }

  Token lex_atom() {
    Token t = start_token(Token::Kind::Atom);
    std::size_t start = pos_;
    while (!done() && !is_space(peek()) && !is_delimiter(peek())) advance();
    std::string raw(text_.substr(start, pos_ - start));
    std::string_view body = raw;
    if ((body.front() == '+' || body.front() == '-') && body.size() > 1) body.remove_prefix(1);
    if (all_digits(body)) {
      t.kind = Token::Kind::Integer;
      t.number = std::stoll(raw);
      t.text = std::move(raw);
      return finish_token(std::move(t));
    }
    if (raw == "EMP") raw = kEpsilon;  // ASCII alias for the empty word
    t.text = std::move(raw);
    return finish_token(std::move(t));
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

const std::map<std::string, RegExpKind>& constructor_names() {
  static const std::map<std::string, RegExpKind> names = {
      {"null-regexp", RegExpKind::Null},           {"empty-regexp", RegExpKind::Empty},
      {"singleton-regexp", RegExpKind::Singleton}, {"union-regexp", RegExpKind::Union},
      {"concat-regexp", RegExpKind::Concat},       {"kleenestar-regexp", RegExpKind::KleeneStar},
  };
  return names;
}

int positional_arity(RegExpKind kind) {
  switch (kind) {
    case RegExpKind::Null:
    case RegExpKind::Empty:
      return 0;
    case RegExpKind::Singleton:
    case RegExpKind::KleeneStar:
      return 1;
    case RegExpKind::Union:
    case RegExpKind::Concat:
      return 2;
  }
  return 0;
}

bool accepts_keywords(RegExpKind kind) {
  return kind == RegExpKind::Union || kind == RegExpKind::Concat ||
         kind == RegExpKind::KleeneStar;
}

const char* arity_phrase(int n) {
  switch (n) {
    case 0: return "no sub-expressions";
    case 1: return "one sub-expression";
    default: return "two sub-expressions";
  }
}

enum class PType { Bool, Int, Sym, WordT };

const char* type_name(PType t) {
  switch (t) {
    case PType::Bool: return "a boolean";
    case PType::Int: return "an integer";
    case PType::Sym: return "a symbol";
    case PType::WordT: return "a word";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)), tokens_(Lexer(text, file_).run()) {}

  std::vector<Definition> parse_file() {
    std::vector<Definition> defs;
    while (peek().kind != Token::Kind::End) defs.push_back(parse_define());
    for (std::size_t i = 0; i < defs.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (defs[i].name == defs[j].name) {
          fail("duplicate definition: " + defs[i].name, defs[i].name_span);
        }
      }
    }
    return defs;
  }

 private:
  [[noreturn]] void fail(const std::string& message, SourceSpan span) {
    throw ParseError{message, std::move(span)};
  }
  [[noreturn]] void fail_at(const std::string& message, const Token& t) {
    fail(message, token_span(t));
  }

  SourceSpan token_span(const Token& t) const {
    return SourceSpan{file_, t.line, t.column,
                      static_cast<int>(utf8_length(text_.substr(t.offset, t.byte_len)))};
  }

  // Span from the start of `from` to the end of `to`, inclusive.
  SourceSpan span_between(const Token& from, const Token& to) const {
    std::size_t end = to.offset + to.byte_len;
    return SourceSpan{file_, from.line, from.column,
                      static_cast<int>(utf8_length(text_.substr(from.offset, end - from.offset)))};
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = index_ + ahead;
    if (i >= tokens_.size()) i = tokens_.size() - 1;  // End token
    return tokens_[i];
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Token::Kind::End) ++index_;
    return t;
  }

  const Token& expect_open(const char* what) {
    const Token& t = next();
    if (t.kind != Token::Kind::LParen) fail_at(std::string("expected ") + what, t);
    return t;
  }

  const Token& expect_close(const Token& open) {
    const Token& t = next();
    if (t.kind != Token::Kind::RParen) {
      fail_at("expected a closing delimiter", t);
    }
    char wanted = open.paren == '(' ? ')' : ']';
    if (t.paren != wanted) {
      fail_at(std::string("mismatched delimiter: expected ") + wanted, t);
    }
    return t;
  }

  const Token& expect_name(const char* what) {
    const Token& t = next();
    if (t.kind != Token::Kind::Atom) fail_at(std::string("expected ") + what, t);
    return t;
  }

  Definition parse_define() {
    const Token& open = expect_open("(define ...)");
    const Token& head = next();
    if (head.kind != Token::Kind::Atom || head.text != "define") {
      fail_at("expected (define NAME expression) at the top level", head);
    }
    const Token& name = expect_name("a definition name");
    ExprPtr body = parse_expr();
    const Token& close = expect_close(open);
    Definition def;
    def.name = name.text;
    def.name_span = token_span(name);
    def.body = std::move(body);
    def.span = span_between(open, close);
    return def;
  }

  ExprPtr parse_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::String: {
        next();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::StringLit;
        e->span = token_span(t);
        e->str = t.text;
        return e;
      }
      case Token::Kind::Integer: {
        next();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::IntLit;
        e->span = token_span(t);
        e->number = t.number;
        return e;
      }
      case Token::Kind::Atom: {
        next();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::Name;
        e->span = token_span(t);
        e->name = t.text;
        return e;
      }
      case Token::Kind::Quote: {
        next();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::Quoted;
        Datum d = parse_datum();
        e->span = SourceSpan{file_, t.line, t.column, d.span.length + 1};
        e->datum = std::move(d);
        return e;
      }
      case Token::Kind::LParen:
        return parse_compound();
      case Token::Kind::Keyword:
        fail_at("unexpected keyword: #:" + t.text, t);
      case Token::Kind::RParen:
        fail_at("unexpected closing delimiter", t);
      case Token::Kind::End:
        fail_at("unexpected end of file", t);
    }
    fail_at("expected an expression", t);
  }

  ExprPtr parse_compound() {
    const Token& open = next();  // LParen
    const Token& head = next();
    if (head.kind != Token::Kind::Atom) fail_at("expected a form name", head);

    if (head.text == "let" || head.text == "let*") return parse_let(open);

    auto it = constructor_names().find(head.text);
    if (it == constructor_names().end()) fail_at("unknown form: " + head.text, head);
    RegExpKind kind = it->second;

    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Call;
    e->ctor = kind;

    int arity = positional_arity(kind);
    while (peek().kind != Token::Kind::RParen && peek().kind != Token::Kind::Keyword &&
           peek().kind != Token::Kind::End) {
      e->args.push_back(parse_expr());
    }
    if (static_cast<int>(e->args.size()) != arity) {
      fail_at(head.text + " expects " + arity_phrase(arity), head);
    }

    std::vector<KwKey> seen;
    while (peek().kind == Token::Kind::Keyword) {
      if (!accepts_keywords(kind)) {
        fail_at(head.text + " does not accept test parameters", peek());
      }
      e->kwargs.push_back(parse_kwarg(seen));
    }

    const Token& close = expect_close(open);
    e->span = span_between(open, close);
    return e;
  }

  KwArg parse_kwarg(std::vector<KwKey>& seen) {
    const Token& kw = next();
    KwArg arg;
    arg.span = token_span(kw);
    if (kw.text == "sigma") {
      arg.key = KwKey::Sigma;
    } else if (kw.text == "pred") {
      arg.key = KwKey::Pred;
    } else if (kw.text == "gen-cases") {
      arg.key = KwKey::GenCases;
    } else if (kw.text == "in-lang") {
      arg.key = KwKey::InLang;
    } else if (kw.text == "not-in-lang") {
      arg.key = KwKey::NotInLang;
    } else {
      fail_at("unknown keyword: #:" + kw.text, kw);
    }
    for (KwKey prior : seen) {
      if (prior == arg.key) fail_at("duplicate keyword: #:" + kw.text, kw);
    }
    seen.push_back(arg.key);

    if (arg.key == KwKey::Pred) {
      arg.lambda = parse_lambda();
    } else {
      arg.value = parse_expr();
    }
    return arg;
  }

  Lambda parse_lambda() {
    const Token& open = expect_open("(lambda (NAME) ...) after #:pred");
    const Token& head = next();
    if (head.kind != Token::Kind::Atom || head.text != "lambda") {
      fail_at("#:pred expects (lambda (NAME) ...)", head);
    }
    const Token& popen = expect_open("a parameter list");
    const Token& param = expect_name("a parameter name");
    expect_close(popen);
    PredExpr body = parse_pred(param.text);
    const Token& close = expect_close(open);
    Lambda lam;
    lam.param = param.text;
    lam.body = std::move(body);
    lam.span = span_between(open, close);
    infer_type(lam.body);  // argument positions must be well-typed
    return lam;
  }

  Datum parse_datum() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::Atom: {
        Datum d;
        d.kind = Datum::Kind::Symbol;
        d.span = token_span(t);
        d.text = t.text;
        return d;
      }
      case Token::Kind::Integer: {
        Datum d;
        d.kind = Datum::Kind::Integer;
        d.span = token_span(t);
        d.number = t.number;
        return d;
      }
      case Token::Kind::String: {
        Datum d;
        d.kind = Datum::Kind::String;
        d.span = token_span(t);
        d.text = t.text;
        return d;
      }
      case Token::Kind::LParen: {
        Datum d;
        d.kind = Datum::Kind::List;
        while (peek().kind != Token::Kind::RParen && peek().kind != Token::Kind::End) {
          d.items.push_back(parse_datum());
        }
        const Token& close = expect_close(t);
        d.span = span_between(t, close);
        return d;
      }
      case Token::Kind::Quote:
        fail_at("unexpected ' inside quoted data", t);
      default:
        fail_at("expected a datum", t);
    }
  }

  // --- predicate mini-language ----------------------------------------------

  PredExpr parse_pred(const std::string& param) {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Integer: {
        next();
        PredExpr e;
        e.op = PredOp::IntLit;
        e.span = token_span(t);
        e.number = t.number;
        return e;
      }
      case Token::Kind::Quote: {
        next();
        const Token& sym = next();
        if (sym.kind != Token::Kind::Atom) fail_at("expected a symbol after '", sym);
        PredExpr e;
        e.op = PredOp::SymbolLit;
        e.span = span_between(t, sym);
        e.text = sym.text;
        return e;
      }
      case Token::Kind::Atom: {
        next();
        if (t.text != param) fail_at("unknown name in predicate: " + t.text, t);
        PredExpr e;
        e.op = PredOp::WordVar;
        e.span = token_span(t);
        e.text = t.text;
        return e;
      }
      case Token::Kind::LParen:
        return parse_pred_form(param);
      default:
        fail_at("expected a predicate expression", t);
    }
  }

  PredExpr parse_pred_form(const std::string& param) {
    const Token& open = next();
    const Token& head = next();
    if (head.kind != Token::Kind::Atom) fail_at("expected a predicate operator", head);

    static const std::map<std::string, std::pair<PredOp, int>> kOps = {
        {"and", {PredOp::And, -1}},     {"or", {PredOp::Or, -1}},
        {"not", {PredOp::Not, 1}},      {"eq?", {PredOp::EqQ, 2}},
        {"=", {PredOp::NumEq, 2}},      {"<", {PredOp::Lt, 2}},
        {"<=", {PredOp::Le, 2}},        {">", {PredOp::Gt, 2}},
        {">=", {PredOp::Ge, 2}},        {"odd?", {PredOp::OddQ, 1}},
        {"even?", {PredOp::EvenQ, 1}},  {"empty?", {PredOp::EmptyQ, 1}},
        {"length", {PredOp::Length, 1}},{"first", {PredOp::First, 1}},
        {"last", {PredOp::Last, 1}},    {"rest", {PredOp::Rest, 1}},
        {"count", {PredOp::Count, 0}},  {"in-lang-of", {PredOp::InLangOf, 0}},
    };
    auto it = kOps.find(head.text);
    if (it == kOps.end()) fail_at("unknown predicate operator: " + head.text, head);

    PredExpr e;
    e.op = it->second.first;

    if (e.op == PredOp::Count) {
      const Token& q = next();
      if (q.kind != Token::Kind::Quote) fail_at("count expects a quoted symbol first", q);
      const Token& sym = next();
      if (sym.kind != Token::Kind::Atom) fail_at("expected a symbol after '", sym);
      e.text = sym.text;
      e.args.push_back(parse_pred(param));
    } else if (e.op == PredOp::InLangOf) {
      const Token& name = expect_name("a regexp name");
      e.text = name.text;
      e.args.push_back(parse_pred(param));
    } else {
      while (peek().kind != Token::Kind::RParen && peek().kind != Token::Kind::End) {
        e.args.push_back(parse_pred(param));
      }
      int arity = it->second.second;
      if (arity >= 0 && static_cast<int>(e.args.size()) != arity) {
        fail_at(head.text + " expects " +
                    (arity == 1 ? std::string("one argument") : std::to_string(arity) + " arguments"),
                head);
      }
      if (arity < 0 && e.args.empty()) {
        fail_at(head.text + " expects at least one argument", head);
      }
    }

    const Token& close = expect_close(open);
    e.span = span_between(open, close);
    return e;
  }

  PType infer_type(const PredExpr& e) {
    auto require = [&](const PredExpr& arg, PType want, const std::string& op) {
      PType got = infer_type(arg);
      if (got != want) {
        fail(op + " expects " + type_name(want) + ", but this is " + type_name(got), arg.span);
      }
    };
    switch (e.op) {
      case PredOp::WordVar: return PType::WordT;
      case PredOp::SymbolLit: return PType::Sym;
      case PredOp::IntLit: return PType::Int;
      case PredOp::And:
      case PredOp::Or:
        for (const PredExpr& a : e.args) require(a, PType::Bool, e.op == PredOp::And ? "and" : "or");
        return PType::Bool;
      case PredOp::Not:
        require(e.args[0], PType::Bool, "not");
        return PType::Bool;
      case PredOp::EqQ:
        for (const PredExpr& a : e.args) {
          PType got = infer_type(a);
          if (got != PType::Sym && got != PType::Int) {
            fail(std::string("eq? expects a symbol or an integer, but this is ") + type_name(got),
                 a.span);
          }
        }
        return PType::Bool;
      case PredOp::NumEq:
      case PredOp::Lt:
      case PredOp::Le:
      case PredOp::Gt:
      case PredOp::Ge: {
        const char* name = e.op == PredOp::NumEq ? "="
                           : e.op == PredOp::Lt  ? "<"
                           : e.op == PredOp::Le  ? "<="
                           : e.op == PredOp::Gt  ? ">"
                                                 : ">=";
        for (const PredExpr& a : e.args) require(a, PType::Int, name);
        return PType::Bool;
      }
      case PredOp::OddQ:
        require(e.args[0], PType::Int, "odd?");
        return PType::Bool;
      case PredOp::EvenQ:
        require(e.args[0], PType::Int, "even?");
        return PType::Bool;
      case PredOp::EmptyQ:
        require(e.args[0], PType::WordT, "empty?");
        return PType::Bool;
      case PredOp::Length:
        require(e.args[0], PType::WordT, "length");
        return PType::Int;
      case PredOp::Count:
        require(e.args[0], PType::WordT, "count");
        return PType::Int;
      case PredOp::First:
        require(e.args[0], PType::WordT, "first");
        return PType::Sym;
      case PredOp::Last:
        require(e.args[0], PType::WordT, "last");
        return PType::Sym;
      case PredOp::Rest:
        require(e.args[0], PType::WordT, "rest");
        return PType::WordT;
      case PredOp::InLangOf:
        require(e.args[0], PType::WordT, "in-lang-of");
        return PType::Bool;
    }
    return PType::Bool;
  }

  // --- let -------------------------------------------------------------------

  ExprPtr parse_let(const Token& open) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Let;
    const Token& bopen = expect_open("a binding list");
    while (peek().kind != Token::Kind::RParen && peek().kind != Token::Kind::End) {
      const Token& pair_open = expect_open("a binding");
      const Token& name = expect_name("a binding name");
      Binding b;
      b.name = name.text;
      b.name_span = token_span(name);
      b.value = parse_expr();
      expect_close(pair_open);
      e->bindings.push_back(std::move(b));
    }
    expect_close(bopen);
    e->body = parse_expr();
    const Token& close = expect_close(open);
    e->span = span_between(open, close);
    return e;
  }

  std::string_view text_;
  std::string file_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

std::vector<Definition> parse_file(std::string_view text, std::string file_name) {
  return Parser(text, std::move(file_name)).parse_file();
}

const char* kw_name(KwKey key) {
  switch (key) {
    case KwKey::Sigma: return "#:sigma";
    case KwKey::Pred: return "#:pred";
    case KwKey::GenCases: return "#:gen-cases";
    case KwKey::InLang: return "#:in-lang";
    case KwKey::NotInLang: return "#:not-in-lang";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string quoted_string(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string render_datum(const Datum& d) {
  switch (d.kind) {
    case Datum::Kind::Symbol: return d.text;
    case Datum::Kind::Integer: return std::to_string(d.number);
    case Datum::Kind::String: return quoted_string(d.text);
    case Datum::Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < d.items.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += render_datum(d.items[i]);
      }
      out.push_back(')');
      return out;
    }
  }
  return "?";
}

std::string render_pred(const PredExpr& e) {
  auto form = [&](const std::string& head) {
    std::string out = "(" + head;
    for (const PredExpr& a : e.args) out += " " + render_pred(a);
    out.push_back(')');
    return out;
  };
  switch (e.op) {
    case PredOp::WordVar: return e.text;
    case PredOp::SymbolLit: return "'" + e.text;
    case PredOp::IntLit: return std::to_string(e.number);
    case PredOp::And: return form("and");
    case PredOp::Or: return form("or");
    case PredOp::Not: return form("not");
    case PredOp::EqQ: return form("eq?");
    case PredOp::NumEq: return form("=");
    case PredOp::Lt: return form("<");
    case PredOp::Le: return form("<=");
    case PredOp::Gt: return form(">");
    case PredOp::Ge: return form(">=");
    case PredOp::OddQ: return form("odd?");
    case PredOp::EvenQ: return form("even?");
    case PredOp::EmptyQ: return form("empty?");
    case PredOp::Length: return form("length");
    case PredOp::Count: return "(count '" + e.text + " " + render_pred(e.args[0]) + ")";
    case PredOp::First: return form("first");
    case PredOp::Last: return form("last");
    case PredOp::Rest: return form("rest");
    case PredOp::InLangOf: return "(in-lang-of " + e.text + " " + render_pred(e.args[0]) + ")";
  }
  return "?";
}

}  // namespace

std::string render(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Name: return e.name;
    case ExprKind::StringLit: return quoted_string(e.str);
    case ExprKind::IntLit: return std::to_string(e.number);
    case ExprKind::Quoted: return "'" + render_datum(*e.datum);
    case ExprKind::Call: {
      std::string out = "(" + std::string(kind_name(e.ctor)) + "-regexp";
      for (const ExprPtr& a : e.args) out += " " + render(*a);
      for (const KwArg& kw : e.kwargs) {
        out += " " + std::string(kw_name(kw.key)) + " ";
        if (kw.key == KwKey::Pred) {
          out += "(lambda (" + kw.lambda->param + ") " + render_pred(kw.lambda->body) + ")";
        } else {
          out += render(*kw.value);
        }
      }
      out.push_back(')');
      return out;
    }
    case ExprKind::Let: {
      std::string out = "(let* (";
      for (std::size_t i = 0; i < e.bindings.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += "[" + e.bindings[i].name + " " + render(*e.bindings[i].value) + "]";
      }
      out += ") " + render(*e.body) + ")";
      return out;
    }
  }
  return "?";
}

std::string render(const std::vector<Definition>& defs) {
  std::string out;
  for (const Definition& def : defs) {
    out += "(define " + def.name + " " + render(*def.body) + ")\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural equality (spans ignored)

namespace {

bool pred_equal(const PredExpr& a, const PredExpr& b) {
  if (a.op != b.op || a.text != b.text || a.number != b.number) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!pred_equal(a.args[i], b.args[i])) return false;
  }
  return true;
}

bool datum_equal(const Datum& a, const Datum& b) {
  if (a.kind != b.kind || a.text != b.text || a.number != b.number) return false;
  if (a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (!datum_equal(a.items[i], b.items[i])) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Name: return a.name == b.name;
    case ExprKind::StringLit: return a.str == b.str;
    case ExprKind::IntLit: return a.number == b.number;
    case ExprKind::Quoted: return datum_equal(*a.datum, *b.datum);
    case ExprKind::Call: {
      if (a.ctor != b.ctor || a.args.size() != b.args.size() ||
          a.kwargs.size() != b.kwargs.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!structurally_equal(*a.args[i], *b.args[i])) return false;
      }
      for (std::size_t i = 0; i < a.kwargs.size(); ++i) {
        const KwArg& ka = a.kwargs[i];
        const KwArg& kb = b.kwargs[i];
        if (ka.key != kb.key) return false;
        if (ka.lambda.has_value() != kb.lambda.has_value()) return false;
        if (ka.lambda) {
          if (ka.lambda->param != kb.lambda->param ||
              !pred_equal(ka.lambda->body, kb.lambda->body)) {
            return false;
          }
        } else if (!structurally_equal(*ka.value, *kb.value)) {
          return false;
        }
      }
      return true;
    }
    case ExprKind::Let: {
      if (a.bindings.size() != b.bindings.size()) return false;
      for (std::size_t i = 0; i < a.bindings.size(); ++i) {
        if (a.bindings[i].name != b.bindings[i].name ||
            !structurally_equal(*a.bindings[i].value, *b.bindings[i].value)) {
          return false;
        }
      }
      return structurally_equal(*a.body, *b.body);
    }
  }
  return false;
}

bool structurally_equal(const std::vector<Definition>& a, const std::vector<Definition>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !structurally_equal(*a[i].body, *b[i].body)) return false;
  }
  return true;
}

}  // namespace rexp::dsl
