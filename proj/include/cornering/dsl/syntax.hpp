#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cornering::dsl {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// A diagnostic tied to a source location. `kind` is SyntaxError,
/// DuplicateName, UnresolvedReference, or the name of a library error kind.
class DslError : public std::runtime_error {
 public:
  DslError(std::string kind, Location at, const std::string& message)
      : std::runtime_error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + kind + ": " + message),
        kind_(std::move(kind)),
        at_(at) {}

  const std::string& kind() const { return kind_; }
  Location location() const { return at_; }

 private:
  std::string kind_;
  Location at_;
};

enum class Tok { Ident, Int, Symbol, End };

struct Token {
  Tok type;
  std::string text;
  Location at;
};

/// Splits source text into identifiers, integers and symbols. Comments run
/// from `#` or `//` to the end of the line.
inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  Location at;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
  };
  static const char* two_char[] = {"->", "^o", "^*"};
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const Location start = at;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* sym : two_char) {
      if (src.compare(i, 2, sym) == 0) {
        out.push_back({Tok::Symbol, sym, start});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string(":*;()<>|[],=@").find(c) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), start});
      advance(1);
      continue;
    }
    throw DslError("SyntaxError", start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", at});
  return out;
}

struct Name {
  std::string text;
  Location at;
};

/// A word of object or set names; empty means I.
struct WordAst {
  std::vector<Name> letters;
  Location at;
};

struct ExprAst;
using ExprPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
  struct Ref {
    std::string name;
  };
  struct Id {
    WordAst word;
  };
  struct Copy {
    WordAst word;
  };
  struct Delete {
    WordAst word;
  };
  struct Table {
    WordAst dom;
    WordAst cod;
    std::vector<std::size_t> values;
  };
  struct Seq {
    ExprPtr first;
    ExprPtr second;
  };
  struct Par {
    ExprPtr left;
    ExprPtr right;
  };
  std::variant<Ref, Id, Copy, Delete, Table, Seq, Par> node;
  Location at;
};

struct PolarAtom {
  WordAst word;
  bool bullet = false;
};

/// One top-level declaration.
struct Decl {
  enum class Kind { Object, Gen, Set, Fun, Term, Comb, Left, Optic, Lens, Polar };
  Kind kind;
  std::vector<Name> names;  // object lists; otherwise a single name
  Location at;
  WordAst dom, cod;              // gen, fun
  std::size_t size = 0;          // set
  std::vector<std::size_t> values;  // fun
  std::vector<ExprPtr> exprs;    // term: 1; comb/left/optic: teeth; lens: get, put
  std::vector<WordAst> words;    // comb/left residuals; optic residual
  std::vector<PolarAtom> polar;  // polar
};

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  std::vector<Decl> parse() {
    std::vector<Decl> decls;
    while (peek().type != Tok::End) decls.push_back(decl());
    return decls;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool at_symbol(const char* s) const { return peek().type == Tok::Symbol && peek().text == s; }
  bool at_keyword(const char* s) const { return peek().type == Tok::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw DslError("SyntaxError", t.at,
                   "expected " + what + ", found " + (t.type == Tok::End ? std::string("end of input") : "'" + t.text + "'"));
  }

  void expect(const char* sym) {
    if (!at_symbol(sym)) fail(std::string("'") + sym + "'");
    take();
  }
  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(std::string("'") + kw + "'");
    take();
  }

  Name ident() {
    if (peek().type != Tok::Ident) fail("a name");
    const Token& t = take();
    return {t.text, t.at};
  }

  std::size_t integer() {
    if (peek().type != Tok::Int) fail("an integer");
    const Token& t = take();
    try {
      return std::stoul(t.text);
    } catch (const std::exception&) {
      throw DslError("SyntaxError", t.at, "integer out of range");
    }
  }

  std::vector<std::size_t> int_list() {
    expect("[");
    std::vector<std::size_t> v;
    if (!at_symbol("]")) {
      v.push_back(integer());
      while (at_symbol(",")) {
        take();
        v.push_back(integer());
      }
    }
    expect("]");
    return v;
  }

  // word := atom ('*' atom)* ; atom := 'I' | name | '(' word ')'
  WordAst word() {
    WordAst w;
    w.at = peek().at;
    word_atom(w);
    while (at_symbol("*")) {
      take();
      word_atom(w);
    }
    return w;
  }

  void word_atom(WordAst& w) {
    if (at_symbol("(")) {
      take();
      WordAst inner = word();
      w.letters.insert(w.letters.end(), inner.letters.begin(), inner.letters.end());
      expect(")");
      return;
    }
    Name n = ident();
    if (n.text != "I") w.letters.push_back(std::move(n));
  }

  // expr := par (';' par)* ; par := atom ('*' atom)*
  ExprPtr expr() {
    ExprPtr lhs = par();
    while (at_symbol(";")) {
      const Location at = take().at;
      ExprPtr rhs = par();
      lhs = std::make_shared<const ExprAst>(ExprAst{ExprAst::Seq{lhs, rhs}, at});
    }
    return lhs;
  }

  ExprPtr par() {
    ExprPtr lhs = atom();
    while (at_symbol("*")) {
      const Location at = take().at;
      ExprPtr rhs = atom();
      lhs = std::make_shared<const ExprAst>(ExprAst{ExprAst::Par{lhs, rhs}, at});
    }
    return lhs;
  }

  ExprPtr atom() {
    const Location at = peek().at;
    if (at_symbol("(")) {
      take();
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    const Name n = ident();
    auto word_arg = [this]() {
      expect("(");
      WordAst w = word();
      expect(")");
      return w;
    };
    if (at_symbol("(")) {
      if (n.text == "id") return make(ExprAst::Id{word_arg()}, at);
      if (n.text == "copy") return make(ExprAst::Copy{word_arg()}, at);
      if (n.text == "delete") return make(ExprAst::Delete{word_arg()}, at);
      if (n.text == "table") {
        expect("(");
        WordAst d = word();
        expect("->");
        WordAst c = word();
        expect(":");
        std::vector<std::size_t> values;
        if (!at_symbol(")")) {
          values.push_back(integer());
          while (at_symbol(",")) {
            take();
            values.push_back(integer());
          }
        }
        expect(")");
        return make(ExprAst::Table{std::move(d), std::move(c), std::move(values)}, at);
      }
    }
    return make(ExprAst::Ref{n.text}, at);
  }

  template <class Node>
  static ExprPtr make(Node node, Location at) {
    return std::make_shared<const ExprAst>(ExprAst{std::move(node), at});
  }

  // '<' expr ('|' expr)* '>'
  std::vector<ExprPtr> teeth() {
    expect("<");
    std::vector<ExprPtr> t{expr()};
    while (at_symbol("|")) {
      take();
      t.push_back(expr());
    }
    expect(">");
    return t;
  }

  std::vector<WordAst> residual_list() {
    std::vector<WordAst> out;
    if (!at_keyword("residuals")) return out;
    take();
    expect("[");
    if (!at_symbol("]")) {
      out.push_back(word());
      while (at_symbol(",")) {
        take();
        out.push_back(word());
      }
    }
    expect("]");
    return out;
  }

  Decl decl() {
    if (peek().type != Tok::Ident) fail("a declaration");
    const Token kw = take();
    Decl d;
    d.at = kw.at;
    const std::string& k = kw.text;
    if (k == "object") {
      d.kind = Decl::Kind::Object;
      d.names.push_back(ident());
      while (at_symbol(",")) {
        take();
        d.names.push_back(ident());
      }
    } else if (k == "gen" || k == "fun") {
      d.kind = k == "gen" ? Decl::Kind::Gen : Decl::Kind::Fun;
      d.names.push_back(ident());
      expect(":");
      d.dom = word();
      expect("->");
      d.cod = word();
      if (d.kind == Decl::Kind::Fun) {
        expect("=");
        d.values = int_list();
      }
    } else if (k == "set") {
      d.kind = Decl::Kind::Set;
      d.names.push_back(ident());
      expect("=");
      d.size = integer();
    } else if (k == "term") {
      d.kind = Decl::Kind::Term;
      d.names.push_back(ident());
      expect("=");
      d.exprs.push_back(expr());
    } else if (k == "comb" || k == "left") {
      d.kind = k == "comb" ? Decl::Kind::Comb : Decl::Kind::Left;
      d.names.push_back(ident());
      expect("=");
      d.exprs = teeth();
      d.words = residual_list();
    } else if (k == "optic") {
      d.kind = Decl::Kind::Optic;
      d.names.push_back(ident());
      expect("=");
      d.exprs = teeth();
      expect("@");
      d.words.push_back(word());
    } else if (k == "lens") {
      d.kind = Decl::Kind::Lens;
      d.names.push_back(ident());
      expect("=");
      expect_keyword("get");
      d.exprs.push_back(expr());
      expect_keyword("put");
      d.exprs.push_back(expr());
    } else if (k == "polar") {
      d.kind = Decl::Kind::Polar;
      d.names.push_back(ident());
      expect("=");
      d.polar.push_back(polar_atom());
      while (at_symbol("*")) {
        take();
        d.polar.push_back(polar_atom());
      }
    } else {
      throw DslError("SyntaxError", kw.at, "unknown declaration '" + k + "'");
    }
    return d;
  }

  PolarAtom polar_atom() {
    PolarAtom a;
    if (at_symbol("(")) {
      take();
      a.word = word();
      expect(")");
    } else {
      a.word.at = peek().at;
      Name n = ident();
      if (n.text != "I") a.word.letters.push_back(std::move(n));
    }
    if (at_symbol("^o")) {
      take();
    } else if (at_symbol("^*")) {
      take();
      a.bullet = true;
    } else {
      fail("'^o' or '^*'");
    }
    return a;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline std::vector<Decl> parse_decls(const std::string& src) { return Parser(src).parse(); }

}  // namespace cornering::dsl
