#include <cctype>
#include <map>
#include <sstream>

#include "folmod/formula.hpp"

namespace folmod {

ParseError::ParseError(std::string message, int line_, int column_)
    : std::runtime_error(message + " (line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ")"),
      line(line_),
      column(column_) {}

namespace {

enum class Tok : std::uint8_t { Ident, Tilde, Eq, Not, And, Or, Implies, Iff, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    int tl = line, tc = col;
    auto push = [&](Tok k, std::size_t n) {
      out.push_back({k, text.substr(i, n), tl, tc});
      bump(n);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 1;
      while (i + n < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + n])) || text[i + n] == '_'))
        ++n;
      push(Tok::Ident, n);
      continue;
    }
    switch (c) {
      case '~': push(Tok::Tilde, 1); continue;
      case '=': push(Tok::Eq, 1); continue;
      case '!': push(Tok::Not, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::Implies, 2);
          continue;
        }
        throw ParseError("expected '->'", line, col);
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          push(Tok::Iff, 3);
          continue;
        }
        throw ParseError("expected '<->'", line, col);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::vector<std::string>& free_names)
      : toks_(std::move(toks)) {
    for (const auto& name : free_names) {
      if (vars_.count(name))
        throw std::invalid_argument("parse: duplicate free variable '" + name + "'");
      int id = static_cast<int>(names_.size());
      names_.push_back(name);
      vars_[name] = id;
      free_.push_back(id);
    }
  }

  Formula run() {
    parse_prefix();
    Expr matrix = parse_iff();
    expect(Tok::End, "unexpected trailing input");
    return Formula(std::move(names_), std::move(prefix_), std::move(free_), std::move(matrix));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t j = pos_ + ahead;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(Tok k, const char* msg) {
    if (peek().kind != k) throw ParseError(msg, peek().line, peek().column);
    take();
  }

  void parse_prefix() {
    while (peek().kind == Tok::Ident && (peek().text == "A" || peek().text == "E") &&
           peek(1).kind == Tok::Ident && peek(2).kind == Tok::Dot) {
      Token q = take();
      Token v = take();
      take();  // dot
      if (vars_.count(v.text))
        throw ParseError("variable '" + v.text + "' quantified twice", v.line, v.column);
      int id = static_cast<int>(names_.size());
      names_.push_back(v.text);
      vars_[v.text] = id;
      prefix_.push_back({q.text == "A" ? Quantifier::ForAll : Quantifier::Exists, id});
    }
  }

  int resolve(const Token& t) {
    auto it = vars_.find(t.text);
    if (it == vars_.end())
      throw ParseError("variable '" + t.text + "' is neither quantified nor declared free",
                       t.line, t.column);
    return it->second;
  }

  Expr parse_iff() {
    Expr e = parse_implies();
    while (peek().kind == Tok::Iff) {
      take();
      e = Expr::equivalence(e, parse_implies());
    }
    return e;
  }

  Expr parse_implies() {
    Expr e = parse_or();
    if (peek().kind == Tok::Implies) {
      take();
      return Expr::implication(e, parse_implies());
    }
    return e;
  }

  Expr parse_or() {
    Expr e = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      e = Expr::disjunction(e, parse_and());
    }
    return e;
  }

  Expr parse_and() {
    Expr e = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      e = Expr::conjunction(e, parse_unary());
    }
    return e;
  }

  Expr parse_unary() {
    if (peek().kind == Tok::Not) {
      take();
      return Expr::negation(parse_unary());
    }
    if (peek().kind == Tok::LParen) {
      take();
      Expr e = parse_iff();
      expect(Tok::RParen, "expected ')'");
      return e;
    }
    if (peek().kind == Tok::Ident) {
      Token a = take();
      if (peek().kind == Tok::Tilde) {
        take();
        Token b = peek();
        expect(Tok::Ident, "expected variable after '~'");
        return Expr::adjacent(resolve(a), resolve(b));
      }
      if (peek().kind == Tok::Eq) {
        take();
        Token b = peek();
        expect(Tok::Ident, "expected variable after '='");
        return Expr::equal(resolve(a), resolve(b));
      }
      throw ParseError("expected '~' or '=' after variable", peek().line, peek().column);
    }
    throw ParseError("expected an atom, '!' or '('", peek().line, peek().column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, int> vars_;
  std::vector<PrefixEntry> prefix_;
  std::vector<int> free_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Iff: return 1;
    case Expr::Kind::Implies: return 2;
    case Expr::Kind::Or: return 3;
    case Expr::Kind::And: return 4;
    case Expr::Kind::Not: return 5;
    case Expr::Kind::Atom: return 6;
  }
  return 6;
}

void print_expr(std::ostringstream& os, const Expr& e, int min_prec,
                const std::vector<std::string>& names) {
  int prec = precedence(e.kind());
  bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (e.kind()) {
    case Expr::Kind::Atom:
      os << names.at(e.var_a()) << (e.atom_kind() == AtomKind::Adjacent ? " ~ " : " = ")
         << names.at(e.var_b());
      break;
    case Expr::Kind::Not:
      os << '!';
      if (e.left().kind() == Expr::Kind::Not) {
        print_expr(os, e.left(), precedence(Expr::Kind::Not), names);
      } else {
        os << '(';
        print_expr(os, e.left(), 0, names);
        os << ')';
      }
      break;
    case Expr::Kind::And:
      print_expr(os, e.left(), prec, names);
      os << " & ";
      print_expr(os, e.right(), prec + 1, names);
      break;
    case Expr::Kind::Or:
      print_expr(os, e.left(), prec, names);
      os << " | ";
      print_expr(os, e.right(), prec + 1, names);
      break;
    case Expr::Kind::Implies:
      print_expr(os, e.left(), prec + 1, names);
      os << " -> ";
      print_expr(os, e.right(), prec, names);
      break;
    case Expr::Kind::Iff:
      print_expr(os, e.left(), prec, names);
      os << " <-> ";
      print_expr(os, e.right(), prec + 1, names);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

Formula parse(const std::string& text, const std::vector<std::string>& free_names) {
  return Parser(tokenize(text), free_names).run();
}

std::string pretty_print(const Expr& matrix, const std::vector<std::string>& names) {
  std::ostringstream os;
  print_expr(os, matrix, 0, names);
  return os.str();
}

std::string pretty_print(const Formula& f) {
  std::ostringstream os;
  for (const auto& e : f.prefix())
    os << (e.quantifier == Quantifier::ForAll ? "A " : "E ") << f.name_of(e.variable) << ". ";
  std::ostringstream body;
  print_expr(body, f.matrix(), 0, f.names());
  os << body.str();
  return os.str();
}

}  // namespace folmod
