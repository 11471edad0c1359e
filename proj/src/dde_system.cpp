#include "dde/dde_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace dde {

size_t DdeSystem::y_index(int i, int ell) const {
  if (i < 1 || i > n || ell < 0 || ell > k) throw StructuralError("DdeSystem::y_index: out of range");
  return static_cast<size_t>((i - 1) * (k + 1) + ell);
}

long DdeSystem::delta() const {
  long d = 0;
  for (const auto& fi : f) d = std::max(d, fi.degree());
  size_t t_idx = t_index();
  std::optional<size_t> eps_idx;
  if (has_eps) eps_idx = eps_index();
  for (const auto& qi : q) {
    for (const auto& term : qi.terms()) {
      long td = 0;
      for (size_t v = 0; v < term.mono.size(); ++v) {
        if (v == t_idx || (eps_idx && v == *eps_idx)) continue;
        td += term.mono[v];
      }
      d = std::max(d, td);
    }
  }
  return std::max(d, 1L);
}

bool DdeSystem::q_all_zero() const {
  for (const auto& qi : q)
    if (!qi.is_zero()) return false;
  return true;
}

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Equals, End } kind;
  std::string text;
  int line = 0, col = 0;
};

class Lexer {
 public:
  Lexer(const std::string& line_text, int line_no) : s_(line_text), line_(line_no) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.line = line_;
    tok_.col = static_cast<int>(i_) + 1;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", line_, tok_.col};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      tok_ = {Token::Number, s_.substr(start, i_ - start), line_, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      tok_ = {Token::Ident, s_.substr(start, i_ - start), line_, tok_.col};
      return;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      case '[': k = Token::LBracket; break;
      case ']': k = Token::RBracket; break;
      case '=': k = Token::Equals; break;
      default:
        throw ParseError(line_, static_cast<int>(i_) + 1, std::string("unexpected character '") + c + "'");
    }
    tok_ = {k, std::string(1, c), line_, tok_.col};
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  int line_;
  Token tok_;
};

struct Expr {
  enum Kind { Num, TVar, UVar, FRef, DRef, Add, Sub, Mul, Pow, Neg } kind;
  Rational num;
  int fidx = 0;    // FRef/DRef
  int dorder = 0;  // DRef
  unsigned expo = 0;
  std::unique_ptr<Expr> lhs, rhs;
  int line = 0, col = 0;
};
using ExprPtr = std::unique_ptr<Expr>;

class EqParser {
 public:
  EqParser(Lexer& lex, int* max_f, int* max_d) : lex_(lex), max_f_(max_f), max_d_(max_d) {}

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      Token op = lex_.next();
      ExprPtr rhs = parse_term();
      auto node = std::make_unique<Expr>();
      node->kind = op.kind == Token::Plus ? Expr::Add : Expr::Sub;
      node->line = op.line;
      node->col = op.col;
      node->lhs = std::move(e);
      node->rhs = std::move(rhs);
      e = std::move(node);
    }
    return e;
  }

 private:
  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (lex_.peek().kind == Token::Star) {
      Token op = lex_.next();
      ExprPtr rhs = parse_factor();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Mul;
      node->line = op.line;
      node->col = op.col;
      node->lhs = std::move(e);
      node->rhs = std::move(rhs);
      e = std::move(node);
    }
    return e;
  }

  ExprPtr parse_factor() {
    if (lex_.peek().kind == Token::Minus) {
      Token op = lex_.next();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Neg;
      node->line = op.line;
      node->col = op.col;
      node->lhs = parse_factor();
      return node;
    }
    ExprPtr base = parse_atom();
    if (lex_.peek().kind == Token::Caret) {
      Token op = lex_.next();
      Token e = lex_.next();
      if (e.kind != Token::Number || e.text.find('/') != std::string::npos)
        throw ParseError(e.line, e.col, "exponent must be a nonnegative integer");
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Pow;
      node->line = op.line;
      node->col = op.col;
      node->expo = static_cast<unsigned>(std::stoul(e.text));
      node->lhs = std::move(base);
      return node;
    }
    return base;
  }

  ExprPtr parse_atom() {
    Token t = lex_.next();
    auto node = std::make_unique<Expr>();
    node->line = t.line;
    node->col = t.col;
    switch (t.kind) {
      case Token::Number:
        node->kind = Expr::Num;
        node->num = Rational(t.text);
        return node;
      case Token::LParen: {
        ExprPtr inner = parse_expr();
        Token close = lex_.next();
        if (close.kind != Token::RParen) throw ParseError(close.line, close.col, "expected ')'");
        return inner;
      }
      case Token::Ident: {
        const std::string& id = t.text;
        if (id == "t") {
          node->kind = Expr::TVar;
          return node;
        }
        if (id == "u") {
          node->kind = Expr::UVar;
          return node;
        }
        if (id[0] == 'F' && id.size() > 1 && std::isdigit(static_cast<unsigned char>(id[1]))) {
          node->kind = Expr::FRef;
          node->fidx = std::stoi(id.substr(1));
          if (node->fidx < 1) throw ParseError(t.line, t.col, "bad series index in '" + id + "'");
          *max_f_ = std::max(*max_f_, node->fidx);
          return node;
        }
        if (id[0] == 'D') {
          int order = 1;
          if (id.size() > 1) {
            for (size_t i = 1; i < id.size(); ++i)
              if (!std::isdigit(static_cast<unsigned char>(id[i])))
                throw ParseError(t.line, t.col, "unknown symbol '" + id + "'");
            order = std::stoi(id.substr(1));
          }
          if (order < 1) throw ParseError(t.line, t.col, "discrete derivative order must be >= 1");
          Token lb = lex_.next();
          if (lb.kind != Token::LBracket) throw ParseError(lb.line, lb.col, "expected '[' after D");
          Token f = lex_.next();
          if (f.kind != Token::Ident || f.text[0] != 'F' || f.text.size() < 2)
            throw ParseError(f.line, f.col, "expected F<i> inside D[...]");
          Token rb = lex_.next();
          if (rb.kind != Token::RBracket) throw ParseError(rb.line, rb.col, "expected ']'");
          node->kind = Expr::DRef;
          node->fidx = std::stoi(f.text.substr(1));
          node->dorder = order;
          if (node->fidx < 1) throw ParseError(f.line, f.col, "bad series index");
          *max_f_ = std::max(*max_f_, node->fidx);
          *max_d_ = std::max(*max_d_, order);
          return node;
        }
        throw ParseError(t.line, t.col, "unknown symbol '" + id + "'");
      }
      default:
        throw ParseError(t.line, t.col, "unexpected token '" + t.text + "'");
    }
  }

  Lexer& lex_;
  int* max_f_;
  int* max_d_;
};

MultiPoly eval_expr(const Expr& e, const DdeSystem& sys) {
  const auto& table = sys.qtable;
  switch (e.kind) {
    case Expr::Num:
      return MultiPoly::constant(table, e.num);
    case Expr::TVar:
      return MultiPoly::variable(table, sys.t_index());
    case Expr::UVar:
      return MultiPoly::variable(table, sys.u_index());
    case Expr::FRef:
      if (e.fidx > sys.n) throw ParseError(e.line, e.col, "undefined series F" + std::to_string(e.fidx));
      return MultiPoly::variable(table, sys.y_index(e.fidx, 0));
    case Expr::DRef:
      if (e.fidx > sys.n) throw ParseError(e.line, e.col, "undefined series F" + std::to_string(e.fidx));
      if (e.dorder > sys.k)
        throw ParseError(e.line, e.col,
                         "discrete derivative of order " + std::to_string(e.dorder) + " exceeds the system order " +
                             std::to_string(sys.k));
      return MultiPoly::variable(table, sys.y_index(e.fidx, e.dorder));
    case Expr::Add:
      return eval_expr(*e.lhs, sys) + eval_expr(*e.rhs, sys);
    case Expr::Sub:
      return eval_expr(*e.lhs, sys) - eval_expr(*e.rhs, sys);
    case Expr::Mul:
      return eval_expr(*e.lhs, sys) * eval_expr(*e.rhs, sys);
    case Expr::Pow:
      return eval_expr(*e.lhs, sys).pow(e.expo);
    case Expr::Neg:
      return -eval_expr(*e.lhs, sys);
  }
  throw StructuralError("eval_expr: unreachable");
}

std::string describe_term(const MultiPoly::Term& term, const DdeSystem& sys) {
  MultiPoly one = MultiPoly::monomial(sys.qtable, term.mono, term.coeff);
  return one.str();
}

}  // namespace

DdeSystem parse_dde(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  DdeSystem sys;
  bool have_header = false;
  std::optional<int> declared_order;

  struct PendingEq {
    int fidx;
    ExprPtr rhs;
    int line;
  };
  std::vector<PendingEq> eqs;
  int max_f = 0, max_d = 0;

  std::vector<std::string> raw_lines;
  while (std::getline(in, line)) raw_lines.push_back(line);

  for (const auto& raw : raw_lines) {
    ++line_no;
    // strip comments
    std::string l = raw;
    if (auto pos = l.find('#'); pos != std::string::npos) l = l.substr(0, pos);
    bool blank = true;
    for (char c : l)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;

    Lexer lex(l, line_no);
    Token first = lex.peek();
    if (first.kind == Token::Ident && first.text == "catalytic") {
      lex.next();
      Token uu = lex.next();
      if (uu.kind != Token::Ident || uu.text != "u") throw ParseError(uu.line, uu.col, "expected 'u' after 'catalytic'");
      Token at = lex.next();
      if (at.kind != Token::Ident || at.text != "at") throw ParseError(at.line, at.col, "expected 'at'");
      int sign = 1;
      if (lex.peek().kind == Token::Minus) {
        lex.next();
        sign = -1;
      }
      Token val = lex.next();
      if (val.kind != Token::Number) throw ParseError(val.line, val.col, "expected a rational catalytic point");
      sys.a = Rational(val.text);
      if (sign < 0) sys.a = -sys.a;
      if (lex.peek().kind != Token::End) throw ParseError(lex.peek().line, lex.peek().col, "trailing input after header");
      have_header = true;
      continue;
    }
    if (first.kind == Token::Ident && first.text == "order") {
      lex.next();
      Token val = lex.next();
      if (val.kind != Token::Number || val.text.find('/') != std::string::npos)
        throw ParseError(val.line, val.col, "expected an integer order");
      declared_order = std::stoi(val.text);
      if (*declared_order < 1) throw ParseError(val.line, val.col, "order must be >= 1");
      if (lex.peek().kind != Token::End) throw ParseError(lex.peek().line, lex.peek().col, "trailing input after order");
      continue;
    }

    // equation line: Fi = expr
    Token fi = lex.next();
    if (fi.kind != Token::Ident || fi.text[0] != 'F' || fi.text.size() < 2)
      throw ParseError(fi.line, fi.col, "expected an equation 'Fi = ...'");
    int fidx = std::stoi(fi.text.substr(1));
    Token eq = lex.next();
    if (eq.kind != Token::Equals) throw ParseError(eq.line, eq.col, "expected '='");
    EqParser ep(lex, &max_f, &max_d);
    ExprPtr rhs = ep.parse_expr();
    if (lex.peek().kind != Token::End)
      throw ParseError(lex.peek().line, lex.peek().col, "trailing input after equation");
    eqs.push_back({fidx, std::move(rhs), line_no});
  }

  if (!have_header) throw ParseError(1, 1, "missing header 'catalytic u at <rational>'");
  if (eqs.empty()) throw ParseError(line_no, 1, "no equations");

  sys.n = static_cast<int>(eqs.size());
  if (max_f > sys.n) throw ParseError(1, 1, "series F" + std::to_string(max_f) + " referenced but not defined");
  std::vector<char> seen(sys.n + 1, 0);
  for (const auto& e : eqs) {
    if (e.fidx < 1 || e.fidx > sys.n || seen[e.fidx])
      throw ParseError(e.line, 1, "equations must define F1..Fn exactly once");
    seen[e.fidx] = 1;
  }
  sys.k = std::max(1, max_d);
  if (declared_order) {
    if (max_d > *declared_order) throw ParseError(1, 1, "discrete derivative order exceeds the declared order");
    sys.k = *declared_order;
  }

  std::vector<std::string> names;
  for (int i = 1; i <= sys.n; ++i)
    for (int l = 0; l <= sys.k; ++l) {
      std::string nm = "y" + std::to_string((i - 1) * (sys.k + 1) + l + 1);
      names.push_back(nm);
    }
  names.push_back("t");
  names.push_back("u");
  sys.qtable = VarTable::make(names);

  std::sort(eqs.begin(), eqs.end(), [](const PendingEq& a, const PendingEq& b) { return a.fidx < b.fidx; });
  size_t t_idx = sys.t_index();
  size_t u_idx = sys.u_index();
  for (const auto& e : eqs) {
    MultiPoly rhs = eval_expr(*e.rhs, sys);
    // split: f_i(u) = the t-free part; it must be free of the series symbols
    std::vector<MultiPoly::Term> tfree, rest;
    for (const auto& term : rhs.terms()) {
      if (term.mono[t_idx] == 0) {
        for (size_t v = 0; v < term.mono.size(); ++v)
          if (v != u_idx && term.mono[v] != 0)
            throw ParseError(e.line, 1,
                             "term '" + describe_term(term, sys) +
                                 "' uses a series without the factor t (not of fixed-point shape)");
        tfree.push_back(term);
      } else {
        MultiPoly::Term dropped = term;
        dropped.mono[t_idx] -= 1;
        rest.push_back(dropped);
      }
    }
    std::vector<Rational> fcoeffs;
    for (const auto& term : tfree) {
      Exponent eu = term.mono[u_idx];
      if (fcoeffs.size() <= eu) fcoeffs.resize(eu + 1, Rational(0));
      fcoeffs[eu] += term.coeff;
    }
    sys.f.push_back(UPoly::from_coeffs(std::move(fcoeffs)));
    sys.q.push_back(MultiPoly::from_terms(sys.qtable, std::move(rest), rhs.order()));
  }
  return sys;
}

DdeSystem shift_catalytic_point(const DdeSystem& sys) {
  if (sys.a.is_zero()) return sys;
  DdeSystem out = sys;
  out.a = Rational(0);
  out.shifted_by = sys.a;
  for (auto& fi : out.f) fi = fi.shift_argument(sys.a);
  size_t u_idx = sys.u_index();
  MultiPoly u_plus_a =
      MultiPoly::variable(sys.qtable, u_idx) + MultiPoly::constant(sys.qtable, sys.a);
  std::map<size_t, MultiPoly> binding{{u_idx, u_plus_a}};
  for (auto& qi : out.q) qi = qi.substitute(binding, sys.qtable, qi.order());
  return out;
}

}  // namespace dde
