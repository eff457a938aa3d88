#pragma once

#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fga/jet.hpp"
#include "fga/scalar.hpp"

namespace fga {

/// Coordinates on the 5-space, in storage order.
enum Coord : int { CX = 0, CY = 1, CP = 2, CQ = 3, CZ = 4 };
inline const char* coord_name(int c) {
  static const char* names[5] = {"x", "y", "p", "q", "z"};
  return names[c];
}

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)),
        offset(offset) {}
  std::size_t offset;
};

/// A base point together with its field mode.
struct Point5 {
  std::array<Rational, 5> c{};
  Rational operator[](int i) const { return c[i]; }
  Rational& operator[](int i) { return c[i]; }
};

enum class FuncTag { Exp, Log, Sin, Cos };

/// Immutable expression tree over the coordinates (x,y,p,q,z) and a set of
/// named rational parameters.  Light constant folding only; no
/// canonicalization.
class Expr {
 public:
  enum class Kind { Num, Coord, Param, Sum, Prod, Quot, Pow, Func };

  struct Node {
    Kind kind;
    Rational num;                        // Num; Pow exponent
    int index = -1;                      // Coord / Param
    FuncTag func = FuncTag::Exp;         // Func
    std::vector<std::shared_ptr<const Node>> kids;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Expr() : n_(number(0).n_) {}
  explicit Expr(NodePtr n) : n_(std::move(n)) {}

  static Expr number(const Rational& v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Num;
    n->num = v;
    return Expr(n);
  }
  static Expr coord(int c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Coord;
    n->index = c;
    return Expr(n);
  }
  static Expr param(int idx) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Param;
    n->index = idx;
    return Expr(n);
  }

  const Node& node() const { return *n_; }
  Kind kind() const { return n_->kind; }
  bool is_number(const Rational& v) const {
    return n_->kind == Kind::Num && n_->num == v;
  }

  friend Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_number(0)) return b;
    if (b.is_number(0)) return a;
    if (a.kind() == Kind::Num && b.kind() == Kind::Num)
      return number(a.n_->num + b.n_->num);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->kids = {a.n_, b.n_};
    return Expr(n);
  }
  friend Expr operator-(const Expr& a, const Expr& b) {
    return a + number(-1) * b;
  }
  friend Expr operator-(const Expr& a) { return number(-1) * a; }
  friend Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_number(0) || b.is_number(0)) return number(0);
    if (a.is_number(1)) return b;
    if (b.is_number(1)) return a;
    if (a.kind() == Kind::Num && b.kind() == Kind::Num)
      return number(a.n_->num * b.n_->num);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Prod;
    n->kids = {a.n_, b.n_};
    return Expr(n);
  }
  friend Expr operator/(const Expr& a, const Expr& b) {
    if (a.is_number(0) && !b.is_number(0)) return number(0);
    if (b.is_number(1)) return a;
    if (a.kind() == Kind::Num && b.kind() == Kind::Num && b.n_->num != 0)
      return number(a.n_->num / b.n_->num);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Quot;
    n->kids = {a.n_, b.n_};
    return Expr(n);
  }
  static Expr pow(const Expr& base, const Rational& e) {
    if (e == 0) return number(1);
    if (e == 1) return base;
    if (base.kind() == Kind::Num && denominator(e) == 1 && numerator(e) >= 0)
      return number(pow_rat(base.n_->num, e));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->num = e;
    n->kids = {base.n_};
    return Expr(n);
  }
  static Expr apply(FuncTag f, const Expr& arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Func;
    n->func = f;
    n->kids = {arg.n_};
    return Expr(n);
  }

 private:
  NodePtr n_;
};

/// Symbolic partial derivative with respect to coordinate v (parameters are
/// constants).  Closed on valid expressions.
inline Expr diff_expr(const Expr& e, int v) {
  using K = Expr::Kind;
  const auto& n = e.node();
  switch (n.kind) {
    case K::Num:
    case K::Param:
      return Expr::number(0);
    case K::Coord:
      return Expr::number(n.index == v ? 1 : 0);
    case K::Sum: {
      Expr out = Expr::number(0);
      for (const auto& k : n.kids) out = out + diff_expr(Expr(k), v);
      return out;
    }
    case K::Prod: {
      Expr a(n.kids[0]), b(n.kids[1]);
      return diff_expr(a, v) * b + a * diff_expr(b, v);
    }
    case K::Quot: {
      Expr a(n.kids[0]), b(n.kids[1]);
      return (diff_expr(a, v) * b - a * diff_expr(b, v)) / Expr::pow(b, 2);
    }
    case K::Pow: {
      Expr a(n.kids[0]);
      return Expr::number(n.num) * Expr::pow(a, n.num - 1) * diff_expr(a, v);
    }
    case K::Func: {
      Expr a(n.kids[0]);
      Expr da = diff_expr(a, v);
      switch (n.func) {
        case FuncTag::Exp: return Expr::apply(FuncTag::Exp, a) * da;
        case FuncTag::Log: return da / a;
        case FuncTag::Sin: return Expr::apply(FuncTag::Cos, a) * da;
        case FuncTag::Cos: return -Expr::apply(FuncTag::Sin, a) * da;
      }
    }
  }
  throw std::logic_error("unreachable");
}

/// D = d/dx + p d/dy + q d/dp + F d/dz, the total differential of z' = F.
inline Expr total_diff(const Expr& e, const Expr& F) {
  return diff_expr(e, CX) + Expr::coord(CP) * diff_expr(e, CY) +
         Expr::coord(CQ) * diff_expr(e, CP) + F * diff_expr(e, CZ);
}

namespace detail {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& params)
      : s_(text), params_(params) {}

  Expr parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", 0);
    Expr e = sum();
    skip();
    if (pos_ < s_.size()) throw ParseError("unexpected character", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Expr sum() {
    Expr e = term();
    for (;;) {
      if (eat('+')) e = e + term();
      else if (eat('-')) e = e - term();
      else return e;
    }
  }
  Expr term() {
    Expr e = unary();
    for (;;) {
      if (eat('*')) e = e * unary();
      else if (eat('/')) e = e / unary();
      else return e;
    }
  }
  Expr unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      Expr e = exponent();
      const auto& n = e.node();
      if (n.kind != Expr::Kind::Num)
        throw ParseError("exponent must be a rational constant", at);
      return Expr::pow(base, n.num);
    }
    return base;
  }
  Expr exponent() {
    // right-associative, allows leading minus and parenthesized rationals
    if (eat('-')) return -exponent();
    if (peek() == '(') return atom();
    Expr base = atom();
    if (eat('^')) {
      Expr e = exponent();
      const auto& n = e.node();
      if (n.kind != Expr::Kind::Num)
        throw ParseError("exponent must be a rational constant", pos_);
      return Expr::pow(base, n.num);
    }
    return base;
  }
  Expr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::islower(static_cast<unsigned char>(c))) return identifier();
    throw ParseError("syntax error", pos_);
  }
  Expr literal() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Rational num(Int(s_.substr(start, pos_ - start)));
    // n/d rational literal: slash directly followed by a digit
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int den(s_.substr(ds, pos_ - ds));
      if (den == 0) throw ParseError("malformed rational literal (zero denominator)", ds);
      return Expr::number(num / Rational(den));
    }
    return Expr::number(num);
  }
  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::islower(static_cast<unsigned char>(s_[pos_])) ||
            std::isdigit(static_cast<unsigned char>(s_[pos_]))))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.size() == 1) {
      for (int c = 0; c < 5; ++c)
        if (name == coord_name(c)) return Expr::coord(c);
    }
    static const std::map<std::string, FuncTag> funcs = {
        {"exp", FuncTag::Exp}, {"log", FuncTag::Log},
        {"sin", FuncTag::Sin}, {"cos", FuncTag::Cos}};
    auto f = funcs.find(name);
    if (f != funcs.end()) {
      if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
      Expr arg = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return Expr::apply(f->second, arg);
    }
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (params_[i] == name) return Expr::param(static_cast<int>(i));
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  const std::string& s_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression over (x,y,p,q,z) and the declared parameter names.
inline Expr parse_expr(const std::string& text, const std::vector<std::string>& params = {}) {
  return detail::Parser(text, params).parse();
}

inline std::string to_string(const Expr& e) {
  using K = Expr::Kind;
  const auto& n = e.node();
  std::ostringstream os;
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  switch (n.kind) {
    case K::Num:
      if (n.num < 0 || denominator(n.num) != 1)
        return paren(n.num.str());
      return n.num.str();
    case K::Coord: return coord_name(n.index);
    case K::Param: return "$" + std::to_string(n.index);
    case K::Sum: {
      std::string s;
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        if (i) s += " + ";
        s += to_string(Expr(n.kids[i]));
      }
      return paren(s);
    }
    case K::Prod:
      return paren(to_string(Expr(n.kids[0])) + "*" + to_string(Expr(n.kids[1])));
    case K::Quot:
      return paren(to_string(Expr(n.kids[0])) + "/" + to_string(Expr(n.kids[1])));
    case K::Pow:
      return paren(to_string(Expr(n.kids[0])) + "^" + paren(n.num.str()));
    case K::Func: {
      static const char* names[] = {"exp", "log", "sin", "cos"};
      return std::string(names[static_cast<int>(n.func)]) +
             paren(to_string(Expr(n.kids[0])));
    }
  }
  return "";
}

/// Pretty-print with parameter names restored.
inline std::string to_string(const Expr& e, const std::vector<std::string>& params) {
  std::string s = to_string(e);
  for (std::size_t i = params.size(); i-- > 0;) {
    std::string tag = "$" + std::to_string(i);
    std::size_t at;
    while ((at = s.find(tag)) != std::string::npos) s.replace(at, tag.size(), params[i]);
  }
  return s;
}

/// Evaluate an expression as a truncated Taylor expansion at `at`, with the
/// declared parameters bound to rational values.
template <class T>
Jet<T> eval_jet(const Expr& e, const Point5& at, int order,
                const std::vector<Rational>& param_values = {}) {
  using K = Expr::Kind;
  const auto& n = e.node();
  switch (n.kind) {
    case K::Num:
      return Jet<T>::constant(5, order, scalar_from<T>(n.num));
    case K::Coord:
      return Jet<T>::variable(5, order, n.index, scalar_from<T>(at[n.index]));
    case K::Param:
      return Jet<T>::constant(5, order, scalar_from<T>(param_values.at(n.index)));
    case K::Sum: {
      Jet<T> out(5, order);
      for (const auto& k : n.kids)
        out += eval_jet<T>(Expr(k), at, order, param_values);
      return out;
    }
    case K::Prod:
      return eval_jet<T>(Expr(n.kids[0]), at, order, param_values) *
             eval_jet<T>(Expr(n.kids[1]), at, order, param_values);
    case K::Quot:
      return eval_jet<T>(Expr(n.kids[0]), at, order, param_values) /
             eval_jet<T>(Expr(n.kids[1]), at, order, param_values);
    case K::Pow:
      return jet_pow(eval_jet<T>(Expr(n.kids[0]), at, order, param_values), n.num);
    case K::Func: {
      Jet<T> a = eval_jet<T>(Expr(n.kids[0]), at, order, param_values);
      switch (n.func) {
        case FuncTag::Exp: return jet_exp(a);
        case FuncTag::Log: return jet_log(a);
        case FuncTag::Sin: return jet_sin(a);
        case FuncTag::Cos: return jet_cos(a);
      }
    }
  }
  throw std::logic_error("unreachable");
}

/// Point evaluation (order-0 jet).
template <class T>
T eval_scalar(const Expr& e, const Point5& at,
              const std::vector<Rational>& param_values = {}) {
  return eval_jet<T>(e, at, 0, param_values).value();
}

/// Evaluate with coordinates and parameters bound to arbitrary jets (all of
/// the same variable count and order).  Used by the fixture tables, whose
/// "parameters" are themselves functions of the base point.
template <class T>
Jet<T> eval_jet_env(const Expr& e, const std::vector<Jet<T>>& coords,
                    const std::vector<Jet<T>>& params) {
  using K = Expr::Kind;
  const auto& n = e.node();
  const Jet<T>& model = coords.empty() ? params.front() : coords.front();
  int nv = model.nvars(), order = model.order();
  switch (n.kind) {
    case K::Num:
      return Jet<T>::constant(nv, order, scalar_from<T>(n.num));
    case K::Coord:
      return coords.at(n.index);
    case K::Param:
      return params.at(n.index);
    case K::Sum: {
      Jet<T> out(nv, order);
      for (const auto& k : n.kids) out += eval_jet_env<T>(Expr(k), coords, params);
      return out;
    }
    case K::Prod:
      return eval_jet_env<T>(Expr(n.kids[0]), coords, params) *
             eval_jet_env<T>(Expr(n.kids[1]), coords, params);
    case K::Quot:
      return eval_jet_env<T>(Expr(n.kids[0]), coords, params) *
             jet_inv(eval_jet_env<T>(Expr(n.kids[1]), coords, params));
    case K::Pow:
      return jet_pow(eval_jet_env<T>(Expr(n.kids[0]), coords, params), n.num);
    case K::Func: {
      Jet<T> a = eval_jet_env<T>(Expr(n.kids[0]), coords, params);
      switch (n.func) {
        case FuncTag::Exp: return jet_exp(a);
        case FuncTag::Log: return jet_log(a);
        case FuncTag::Sin: return jet_sin(a);
        case FuncTag::Cos: return jet_cos(a);
      }
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace fga
