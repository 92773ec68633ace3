#include "painleve/expr.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "painleve/errors.hpp"
#include "painleve/ratfunc.hpp"

namespace painleve {

struct Node {
  Kind kind = Kind::Constant;
  Rational value;  // constant value or power exponent
  Var var = Var::X;
  Fn fn = Fn::Sin;
  std::string name;
  std::vector<Expr> operands;
};

namespace {

const std::vector<Expr>& no_operands() {
  static const std::vector<Expr> empty;
  return empty;
}

std::shared_ptr<Node> new_node(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

// Exact q-th root of a non-negative integer, if any.
bool integer_root(const Integer& v, unsigned q, Integer& out) {
  return mpz_root(out.get_mpz_t(), v.get_mpz_t(), q) != 0;
}

// Exact value of c^(p/q) when it is rational and real.
bool rational_power(const Rational& c, const Rational& exponent, Rational& out) {
  const unsigned q = static_cast<unsigned>(exponent.get_den().get_ui());
  long p = exponent.get_num().get_si();
  Integer num = c.get_num();
  Integer den = c.get_den();
  bool negative = num < 0;
  if (negative) {
    if (q % 2 == 0) return false;
    num = -num;
  }
  Integer rn, rd;
  if (!integer_root(num, q, rn) || !integer_root(den, q, rd)) return false;
  if (negative) rn = -rn;
  if (p < 0) {
    if (rn == 0) throw DivisionByZero("zero raised to a negative power");
    std::swap(rn, rd);
    p = -p;
  }
  Integer pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), rn.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_pow_ui(pd.get_mpz_t(), rd.get_mpz_t(), static_cast<unsigned long>(p));
  out = Rational(pn, pd);
  out.canonicalize();
  return true;
}

}  // namespace

Expr::Expr() : Expr(Rational(0)) {}
Expr::Expr(int value) : Expr(Rational(value)) {}
Expr::Expr(const Integer& value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value) {
  auto n = new_node(Kind::Constant);
  n->value = value;
  n->value.canonicalize();
  node_ = std::move(n);
}

Expr Expr::variable(Var v) {
  auto n = new_node(Kind::Variable);
  n->var = v;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::parameter(const std::string& name) {
  auto n = new_node(Kind::Parameter);
  n->name = name;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  Rational c = 0;
  std::vector<Expr> stack(std::make_move_iterator(terms.rbegin()),
                          std::make_move_iterator(terms.rend()));
  while (!stack.empty()) {
    Expr t = std::move(stack.back());
    stack.pop_back();
    if (t.kind() == Kind::Sum) {
      const auto& ops = t.operands();
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) stack.push_back(*it);
    } else if (t.is_constant()) {
      c += t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (flat.empty()) return Expr(c);
  if (c != 0) flat.emplace_back(c);
  if (flat.size() == 1) return flat.front();
  auto n = new_node(Kind::Sum);
  n->operands = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  Rational c = 1;
  std::vector<Expr> stack(std::make_move_iterator(factors.rbegin()),
                          std::make_move_iterator(factors.rend()));
  while (!stack.empty()) {
    Expr f = std::move(stack.back());
    stack.pop_back();
    if (f.kind() == Kind::Product) {
      const auto& ops = f.operands();
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) stack.push_back(*it);
    } else if (f.is_constant()) {
      c *= f.value();
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (c == 0 || flat.empty()) return Expr(c);
  if (c == 1 && flat.size() == 1) return flat.front();
  if (c != 1) flat.insert(flat.begin(), Expr(c));
  auto n = new_node(Kind::Product);
  n->operands = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::power(const Expr& base, const Rational& exponent_in) {
  Rational exponent = exponent_in;
  exponent.canonicalize();
  if (exponent == 0) return Expr(1);
  if (exponent == 1) return base;
  const bool integral = exponent.get_den() == 1;
  if (base.is_constant()) {
    const Rational& c = base.value();
    if (c == 1) return Expr(1);
    if (c == 0) {
      if (exponent < 0) throw DivisionByZero("zero raised to a negative power");
      return Expr(0);
    }
    Rational folded;
    if (rational_power(c, exponent, folded)) return Expr(folded);
    // Shrink the radicand: c = r^k with k | q gives c^(p/q) = r^(pk/q).
    const long q = exponent.get_den().get_si();
    for (long k = q; k > 1; --k) {
      Rational r;
      if (q % k == 0 && rational_power(c, Rational(1, k), r)) {
        return power(Expr(r), exponent * k);
      }
    }
    // Pull out the integer part of the exponent.
    if (!integral && abs(exponent) > 1) {
      mpz_class whole;
      mpz_fdiv_q(whole.get_mpz_t(), exponent.get_num().get_mpz_t(), exponent.get_den().get_mpz_t());
      Rational w(whole);
      Rational lead;
      if (rational_power(c, w, lead)) {
        return product({Expr(lead), power(base, exponent - w)});
      }
    }
  }
  // u^(p/q) means (u^(1/q))^p, so an integer power always folds.
  if (base.kind() == Kind::Power && integral) {
    return power(base.base(), base.exponent() * exponent);
  }
  auto n = new_node(Kind::Power);
  n->value = exponent;
  n->operands = {base};
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::function(Fn fn, const Expr& argument) {
  if (argument.is_constant()) {
    const Rational& c = argument.value();
    if (c == 0 && fn == Fn::Sin) return Expr(0);
    if (c == 0 && (fn == Fn::Cos || fn == Fn::Exp)) return Expr(1);
    if (c == 1 && fn == Fn::Ln) return Expr(0);
  }
  if (fn == Fn::Ln && argument.kind() == Kind::Function && argument.fn() == Fn::Exp) {
    return argument.argument();
  }
  auto n = new_node(Kind::Function);
  n->fn = fn;
  n->operands = {argument};
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
Var Expr::var() const { return node_->var; }
const std::string& Expr::name() const { return node_->name; }
Fn Expr::fn() const { return node_->fn; }
const Rational& Expr::exponent() const { return node_->value; }

const std::vector<Expr>& Expr::operands() const {
  switch (node_->kind) {
    case Kind::Sum:
    case Kind::Product:
    case Kind::Power:
    case Kind::Function:
      return node_->operands;
    default:
      return no_operands();
  }
}

bool Expr::is_zero() const { return is_constant() && value() == 0; }
bool Expr::is_one() const { return is_constant() && value() == 1; }

int compare(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Constant:
      return cmp(a.value(), b.value()) < 0 ? -1 : (a.value() == b.value() ? 0 : 1);
    case Kind::Variable:
      if (a.var() == b.var()) return 0;
      return a.var() < b.var() ? -1 : 1;
    case Kind::Parameter: {
      int c = a.name().compare(b.name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Function:
      if (a.fn() != b.fn()) return a.fn() < b.fn() ? -1 : 1;
      return compare(a.argument(), b.argument());
    case Kind::Power:
      if (a.exponent() != b.exponent()) return a.exponent() < b.exponent() ? -1 : 1;
      return compare(a.base(), b.base());
    case Kind::Sum:
    case Kind::Product: {
      const auto& x = a.operands();
      const auto& y = b.operands();
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (std::size_t i = 0; i < x.size(); ++i) {
        int c = compare(x[i], y[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  return Expr::product({a, Expr::power(b, Rational(-1))});
}
Expr operator-(const Expr& a) { return Expr::product({Expr(-1), a}); }
Expr pow(const Expr& base, long exponent) { return Expr::power(base, Rational(exponent)); }
Expr pow(const Expr& base, const Rational& exponent) { return Expr::power(base, exponent); }
Expr sin(const Expr& e) { return Expr::function(Fn::Sin, e); }
Expr cos(const Expr& e) { return Expr::function(Fn::Cos, e); }
Expr exp(const Expr& e) { return Expr::function(Fn::Exp, e); }
Expr ln(const Expr& e) { return Expr::function(Fn::Ln, e); }

namespace sym {
Expr x() { return Expr::variable(Var::X); }
Expr y() { return Expr::variable(Var::Y); }
Expr p() { return Expr::variable(Var::P); }
Expr param(const std::string& name) { return Expr::parameter(name); }
}  // namespace sym

std::string variable_name(Var v) {
  switch (v) {
    case Var::X:
      return "x";
    case Var::Y:
      return "y";
    case Var::P:
      return "p";
  }
  return "?";
}

std::string function_name(Fn fn) {
  switch (fn) {
    case Fn::Sin:
      return "sin";
    case Fn::Cos:
      return "cos";
    case Fn::Exp:
      return "exp";
    case Fn::Ln:
      return "ln";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength of a printed fragment: 1 sum or leading minus, 2 product
// or quotient, 4 power, 5 atom.
struct Printed {
  std::string text;
  int prec;
};

Printed print(const Expr& e);

std::string wrap(const Printed& p, int min_prec) {
  return p.prec >= min_prec ? p.text : "(" + p.text + ")";
}

Printed print_rational(const Rational& c) {
  if (c.get_den() == 1) return {c.get_num().get_str(), c < 0 ? 1 : 5};
  return {c.get_str(), c < 0 ? 1 : 2};
}

bool is_negative_term(const Expr& t) {
  if (t.is_constant()) return t.value() < 0;
  if (t.kind() == Kind::Product) {
    const Expr& first = t.operands().front();
    return first.is_constant() && first.value() < 0;
  }
  return false;
}

Printed print_product(const Rational& coeff, const std::vector<Expr>& factors) {
  Rational c = coeff;
  bool negative = c < 0;
  if (negative) c = -c;
  std::vector<std::string> num;
  std::vector<Printed> den;
  if (c.get_num() != 1) num.push_back(c.get_num().get_str());
  if (c.get_den() != 1) den.push_back({c.get_den().get_str(), 5});
  for (const auto& f : factors) {
    if (f.kind() == Kind::Power && f.exponent() < 0) {
      den.push_back(print(Expr::power(f.base(), -f.exponent())));
    } else {
      num.push_back(wrap(print(f), 3));
    }
  }
  std::string text;
  if (num.empty()) {
    text = "1";
  } else {
    for (std::size_t i = 0; i < num.size(); ++i) text += (i ? "*" : "") + num[i];
  }
  if (den.size() == 1) {
    text += "/" + wrap(den.front(), 4);
  } else if (!den.empty()) {
    std::string d;
    for (std::size_t i = 0; i < den.size(); ++i) d += (i ? "*" : "") + wrap(den[i], 3);
    text += "/(" + d + ")";
  }
  bool compound = num.size() > 1 || !den.empty() || (num.size() == 1 && c.get_num() != 1);
  if (negative) return {"-" + text, 1};
  if (compound) return {text, 2};
  return {text, num.empty() ? 5 : print(factors.front()).prec};
}

Printed print(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      return print_rational(e.value());
    case Kind::Variable:
      return {variable_name(e.var()), 5};
    case Kind::Parameter:
      return {e.name(), 5};
    case Kind::Function:
      return {function_name(e.fn()) + "(" + print(e.argument()).text + ")", 5};
    case Kind::Sum: {
      std::string text;
      bool first = true;
      for (const auto& t : e.operands()) {
        if (first) {
          text = print(t).text;
          first = false;
        } else if (is_negative_term(t)) {
          text += "-" + wrap(print(-t), 2);
        } else {
          text += "+" + print(t).text;
        }
      }
      return {text, 1};
    }
    case Kind::Product: {
      const auto& ops = e.operands();
      if (ops.front().is_constant()) {
        return print_product(ops.front().value(),
                             std::vector<Expr>(ops.begin() + 1, ops.end()));
      }
      return print_product(Rational(1), ops);
    }
    case Kind::Power: {
      const Rational& q = e.exponent();
      if (q < 0 && q.get_den() == 1) return print_product(Rational(1), {e});
      std::string base = wrap(print(e.base()), 5);
      if (q.get_den() == 1) return {base + "^" + q.get_num().get_str(), 4};
      return {base + "^(" + q.get_str() + ")", 4};
    }
  }
  return {"?", 5};
}

}  // namespace

std::string to_string(const Expr& e) { return print(e).text; }

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

// ---------------------------------------------------------------------------
// Queries

namespace {

void symbols_into(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Kind::Variable:
      out.insert(variable_name(e.var()));
      return;
    case Kind::Parameter:
      out.insert(e.name());
      return;
    default:
      for (const auto& op : e.operands()) symbols_into(op, out);
  }
}

}  // namespace

std::vector<std::string> free_symbols(const Expr& e) {
  std::set<std::string> s;
  symbols_into(e, s);
  return {s.begin(), s.end()};
}

bool depends_on(const Expr& e, Var v) {
  if (e.kind() == Kind::Variable) return e.var() == v;
  for (const auto& op : e.operands()) {
    if (depends_on(op, v)) return true;
  }
  return false;
}

bool contains_atoms(const Expr& e) {
  if (e.kind() == Kind::Function) return true;
  if (e.kind() == Kind::Power && e.exponent().get_den() != 1) return true;
  for (const auto& op : e.operands()) {
    if (contains_atoms(op)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Calculus and algebra

Expr differentiate(const Expr& e, Var v) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Parameter:
      return Expr(0);
    case Kind::Variable:
      return Expr(e.var() == v ? 1 : 0);
    case Kind::Sum: {
      std::vector<Expr> terms;
      for (const auto& t : e.operands()) terms.push_back(differentiate(t, v));
      return Expr::sum(std::move(terms));
    }
    case Kind::Product: {
      const auto& ops = e.operands();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        Expr d = differentiate(ops[i], v);
        if (d.is_zero()) continue;
        std::vector<Expr> factors = ops;
        factors[i] = d;
        terms.push_back(Expr::product(std::move(factors)));
      }
      return Expr::sum(std::move(terms));
    }
    case Kind::Power: {
      Expr du = differentiate(e.base(), v);
      if (du.is_zero()) return Expr(0);
      const Rational& q = e.exponent();
      return Expr::product({Expr(q), Expr::power(e.base(), q - 1), du});
    }
    case Kind::Function: {
      const Expr& u = e.argument();
      Expr du = differentiate(u, v);
      if (du.is_zero()) return Expr(0);
      switch (e.fn()) {
        case Fn::Sin:
          return cos(u) * du;
        case Fn::Cos:
          return -(sin(u) * du);
        case Fn::Exp:
          return e * du;
        case Fn::Ln:
          return du / u;
      }
    }
  }
  return Expr(0);
}

Expr normalize(const Expr& e) { return to_expr(to_ratfunc(e)); }

Expr substitute_raw(const Expr& e, const Bindings& bindings) {
  switch (e.kind()) {
    case Kind::Constant:
      return e;
    case Kind::Variable: {
      auto it = bindings.find(variable_name(e.var()));
      return it == bindings.end() ? e : it->second;
    }
    case Kind::Parameter: {
      auto it = bindings.find(e.name());
      return it == bindings.end() ? e : it->second;
    }
    case Kind::Sum:
    case Kind::Product: {
      std::vector<Expr> ops;
      ops.reserve(e.operands().size());
      for (const auto& op : e.operands()) ops.push_back(substitute_raw(op, bindings));
      return e.kind() == Kind::Sum ? Expr::sum(std::move(ops))
                                   : Expr::product(std::move(ops));
    }
    case Kind::Power:
      return Expr::power(substitute_raw(e.base(), bindings), e.exponent());
    case Kind::Function:
      return Expr::function(e.fn(), substitute_raw(e.argument(), bindings));
  }
  return e;
}

Expr substitute(const Expr& e, const Bindings& bindings) {
  try {
    return normalize(substitute_raw(e, bindings));
  } catch (const DivisionByZero& err) {
    throw DegenerateSubstitution(std::string("substitution makes a denominator vanish: ") +
                                 err.what());
  }
}

}  // namespace painleve
