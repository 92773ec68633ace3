#include "painleve/ratfunc.hpp"

#include <algorithm>
#include <optional>

#include "painleve/errors.hpp"

namespace painleve {

namespace {

// Splits p by powers of root symbol `index` (r^q = base) and substitutes.
std::pair<Poly, Poly> reduce_root(const Poly& p, std::size_t index, int q,
                                  const RatFunc& base) {
  const unsigned top = p.degree(index) / static_cast<unsigned>(q);
  if (top == 0) return {p, Poly::constant(p.ring(), 1)};
  std::vector<std::vector<Term>> groups(top + 1);
  for (const auto& t : p.terms()) {
    unsigned j = t.exps[index] / static_cast<unsigned>(q);
    Term u = t;
    u.exps[index] = static_cast<std::uint16_t>(t.exps[index] % q);
    groups[j].push_back(std::move(u));
  }
  Poly num(p.ring());
  for (unsigned j = 0; j <= top; ++j) {
    if (groups[j].empty()) continue;
    Poly part(p.ring(), std::move(groups[j]));
    num += part * pow(base.num(), j) * pow(base.den(), top - j);
  }
  return {num, pow(base.den(), top)};
}

bool needs_root_reduction(const Poly& p, const Ring& ring) {
  for (std::size_t i : ring.roots()) {
    if (p.degree(i) >= static_cast<unsigned>(ring.symbol(i).root_index)) return true;
  }
  return false;
}

void apply_relations(Poly& num, Poly& den) {
  const RingPtr& ring = num.ring();
  if (!ring || !ring->has_relations()) return;
  for (int guard = 0; guard < 64; ++guard) {
    for (std::size_t i : ring->roots()) {
      const Symbol& s = ring->symbol(i);
      const auto q = static_cast<unsigned>(s.root_index);
      if (num.degree(i) < q && den.degree(i) < q) continue;
      RatFunc base = to_ratfunc(s.argument, ring);
      auto [nn, nd] = reduce_root(num, i, s.root_index, base);
      auto [dn, dd] = reduce_root(den, i, s.root_index, base);
      num = nn * dd;
      den = nd * dn;
    }
    num = reduce_trig(num);
    den = reduce_trig(den);
    if (!needs_root_reduction(num, *ring) && !needs_root_reduction(den, *ring)) return;
  }
  throw Error("radical reduction did not terminate");
}

// Cancels the gcd and fixes the sign; num/den already satisfy the relations.
RatFunc cancel(Poly num, Poly den) {
  if (den.is_zero()) {
    throw DivisionByZero("division by an identically zero expression");
  }
  if (num.is_zero()) {
    return RatFunc::from_canonical(std::move(num), Poly::constant(den.ring(), 1));
  }
  if (!den.is_one()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = *divide(num, g);
      den = *divide(den, g);
    }
  }
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc::from_canonical(std::move(num), std::move(den));
}

bool has_relations(const RingPtr& ring) { return ring && ring->has_relations(); }

}  // namespace

RatFunc::RatFunc() : num_(), den_(Poly::constant(nullptr, 1)) {}

RatFunc::RatFunc(Poly num) : RatFunc(std::move(num), Poly()) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.ring() == nullptr && den.is_zero()) den = Poly::constant(num.ring(), 1);
  if (den.is_zero()) {
    throw DivisionByZero("division by an identically zero expression");
  }
  RingPtr ring = unify(num.ring(), den.ring());
  if (ring) {
    num = num.remap(ring);
    den = den.remap(ring);
  }
  apply_relations(num, den);
  *this = cancel(std::move(num), std::move(den));
}

RatFunc RatFunc::from_canonical(Poly num, Poly den) {
  RatFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFunc RatFunc::constant(const RingPtr& ring, const Rational& c) {
  return from_canonical(Poly::constant(ring, c.get_num()),
                        Poly::constant(ring, c.get_den()));
}

RatFunc RatFunc::symbol(const RingPtr& ring, const Symbol& s) {
  auto i = ring->index_of(s);
  if (!i) throw Error("symbol not present in ring");
  return from_canonical(Poly::symbol(ring, *i), Poly::constant(ring, 1));
}

Rational RatFunc::constant_value() const {
  Rational r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

RatFunc RatFunc::remap(const RingPtr& target) const {
  if (ring() == target) return *this;
  if (ring() && target && same_ring(ring(), target)) {
    return from_canonical(num_.remap(target), den_.remap(target));
  }
  // A richer ring may carry relations that now apply.
  return RatFunc(num_.remap(target), den_.remap(target));
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of an identically zero expression");
  if (num_.leading_coeff() < 0) return from_canonical(-den_, -num_);
  return from_canonical(den_, num_);
}

RatFunc RatFunc::operator-() const { return from_canonical(-num_, den_); }

RatFunc operator+(const RatFunc& a0, const RatFunc& b0) {
  if (a0.is_zero()) return b0;
  if (b0.is_zero()) return a0;
  RingPtr ring = unify(a0.ring(), b0.ring());
  RatFunc a = a0.remap(ring);
  RatFunc b = b0.remap(ring);
  // Sums of reduced polynomials stay reduced, so relations only matter when
  // denominators get multiplied.
  if (a.den_.is_one() && b.den_.is_one()) {
    return RatFunc::from_canonical(a.num_ + b.num_, a.den_);
  }
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (has_relations(ring)) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  // Henrici: with g = gcd(da, db) only g can still divide the new numerator.
  Poly g = gcd(a.den_, b.den_);
  Poly da = *divide(a.den_, g);
  Poly db = *divide(b.den_, g);
  Poly t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return RatFunc::constant(ring, 0);
  Poly h = gcd(t, g);
  Poly num = *divide(t, h);
  Poly den = da * *divide(b.den_, h);
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc::from_canonical(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a0, const RatFunc& b0) {
  RingPtr ring = unify(a0.ring(), b0.ring());
  if (a0.is_zero() || b0.is_zero()) return RatFunc::constant(ring, 0);
  RatFunc a = a0.remap(ring);
  RatFunc b = b0.remap(ring);
  if (has_relations(ring)) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly num = *divide(a.num_, g1) * *divide(b.num_, g2);
  Poly den = *divide(a.den_, g2) * *divide(b.den_, g1);
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc::from_canonical(std::move(num), std::move(den));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (same_ring(a.ring(), b.ring()) || !a.ring() || !b.ring()) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  return (a - b).is_zero();
}

RatFunc operator*(const Rational& c, const RatFunc& f) {
  return RatFunc::constant(f.ring(), c) * f;
}

RatFunc pow(const RatFunc& base, long exponent) {
  if (exponent == 0) return RatFunc::constant(base.ring(), 1);
  if (exponent < 0) return pow(base.inverse(), -exponent);
  const auto e = static_cast<unsigned>(exponent);
  if (has_relations(base.ring())) {
    return RatFunc(pow(base.num(), e), pow(base.den(), e));
  }
  return RatFunc::from_canonical(pow(base.num(), e), pow(base.den(), e));
}

RatFunc reduce_relations(const Poly& num, const Poly& den) { return RatFunc(num, den); }

// ---------------------------------------------------------------------------
// Expr <-> RatFunc

namespace {

// Folded atom for fn(normalized argument); the construction may already
// evaluate it (sin(0) = 0 and so on).
Expr atom_expr(Fn fn, const Expr& argument) {
  return Expr::function(fn, normalize(argument));
}

void collect(const Expr& e, std::vector<Symbol>& out) {
  switch (e.kind()) {
    case Kind::Constant:
      return;
    case Kind::Variable:
      out.push_back(Symbol::variable(e.var()));
      return;
    case Kind::Parameter:
      out.push_back(Symbol::parameter(e.name()));
      return;
    case Kind::Sum:
    case Kind::Product:
      for (const auto& op : e.operands()) collect(op, out);
      return;
    case Kind::Power: {
      if (e.exponent().get_den() == 1) {
        collect(e.base(), out);
        return;
      }
      Expr base = normalize(e.base());
      Expr folded = Expr::power(base, Rational(1, e.exponent().get_den()));
      if (folded.kind() == Kind::Power && folded.exponent().get_den() != 1) {
        out.push_back(Symbol::root(base, static_cast<int>(e.exponent().get_den().get_si())));
      } else {
        collect(folded, out);
      }
      return;
    }
    case Kind::Function: {
      Expr atom = atom_expr(e.fn(), e.argument());
      if (atom.kind() == Kind::Function) {
        out.push_back(Symbol::function(atom.fn(), atom.argument()));
      } else {
        collect(atom, out);
      }
      return;
    }
  }
}

RatFunc convert(const Expr& e, const RingPtr& ring) {
  switch (e.kind()) {
    case Kind::Constant:
      return RatFunc::constant(ring, e.value());
    case Kind::Variable:
      return RatFunc::symbol(ring, Symbol::variable(e.var()));
    case Kind::Parameter:
      return RatFunc::symbol(ring, Symbol::parameter(e.name()));
    case Kind::Sum: {
      RatFunc acc = RatFunc::constant(ring, 0);
      for (const auto& op : e.operands()) acc = acc + convert(op, ring);
      return acc;
    }
    case Kind::Product: {
      RatFunc acc = RatFunc::constant(ring, 1);
      for (const auto& op : e.operands()) {
        acc = acc * convert(op, ring);
        if (acc.is_zero()) break;
      }
      return acc;
    }
    case Kind::Power: {
      const Rational& q = e.exponent();
      if (q.get_den() == 1) {
        RatFunc base = convert(e.base(), ring);
        if (base.is_zero() && q < 0) {
          throw DivisionByZero("division by an identically zero expression");
        }
        return pow(base, q.get_num().get_si());
      }
      Expr base = normalize(e.base());
      Expr unit = Expr::power(base, Rational(1, q.get_den()));
      if (unit.kind() != Kind::Power || unit.exponent().get_den() == 1) {
        return pow(convert(unit, ring), q.get_num().get_si());
      }
      auto slot = ring ? ring->root_slot(base, static_cast<int>(q.get_den().get_si()))
                       : std::nullopt;
      if (!slot) throw Error("root of " + to_string(base) + " is missing from the ring");
      RatFunc atom = RatFunc::symbol(ring, ring->symbol(slot->first));
      return pow(atom, q.get_num().get_si() * static_cast<long>(slot->second));
    }
    case Kind::Function: {
      Expr atom = atom_expr(e.fn(), e.argument());
      if (atom.kind() != Kind::Function) return convert(atom, ring);
      return RatFunc::symbol(ring, Symbol::function(atom.fn(), atom.argument()));
    }
  }
  return RatFunc::constant(ring, 0);
}

}  // namespace

RingPtr ring_of(const Expr& e) {
  std::vector<Symbol> symbols;
  collect(e, symbols);
  return make_ring(std::move(symbols));
}

RatFunc to_ratfunc(const Expr& e, const RingPtr& ring) { return convert(e, ring); }

RatFunc to_ratfunc(const Expr& e) { return convert(e, ring_of(e)); }

std::vector<RatFunc> to_ratfuncs(const std::vector<Expr>& es) {
  std::vector<Symbol> symbols;
  for (const auto& e : es) collect(e, symbols);
  RingPtr ring = make_ring(std::move(symbols));
  std::vector<RatFunc> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(convert(e, ring));
  return out;
}

Expr to_expr(const Poly& p) {
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Expr> factors;
    factors.emplace_back(Rational(t.coeff));
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (t.exps[i] == 0) continue;
      const Symbol& s = p.ring()->symbol(i);
      if (s.kind == Symbol::Kind::Root) {
        factors.push_back(Expr::power(s.argument, Rational(t.exps[i], s.root_index)));
      } else {
        factors.push_back(pow(s.to_expr(), static_cast<long>(t.exps[i])));
      }
    }
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Expr to_expr(const RatFunc& f) {
  if (f.is_constant()) return Expr(f.constant_value());
  Expr num = to_expr(f.num());
  if (f.den().is_one()) return num;
  return Expr::product({num, Expr::power(to_expr(f.den()), Rational(-1))});
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

std::optional<RatFunc> symbol_derivative(const RingPtr& ring, std::size_t i, Var v) {
  const Symbol& s = ring->symbol(i);
  switch (s.kind) {
    case Symbol::Kind::Variable:
      if (s.var == v) return RatFunc::constant(ring, 1);
      return std::nullopt;
    case Symbol::Kind::Parameter:
      return std::nullopt;
    case Symbol::Kind::Function: {
      RatFunc u = to_ratfunc(s.argument, ring);
      RatFunc du = derivative(u, v);
      if (du.is_zero()) return std::nullopt;
      switch (s.fn) {
        case Fn::Sin:
          return RatFunc::symbol(ring, Symbol::function(Fn::Cos, s.argument)) * du;
        case Fn::Cos:
          return -(RatFunc::symbol(ring, Symbol::function(Fn::Sin, s.argument)) * du);
        case Fn::Exp:
          return RatFunc::symbol(ring, s) * du;
        case Fn::Ln:
          return du / u;
      }
      return std::nullopt;
    }
    case Symbol::Kind::Root: {
      RatFunc u = to_ratfunc(s.argument, ring);
      RatFunc du = derivative(u, v);
      if (du.is_zero()) return std::nullopt;
      return Rational(1, s.root_index) * (RatFunc::symbol(ring, s) * du / u);
    }
  }
  return std::nullopt;
}

}  // namespace

RatFunc derivative(const RatFunc& f, Var v) {
  const RingPtr& ring = f.ring();
  if (!ring || f.is_constant()) return RatFunc::constant(ring, 0);
  const std::uint32_t used = f.support();
  std::vector<std::pair<std::size_t, RatFunc>> chain;
  bool polynomial_chain = true;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (!(used & (1u << i))) continue;
    if (auto d = symbol_derivative(ring, i, v)) {
      if (!d->den().is_one()) polynomial_chain = false;
      chain.emplace_back(i, std::move(*d));
    }
  }
  if (chain.empty()) return RatFunc::constant(ring, 0);

  if (polynomial_chain) {
    auto poly_derivative = [&](const Poly& p) {
      Poly out(ring);
      for (const auto& [i, d] : chain) {
        Poly part = p.derivative(i);
        if (part.is_zero()) continue;
        out += d.num().is_one() ? part : part * d.num();
      }
      return out;
    };
    Poly dn = poly_derivative(f.num());
    if (f.den().is_one()) return RatFunc(dn);
    Poly dd = poly_derivative(f.den());
    if (dd.is_zero()) return RatFunc(dn, f.den());
    // (n/d)' = (n' d - n d') / d^2; only factors of d can cancel.
    return RatFunc(dn * f.den() - f.num() * dd, f.den() * f.den());
  }

  auto full_derivative = [&](const Poly& p) {
    RatFunc out = RatFunc::constant(ring, 0);
    for (const auto& [i, d] : chain) {
      Poly part = p.derivative(i);
      if (part.is_zero()) continue;
      out = out + RatFunc(part) * d;
    }
    return out;
  };
  RatFunc dn = full_derivative(f.num());
  RatFunc dd = full_derivative(f.den());
  RatFunc den = RatFunc(f.den());
  return (dn * den - RatFunc(f.num()) * dd) / (den * den);
}

}  // namespace painleve
