#include "painleve/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "painleve/errors.hpp"

namespace painleve {

// ---------------------------------------------------------------------------
// Symbol

Symbol Symbol::variable(Var v) {
  Symbol s;
  s.kind = Kind::Variable;
  s.var = v;
  return s;
}

Symbol Symbol::parameter(const std::string& name) {
  Symbol s;
  s.kind = Kind::Parameter;
  s.name = name;
  return s;
}

Symbol Symbol::function(Fn fn, const Expr& normalized_argument) {
  Symbol s;
  s.kind = Kind::Function;
  s.fn = fn;
  s.argument = normalized_argument;
  return s;
}

Symbol Symbol::root(const Expr& normalized_base, int index) {
  Symbol s;
  s.kind = Kind::Root;
  s.argument = normalized_base;
  s.root_index = index;
  return s;
}

Expr Symbol::to_expr() const {
  switch (kind) {
    case Kind::Variable:
      return Expr::variable(var);
    case Kind::Parameter:
      return Expr::parameter(name);
    case Kind::Function:
      return Expr::function(fn, argument);
    case Kind::Root:
      return Expr::power(argument, Rational(1, root_index));
  }
  return Expr();
}

int compare(const Symbol& a, const Symbol& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case Symbol::Kind::Variable:
      if (a.var == b.var) return 0;
      return a.var < b.var ? -1 : 1;
    case Symbol::Kind::Parameter:
      return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
    case Symbol::Kind::Function: {
      int c = compare(a.argument, b.argument);
      if (c != 0) return c;
      if (a.fn == b.fn) return 0;
      return a.fn < b.fn ? -1 : 1;
    }
    case Symbol::Kind::Root: {
      int c = compare(a.argument, b.argument);
      if (c != 0) return c;
      if (a.root_index == b.root_index) return 0;
      return a.root_index < b.root_index ? -1 : 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<Symbol> sorted_symbols)
    : symbols_(std::move(sorted_symbols)) {
  if (symbols_.size() > kMaxSymbols) {
    throw Error("too many indeterminates (" + std::to_string(symbols_.size()) +
                "); at most " + std::to_string(kMaxSymbols) + " are supported");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Symbol& s = symbols_[i];
    if (s.is_atom()) has_atoms_ = true;
    if (s.kind == Symbol::Kind::Root) roots_.push_back(i);
    if (s.kind == Symbol::Kind::Function && s.fn == Fn::Cos) {
      auto j = index_of(Symbol::function(Fn::Sin, s.argument));
      if (j) trig_pairs_.emplace_back(i, *j);
    }
  }
}

std::optional<std::size_t> Ring::index_of(const Symbol& s) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::optional<std::size_t> Ring::index_of(Var v) const {
  return index_of(Symbol::variable(v));
}

std::optional<std::pair<std::size_t, unsigned>> Ring::root_slot(const Expr& base, int q) const {
  for (std::size_t i : roots_) {
    const Symbol& s = symbols_[i];
    if (s.root_index % q == 0 && s.argument == base) {
      return std::make_pair(i, static_cast<unsigned>(s.root_index / q));
    }
  }
  return std::nullopt;
}

namespace {

void collect_normalized(const Expr& e, std::vector<Symbol>& out) {
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
      for (const auto& op : e.operands()) collect_normalized(op, out);
      return;
    case Kind::Power:
      if (e.exponent().get_den() != 1) {
        out.push_back(Symbol::root(
            e.base(), static_cast<int>(e.exponent().get_den().get_si())));
      } else {
        collect_normalized(e.base(), out);
      }
      return;
    case Kind::Function:
      out.push_back(Symbol::function(e.fn(), e.argument()));
      return;
  }
}

void sort_unique(std::vector<Symbol>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// One root symbol per radicand, with the lcm of the requested indices.
void merge_roots(std::vector<Symbol>& v) {
  std::vector<Symbol> out;
  for (auto& s : v) {
    if (s.kind == Symbol::Kind::Root) {
      auto same = std::find_if(out.begin(), out.end(), [&](const Symbol& t) {
        return t.kind == Symbol::Kind::Root && t.argument == s.argument;
      });
      if (same != out.end()) {
        same->root_index = std::lcm(same->root_index, s.root_index);
        continue;
      }
    }
    out.push_back(std::move(s));
  }
  v = std::move(out);
}

}  // namespace

RingPtr make_ring(std::vector<Symbol> symbols) {
  // Close under differentiation: trig partners and atom-argument symbols.
  std::vector<Symbol> work = symbols;
  std::vector<Symbol> done;
  while (!work.empty()) {
    Symbol s = std::move(work.back());
    work.pop_back();
    if (std::find(done.begin(), done.end(), s) != done.end()) continue;
    if (s.kind == Symbol::Kind::Function) {
      if (s.fn == Fn::Sin) work.push_back(Symbol::function(Fn::Cos, s.argument));
      if (s.fn == Fn::Cos) work.push_back(Symbol::function(Fn::Sin, s.argument));
    }
    if (s.is_atom()) collect_normalized(s.argument, work);
    done.push_back(std::move(s));
  }
  merge_roots(done);
  sort_unique(done);
  return std::make_shared<const Ring>(std::move(done));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->size() != b->size()) return false;
  for (std::size_t i = 0; i < a->size(); ++i) {
    if (!(a->symbol(i) == b->symbol(i))) return false;
  }
  return true;
}

RingPtr unify(const RingPtr& a, const RingPtr& b) {
  if (same_ring(a, b)) return a;
  if (!a) return b;
  if (!b) return a;
  std::vector<Symbol> all = a->symbols();
  all.insert(all.end(), b->symbols().begin(), b->symbols().end());
  return make_ring(std::move(all));
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool greater(const Exponents& a, const Exponents& b) { return b < a; }

void add_exps(Exponents& out, const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 0xFFFF) throw Error("polynomial degree overflow");
    out[i] = static_cast<std::uint16_t>(s);
  }
}

bool divides_exps(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Sort descending and merge equal monomials, dropping zeros.
std::vector<Term> canonical_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return greater(a.exps, b.exps);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

Poly make_poly_unchecked(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Poly::Poly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(canonical_terms(std::move(terms))) {}

Poly Poly::constant(RingPtr ring, const Integer& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{Exponents{}, c});
  return p;
}

Poly Poly::symbol(RingPtr ring, std::size_t index, unsigned power) {
  Poly p(std::move(ring));
  Term t{Exponents{}, Integer(1)};
  t.exps[index] = static_cast<std::uint16_t>(power);
  p.terms_.push_back(std::move(t));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().exps == Exponents{});
}

bool Poly::is_one() const { return is_constant() && constant_value() == 1; }

Integer Poly::constant_value() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  return last.exps == Exponents{} ? last.coeff : Integer(0);
}

unsigned Poly::degree(std::size_t index) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exps[index]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t Poly::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (t.exps[i]) mask |= (1u << i);
    }
  }
  return mask;
}

Poly Poly::coefficient(std::size_t index, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[index] == k) {
      Term u = t;
      u.exps[index] = 0;
      out.push_back(std::move(u));
    }
  }
  // Removing one exponent preserves the relative order of the survivors.
  return make_poly_unchecked(ring_, std::move(out));
}

Poly Poly::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[index] == 0) continue;
    Term u = t;
    u.coeff *= t.exps[index];
    u.exps[index] -= 1;
    out.push_back(std::move(u));
  }
  // Lowering the same exponent by one keeps the order strict.
  return make_poly_unchecked(ring_, std::move(out));
}

Poly Poly::evaluate(std::size_t index, const Integer& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  Integer power;
  for (const auto& t : terms_) {
    Term u = t;
    if (u.exps[index]) {
      mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), u.exps[index]);
      u.coeff *= power;
      u.exps[index] = 0;
    }
    out.push_back(std::move(u));
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::compose(std::size_t index, const Poly& value) const {
  unsigned d = degree(index);
  if (d == 0) return *this;
  std::vector<Poly> powers(d + 1, Poly(ring_));
  powers[0] = Poly::constant(ring_, 1);
  for (unsigned k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
  Poly result(ring_);
  for (unsigned k = 0; k <= d; ++k) {
    Poly c = coefficient(index, k);
    if (c.is_zero()) continue;
    result += c * powers[k];
  }
  return result;
}

Poly Poly::remap(const RingPtr& target) const {
  if (ring_ == target) return *this;
  Poly out(target);
  if (terms_.empty()) return out;
  std::vector<std::size_t> where(ring_ ? ring_->size() : 0);
  std::vector<unsigned> scale(where.size(), 1);
  for (std::size_t i = 0; i < where.size(); ++i) {
    const Symbol& s = ring_->symbol(i);
    auto j = target->index_of(s);
    if (!j && s.kind == Symbol::Kind::Root) {
      if (auto slot = target->root_slot(s.argument, s.root_index)) {
        j = slot->first;
        scale[i] = slot->second;
      }
    }
    if (!j) throw Error("cannot remap polynomial: symbol missing in target");
    where[i] = *j;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < where.size(); ++i) {
      u.exps[where[i]] = static_cast<std::uint16_t>(t.exps[i] * scale[i]);
    }
    terms.push_back(std::move(u));
  }
  return Poly(target, std::move(terms));
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (!terms_.empty() && terms_.front().coeff < 0) g = -g;
  return g;
}

Integer Poly::max_norm() const {
  Integer m = 0;
  for (const auto& t : terms_) {
    if (abs(t.coeff) > m) m = abs(t.coeff);
  }
  return m;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || greater(b[j].exps, a[i].exps)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff)
                           : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

const RingPtr& pick_ring(const RingPtr& a, const RingPtr& b) {
  if (a && b && !same_ring(a, b)) {
    throw Error("polynomial operands live in different rings");
  }
  return a ? a : b;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  ring_ = pick_ring(ring_, other.ring_);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  ring_ = pick_ring(ring_, other.ring_);
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::divide_exact(const Integer& c) const {
  Poly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  const RingPtr& ring = pick_ring(a.ring_, b.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return Poly(ring);
  if (b.terms_.size() == 1 && b.terms_.front().exps == Exponents{}) {
    return a * b.terms_.front().coeff;
  }
  if (a.terms_.size() == 1 && a.terms_.front().exps == Exponents{}) {
    return b * a.terms_.front().coeff;
  }
  const Poly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const Poly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  if (small.terms_.size() == 1) {
    // Multiplying by a monomial preserves the order.
    const Term& m = small.terms_.front();
    std::vector<Term> out;
    out.reserve(big.terms_.size());
    for (const auto& t : big.terms_) {
      Term u;
      add_exps(u.exps, t.exps, m.exps);
      u.coeff = t.coeff * m.coeff;
      out.push_back(std::move(u));
    }
    return make_poly_unchecked(ring, std::move(out));
  }
  std::vector<Term> out;
  out.reserve(big.terms_.size() * small.terms_.size());
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      Term u;
      add_exps(u.exps, t.exps, s.exps);
      u.coeff = t.coeff * s.coeff;
      out.push_back(std::move(u));
    }
  }
  return Poly(ring, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.ring(), 1);
  Poly b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

std::optional<Poly> divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const RingPtr& ring = f.ring() ? f.ring() : g.ring();
  if (f.is_zero()) return Poly(ring);
  if (g.is_constant()) {
    const Integer c = g.constant_value();
    for (const auto& t : f.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    }
    return f.divide_exact(c);
  }
  const Term& lg = g.leading();
  if (g.is_monomial()) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!divides_exps(lg.exps, t.exps) ||
          !mpz_divisible_p(t.coeff.get_mpz_t(), lg.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      Term u;
      for (std::size_t i = 0; i < kMaxSymbols; ++i) u.exps[i] = t.exps[i] - lg.exps[i];
      mpz_divexact(u.coeff.get_mpz_t(), t.coeff.get_mpz_t(), lg.coeff.get_mpz_t());
      out.push_back(std::move(u));
    }
    return make_poly_unchecked(ring, std::move(out));
  }
  // Quick rejections by degree in each symbol.
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    if (g.degree(i) > f.degree(i)) return std::nullopt;
  }
  Poly rem = f;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (!divides_exps(lg.exps, lr.exps) ||
        !mpz_divisible_p(lr.coeff.get_mpz_t(), lg.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    Term q;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) q.exps[i] = lr.exps[i] - lg.exps[i];
    mpz_divexact(q.coeff.get_mpz_t(), lr.coeff.get_mpz_t(), lg.coeff.get_mpz_t());
    rem -= make_poly_unchecked(ring, {q}) * g;
    quotient.push_back(std::move(q));
  }
  return make_poly_unchecked(ring, std::move(quotient));
}

std::optional<Poly> exact_root(const Poly& f, unsigned k) {
  if (k == 0) throw Error("zeroth root");
  if (k == 1 || f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  const Term& lf = f.leading();
  if (k % 2 == 0 && lf.coeff < 0) return std::nullopt;
  Term lead;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    if (lf.exps[i] % k) return std::nullopt;
    lead.exps[i] = static_cast<std::uint16_t>(lf.exps[i] / k);
  }
  if (!mpz_root(lead.coeff.get_mpz_t(), lf.coeff.get_mpz_t(), k)) return std::nullopt;

  // Term-by-term lifting: if f = g^k then the leading term of f - g_n^k is
  // k * lt(g)^(k-1) * (next term of g).
  Poly root = make_poly_unchecked(ring, {lead});
  Poly lead_power = pow(make_poly_unchecked(ring, {lead}), k - 1) * Integer(k);
  const Term& lp = lead_power.leading();
  Exponents last = lead.exps;
  for (std::size_t iter = 0; iter <= f.size() * 4 + 8; ++iter) {
    Poly rem = f - pow(root, k);
    if (rem.is_zero()) return root;
    const Term& lr = rem.leading();
    if (!divides_exps(lp.exps, lr.exps) ||
        !mpz_divisible_p(lr.coeff.get_mpz_t(), lp.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    Term next;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) next.exps[i] = lr.exps[i] - lp.exps[i];
    mpz_divexact(next.coeff.get_mpz_t(), lr.coeff.get_mpz_t(), lp.coeff.get_mpz_t());
    if (!greater(last, next.exps)) return std::nullopt;
    last = next.exps;
    root += make_poly_unchecked(ring, {next});
  }
  return std::nullopt;
}

namespace {

// Replace big^2 by (1 - small^2) for one trig pair until big has degree <= 1.
Poly reduce_pair(const Poly& f, std::size_t big, std::size_t small) {
  if (f.degree(big) < 2) return f;
  const RingPtr& ring = f.ring();
  std::vector<Term> out;
  Integer binom;
  for (const auto& t : f.terms()) {
    unsigned e = t.exps[big];
    if (e < 2) {
      out.push_back(t);
      continue;
    }
    unsigned m = e / 2;
    for (unsigned j = 0; j <= m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m, j);
      Term u = t;
      u.exps[big] = static_cast<std::uint16_t>(e % 2);
      u.exps[small] = static_cast<std::uint16_t>(t.exps[small] + 2 * j);
      u.coeff = t.coeff * binom;
      if (j % 2) u.coeff = -u.coeff;
      out.push_back(std::move(u));
    }
  }
  return Poly(ring, std::move(out));
}

}  // namespace

Poly reduce_trig(const Poly& f) {
  if (!f.ring() || f.ring()->trig_pairs().empty()) return f;
  Poly g = f;
  for (auto [cos_i, sin_i] : f.ring()->trig_pairs()) g = reduce_pair(g, cos_i, sin_i);
  return g;
}

Poly reduce_trig_to_cos(const Poly& f) {
  if (!f.ring() || f.ring()->trig_pairs().empty()) return f;
  Poly g = f;
  for (auto [cos_i, sin_i] : f.ring()->trig_pairs()) g = reduce_pair(g, sin_i, cos_i);
  return g;
}

}  // namespace painleve
