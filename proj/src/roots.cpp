#include "painleve/roots.hpp"

#include "painleve/errors.hpp"

namespace painleve {

namespace {

struct Split {
  Expr outside;
  Poly inside;
  bool exact;
};

// Splits a polynomial with positive leading coefficient into an exact q-th
// root part and a remainder that stays under the radical.
Split split_poly(const Poly& p, unsigned q) {
  if (auto r = exact_root(p, q)) return {to_expr(*r), Poly::constant(p.ring(), 1), true};
  Exponents low = p.terms().front().exps;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < kMaxSymbols; ++i) low[i] = std::min(low[i], t.exps[i]);
  }
  Term out{Exponents{}, Integer(1)};
  Term strip{Exponents{}, Integer(1)};
  Term in{Exponents{}, Integer(1)};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    out.exps[i] = static_cast<std::uint16_t>(low[i] / q);
    strip.exps[i] = low[i];
    in.exps[i] = static_cast<std::uint16_t>(low[i] % q);
  }
  Poly rest = *divide(p, make_poly_unchecked(p.ring(), {strip}));
  Poly out_mono = make_poly_unchecked(p.ring(), {out});
  Poly in_mono = make_poly_unchecked(p.ring(), {in});
  if (auto r = exact_root(rest, q)) return {to_expr(out_mono * *r), in_mono, in_mono.is_one()};
  return {to_expr(out_mono), in_mono * rest, false};
}

Expr rational_root(const Rational& c, unsigned q, Rational& leftover) {
  Expr r = Expr::power(Expr(c), Rational(1, q));
  if (r.is_constant()) {
    leftover = 1;
    return r;
  }
  leftover = c;
  return Expr(1);
}

struct Attempt {
  Expr value;
  bool exact;
};

Attempt try_root(const Poly& num, const Poly& den, unsigned q) {
  RingPtr ring = num.ring() ? num.ring() : den.ring();
  Integer cn = num.content();
  Integer cd = den.content();
  Poly pn = num.divide_exact(cn);
  Poly pd = den.divide_exact(cd);
  Rational c(cn, cd);
  c.canonicalize();
  Rational left;
  Expr const_out = rational_root(c, q, left);
  Split sn = split_poly(pn, q);
  Split sd = split_poly(pd, q);
  Expr outside = const_out * sn.outside / sd.outside;
  bool exact = sn.exact && sd.exact && left == 1;
  if (exact) return {outside, true};
  RatFunc inside = RatFunc::constant(ring, left) * RatFunc(sn.inside, sd.inside);
  return {outside * Expr::power(to_expr(inside), Rational(1, q)), false};
}

}  // namespace

std::optional<RatFunc> exact_root(const RatFunc& f, unsigned q) {
  if (f.is_zero()) return f;
  Attempt a = try_root(f.num(), f.den(), q);
  if (!a.exact) {
    const RingPtr& ring = f.ring();
    if (!ring || ring->trig_pairs().empty()) return std::nullopt;
    a = try_root(reduce_trig_to_cos(f.num()), reduce_trig_to_cos(f.den()), q);
    if (!a.exact) return std::nullopt;
  }
  return to_ratfunc(a.value, f.ring());
}

Expr extract_root(const RatFunc& f, unsigned q) {
  if (q == 0) throw Error("zeroth root");
  if (f.is_zero()) return Expr(0);
  Attempt a = try_root(f.num(), f.den(), q);
  if (a.exact) return a.value;
  const RingPtr& ring = f.ring();
  if (ring && !ring->trig_pairs().empty()) {
    Attempt b = try_root(reduce_trig_to_cos(f.num()), reduce_trig_to_cos(f.den()), q);
    if (b.exact) return b.value;
  }
  return a.value;
}

}  // namespace painleve
