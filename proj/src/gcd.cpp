// Multivariate gcd over Z.
//
// The main route is the heuristic gcd of Char, Geddes and Gonnet in the
// recursive form used by most computer algebra kernels: evaluate the leading
// variable at a large integer, recurse, lift the result back xi-adically and
// confirm by trial division. When six evaluation points fail, a primitive
// polynomial remainder sequence takes over.

#include <optional>
#include <tuple>

#include "painleve/errors.hpp"
#include "painleve/poly.hpp"

namespace painleve {

namespace {

constexpr int kHeuristicAttempts = 6;

struct Cofactors {
  Poly h;
  Poly cf;
  Poly cg;
};

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

Poly positive(const Poly& p) {
  if (!p.is_zero() && p.leading_coeff() < 0) return -p;
  return p;
}

int lowest_symbol(std::uint32_t mask) {
  for (int i = 0; i < static_cast<int>(kMaxSymbols); ++i) {
    if (mask & (1u << i)) return i;
  }
  return -1;
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// gcd of monomial m (single term) with g.
Poly monomial_gcd(const Poly& m, const Poly& g) {
  const Term& t = m.leading();
  Term out;
  out.exps = t.exps;
  for (const auto& s : g.terms()) {
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (s.exps[i] < out.exps[i]) out.exps[i] = s.exps[i];
    }
  }
  out.coeff = int_gcd(t.coeff, g.content());
  return make_poly_unchecked(m.ring(), {out});
}

std::optional<Poly> trivial_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return positive(g);
  if (g.is_zero()) return positive(f);
  if (f.is_constant() || g.is_constant()) {
    return Poly::constant(f.ring() ? f.ring() : g.ring(),
                          int_gcd(f.content(), g.content()));
  }
  if (f.is_monomial()) return monomial_gcd(f, g);
  if (g.is_monomial()) return monomial_gcd(g, f);
  if (f == g) return positive(f);
  return std::nullopt;
}

Poly symmetric_mod(const Poly& h, const Integer& modulus) {
  std::vector<Term> out;
  Integer half = modulus / 2;
  for (const auto& t : h.terms()) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), t.coeff.get_mpz_t(), modulus.get_mpz_t());
    if (c > half) c -= modulus;
    if (c != 0) out.push_back(Term{t.exps, c});
  }
  return make_poly_unchecked(h.ring(), std::move(out));
}

// Inverse of evaluation at `point`: read the balanced base-`point` digits of
// h as coefficients of successive powers of symbol `var`.
Poly interpolate(Poly h, const Integer& point, std::size_t var) {
  Poly result(h.ring());
  unsigned k = 0;
  while (!h.is_zero()) {
    Poly digit = symmetric_mod(h, point);
    h = (h - digit).divide_exact(point);
    if (!digit.is_zero()) result += digit * Poly::symbol(h.ring(), var, k);
    ++k;
  }
  return positive(result);
}

Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return p.divide_exact(p.content());
}

std::optional<Cofactors> heuristic(const Poly& f0, const Poly& g0) {
  if (auto t = trivial_gcd(f0, g0)) {
    Poly h = *t;
    auto cf = divide(f0, h);
    auto cg = divide(g0, h);
    return Cofactors{h, *cf, *cg};
  }
  Integer common = int_gcd(f0.content(), g0.content());
  Poly f = f0.divide_exact(common);
  Poly g = g0.divide_exact(common);

  int var = lowest_symbol(f.support() | g.support());
  Integer f_norm = f.max_norm();
  Integer g_norm = g.max_norm();
  Integer bound = 2 * (f_norm < g_norm ? f_norm : g_norm) + 29;
  Integer root_bound;
  mpz_sqrt(root_bound.get_mpz_t(), bound.get_mpz_t());
  root_bound *= 99;
  Integer point = bound < root_bound ? bound : root_bound;
  Integer ratio_f = f_norm / abs_int(f.leading_coeff());
  Integer ratio_g = g_norm / abs_int(g.leading_coeff());
  Integer alt = 2 * (ratio_f < ratio_g ? ratio_f : ratio_g) + 4;
  if (alt > point) point = alt;

  const auto v = static_cast<std::size_t>(var);
  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    Poly ff = f.evaluate(v, point);
    Poly gg = g.evaluate(v, point);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto inner = heuristic(ff, gg);
      if (!inner) return std::nullopt;
      Poly h = primitive(interpolate(inner->h, point, v));
      if (!h.is_zero()) {
        if (auto cf = divide(f, h)) {
          if (auto cg = divide(g, h)) return Cofactors{h * common, *cf, *cg};
        }
      }
      Poly cff = interpolate(inner->cf, point, v);
      if (!cff.is_zero()) {
        if (auto hh = divide(f, cff)) {
          if (auto cg = divide(g, *hh)) {
            Poly hp = positive(*hh);
            Poly cfp = hp == *hh ? cff : -cff;
            Poly cgp = hp == *hh ? *cg : -*cg;
            return Cofactors{hp * common, cfp, cgp};
          }
        }
      }
      Poly cfg = interpolate(inner->cg, point, v);
      if (!cfg.is_zero()) {
        if (auto hh = divide(g, cfg)) {
          if (auto cf = divide(f, *hh)) {
            Poly hp = positive(*hh);
            Poly cgp = hp == *hh ? cfg : -cfg;
            Poly cfp = hp == *hh ? *cf : -*cf;
            return Cofactors{hp * common, cfp, cgp};
          }
        }
      }
    }
    Integer s;
    mpz_sqrt(s.get_mpz_t(), point.get_mpz_t());
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    point = 73794 * point * s / 27011;
  }
  return std::nullopt;
}

Poly prs_gcd(const Poly& f, const Poly& g);

// gcd of the coefficients of f seen as a polynomial in symbol `var`.
Poly content_in(const Poly& f, std::size_t var) {
  unsigned d = f.degree(var);
  Poly c(f.ring());
  for (unsigned k = 0; k <= d; ++k) {
    Poly coeff = f.coefficient(var, k);
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? positive(coeff) : prs_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  unsigned db = b.degree(var);
  Poly lcb = b.coefficient(var, db);
  Poly r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    unsigned dr = r.degree(var);
    Poly lcr = r.coefficient(var, dr);
    r = lcb * r - lcr * Poly::symbol(r.ring(), var, dr - db) * b;
  }
  return r;
}

Poly prs_gcd(const Poly& f, const Poly& g) {
  if (auto t = trivial_gcd(f, g)) return *t;
  std::uint32_t sf = f.support();
  std::uint32_t sg = g.support();
  auto var = static_cast<std::size_t>(lowest_symbol(sf | sg));
  if (!(sg & (1u << var))) return prs_gcd(content_in(f, var), g);
  if (!(sf & (1u << var))) return prs_gcd(f, content_in(g, var));

  Poly cf = content_in(f, var);
  Poly cg = content_in(g, var);
  Poly common = prs_gcd(cf, cg);
  Poly a = *divide(f, cf);
  Poly b = *divide(g, cg);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  while (true) {
    Poly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) {
      b = Poly::constant(f.ring(), 1);
      break;
    }
    a = std::move(b);
    b = *divide(r, content_in(r, var));
  }
  Poly pb = *divide(b, content_in(b, var));
  return positive(common * pb);
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.ring() && g.ring() && !same_ring(f.ring(), g.ring())) {
    throw Error("gcd operands live in different rings");
  }
  if (auto t = trivial_gcd(f, g)) return *t;
  if (auto h = heuristic(f, g)) return positive(h->h);
  return prs_gcd(f, g);
}

}  // namespace painleve
