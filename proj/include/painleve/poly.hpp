#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "painleve/expr.hpp"

namespace painleve {

/// An indeterminate of the polynomial ring: a variable, a parameter, or an
/// atom (a transcendental function or a 1/q-th root of a normalized
/// argument) treated as an extra indeterminate.
struct Symbol {
  enum class Kind : std::uint8_t { Variable, Parameter, Function, Root };

  Kind kind = Kind::Variable;
  Var var = Var::X;
  std::string name;
  Fn fn = Fn::Sin;
  Expr argument;
  int root_index = 0;

  static Symbol variable(Var v);
  static Symbol parameter(const std::string& name);
  static Symbol function(Fn fn, const Expr& normalized_argument);
  static Symbol root(const Expr& normalized_base, int index);

  bool is_atom() const { return kind == Kind::Function || kind == Kind::Root; }
  /// The atom as an expression (e.g. sin(y) or (x+1)^(1/3)).
  Expr to_expr() const;
};

int compare(const Symbol& a, const Symbol& b);
inline bool operator==(const Symbol& a, const Symbol& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const Symbol& a, const Symbol& b) {
  return compare(a, b) < 0;
}

inline constexpr std::size_t kMaxSymbols = 16;

/// Ordered set of indeterminates, closed under differentiation: whenever
/// sin(u) is present so is cos(u) (and conversely), and the symbols of every
/// atom argument are present. Each radicand has a single root symbol whose
/// index is the lcm of every root of it that was requested.
class Ring {
 public:
  explicit Ring(std::vector<Symbol> sorted_symbols);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& symbol(std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::optional<std::size_t> index_of(const Symbol& s) const;
  std::optional<std::size_t> index_of(Var v) const;
  /// Root symbol r = base^(1/Q) with q | Q, and Q/q, so base^(1/q) = r^(Q/q).
  std::optional<std::pair<std::size_t, unsigned>> root_slot(const Expr& base, int q) const;

  bool has_atoms() const { return has_atoms_; }
  /// (cos index, sin index) for every argument carrying both.
  const std::vector<std::pair<std::size_t, std::size_t>>& trig_pairs() const {
    return trig_pairs_;
  }
  const std::vector<std::size_t>& roots() const { return roots_; }
  bool has_relations() const {
    return !trig_pairs_.empty() || !roots_.empty();
  }

 private:
  std::vector<Symbol> symbols_;
  bool has_atoms_ = false;
  std::vector<std::pair<std::size_t, std::size_t>> trig_pairs_;
  std::vector<std::size_t> roots_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Smallest closed ring containing the given symbols.
RingPtr make_ring(std::vector<Symbol> symbols);
/// Smallest closed ring containing every symbol of e.
RingPtr ring_of(const Expr& e);
RingPtr unify(const RingPtr& a, const RingPtr& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::array<std::uint16_t, kMaxSymbols>;

struct Term {
  Exponents exps{};
  Integer coeff;
};

/// Sparse multivariate polynomial with integer coefficients. Terms are kept
/// in strictly decreasing lexicographic order of exponent vectors with no
/// zero coefficients, so equal polynomials have equal term lists.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);  // sorts and merges

  static Poly constant(RingPtr ring, const Integer& c);
  static Poly symbol(RingPtr ring, std::size_t index, unsigned power = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value; 0 for the zero polynomial. Only meaningful when
  /// is_constant().
  Integer constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Integer& leading_coeff() const { return terms_.front().coeff; }

  unsigned degree(std::size_t index) const;
  unsigned total_degree() const;
  /// Bit i set when symbol i occurs.
  std::uint32_t support() const;

  /// Coefficient of symbol^k, as a polynomial free of that symbol.
  Poly coefficient(std::size_t index, unsigned k) const;
  Poly derivative(std::size_t index) const;
  /// Replaces symbol `index` by an integer value.
  Poly evaluate(std::size_t index, const Integer& value) const;
  /// Replaces symbol `index` by a polynomial in the same ring.
  Poly compose(std::size_t index, const Poly& value) const;
  Poly remap(const RingPtr& target) const;

  /// gcd of the coefficients, signed like the leading coefficient.
  Integer content() const;
  Integer max_norm() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Integer& c);
  Poly divide_exact(const Integer& c) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  friend Poly make_poly_unchecked(RingPtr ring, std::vector<Term> terms);
};

/// Builds from terms already in strictly decreasing order with nonzero
/// coefficients.
Poly make_poly_unchecked(RingPtr ring, std::vector<Term> terms);

Poly pow(const Poly& base, unsigned exponent);

/// f / g when g divides f exactly in Z[symbols], nullopt otherwise.
std::optional<Poly> divide(const Poly& f, const Poly& g);

/// Greatest common divisor in Z[symbols] with positive leading coefficient
/// (gcd(0, 0) = 0).
Poly gcd(const Poly& f, const Poly& g);

/// Exact k-th root of f when f is a perfect k-th power (leading coefficient
/// of the root positive), nullopt otherwise.
std::optional<Poly> exact_root(const Poly& f, unsigned k);

/// Rewrites cos(u)^2 as 1 - sin(u)^2 for every trigonometric pair of the
/// ring until no cos power exceeds one.
Poly reduce_trig(const Poly& f);
/// The other normal form: sin(u)^2 -> 1 - cos(u)^2.
Poly reduce_trig_to_cos(const Poly& f);

}  // namespace painleve
