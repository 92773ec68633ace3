#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "painleve/parse.hpp"
#include "painleve/ratfunc.hpp"
#include "painleve/zero_test.hpp"

namespace painleve {

/// A scalar (one component) or vector/covector (two components) field with
/// its weight under point transformations.
struct Pseudo {
  std::string name;
  int weight = 0;
  std::vector<RatFunc> values;

  bool is_vector() const { return values.size() == 2; }
  const RatFunc& value(std::size_t i = 0) const { return values.at(i); }
  Expr expr(std::size_t i = 0) const { return to_expr(values.at(i)); }
};

enum class Branch { UseA, UseB, Both };

struct BranchChoice {
  Branch kind = Branch::UseA;
  ZeroVerdict a;
  ZeroVerdict b;
  bool uses_a() const { return kind != Branch::UseB; }
};

std::string to_string(Branch b);

struct FCondition {
  RatFunc G;
  RatFunc H;
  /// (AG + BH)/3, the fifth power of F.
  RatFunc F5;
  ZeroVerdict verdict;
};

struct Phi {
  RatFunc phi1;
  RatFunc phi2;
};

/// Difference of the A-branch and B-branch value of one quantity.
struct BranchAgreement {
  std::string name;
  ZeroVerdict difference;
};

/// Every stage of the invariant computation for one equation. Stages are
/// computed on first use, normalized, and cached by name. All values live in
/// the ring generated by the coefficients, which is closed under x and y
/// derivatives.
class Pipeline {
 public:
  explicit Pipeline(const OdeCubic& ode, const ZeroTestOptions& zero = {});

  const OdeCubic& ode() const { return ode_; }
  const RingPtr& ring() const { return ring_; }
  const ZeroTestOptions& zero_options() const { return zero_; }

  /// alpha^1 = B, alpha^2 = -A.
  const Pseudo& alpha();
  const RatFunc& A();
  const RatFunc& B();
  const ZeroVerdict& A_verdict();
  const ZeroVerdict& B_verdict();

  /// Throws BothComponentsZero unless A or B is NonZero.
  const BranchChoice& branch();

  const FCondition& f_condition();
  const Pseudo& N();
  const Phi& phi();
  const Pseudo& M();
  const Pseudo& Omega();
  const Pseudo& omega();
  const Pseudo& Theta();
  const Pseudo& theta();
  const Pseudo& L();
  const Pseudo& L1();
  const Pseudo& W();
  const Pseudo& V();
  const Pseudo& gamma();
  const Pseudo& xi();
  /// Throws GammaUndefined when M vanishes identically.
  const Pseudo& Gamma();

  /// Partial derivative of order (i, j) in (x, y).
  RatFunc d(const RatFunc& f, int i, int j) const;

  /// Agreement checks made when both branches exist and F = 0.
  const std::vector<BranchAgreement>& agreements() const { return agreements_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  /// Evaluates a quantity by one branch formula regardless of the policy;
  /// `name` is one of N, M, Omega, Theta, phi1, phi2, gamma1, gamma2.
  RatFunc on_branch(const std::string& name, bool use_a);

  ZeroVerdict zero_test(const RatFunc& f) const { return is_identically_zero(f, zero_); }
  RatFunc constant(const Rational& c) const { return RatFunc::constant(ring_, c); }

 private:
  OdeCubic ode_;
  ZeroTestOptions zero_;
  RingPtr ring_;
  RatFunc P_, Q_, R_, S_;
  std::map<std::string, Pseudo> cache_;
  std::map<std::string, RatFunc> scalars_;
  std::optional<ZeroVerdict> a_verdict_, b_verdict_;
  std::optional<BranchChoice> branch_;
  std::optional<FCondition> f_;
  std::optional<Phi> phi_;
  std::vector<BranchAgreement> agreements_;
  std::vector<std::string> diagnostics_;

  // first and second partials of a named base field, memoized
  const RatFunc& D(const std::string& name, int i, int j);
  const RatFunc& base(const std::string& name);

  RatFunc N_on(bool use_a);
  Phi phi_on(bool use_a);
  RatFunc M_on(bool use_a);
  RatFunc Omega_on(bool use_a);
  std::pair<RatFunc, RatFunc> omega_on(bool use_a);
  RatFunc Theta_on(bool use_a);
  std::pair<RatFunc, RatFunc> gamma_on(bool use_a);

  /// Runs `on` for the chosen branch; with both branches it also checks
  /// agreement once F = 0 is established.
  RatFunc by_policy(const std::string& name, RatFunc (Pipeline::*on)(bool));
  const Pseudo& store(Pseudo p);
};

}  // namespace painleve
