#ifndef STABKIT_PRESERVERS_HPP
#define STABKIT_PRESERVERS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabkit/multi_poly.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/weyl.hpp"

namespace stabkit {

/// Which criterion produced a preserver verdict.
enum class TheoremPath {
  SymbolTestComplex,  // T preserves stability iff F_T(z, -w) is stable
  SymbolTestReal,     // the same over the reals
  StrictNecessary,    // F_T(z, -w) != 0 for Im z >= 0, Im w > 0
  StrictSufficient,   // F_T(z, -w) strictly stable
  DualityTransfer,    // verdict obtained for T* and carried over
};

/// Kebab-case names used in JSON output.
std::string to_string(TheoremPath p);

enum class PullbackStatus { NotAttempted, Found, Failed };
std::string to_string(PullbackStatus s);

/// A stable input whose image under T is refuted.
struct PreserverRefutation {
  MultiPoly input;
  MultiPoly image;
  StabilityVerdict image_verdict;
};

struct PreserverVerdict {
  TheoremPath path = TheoremPath::SymbolTestComplex;
  /// The polynomial the verdict was computed on (F_T(z, -w) for symbol tests).
  MultiPoly tested_symbol;
  StabilityVerdict inner;
  PullbackStatus pullback = PullbackStatus::NotAttempted;
  std::optional<PreserverRefutation> refutation;

  bool passed() const { return inner.passed(); }
};

struct PreserverOptions {
  /// Try to manufacture a stable input with a refuted image.
  bool attempt_pullback = true;
  /// Trials used when testing candidate images.
  std::size_t pullback_trials = 60;
};

/// Symbol test for cls in {HC, HR}. Throws std::invalid_argument for the zero
/// operator or a strict class, std::domain_error for HR with nonreal coefficients.
PreserverVerdict certify_preserver(const WeylOp& T, StabilityClass cls, const SampleConfig& cfg = {},
                                   std::span<const Line> hints = {}, const PreserverOptions& opts = {});

/// Maps a line on which F_T(z, -w) vanishes at t0 to a line on which
/// F_{T*}(z, -w) vanishes at -conj(t0).
Line dual_line(const Line& line);

struct DualityReport {
  PreserverVerdict primal;
  PreserverVerdict dual;
  bool agree = false;
  /// For one variable: F_{T*}(z, w) is the conjugate of F_T(w, z).
  std::optional<bool> reflection_ok;
};

DualityReport duality_check(const WeylOp& T, StabilityClass cls, const SampleConfig& cfg = {},
                            const PreserverOptions& opts = {});

enum class SignPattern { SameSign, AlternatingSign, Violated };
std::string to_string(SignPattern s);

struct MultiplierReport {
  bool rank1_relations_ok = false;
  /// lambda(a) lambda(b) != 0 with a <= b forces lambda != 0 on [a, b].
  bool support_is_box = false;
  SignPattern sign_pattern = SignPattern::Violated;
  bool univariate_slices_ok = false;
  /// lambda(a) = prod_i factors[i][a_i] on the box, when such factors exist.
  std::optional<std::vector<std::vector<Rational>>> factor_decomposition;

  bool passed() const {
    return rank1_relations_ok && support_is_box && sign_pattern != SignPattern::Violated && univariate_slices_ok &&
           factor_decomposition.has_value();
  }
};

MultiplierReport multiplier_structure_check(const MultiplierData& lambda);

/// T[(1+z)^m] for a univariate sequence: sum_k C(m, k) lambda(k) z^k.
UniPoly image_of_binomial_power(std::span<const Rational> lambda, unsigned m);
/// Whether p is zero or hyperbolic with all zeros of one sign.
bool hyperbolic_same_sign_or_zero(const UniPoly& p);

struct FiniteMultiplierReport {
  bool rank_one = false;
  /// f_i(t) with F_T = prod_i f_i(z_i w_i); present when rank_one.
  std::vector<UniPoly> factors;
  bool factors_nonpositive_rooted = false;

  bool certified() const { return rank_one && factors_nonpositive_rooted; }
};

/// Throws std::invalid_argument unless T is a nonzero diagonal operator,
/// std::domain_error for nonreal coefficients.
FiniteMultiplierReport finite_multiplier_certify(const WeylOp& T);

struct CompositionReport {
  MultiPoly result;
  StabilityVerdict verdict;
};

/// sum_k k! a_k Q_k z_var^k where f = sum a_k t^k and Q_k is the z_var^k
/// coefficient of F. Throws std::domain_error when f has a positive or nonreal zero.
CompositionReport schur_composition(const UniPoly& f, const MultiPoly& F, std::size_t var,
                                    const SampleConfig& cfg = {});

struct CoefficientReport {
  struct Entry {
    Exponent w_exponent;
    MultiPoly q;
    StabilityVerdict verdict;
  };
  std::vector<Entry> entries;

  bool passed() const;
};

/// Writes F_T = sum_a Q_a(z) w^a and tests every Q_a for stability (real
/// stability when T is real).
CoefficientReport coefficient_criterion(const WeylOp& T, const SampleConfig& cfg = {});

struct PolyaReport {
  MultiPoly G;
  IntersectionReport intersection;
};

/// G(x, y) = sum_{k <= n} b_k x^k f^(k)(y) in variables (x, y), n = deg f.
/// Throws std::domain_error when f is not hyperbolic, b_0..b_n are not all
/// positive or the b polynomial is not hyperbolic.
PolyaReport polya_curve(std::span<const Rational> b, const UniPoly& f, const SampleConfig& cfg = {});

/// Samples lines with Im z >= 0 and Im w > 0 directions and looks for a zero of F_T(z, -w).
PreserverVerdict strict_necessary_check(const WeylOp& T, const SampleConfig& cfg = {});
/// Strict stability of F_T(z, -w); a pass certifies a strict preserver.
PreserverVerdict strict_sufficient_check(const WeylOp& T, const SampleConfig& cfg = {}, bool real = false);

struct DominatingPart {
  WeylOp part;
  std::vector<long> kappa0;
};

/// Groups the terms of T by a - b and keeps the lexicographically largest
/// group among those of largest l1 norm, as sum_b a_{k0+b, b} z^b D^b.
DominatingPart dominating_part(const WeylOp& T);

/// The operator with symbol F_T(mu z, lambda w).
WeylOp homotopy(const WeylOp& T, std::span<const Rational> mu, std::span<const Rational> lambda);

/// Verdict for T(f) when both T and f carry exact certificates; nullopt otherwise.
std::optional<StabilityVerdict> certified_image(const PreserverVerdict& op, const StabilityVerdict& input,
                                                const MultiPoly& image);

}  // namespace stabkit

#endif  // STABKIT_PRESERVERS_HPP
