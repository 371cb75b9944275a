#ifndef STABKIT_REAL_ROOTS_HPP
#define STABKIT_REAL_ROOTS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/gauss_rational.hpp"
#include "stabkit/uni_poly.hpp"

namespace stabkit {

/// Dense real polynomial over Q, lowest degree first, no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  /// Throws std::domain_error when p has a nonzero imaginary part.
  static RatPoly from_uni(const UniPoly& p);
  UniPoly to_uni() const;

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly operator-() const;
  RatPoly scale(const Rational& c) const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  /// Exact quotient (remainder must vanish).
  RatPoly exact_div(const RatPoly& d) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly squarefree_part(const RatPoly& p);
/// Yun decomposition: p = lc * prod_k factors[k]^(k+1), factors pairwise coprime and squarefree.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);
/// 1 + max |a_i / a_d|; every root lies strictly inside (-B, B).
Rational cauchy_bound(const RatPoly& p);

class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p);
  const std::vector<RatPoly>& polys() const { return chain_; }
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

 private:
  std::vector<RatPoly> chain_;
};

/// Endpoints absent mean infinite. Both present: the closed interval [lo, hi].
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// An isolated real root. When exact, lo == hi is the root; otherwise the
/// root is the only one in the open interval (lo, hi) and neither end is a root.
struct RealRoot {
  Rational lo;
  Rational hi;
  bool exact = false;
  unsigned multiplicity = 1;

  double approx() const;
};

/// Distinct real roots in increasing order with multiplicities; pairwise disjoint intervals.
std::vector<RealRoot> isolate_real_roots(const RatPoly& p);
std::vector<RealRoot> isolate_real_roots(const UniPoly& p);
/// Halves the isolating interval of a root of the squarefree polynomial s.
void refine_root(const RatPoly& s, RealRoot& r);
/// A rational point strictly between each pair of consecutive distinct real roots,
/// plus one point left of all roots and one right of them (one point total if none).
std::vector<Rational> gap_sample_points(const std::vector<RealRoot>& roots);

/// Number of distinct real roots, restricted to the closed interval when given.
/// Throws on the zero polynomial or nonreal coefficients.
std::size_t count_real_roots(const UniPoly& p, const Interval& interval = {});
std::size_t count_real_roots(const RatPoly& p, const Interval& interval = {});

bool is_hyperbolic(const UniPoly& p);
bool is_hyperbolic(const RatPoly& p);
bool is_strictly_hyperbolic(const UniPoly& p);

enum class RootSigns { AllNonneg, AllNonpos, Mixed, NoRoots };
std::string to_string(RootSigns s);
/// Throws std::domain_error unless p is hyperbolic. A polynomial whose only
/// root is 0 is reported as AllNonpos.
RootSigns roots_all_same_sign(const UniPoly& p);

/// f' g - f g'.
UniPoly wronskian(const UniPoly& f, const UniPoly& g);
RatPoly wronskian(const RatPoly& f, const RatPoly& g);

/// True when h has no zero in the open upper half-plane. Throws on zero.
bool is_stable_complex(const UniPoly& h);
/// True when h has no zero with Im >= 0. Throws on zero.
bool is_strictly_stable_complex(const UniPoly& h);
/// Real roots of a possibly complex polynomial, i.e. those of gcd(Re h, Im h).
RatPoly real_root_factor(const UniPoly& h);

enum class Position { FirstLLSecond, SecondLLFirst, Both, Neither };
std::string to_string(Position p);

struct ProperPositionVerdict {
  Position relation = Position::Neither;
  /// A point where W[f, g] > 0, so f << g fails there.
  std::optional<Rational> witness;

  bool first_ll_second() const { return relation == Position::FirstLLSecond || relation == Position::Both; }
  bool second_ll_first() const { return relation == Position::SecondLLFirst || relation == Position::Both; }
  bool comparable() const { return relation != Position::Neither; }
};

/// Decides f << g and g << f exactly. Throws std::invalid_argument when both
/// are zero and std::domain_error on nonreal input.
ProperPositionVerdict proper_position(const UniPoly& f, const UniPoly& g);

/// Sorted multisets interlace: a1 <= b1 <= a2 <= ... or b1 <= a1 <= b2 <= ...
template <typename T>
bool interlace_check(std::span<const T> a, std::span<const T> b) {
  auto weave = [](std::span<const T> first, std::span<const T> second) {
    if (first.size() != second.size() && first.size() != second.size() + 1) return false;
    for (std::size_t k = 0; k < second.size(); ++k) {
      if (second[k] < first[k]) return false;
      if (k + 1 < first.size() && first[k + 1] < second[k]) return false;
    }
    return true;
  };
  return weave(a, b) || weave(b, a);
}

/// Interlacing of the zeros of two nonzero hyperbolic polynomials, with multiplicity.
bool roots_interlace(const RatPoly& f, const RatPoly& g);

}  // namespace stabkit

#endif  // STABKIT_REAL_ROOTS_HPP
