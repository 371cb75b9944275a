#ifndef STABKIT_MULTI_POLY_HPP
#define STABKIT_MULTI_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/gauss_rational.hpp"
#include "stabkit/uni_poly.hpp"

namespace stabkit {

/// Exponent multi-index; std::vector ordering is the lexicographic order on N^n.
using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

struct Term {
  Exponent exponent;
  GaussRat coeff;
};

/// Sparse polynomial in a fixed number of variables over Q(i).
///
/// Invariants: no zero coefficient is stored and every exponent has exactly
/// nvars() entries. The zero polynomial is the empty term map and is a valid
/// value for every operation below.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, GaussRat>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MultiPoly(std::size_t nvars, std::span<const Term> terms);

  static MultiPoly constant(std::size_t nvars, const GaussRat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t var);
  static MultiPoly monomial(Exponent exponent, const GaussRat& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree, -1 for the zero polynomial.
  int degree() const;
  unsigned degree_in(std::size_t var) const;
  GaussRat coefficient(const Exponent& e) const;
  std::vector<Exponent> support() const;
  /// Indices of variables that occur with positive exponent somewhere.
  std::vector<std::size_t> used_variables() const;
  bool is_real() const;
  bool is_homogeneous() const;
  bool is_multi_affine() const;

  /// Adds c * z^e in place (the only mutator; used while building values).
  void add_term(const Exponent& e, const GaussRat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a.scale(GaussRat(-1)); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly scale(const GaussRat& c) const;
  MultiPoly pow(unsigned k) const;
  MultiPoly conj() const;
  MultiPoly real_part() const;
  MultiPoly imag_part() const;

  /// k-th partial derivative in `var`.
  MultiPoly derivative(std::size_t var, unsigned k = 1) const;
  /// Sets z_var = c; the result lives in nvars() - 1 variables.
  MultiPoly substitute_constant(std::size_t var, const GaussRat& c) const;
  /// Replaces z_var by q (a polynomial in the same ring).
  MultiPoly substitute(std::size_t var, const MultiPoly& q) const;
  GaussRat evaluate(std::span<const GaussRat> point) const;

  /// t -> f(alpha + v t), exact.
  UniPoly restrict_to_line(std::span<const Rational> alpha, std::span<const Rational> v) const;
  /// The degree-d homogenization in nvars() + 1 variables, last variable new.
  MultiPoly homogenize() const;
  /// f(lambda_1 z_1, ..., lambda_n z_n).
  MultiPoly scale_variables(std::span<const Rational> lambda) const;
  MultiPoly scale_variables(std::span<const GaussRat> lambda) const;
  /// Lexicographically maximal top-degree term and the top-degree homogeneous part.
  std::pair<Term, MultiPoly> leading_and_dominating_part() const;
  MultiPoly top_component() const;
  /// Coefficient of z_var^k as a polynomial in the same ring (z_var absent).
  MultiPoly coefficient_in(std::size_t var, unsigned k) const;
  /// Moves variable i to var_map[i] inside a ring of new_nvars variables.
  MultiPoly embed(std::size_t new_nvars, std::span<const std::size_t> var_map) const;

  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_same_ring(const MultiPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const GaussRat& c);
MultiPoly substitute_constant(const MultiPoly& p, std::size_t var, const GaussRat& c);
UniPoly restrict_to_line(const MultiPoly& f, std::span<const Rational> alpha, std::span<const Rational> v);
MultiPoly homogenize(const MultiPoly& f);
MultiPoly scale_variables(const MultiPoly& f, std::span<const Rational> lambda);
std::pair<Term, MultiPoly> leading_and_dominating_part(const MultiPoly& f);

}  // namespace stabkit

#endif  // STABKIT_MULTI_POLY_HPP
