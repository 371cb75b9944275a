#ifndef STABKIT_WEYL_HPP
#define STABKIT_WEYL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stabkit/multi_poly.hpp"

namespace stabkit {

/// Falling factorial product prod_i a_i! / (a_i - b_i)!, zero unless b <= a.
Rational falling_factorial(const Exponent& a, const Exponent& b);

/// Finite-order differential operator sum a_{ab} z^a D^b with polynomial
/// coefficients, always in normal order (multiplications left of derivatives).
///
/// Stored as its symbol: the polynomial in 2n commuting variables
/// (z_1..z_n, w_1..w_n) with the same coefficients.
class WeylOp {
 public:
  struct OpTerm {
    Exponent zexp;
    Exponent dexp;
    GaussRat coeff;
  };

  explicit WeylOp(std::size_t nvars = 0) : nvars_(nvars), symbol_(2 * nvars) {}

  static WeylOp identity(std::size_t nvars);
  static WeylOp constant(std::size_t nvars, const GaussRat& c);
  /// Multiplication by z_i.
  static WeylOp z(std::size_t nvars, std::size_t i);
  /// Differentiation in z_i.
  static WeylOp d(std::size_t nvars, std::size_t i);
  /// Multiplication by a polynomial.
  static WeylOp multiplication(const MultiPoly& p);
  /// p(D) in one variable.
  static WeylOp from_derivative_poly(const UniPoly& p);
  /// Throws std::invalid_argument when F has an odd number of variables.
  static WeylOp from_symbol(const MultiPoly& F);

  void add_term(const Exponent& zexp, const Exponent& dexp, const GaussRat& c);

  std::size_t nvars() const { return nvars_; }
  const MultiPoly& symbol() const { return symbol_; }
  std::vector<OpTerm> terms() const;
  bool is_zero() const { return symbol_.is_zero(); }
  bool is_real() const { return symbol_.is_real(); }
  /// Every term has equal z and D exponents.
  bool is_diagonal() const;
  /// Largest total derivative order, -1 for the zero operator.
  int order() const;

  MultiPoly apply(const MultiPoly& f) const;
  WeylOp adjoint() const;
  /// F_T(z, -w).
  MultiPoly symbol_negate_w() const;
  WeylOp scale(const GaussRat& c) const;

  friend WeylOp operator+(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator-(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.symbol_ == b.symbol_; }

  std::string to_string() const;

 private:
  std::size_t nvars_;
  MultiPoly symbol_;
};

MultiPoly apply(const WeylOp& T, const MultiPoly& f);
MultiPoly symbol(const WeylOp& T);
WeylOp op_from_symbol(const MultiPoly& F);
/// Normal-ordered product ST (apply T first).
WeylOp compose(const WeylOp& S, const WeylOp& T);
WeylOp adjoint(const WeylOp& T);
MultiPoly symbol_negate_w(const WeylOp& T);
/// sum_k (-1)^|k| / k! d_z^k F d_w^k G on symbols in 2n variables.
MultiPoly star_product(const MultiPoly& F, const MultiPoly& G);

/// A real sequence on the box prod_i [0, extents[i]), stored row-major
/// (last index fastest).
struct MultiplierData {
  std::size_t nvars = 0;
  std::vector<std::size_t> extents;
  std::vector<Rational> values;

  MultiplierData() = default;
  explicit MultiplierData(std::vector<std::size_t> extents);

  std::size_t size() const { return values.size(); }
  std::size_t index_of(const Exponent& a) const;
  Exponent exponent_of(std::size_t index) const;
  const Rational& at(const Exponent& a) const { return values[index_of(a)]; }
  Rational& at(const Exponent& a) { return values[index_of(a)]; }
  bool contains(const Exponent& a) const;
};

/// The diagonal operator sum_b c_b z^b D^b that multiplies z^a by lambda(a)
/// on the box, with c_b = (Delta^b lambda)(0) / b!.
WeylOp diag_from_sequence(const MultiplierData& lambda);
/// lambda(a) = T(z^a) / z^a on the box. Throws for non-diagonal T.
MultiplierData sequence_from_diag(const WeylOp& T, const std::vector<std::size_t>& extents);

}  // namespace stabkit

#endif  // STABKIT_WEYL_HPP
