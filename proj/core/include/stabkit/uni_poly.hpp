#ifndef STABKIT_UNI_POLY_HPP
#define STABKIT_UNI_POLY_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "stabkit/gauss_rational.hpp"

namespace stabkit {

/// Dense univariate polynomial over Q(i), coefficients lowest degree first.
/// The stored list never ends in a zero; the zero polynomial is the empty list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussRat> coeffs);
  UniPoly(std::initializer_list<GaussRat> coeffs) : UniPoly(std::vector<GaussRat>(coeffs)) {}

  static UniPoly from_rationals(std::span<const Rational> coeffs);
  static UniPoly constant(GaussRat c) { return UniPoly({std::move(c)}); }
  /// The polynomial t.
  static UniPoly identity() { return UniPoly({GaussRat(0), GaussRat(1)}); }

  const std::vector<GaussRat>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k, zero past the degree.
  GaussRat coeff(std::size_t k) const;
  const GaussRat& leading() const;

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_real() const;

  UniPoly real_part() const;
  UniPoly imag_part() const;
  UniPoly conj() const;
  UniPoly derivative() const;
  GaussRat evaluate(const GaussRat& t) const;
  UniPoly scale(const GaussRat& c) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a) { return a.scale(GaussRat(-1)); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<GaussRat> coeffs_;
};

}  // namespace stabkit

#endif  // STABKIT_UNI_POLY_HPP
