#ifndef STABKIT_MATRIX_HPP
#define STABKIT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stabkit/gauss_rational.hpp"
#include "stabkit/multi_poly.hpp"

namespace stabkit {

/// Largest order accepted by the polynomial determinant.
inline constexpr std::size_t kMaxDeterminantOrder = 8;

/// Square matrix over Q(i), row-major.
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(std::size_t order);
  GaussianMatrix(std::size_t order, std::vector<GaussRat> entries);

  static GaussianMatrix identity(std::size_t order);
  static GaussianMatrix diagonal(const std::vector<Rational>& d);

  std::size_t order() const { return order_; }
  const std::vector<GaussRat>& entries() const { return entries_; }
  const GaussRat& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  GaussRat& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

  bool hermitian() const;
  bool is_real() const;
  bool is_zero() const;
  GaussianMatrix conj_transpose() const;
  /// Deletes row i and column j.
  GaussianMatrix minor(std::size_t i, std::size_t j) const;

  friend GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b);
  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
  friend bool operator==(const GaussianMatrix& a, const GaussianMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }
  GaussianMatrix scale(const GaussRat& c) const;

  std::string to_string() const;

 private:
  std::size_t order_ = 0;
  std::vector<GaussRat> entries_;
};

/// Determinant of a square matrix of polynomials in nvars variables (row-major
/// entries), by cofactor expansion memoised over column subsets. Throws
/// std::invalid_argument above kMaxDeterminantOrder.
MultiPoly determinant(const std::vector<MultiPoly>& entries, std::size_t order, std::size_t nvars);

GaussRat determinant(const GaussianMatrix& A);

}  // namespace stabkit

#endif  // STABKIT_MATRIX_HPP
