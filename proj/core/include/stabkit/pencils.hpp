#ifndef STABKIT_PENCILS_HPP
#define STABKIT_PENCILS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "stabkit/matrix.hpp"
#include "stabkit/multi_poly.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/uni_poly.hpp"

namespace stabkit {

struct PSDCertificate {
  /// det(tI + A).
  UniPoly char_poly;
  /// Every coefficient of char_poly is >= 0.
  bool sign_pattern_ok = false;

  bool psd() const { return sign_pattern_ok; }
};

/// Throws std::invalid_argument for a non-Hermitian matrix.
PSDCertificate is_psd(const GaussianMatrix& A);

struct PencilResult {
  MultiPoly poly;
  /// ProvenStable(PencilCertificate), or ProvenZero.
  StabilityVerdict verdict;
};

/// det(sum_i z_i A_i + B). Throws std::invalid_argument when the list is
/// empty or the orders differ, std::domain_error when some A_i is not PSD or B
/// is not Hermitian.
PencilResult pencil_polynomial(std::span<const GaussianMatrix> As, const GaussianMatrix& B);

/// det(Z - A), Z = diag(z_1, ..., z_n). Throws std::invalid_argument for a
/// non-Hermitian matrix.
MultiPoly char_poly_multi(const GaussianMatrix& A);

/// det((Z - A) with row i and column j deleted), in n variables; any square A.
MultiPoly char_poly_minor(const GaussianMatrix& A, std::size_t i, std::size_t j);

struct CauchyPoincareReport {
  /// d/dz_j C(A, z) equals C(A^jj) in the other variables.
  bool derivative_identity = false;
  /// C(A^jj) << C(A) as polynomials in n variables.
  StabilityVerdict proper_position;
  /// Zeros of det(tI - A) and det(tI - A^jj) interlace.
  bool eigenvalues_interlace = false;

  bool passed() const { return derivative_identity && proper_position.passed() && eigenvalues_interlace; }
};

/// j is 0-based. Throws std::invalid_argument for a non-Hermitian matrix, order
/// below 2 or j out of range.
CauchyPoincareReport cauchy_poincare_check(const GaussianMatrix& A, std::size_t j, const SampleConfig& cfg = {});

/// Exact check of
///   C(A,y) C_ij(A,x) - C(A,x) C_ij(A,y) = sum_k (y_k - x_k) C_ik(A,x) C_kj(A,y)
/// in 2n variables, with C_ij the (i, j) minor of Z - A. Indices are 0-based.
bool christoffel_darboux_verify(const GaussianMatrix& A, std::size_t i, std::size_t j);

/// Samples v = (v_1..v_n, 0) with v_i > 0 and base points in n + 1 dimensions
/// and checks f_H(v) != 0 and that f_H(alpha + v t) has only real zeros. A
/// vanishing f_H(v) is reported as DegreeDrop. Throws std::invalid_argument for
/// the zero polynomial and std::domain_error for nonreal coefficients.
StabilityVerdict garding_direction_check(const MultiPoly& f, const SampleConfig& cfg = {});

struct LaxReport {
  /// alpha det(xA + yB + C) in variables (x, y).
  MultiPoly poly;
  StabilityVerdict verdict;
  /// det(A + tB) is zero or has only nonpositive zeros.
  bool coefficient_claim_ok = false;
  bool a_plus_b_identity = false;
};

/// Throws std::invalid_argument for a zero alpha or mismatched orders,
/// std::domain_error when A or B is not PSD or C is not real symmetric.
LaxReport lax_verify(const GaussianMatrix& A, const GaussianMatrix& B, const GaussianMatrix& C, const Rational& alpha,
                     const SampleConfig& cfg = {});

}  // namespace stabkit

#endif  // STABKIT_PENCILS_HPP
