#include "stabkit/pencils.hpp"

#include <stdexcept>

#include "stabkit/real_roots.hpp"

namespace stabkit {

namespace {

void require_hermitian(const GaussianMatrix& A, const char* what) {
  if (!A.hermitian()) throw std::invalid_argument(std::string(what) + " must be Hermitian");
}

// Z - A where the diagonal variable of row k is vars[k], inside a ring of nvars variables.
std::vector<MultiPoly> shifted_entries(const GaussianMatrix& A, std::size_t nvars,
                                       std::span<const std::size_t> vars) {
  const std::size_t d = A.order();
  std::vector<MultiPoly> e;
  e.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      MultiPoly p = MultiPoly::constant(nvars, -A(r, c));
      if (r == c) p += MultiPoly::variable(nvars, vars[r]);
      e.push_back(std::move(p));
    }
  }
  return e;
}

std::vector<MultiPoly> delete_row_col(const std::vector<MultiPoly>& e, std::size_t d, std::size_t i,
                                      std::size_t j) {
  std::vector<MultiPoly> out;
  out.reserve((d - 1) * (d - 1));
  for (std::size_t r = 0; r < d; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0; c < d; ++c) {
      if (c != j) out.push_back(e[r * d + c]);
    }
  }
  return out;
}

std::vector<std::size_t> iota_vars(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = offset + k;
  return v;
}

UniPoly as_univariate(const MultiPoly& p) {
  const std::vector<Rational> zero(p.nvars(), Rational(0));
  const std::vector<Rational> one(p.nvars(), Rational(1));
  return p.restrict_to_line(zero, one);
}

// det(tI + s A) as a univariate polynomial.
UniPoly shifted_char_poly(const GaussianMatrix& A, long s) {
  const std::vector<std::size_t> vars(A.order(), 0);
  const std::vector<MultiPoly> e = shifted_entries(A.scale(GaussRat(-s)), 1, vars);
  return as_univariate(determinant(e, A.order(), 1));
}

}  // namespace

PSDCertificate is_psd(const GaussianMatrix& A) {
  require_hermitian(A, "matrix");
  PSDCertificate cert;
  cert.char_poly = shifted_char_poly(A, 1);
  cert.sign_pattern_ok = true;
  for (const auto& c : cert.char_poly.coeffs()) {
    if (!c.is_real() || sgn(c.re) < 0) cert.sign_pattern_ok = false;
  }
  return cert;
}

PencilResult pencil_polynomial(std::span<const GaussianMatrix> As, const GaussianMatrix& B) {
  if (As.empty()) throw std::invalid_argument("pencil needs at least one matrix A_i");
  const std::size_t d = B.order();
  for (const auto& A : As) {
    if (A.order() != d) throw std::invalid_argument("pencil matrices have different orders");
  }
  if (!B.hermitian()) throw std::domain_error("pencil matrix B must be Hermitian");
  for (const auto& A : As) {
    if (!A.hermitian() || !is_psd(A).psd()) throw std::domain_error("pencil matrices A_i must be positive semidefinite");
  }
  const std::size_t n = As.size();
  std::vector<MultiPoly> e;
  e.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      MultiPoly p = MultiPoly::constant(n, B(r, c));
      for (std::size_t k = 0; k < n; ++k) {
        if (!As[k](r, c).is_zero()) p += MultiPoly::variable(n, k).scale(As[k](r, c));
      }
      e.push_back(std::move(p));
    }
  }
  PencilResult out;
  out.poly = determinant(e, d, n);
  out.verdict.cls = StabilityClass::HR;
  if (out.poly.is_zero()) {
    out.verdict.status = VerdictStatus::ProvenZero;
  } else {
    out.verdict.status = VerdictStatus::ProvenStable;
    out.verdict.certificate = CertificateKind::PencilCertificate;
  }
  return out;
}

MultiPoly char_poly_multi(const GaussianMatrix& A) {
  require_hermitian(A, "matrix");
  const std::size_t n = A.order();
  return determinant(shifted_entries(A, n, iota_vars(n)), n, n);
}

MultiPoly char_poly_minor(const GaussianMatrix& A, std::size_t i, std::size_t j) {
  const std::size_t n = A.order();
  if (i >= n || j >= n) throw std::invalid_argument("minor index out of range");
  return determinant(delete_row_col(shifted_entries(A, n, iota_vars(n)), n, i, j), n - 1, n);
}

CauchyPoincareReport cauchy_poincare_check(const GaussianMatrix& A, std::size_t j, const SampleConfig& cfg) {
  require_hermitian(A, "matrix");
  const std::size_t n = A.order();
  if (n < 2) throw std::invalid_argument("Cauchy-Poincare check needs order at least 2");
  if (j >= n) throw std::invalid_argument("index out of range");

  const MultiPoly C = char_poly_multi(A);
  std::vector<std::size_t> map;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != j) map.push_back(k);
  }
  const MultiPoly M = char_poly_multi(A.minor(j, j)).embed(n, map);

  CauchyPoincareReport report;
  report.derivative_identity = C.derivative(j) == M;
  report.proper_position = proper_position_multi(M, C, cfg);
  report.eigenvalues_interlace =
      roots_interlace(RatPoly::from_uni(as_univariate(C)), RatPoly::from_uni(as_univariate(M)));
  return report;
}

bool christoffel_darboux_verify(const GaussianMatrix& A, std::size_t i, std::size_t j) {
  const std::size_t n = A.order();
  if (n < 2) throw std::invalid_argument("Christoffel-Darboux identity needs order at least 2");
  if (i >= n || j >= n) throw std::invalid_argument("index out of range");
  const std::size_t nv = 2 * n;
  const auto X = shifted_entries(A, nv, iota_vars(n));
  const auto Y = shifted_entries(A, nv, iota_vars(n, n));
  auto full = [&](const std::vector<MultiPoly>& e) { return determinant(e, n, nv); };
  auto minor = [&](const std::vector<MultiPoly>& e, std::size_t r, std::size_t c) {
    return determinant(delete_row_col(e, n, r, c), n - 1, nv);
  };

  const MultiPoly lhs = full(Y) * minor(X, i, j) - full(X) * minor(Y, i, j);
  MultiPoly rhs(nv);
  for (std::size_t k = 0; k < n; ++k) {
    const MultiPoly diff = MultiPoly::variable(nv, n + k) - MultiPoly::variable(nv, k);
    rhs += diff * minor(X, i, k) * minor(Y, k, j);
  }
  return lhs == rhs;
}

StabilityVerdict garding_direction_check(const MultiPoly& f, const SampleConfig& cfg) {
  if (f.is_zero()) throw std::invalid_argument("hyperbolicity check of the zero polynomial");
  if (!f.is_real()) throw std::domain_error("hyperbolicity check needs real coefficients");
  const MultiPoly fh = f.homogenize();
  const std::size_t n = f.nvars();
  const int d = fh.degree();

  StabilityVerdict verdict;
  verdict.cls = StabilityClass::HR;
  RationalSampler rng(cfg.denominator_bound, cfg.seed);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Line line{std::vector<Rational>(n + 1, Rational(0)), std::vector<Rational>(n + 1, Rational(0))};
    if (trial == 0) {
      line.alpha[n] = 1;
      for (std::size_t k = 0; k < n; ++k) line.v[k] = 1;
    } else {
      for (auto& a : line.alpha) a = rng.in_range(-cfg.alpha_bound, cfg.alpha_bound);
      for (std::size_t k = 0; k < n; ++k) line.v[k] = rng.positive(cfg.v_max);
    }
    UniPoly p = fh.restrict_to_line(line.alpha, line.v);
    const bool drop = p.degree() != d;
    if (drop || !is_hyperbolic(p)) {
      verdict.status = VerdictStatus::Refuted;
      verdict.trials = trial + 1;
      verdict.refutation =
          Refutation{drop ? RefutationKind::DegreeDrop : RefutationKind::LineRestriction, std::move(line), trial,
                     std::move(p)};
      return verdict;
    }
  }
  verdict.status = VerdictStatus::SampledPass;
  verdict.trials = cfg.trials;
  return verdict;
}

LaxReport lax_verify(const GaussianMatrix& A, const GaussianMatrix& B, const GaussianMatrix& C, const Rational& alpha,
                     const SampleConfig& cfg) {
  if (sgn(alpha) == 0) throw std::invalid_argument("alpha must be nonzero");
  const std::size_t d = A.order();
  if (B.order() != d || C.order() != d) throw std::invalid_argument("matrices have different orders");
  if (!A.hermitian() || !is_psd(A).psd()) throw std::domain_error("A must be positive semidefinite");
  if (!B.hermitian() || !is_psd(B).psd()) throw std::domain_error("B must be positive semidefinite");
  if (!C.is_real() || !C.hermitian()) throw std::domain_error("C must be real symmetric");

  std::vector<MultiPoly> e;
  e.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      MultiPoly p = MultiPoly::constant(2, C(r, c));
      if (!A(r, c).is_zero()) p += MultiPoly::variable(2, 0).scale(A(r, c));
      if (!B(r, c).is_zero()) p += MultiPoly::variable(2, 1).scale(B(r, c));
      e.push_back(std::move(p));
    }
  }
  LaxReport report;
  report.poly = determinant(e, d, 2).scale(GaussRat(alpha));
  report.verdict = check_stable(report.poly, StabilityClass::HR, cfg);

  // det(A + tB)
  std::vector<MultiPoly> pe;
  pe.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      MultiPoly p = MultiPoly::constant(1, A(r, c));
      if (!B(r, c).is_zero()) p += MultiPoly::variable(1, 0).scale(B(r, c));
      pe.push_back(std::move(p));
    }
  }
  const UniPoly q = as_univariate(determinant(pe, d, 1));
  if (q.is_zero()) {
    report.coefficient_claim_ok = true;
  } else if (is_hyperbolic(q)) {
    const RootSigns s = roots_all_same_sign(q);
    report.coefficient_claim_ok = s == RootSigns::AllNonpos || s == RootSigns::NoRoots;
  }
  report.a_plus_b_identity = A + B == GaussianMatrix::identity(d);
  return report;
}

}  // namespace stabkit
