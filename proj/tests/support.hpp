// Builders, random corpora and independent oracles shared by the test binaries.
#ifndef STABKIT_TESTS_SUPPORT_HPP
#define STABKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "stabkit/gauss_rational.hpp"
#include "stabkit/matrix.hpp"
#include "stabkit/multi_poly.hpp"
#include "stabkit/uni_poly.hpp"
#include "stabkit/weyl.hpp"

namespace stabkit::testing {

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline MultiPoly poly(std::size_t n, std::initializer_list<std::pair<Exponent, GaussRat>> terms) {
  MultiPoly p(n);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

inline UniPoly upoly(std::initializer_list<long> coeffs) {
  std::vector<GaussRat> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

/// prod (t - r) for integer roots r.
inline UniPoly from_roots(const std::vector<long>& roots) {
  UniPoly p = upoly({1});
  for (long r : roots) p = p * upoly({-r, 1});
  return p;
}

inline GaussianMatrix mat(std::size_t order, std::initializer_list<long> entries) {
  std::vector<GaussRat> e;
  for (long v : entries) e.emplace_back(v);
  return GaussianMatrix(order, std::move(e));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  Rational rational(long lo, long hi, long max_den) {
    const long d = integer(1, max_den);
    Rational r(integer(lo * d, hi * d), d);
    r.canonicalize();
    return r;
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Random polynomial with integer coefficients in [-c, c] and total degree <= deg.
inline MultiPoly random_poly(Rng& rng, std::size_t n, unsigned deg, long c, double density = 0.6) {
  MultiPoly p(n);
  Exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == n) {
      if (rng.coin(density)) p.add_term(e, GaussRat(rng.integer(-c, c)));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, deg);
  return p;
}

inline WeylOp random_op(Rng& rng, std::size_t n, unsigned order, unsigned zdeg, long c, double density = 0.4) {
  WeylOp T(n);
  MultiPoly zpart = random_poly(rng, n, zdeg, 1, 1.0);
  for (const auto& zt : zpart.terms()) {
    MultiPoly dpart = random_poly(rng, n, order, 1, 1.0);
    for (const auto& dt : dpart.terms()) {
      if (rng.coin(density)) T.add_term(zt.first, dt.first, GaussRat(rng.integer(-c, c)));
    }
  }
  return T;
}

/// (M + M*) / 2 for M with Gaussian-rational entries of bounded height.
inline GaussianMatrix random_hermitian(Rng& rng, std::size_t order, long bound, long max_den, bool real = false) {
  GaussianMatrix M(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      M(i, j) = GaussRat(rng.rational(-bound, bound, max_den),
                         real ? Rational(0) : rng.rational(-bound, bound, max_den));
    }
  }
  return (M + M.conj_transpose()).scale(GaussRat(Rational(1, 2)));
}

/// M* M with a random rank <= order.
inline GaussianMatrix random_psd(Rng& rng, std::size_t order, long bound, bool real = true) {
  const std::size_t rank = static_cast<std::size_t>(rng.integer(0, static_cast<long>(order)));
  GaussianMatrix M(order);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      M(i, j) = GaussRat(Rational(rng.integer(-bound, bound)), real ? Rational(0) : Rational(rng.integer(-bound, bound)));
    }
  }
  return M.conj_transpose() * M;
}

inline GaussianMatrix random_matrix(Rng& rng, std::size_t order, long bound) {
  GaussianMatrix M(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) M(i, j) = GaussRat(rng.integer(-bound, bound));
  }
  return M;
}

// ---- oracles -------------------------------------------------------------

/// Leibniz expansion over all permutations.
inline MultiPoly leibniz_determinant(const std::vector<MultiPoly>& e, std::size_t d, std::size_t nvars) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(nvars);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
    }
    MultiPoly term = MultiPoly::constant(nvars, GaussRat(inversions % 2 ? -1 : 1));
    for (std::size_t r = 0; r < d; ++r) term = term * e[r * d + perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Durand-Kerner root finder in double precision.
inline std::vector<std::complex<double>> numeric_roots(const UniPoly& p) {
  using C = std::complex<double>;
  const int d = p.degree();
  std::vector<C> a;
  for (const auto& c : p.coeffs()) a.emplace_back(c.re.get_d(), c.im.get_d());
  const C lead = a.back();
  for (auto& x : a) x /= lead;
  std::vector<C> z(d);
  const C seed(0.4, 0.9);
  for (int k = 0; k < d; ++k) z[k] = std::pow(seed, k);
  auto eval = [&](C x) {
    C acc = 0;
    for (int k = d; k >= 0; --k) acc = acc * x + a[k];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    double moved = 0;
    for (int k = 0; k < d; ++k) {
      C den = 1;
      for (int j = 0; j < d; ++j) {
        if (j != k) den *= z[k] - z[j];
      }
      const C step = eval(z[k]) / den;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

/// Numeric stability oracle: no root with imaginary part above tol.
inline bool numeric_stable(const UniPoly& p, double tol = 1e-7) {
  for (const auto& r : numeric_roots(p)) {
    if (r.imag() > tol) return false;
  }
  return true;
}

/// Applies sum a z^a D^b to a monomial directly, bypassing the symbol calculus.
inline MultiPoly apply_to_monomial(const WeylOp& T, const Exponent& m) {
  MultiPoly out(T.nvars());
  for (const auto& t : T.terms()) {
    Exponent e(m.size());
    Rational c = 1;
    bool vanish = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (t.dexp[i] > m[i]) {
        vanish = true;
        break;
      }
      for (std::uint32_t k = 0; k < t.dexp[i]; ++k) c *= m[i] - k;
      e[i] = m[i] - t.dexp[i] + t.zexp[i];
    }
    if (!vanish) out.add_term(e, t.coeff * GaussRat(c));
  }
  return out;
}

inline std::vector<Exponent> monomials_up_to(std::size_t n, unsigned deg) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == n) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace stabkit::testing

#endif  // STABKIT_TESTS_SUPPORT_HPP
