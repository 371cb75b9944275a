// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "stabkit/pencils.hpp"
#include "stabkit/preservers.hpp"
#include "stabkit/real_roots.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/weyl.hpp"
#include "support.hpp"

using namespace stabkit;
using namespace stabkit::testing;

namespace {

// Pinned tolerances. Everything else is compared exactly.
constexpr double kEigenTol = 1e-9;           // numeric eigenvalue interlacing oracle
constexpr std::size_t kPencilLines = 500;    // criterion 5
constexpr std::size_t kDetSamplerTrials = 300;  // criterion 3
constexpr std::size_t kCombinations = 200;   // criterion 4
constexpr unsigned kBinomialMax = 12;        // criterion 8

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

/// P(z, -w) for a polynomial in 2n variables.
MultiPoly negate_w(const MultiPoly& P) {
  const std::size_t n = P.nvars() / 2;
  MultiPoly out(P.nvars());
  for (const auto& [e, c] : P.terms()) {
    unsigned wdeg = 0;
    for (std::size_t k = n; k < 2 * n; ++k) wdeg += e[k];
    out.add_term(e, wdeg % 2 ? -c : c);
  }
  return out;
}

/// Nonzero real pencil polynomial in m variables. With beyond_exact, retries
/// until check_stable has to sample it.
MultiPoly random_pencil(Rng& rng, std::size_t m, std::size_t order, bool complex_entries = false,
                        bool beyond_exact = false) {
  for (;;) {
    std::vector<GaussianMatrix> As;
    for (std::size_t k = 0; k < m; ++k) As.push_back(random_psd(rng, order, 2, !complex_entries));
    const auto r = pencil_polynomial(As, random_hermitian(rng, order, 3, 2, !complex_entries));
    if (r.poly.is_zero() || r.poly.degree() <= 0) continue;
    const std::size_t used = r.poly.used_variables().size();
    if (beyond_exact && (used < 2 || (used == 2 && r.poly.is_multi_affine()))) continue;
    return r.poly;
  }
}

UniPoly random_real_rooted(Rng& rng, unsigned deg) {
  std::vector<long> roots;
  for (unsigned k = 0; k < deg; ++k) roots.push_back(rng.integer(-3, 3));
  return from_roots(roots).scale(GaussRat(rng.coin() ? 1 : -2));
}

UniPoly as_uni(const MultiPoly& p) {
  std::vector<GaussRat> c(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UniPoly(std::move(c));
}

MultiPoly uni_in(std::size_t nvars, std::size_t var, const UniPoly& p) {
  MultiPoly out(nvars);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Exponent e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(k);
    out.add_term(e, p.coeffs()[k]);
  }
  return out;
}

// ---- 1 ---------------------------------------------------------------------

Outcome weyl_product() {
  Rng rng(1001);
  std::size_t mismatches = 0, checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    const WeylOp S = random_op(rng, n, 3, 3, 3), T = random_op(rng, n, 3, 3, 3);
    const WeylOp ST = compose(S, T);
    for (const auto& m : monomials_up_to(n, 8)) {
      MultiPoly direct(n);
      const MultiPoly inner = apply_to_monomial(T, m);
      for (const auto& [e, c] : inner.terms()) direct += apply_to_monomial(S, e).scale(c);
      mismatches += !(apply_to_monomial(ST, m) == direct);
      ++checks;
    }
  }
  return {mismatches == 0, fmt("100 operator pairs, %zu monomial checks, %zu mismatches", checks, mismatches)};
}

// ---- 2 ---------------------------------------------------------------------

WeylOp certified_op(Rng& rng, int kind) {
  const std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
  switch (kind) {
    case 0:
      return WeylOp::from_derivative_poly(random_real_rooted(rng, static_cast<unsigned>(rng.integer(1, 3))));
    case 1:
      return WeylOp::multiplication(uni_in(1, 0, random_real_rooted(rng, static_cast<unsigned>(rng.integer(1, 3)))));
    case 2: {
      WeylOp T = WeylOp::identity(n);
      Exponent a(n, 0), b(n, 0);
      a[static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1))] = 1;
      b[static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1))] = 1;
      T.add_term(a, b, GaussRat(rng.rational(0, 3, 4)));
      return T;
    }
    default:
      return op_from_symbol(
          negate_w(random_pencil(rng, 2 * n, static_cast<std::size_t>(rng.integer(2, n == 1 ? 3 : 2)), false, true)));
  }
}

WeylOp refuted_op(Rng& rng, int kind) {
  const std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
  const UniPoly bad = upoly({rng.integer(1, 3), 0, 1}) * random_real_rooted(rng, static_cast<unsigned>(rng.integer(0, 1)));
  switch (kind) {
    case 0:
      return WeylOp::from_derivative_poly(bad);
    case 1:
      return WeylOp::multiplication(uni_in(1, 0, bad));
    case 2: {
      WeylOp T = WeylOp::identity(n);
      Exponent a(n, 0), b(n, 0);
      a[static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1))] = 1;
      b[static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1))] = 1;
      T.add_term(a, b, GaussRat(-rng.rational(1, 3, 4)));
      return T;
    }
    default: {
      const MultiPoly P = random_pencil(rng, 2 * n, 2, false, true);
      const std::size_t var = static_cast<std::size_t>(rng.integer(0, 2 * static_cast<long>(n) - 1));
      const MultiPoly q = uni_in(2 * n, var, upoly({rng.integer(1, 3), 0, 1}));
      return op_from_symbol(negate_w(P * q));
    }
  }
}

Outcome duality() {
  Rng rng(1002);
  SampleConfig cfg;
  PreserverOptions opts;
  opts.attempt_pullback = false;
  std::size_t disagreements = 0, wrong_label = 0, total = 0, sampled = 0;
  for (int label = 1; label >= 0; --label) {
    for (int k = 0; k < 100; ++k) {
      const WeylOp T = label ? certified_op(rng, k % 4) : refuted_op(rng, k % 4);
      const auto v = certify_preserver(T, StabilityClass::HR, cfg, {}, opts);
      const bool p = v.passed();
      sampled += !v.inner.exact();
      const bool d = certify_preserver(adjoint(T), StabilityClass::HR, cfg, {}, opts).passed();
      disagreements += p != d;
      wrong_label += p != static_cast<bool>(label);
      ++total;
    }
  }
  return {disagreements == 0 && wrong_label == 0,
          fmt("%zu operators (100 certified, 100 refuted by construction, %zu decided by sampling), %zu T/T* "
              "disagreements, %zu label mismatches",
              total, sampled, disagreements, wrong_label)};
}

// ---- 3 ---------------------------------------------------------------------

Outcome det_criterion() {
  SampleConfig cfg;
  cfg.trials = kDetSamplerTrials;
  std::size_t cases = 0, contradictions = 0, positive = 0, positive_refuted = 0, linear_misses = 0;
  for (long a00 = -2; a00 <= 2; ++a00)
    for (long a01 = -2; a01 <= 2; ++a01)
      for (long a10 = -2; a10 <= 2; ++a10)
        for (long a11 = -2; a11 <= 2; ++a11) {
          ++cases;
          const MultiPoly f = poly(2, {{{0, 0}, a00}, {{0, 1}, a01}, {{1, 0}, a10}, {{1, 1}, a11}});
          if (f.is_zero()) continue;
          const long det = a00 * a11 - a01 * a10;
          const bool refuted = sample_stability(f, StabilityClass::HR, cfg).refuted();
          if (refuted && det <= 0) ++contradictions;
          if (det > 0) {
            ++positive;
            positive_refuted += refuted;
            // a01 + a10 of opposite signs with a11 = 0: every line restriction is real of degree <= 1
            linear_misses += !refuted && a11 == 0 && a01 * a10 < 0;
          }
        }
  return {contradictions == 0 && cases == 625,
          fmt("%zu coefficient matrices, %zu contradictions; sampler refuted %zu of %zu with det > 0, the other %zu "
              "(%zu mixed-sign linear forms) vanish only on lines of measure zero",
              cases, contradictions, positive_refuted, positive, positive - positive_refuted, linear_misses)};
}

// ---- 4 ---------------------------------------------------------------------

UniPoly rat_uni(const std::vector<Rational>& c) { return UniPoly::from_rationals(c); }

UniPoly interlacing_partner(Rng& rng, const std::vector<long>& roots) {
  // zeros strictly between consecutive (doubled) roots of g, plus possibly one outside
  std::vector<long> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  UniPoly f = upoly({1});
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    const Rational mid = Rational(2 * sorted[k] + 1) / 2;
    const Rational r = sorted[k] == sorted[k + 1] ? Rational(sorted[k]) : mid;
    f = f * rat_uni({-r, 1});
  }
  if (rng.coin()) f = f * upoly({-(sorted.back() + 1), 1});
  return f.scale(GaussRat(rng.integer(1, 3) * (rng.coin() ? 1 : -1)));
}

Outcome obreschkoff() {
  Rng rng(1004);
  std::size_t contradictions = 0, comparable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    UniPoly f, g;
    switch (trial % 5) {
      case 0: {  // interlacing by construction, distinct even-spaced roots
        std::vector<long> roots;
        const long deg = rng.integer(1, 5);
        long at = rng.integer(-6, 0);
        for (long k = 0; k < deg; ++k) roots.push_back(at += 2 * rng.integer(1, 2));
        g = from_roots(roots);
        f = interlacing_partner(rng, roots);
        break;
      }
      case 1:  // random hyperbolic pair
        f = random_real_rooted(rng, static_cast<unsigned>(rng.integer(0, 5)));
        g = random_real_rooted(rng, static_cast<unsigned>(rng.integer(1, 5)));
        break;
      case 2: {  // random integer coefficients
        std::vector<GaussRat> a, b;
        for (long k = 0; k <= rng.integer(0, 5); ++k) a.emplace_back(rng.integer(-4, 4));
        for (long k = 0; k <= rng.integer(1, 5); ++k) b.emplace_back(rng.integer(-4, 4));
        f = UniPoly(a);
        g = UniPoly(b);
        break;
      }
      case 3:  // derivative pair and proportional pair
        g = random_real_rooted(rng, static_cast<unsigned>(rng.integer(1, 5)));
        f = rng.coin() ? g.derivative() : g.scale(GaussRat(rng.integer(-3, 3)));
        break;
      default:  // hyperbolic f against a perturbation
        g = random_real_rooted(rng, static_cast<unsigned>(rng.integer(2, 5)));
        f = g + upoly({rng.integer(-2, 2), rng.integer(-2, 2)});
        break;
    }
    if (f.is_zero() && g.is_zero()) g = upoly({1});
    const bool cmp = proper_position(f, g).comparable();
    comparable += cmp;
    bool all_hyperbolic = true;
    for (std::size_t k = 0; k < kCombinations && all_hyperbolic; ++k) {
      const double theta = std::numbers::pi * (static_cast<double>(k) + static_cast<double>(rng.integer(1, 999)) / 1000) /
                           static_cast<double>(kCombinations);
      // rational point of the unit circle at angle ~ theta
      Rational s(static_cast<long>(std::lround(std::tan(theta / 2) * 1e6)), 1000000L);
      s.canonicalize();
      const Rational alpha = (1 - s * s) / (1 + s * s), beta = 2 * s / (1 + s * s);
      const UniPoly h = f.scale(GaussRat(alpha)) + g.scale(GaussRat(beta));
      if (!h.is_zero() && !is_hyperbolic(h)) all_hyperbolic = false;
    }
    contradictions += cmp != all_hyperbolic;
  }
  return {contradictions == 0,
          fmt("500 pairs (%zu in proper position), %zu combinations each, %zu contradictions", comparable,
              kCombinations, contradictions)};
}

// ---- 5 ---------------------------------------------------------------------

Outcome pencils() {
  Rng rng(1005);
  SampleConfig cfg;
  cfg.trials = kPencilLines;
  std::size_t refutations = 0, lines = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t order = static_cast<std::size_t>(2 + trial % 4);
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<GaussianMatrix> As;
    for (std::size_t k = 0; k < n; ++k) As.push_back(random_psd(rng, order, 2, trial % 2 == 0));
    const auto r = pencil_polynomial(As, random_hermitian(rng, order, 3, 2, trial % 2 == 0));
    if (r.poly.is_zero()) continue;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto v = sample_stability(r.poly, StabilityClass::HR, cfg);
    refutations += v.refuted();
    lines += v.trials;
  }
  return {refutations == 0, fmt("50 pencils (orders 2-5, n <= 3), %zu lines sampled, %zu refutations", lines,
                                refutations)};
}

// ---- 6 ---------------------------------------------------------------------

/// det(tI - A) by exact elimination at d + 1 nodes and Lagrange interpolation.
UniPoly char_poly_by_interpolation(const GaussianMatrix& A) {
  const std::size_t d = A.order();
  UniPoly out;
  for (std::size_t k = 0; k <= d; ++k) {
    const long tk = static_cast<long>(k);
    GaussianMatrix M = GaussianMatrix::identity(d).scale(GaussRat(tk)) - A;
    UniPoly basis = upoly({1});
    GaussRat den(1);
    for (std::size_t j = 0; j <= d; ++j) {
      if (j == k) continue;
      basis = basis * upoly({-static_cast<long>(j), 1});
      den *= GaussRat(tk - static_cast<long>(j));
    }
    out += basis.scale(determinant(M) / den);
  }
  return out;
}

std::vector<double> roots_with_multiplicity(const UniPoly& p) {
  std::vector<double> out;
  for (auto r : isolate_real_roots(p)) {
    const RatPoly s = squarefree_part(RatPoly::from_uni(p));
    while (!r.exact && (r.hi - r.lo) > Rational(1, 1000000000000L)) refine_root(s, r);
    for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(r.approx());
  }
  return out;
}

Outcome cauchy_poincare() {
  Rng rng(1006);
  SampleConfig cfg;
  std::size_t identity_ok = 0, pp_ok = 0, lib_interlace = 0, oracle_interlace = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = static_cast<std::size_t>(2 + trial % 4);
    const GaussianMatrix A = random_hermitian(rng, order, 3, 2, trial % 3 == 0);
    const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(order) - 1));
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto rep = cauchy_poincare_check(A, j, cfg);
    identity_ok += rep.derivative_identity;
    pp_ok += rep.proper_position.passed();
    lib_interlace += rep.eigenvalues_interlace;

    const std::vector<double> a = roots_with_multiplicity(char_poly_by_interpolation(A));
    const std::vector<double> b = roots_with_multiplicity(char_poly_by_interpolation(A.minor(j, j)));
    bool ok = a.size() == order && b.size() == order - 1;
    for (std::size_t k = 0; ok && k < b.size(); ++k) ok = a[k] <= b[k] + kEigenTol && b[k] <= a[k + 1] + kEigenTol;
    oracle_interlace += ok;
  }
  return {identity_ok == 30 && pp_ok == 30 && lib_interlace == 30 && oracle_interlace == 30,
          fmt("30 Hermitian matrices (orders 2-5): derivative identity %zu/30, proper position %zu/30, "
              "interlacing %zu/30, independent Sturm oracle %zu/30",
              identity_ok, pp_ok, lib_interlace, oracle_interlace)};
}

// ---- 7 ---------------------------------------------------------------------

/// Minor (i, j) of diag(x) - A, or the full determinant when i is npos.
GaussRat minor_at(const GaussianMatrix& A, const std::vector<Rational>& x, std::size_t i, std::size_t j) {
  GaussianMatrix M = GaussianMatrix::diagonal(x) - A;
  if (i == static_cast<std::size_t>(-1)) return determinant(M);
  return determinant(M.minor(i, j));
}

Outcome christoffel_darboux() {
  Rng rng(1007);
  std::size_t symbolic = 0, pointwise = 0, hermitian = 0;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t order = static_cast<std::size_t>(2 + trial % 3);
    GaussianMatrix A = trial % 3 == 0 ? random_hermitian(rng, order, 3, 2) : random_matrix(rng, order, 4);
    if (trial % 3 == 2) A(0, order - 1) = A(0, order - 1) + GaussRat(Rational(0), Rational(1, 2));
    hermitian += A.hermitian();
    const std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(order) - 1));
    const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(order) - 1));
    symbolic += christoffel_darboux_verify(A, i, j);

    bool ok = true;
    for (int p = 0; p < 5; ++p) {
      std::vector<Rational> x(order), y(order);
      for (auto& v : x) v = rng.rational(-4, 4, 5);
      for (auto& v : y) v = rng.rational(-4, 4, 5);
      const GaussRat lhs = minor_at(A, y, npos, 0) * minor_at(A, x, i, j) - minor_at(A, x, npos, 0) * minor_at(A, y, i, j);
      GaussRat rhs(0);
      for (std::size_t k = 0; k < order; ++k) rhs += GaussRat(Rational(y[k] - x[k])) * minor_at(A, x, i, k) * minor_at(A, y, k, j);
      ok = ok && lhs == rhs;
    }
    pointwise += ok;
  }
  return {symbolic == 30 && pointwise == 30,
          fmt("30 matrices (orders 2-4, %zu Hermitian): symbolic identity %zu/30, pointwise oracle %zu/30", hermitian,
              symbolic, pointwise)};
}

// ---- 8 ---------------------------------------------------------------------

Outcome finite_multipliers() {
  std::vector<std::vector<long>> root_sets{{}};
  for (unsigned deg = 1; deg <= 3; ++deg) {
    std::vector<std::vector<long>> next;
    for (const auto& s : root_sets) {
      if (s.size() != deg - 1) continue;
      for (long r = s.empty() ? -3 : s.back(); r <= 3; ++r) {
        auto t = s;
        t.push_back(r);
        next.push_back(t);
      }
    }
    root_sets.insert(root_sets.end(), next.begin(), next.end());
  }
  std::size_t cases = 0, disagreements = 0, certified = 0;
  for (const auto& roots : root_sets) {
    for (long lead : {1L, -1L}) {
      const UniPoly f = from_roots(roots).scale(GaussRat(lead));
      WeylOp T(1);
      for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        T.add_term({static_cast<std::uint32_t>(k)}, {static_cast<std::uint32_t>(k)}, f.coeffs()[k]);
      }
      const bool cert = finite_multiplier_certify(T).certified();
      bool oracle = true;
      for (unsigned m = 0; m <= kBinomialMax && oracle; ++m) {
        MultiPoly image(1);
        for (unsigned k = 0; k <= m; ++k) {
          mpz_class binom;
          mpz_bin_uiui(binom.get_mpz_t(), m, k);
          image += apply_to_monomial(T, {k}).scale(GaussRat(Rational(binom)));
        }
        const UniPoly img = as_uni(image);
        if (img.is_zero()) continue;
        oracle = is_hyperbolic(img) && roots_all_same_sign(img) != RootSigns::Mixed;
      }
      ++cases;
      certified += cert;
      disagreements += cert != oracle;
    }
  }
  return {disagreements == 0,
          fmt("%zu symbols f(zw) (deg <= 3, integer roots in [-3,3], both signs), %zu certified, %zu disagreements "
              "with T[(1+z)^m], m <= %u",
              cases, certified, disagreements, kBinomialMax)};
}

// ---- 9 ---------------------------------------------------------------------

Outcome strict_boundary() {
  const WeylOp D = WeylOp::d(1, 0);
  const bool d_nec = strict_necessary_check(D).passed();
  const bool d_suf = strict_sufficient_check(D).passed();

  WeylOp S(1);
  S.add_term({1}, {0}, GaussRat(2));
  S.add_term({0}, {0}, GaussRat(1));
  S.add_term({2}, {1}, GaussRat(1));
  S.add_term({1}, {1}, GaussRat(1));
  const bool s_nec = strict_necessary_check(S).passed();
  const MultiPoly s1 = apply(S, MultiPoly::constant(1, GaussRat(1)));
  const bool s1_expected = s1 == poly(1, {{{1}, 2}, {{0}, 1}});
  const bool s1_refuted = check_strictly_stable(s1).refuted();

  // D keeps strictly stable inputs strictly stable; S keeps strictly hyperbolic inputs strictly hyperbolic
  Rng rng(1009);
  std::size_t d_ok = 0, s_ok = 0;
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly f = upoly({1});
    for (long k = 0; k < rng.integer(1, 4); ++k) {
      f = f * UniPoly({GaussRat(-rng.rational(-3, 3, 4), rng.rational(1, 3, 4)), GaussRat(1)});
    }
    const MultiPoly mf = uni_in(1, 0, f);
    const MultiPoly df = apply(D, mf);
    d_ok += df.is_zero() || check_strictly_stable(df).passed();

    std::vector<long> roots;
    long at = rng.integer(-5, 0);
    for (long k = 0; k < rng.integer(1, 4); ++k) roots.push_back(at += rng.integer(1, 3));
    const MultiPoly sf = apply(S, uni_in(1, 0, from_roots(roots)));
    s_ok += sf.is_zero() || is_strictly_hyperbolic(as_uni(sf));
  }
  const bool pass = d_nec && !d_suf && s_nec && s1_expected && s1_refuted && d_ok == 20 && s_ok == 20;
  return {pass, fmt("D: necessary %s, sufficient %s, strict images %zu/20; S: necessary %s, S(1) = 2z+1 %s, "
                    "strictly hyperbolic images %zu/20",
                    d_nec ? "passes" : "fails", d_suf ? "passes" : "fails", d_ok, s_nec ? "passes" : "fails",
                    s1_refuted ? "refuted" : "not refuted", s_ok)};
}

// ---- 10 --------------------------------------------------------------------

Outcome homotopy_grid() {
  Rng rng(1010);
  std::vector<WeylOp> ops;
  const WeylOp Z = WeylOp::z(1, 0), D = WeylOp::d(1, 0);
  ops.push_back(Z * D + Z - D);
  ops.push_back(WeylOp::identity(1) + Z * D);
  for (int k = 0; k < 3; ++k) ops.push_back(WeylOp::from_derivative_poly(random_real_rooted(rng, 2 + k)));
  while (ops.size() < 15) ops.push_back(op_from_symbol(negate_w(random_pencil(rng, 2, static_cast<std::size_t>(rng.integer(2, 3)), false, true))));
  while (ops.size() < 20) ops.push_back(op_from_symbol(negate_w(random_pencil(rng, 4, 2, false, true))));

  SampleConfig cfg;
  PreserverOptions opts;
  opts.attempt_pullback = false;
  std::size_t base_ok = 0, checks = 0, zero = 0, refuted = 0;
  for (const auto& T : ops) {
    base_ok += certify_preserver(T, StabilityClass::HR, cfg, {}, opts).passed();
    for (long a = 0; a <= 4; ++a) {
      for (long b = 0; b <= 4; ++b) {
        const std::vector<Rational> mu(T.nvars(), Rational(a, 4)), la(T.nvars(), Rational(b, 4));
        const WeylOp H = homotopy(T, mu, la);
        ++checks;
        if (H.is_zero()) {
          ++zero;
          continue;
        }
        cfg.seed = static_cast<std::uint64_t>(checks);
        refuted += certify_preserver(H, StabilityClass::HR, cfg, {}, opts).inner.refuted();
      }
    }
  }
  return {base_ok == ops.size() && refuted == 0,
          fmt("%zu certified preservers x 25 grid points: %zu scaled symbols, %zu identically zero, %zu refutations",
              ops.size(), checks, zero, refuted)};
}

// ---- 11 --------------------------------------------------------------------

Outcome garding() {
  Rng rng(1011);
  std::size_t disagreements = 0, stable = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    MultiPoly f = random_pencil(rng, n, static_cast<std::size_t>(rng.integer(1, 3)));
    if (trial >= 50) {
      const std::size_t var = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
      f = f * uni_in(n, var, UniPoly({GaussRat(rng.rational(1, 3, 4)), GaussRat(0), GaussRat(1)}));
    }
    SampleConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const bool a = garding_direction_check(f, cfg).passed();
    const bool b = check_stable(f, StabilityClass::HR, cfg).passed();
    disagreements += a != b;
    stable += b;
  }
  return {disagreements == 0,
          fmt("100 polynomials (50 pencils, 50 perturbed), %zu real stable, %zu disagreements", stable,
              disagreements)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1  Weyl product vs monomial composition", weyl_product},
      {"AC2  duality of preserver verdicts", duality},
      {"AC3  2x2 determinant criterion vs sampling", det_criterion},
      {"AC4  proper position vs pencil hyperbolicity", obreschkoff},
      {"AC5  determinantal pencils are real stable", pencils},
      {"AC6  Cauchy-Poincare interlacing", cauchy_poincare},
      {"AC7  Christoffel-Darboux identity", christoffel_darboux},
      {"AC8  finite multiplier sequences", finite_multipliers},
      {"AC9  strict preserver boundary cases", strict_boundary},
      {"AC10 homotopy of preserver symbols", homotopy_grid},
      {"AC11 homogenization directions vs stability", garding},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
