#include "stabkit/preservers.hpp"

#include <map>
#include <stdexcept>

#include "stabkit/real_roots.hpp"

namespace stabkit {

std::string to_string(TheoremPath p) {
  switch (p) {
    case TheoremPath::SymbolTestComplex: return "symbol-test-complex";
    case TheoremPath::SymbolTestReal: return "symbol-test-real";
    case TheoremPath::StrictNecessary: return "strict-necessary";
    case TheoremPath::StrictSufficient: return "strict-sufficient";
    case TheoremPath::DualityTransfer: return "duality-transfer";
  }
  return "?";
}

std::string to_string(PullbackStatus s) {
  switch (s) {
    case PullbackStatus::NotAttempted: return "not-attempted";
    case PullbackStatus::Found: return "found";
    case PullbackStatus::Failed: return "failed";
  }
  return "?";
}

std::string to_string(SignPattern s) {
  switch (s) {
    case SignPattern::SameSign: return "SameSign";
    case SignPattern::AlternatingSign: return "AlternatingSign";
    case SignPattern::Violated: return "Violated";
  }
  return "?";
}

namespace {

// Stable inputs built from linear factors z_i + c, tried in order of size.
std::vector<MultiPoly> pullback_corpus(std::size_t n, unsigned max_power, bool complex_shifts,
                                       const std::optional<Line>& witness) {
  std::vector<GaussRat> shifts;
  for (long c : {0L, 1L, -1L, 2L, -2L}) shifts.emplace_back(c);
  shifts.emplace_back(Rational(1, 2));
  shifts.emplace_back(Rational(-1, 2));
  if (witness) {
    for (std::size_t i = 0; i < n; ++i) shifts.emplace_back(Rational(-witness->alpha[i]));
  }
  if (complex_shifts) {
    shifts.emplace_back(Rational(0), Rational(1));
    shifts.emplace_back(Rational(1), Rational(1));
  }
  std::vector<MultiPoly> out;
  out.push_back(MultiPoly::constant(n, GaussRat(1)));
  for (unsigned m = 1; m <= max_power; ++m) {
    for (const auto& c : shifts) {
      MultiPoly all = MultiPoly::constant(n, GaussRat(1));
      for (std::size_t i = 0; i < n; ++i) {
        MultiPoly lin = MultiPoly::variable(n, i) + MultiPoly::constant(n, c);
        MultiPoly p = lin.pow(m);
        out.push_back(p);
        all = all * p;
      }
      if (n > 1) out.push_back(all);
    }
  }
  return out;
}

void attempt_pullback(const WeylOp& T, StabilityClass cls, const SampleConfig& cfg, const PreserverOptions& opts,
                      PreserverVerdict& verdict) {
  std::optional<Line> witness;
  if (verdict.inner.refutation && verdict.inner.refutation->line) witness = verdict.inner.refutation->line;
  SampleConfig sub = cfg;
  sub.trials = opts.pullback_trials;
  const unsigned max_power = static_cast<unsigned>(std::max(T.order(), 1)) + 2;
  for (const auto& f : pullback_corpus(T.nvars(), max_power, cls == StabilityClass::HC, witness)) {
    MultiPoly image = T.apply(f);
    if (image.is_zero()) continue;
    StabilityVerdict v = check_stable(image, cls, sub);
    if (v.refuted()) {
      verdict.pullback = PullbackStatus::Found;
      verdict.refutation = PreserverRefutation{f, std::move(image), std::move(v)};
      return;
    }
  }
  verdict.pullback = PullbackStatus::Failed;
}

// lambda = prod_i factors[i][a_i] on the box, with the normalisation fixed at the
// first nonzero entry; nullopt when no such factorisation exists.
std::optional<std::vector<std::vector<Rational>>> rank_one_factors(const MultiplierData& lambda) {
  const std::size_t n = lambda.nvars;
  std::vector<std::vector<Rational>> factors(n);
  for (std::size_t i = 0; i < n; ++i) factors[i].assign(lambda.extents[i], Rational(0));
  std::size_t pivot = lambda.size();
  for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
    if (sgn(lambda.values[idx]) != 0) {
      pivot = idx;
      break;
    }
  }
  if (pivot == lambda.size()) return factors;
  const Exponent star = lambda.exponent_of(pivot);
  const Rational& base = lambda.values[pivot];
  for (std::size_t i = 0; i < n; ++i) {
    Exponent a = star;
    for (std::size_t k = 0; k < lambda.extents[i]; ++k) {
      a[i] = static_cast<std::uint32_t>(k);
      factors[i][k] = i == 0 ? lambda.at(a) : Rational(lambda.at(a) / base);
    }
  }
  for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
    const Exponent a = lambda.exponent_of(idx);
    Rational prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= factors[i][a[i]];
    if (prod != lambda.values[idx]) return std::nullopt;
  }
  return factors;
}

bool componentwise_le(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

PreserverVerdict certify_preserver(const WeylOp& T, StabilityClass cls, const SampleConfig& cfg,
                                   std::span<const Line> hints, const PreserverOptions& opts) {
  if (T.is_zero()) throw std::invalid_argument("the zero operator is not a candidate preserver");
  if (is_strict(cls)) throw std::invalid_argument("use the strict checks for strict classes");
  if (cls == StabilityClass::HR && !T.is_real()) throw std::domain_error("real class needs real coefficients");
  PreserverVerdict v;
  v.path = cls == StabilityClass::HR ? TheoremPath::SymbolTestReal : TheoremPath::SymbolTestComplex;
  v.tested_symbol = T.symbol_negate_w();
  v.inner = check_stable(v.tested_symbol, cls, cfg, hints);
  if (v.inner.refuted() && v.inner.refutation && v.inner.refutation->trial < hints.size() && !v.inner.certificate &&
      v.inner.refutation->kind == RefutationKind::LineRestriction && !hints.empty()) {
    const auto& line = *v.inner.refutation->line;
    for (const auto& h : hints) {
      if (h.alpha == line.alpha && h.v == line.v) {
        v.path = TheoremPath::DualityTransfer;
        break;
      }
    }
  }
  if (v.inner.refuted() && opts.attempt_pullback) attempt_pullback(T, cls, cfg, opts, v);
  return v;
}

Line dual_line(const Line& line) {
  const std::size_t n = line.alpha.size() / 2;
  Line out{std::vector<Rational>(2 * n), std::vector<Rational>(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.alpha[i] = -line.alpha[n + i];
    out.alpha[n + i] = -line.alpha[i];
    out.v[i] = line.v[n + i];
    out.v[n + i] = line.v[i];
  }
  return out;
}

DualityReport duality_check(const WeylOp& T, StabilityClass cls, const SampleConfig& cfg,
                            const PreserverOptions& opts) {
  DualityReport r;
  const WeylOp Tstar = T.adjoint();
  r.primal = certify_preserver(T, cls, cfg, {}, opts);
  std::vector<Line> hints;
  if (r.primal.inner.refutation && r.primal.inner.refutation->line) {
    hints.push_back(dual_line(*r.primal.inner.refutation->line));
  }
  r.dual = certify_preserver(Tstar, cls, cfg, hints, opts);
  if (r.primal.passed() && r.dual.inner.refutation && r.dual.inner.refutation->line) {
    const std::vector<Line> back{dual_line(*r.dual.inner.refutation->line)};
    r.primal = certify_preserver(T, cls, cfg, back, opts);
  }
  r.agree = r.primal.passed() == r.dual.passed();
  if (T.nvars() == 1) {
    const std::size_t swap[] = {1, 0};
    r.reflection_ok = Tstar.symbol() == T.symbol().conj().embed(2, swap);
  }
  return r;
}

UniPoly image_of_binomial_power(std::span<const Rational> lambda, unsigned m) {
  std::vector<GaussRat> c(m + 1);
  mpz_class binom;
  for (unsigned k = 0; k <= m; ++k) {
    const Rational l = k < lambda.size() ? lambda[k] : Rational(0);
    mpz_bin_uiui(binom.get_mpz_t(), m, k);
    c[k] = GaussRat(Rational(l * binom));
  }
  return UniPoly(std::move(c));
}

bool hyperbolic_same_sign_or_zero(const UniPoly& p) {
  if (p.is_zero()) return true;
  if (!is_hyperbolic(p)) return false;
  return roots_all_same_sign(p) != RootSigns::Mixed;
}

MultiplierReport multiplier_structure_check(const MultiplierData& lambda) {
  if (lambda.values.empty()) throw std::invalid_argument("empty multiplier data");
  const std::size_t n = lambda.nvars;
  MultiplierReport rep;

  rep.rank1_relations_ok = true;
  for (std::size_t idx = 0; idx < lambda.size() && rep.rank1_relations_ok; ++idx) {
    const Exponent g = lambda.exponent_of(idx);
    for (std::size_t i = 0; i < n && rep.rank1_relations_ok; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Exponent gi = g, gj = g, gij = g;
        ++gi[i];
        ++gj[j];
        ++gij[i];
        ++gij[j];
        if (!lambda.contains(gij)) continue;
        if (lambda.at(g) * lambda.at(gij) != lambda.at(gi) * lambda.at(gj)) {
          rep.rank1_relations_ok = false;
          break;
        }
      }
    }
  }

  std::vector<Exponent> support;
  for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
    if (sgn(lambda.values[idx]) != 0) support.push_back(lambda.exponent_of(idx));
  }
  rep.support_is_box = true;
  for (const auto& a : support) {
    for (const auto& b : support) {
      if (!componentwise_le(a, b) || a == b) continue;
      for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
        const Exponent g = lambda.exponent_of(idx);
        if (componentwise_le(a, g) && componentwise_le(g, b) && sgn(lambda.values[idx]) == 0) {
          rep.support_is_box = false;
        }
      }
    }
  }

  int same = 0, alt = 0;
  bool same_ok = true, alt_ok = true;
  for (const auto& a : support) {
    const int s = sgn(lambda.at(a));
    const int sa = total_degree(a) % 2 == 0 ? s : -s;
    if (same == 0) same = s;
    if (alt == 0) alt = sa;
    if (s != same) same_ok = false;
    if (sa != alt) alt_ok = false;
  }
  rep.sign_pattern = same_ok ? SignPattern::SameSign : alt_ok ? SignPattern::AlternatingSign : SignPattern::Violated;

  rep.univariate_slices_ok = true;
  for (std::size_t axis = 0; axis < n && rep.univariate_slices_ok; ++axis) {
    for (std::size_t idx = 0; idx < lambda.size() && rep.univariate_slices_ok; ++idx) {
      Exponent a = lambda.exponent_of(idx);
      if (a[axis] != 0) continue;
      std::vector<Rational> seq(lambda.extents[axis]);
      for (std::size_t k = 0; k < seq.size(); ++k) {
        a[axis] = static_cast<std::uint32_t>(k);
        seq[k] = lambda.at(a);
      }
      for (unsigned m = 0; m < seq.size(); ++m) {
        if (!hyperbolic_same_sign_or_zero(image_of_binomial_power(seq, m))) {
          rep.univariate_slices_ok = false;
          break;
        }
      }
    }
  }

  rep.factor_decomposition = rank_one_factors(lambda);
  return rep;
}

FiniteMultiplierReport finite_multiplier_certify(const WeylOp& T) {
  if (T.is_zero()) throw std::invalid_argument("the zero operator is not a multiplier sequence");
  if (!T.is_diagonal()) throw std::invalid_argument("operator is not diagonal");
  if (!T.is_real()) throw std::domain_error("diagonal operator has nonreal coefficients");
  const std::size_t n = T.nvars();
  std::vector<std::size_t> extents(n, 1);
  const auto terms = T.terms();
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < n; ++i) extents[i] = std::max<std::size_t>(extents[i], t.dexp[i] + 1);
  }
  MultiplierData coeffs(extents);
  for (const auto& t : terms) coeffs.at(t.dexp) = t.coeff.re;

  FiniteMultiplierReport rep;
  const auto factors = rank_one_factors(coeffs);
  if (!factors) return rep;
  rep.rank_one = true;
  rep.factors_nonpositive_rooted = true;
  for (const auto& f : *factors) {
    UniPoly p = UniPoly::from_rationals(f);
    if (p.is_zero() || !is_hyperbolic(p)) {
      rep.factors_nonpositive_rooted = false;
    } else {
      const RootSigns s = roots_all_same_sign(p);
      if (s != RootSigns::AllNonpos && s != RootSigns::NoRoots) rep.factors_nonpositive_rooted = false;
    }
    rep.factors.push_back(std::move(p));
  }
  return rep;
}

CompositionReport schur_composition(const UniPoly& f, const MultiPoly& F, std::size_t var, const SampleConfig& cfg) {
  if (!f.is_real()) throw std::domain_error("f must have real coefficients");
  if (f.is_zero() || !is_hyperbolic(f)) throw std::domain_error("f must be hyperbolic");
  const RootSigns s = roots_all_same_sign(f);
  if (s != RootSigns::AllNonpos && s != RootSigns::NoRoots) throw std::domain_error("f has a positive zero");
  if (F.is_zero()) throw std::invalid_argument("F must be nonzero");
  if (var >= F.nvars()) throw std::out_of_range("variable index out of range");

  CompositionReport rep;
  rep.result = MultiPoly(F.nvars());
  const unsigned m = std::min(static_cast<unsigned>(f.degree()), F.degree_in(var));
  Rational fact = 1;
  for (unsigned k = 0; k <= m; ++k) {
    if (k > 0) fact *= k;
    Exponent e(F.nvars(), 0);
    e[var] = k;
    const GaussRat c = f.coeff(k) * GaussRat(fact);
    rep.result += F.coefficient_in(var, k) * MultiPoly::monomial(e, c);
  }
  rep.verdict = check_stable(rep.result, F.is_real() ? StabilityClass::HR : StabilityClass::HC, cfg);
  return rep;
}

bool CoefficientReport::passed() const {
  for (const auto& e : entries) {
    if (!e.verdict.passed()) return false;
  }
  return true;
}

CoefficientReport coefficient_criterion(const WeylOp& T, const SampleConfig& cfg) {
  const std::size_t n = T.nvars();
  std::map<Exponent, MultiPoly> groups;
  for (const auto& t : T.terms()) {
    auto it = groups.try_emplace(t.dexp, MultiPoly(n)).first;
    it->second.add_term(t.zexp, t.coeff);
  }
  const StabilityClass cls = T.is_real() ? StabilityClass::HR : StabilityClass::HC;
  CoefficientReport rep;
  for (auto& [w, q] : groups) {
    StabilityVerdict v = check_stable(q, cls, cfg);
    rep.entries.push_back({w, std::move(q), std::move(v)});
  }
  return rep;
}

PolyaReport polya_curve(std::span<const Rational> b, const UniPoly& f, const SampleConfig& cfg) {
  if (!f.is_real() || f.is_zero() || !is_hyperbolic(f)) throw std::domain_error("f must be a nonzero hyperbolic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (b.size() < n + 1) throw std::domain_error("need coefficients b_0 .. b_n with n = deg f");
  for (std::size_t k = 0; k <= n; ++k) {
    if (sgn(b[k]) <= 0) throw std::domain_error("b_" + std::to_string(k) + " is not positive");
  }
  if (!is_hyperbolic(UniPoly::from_rationals(b))) throw std::domain_error("the b polynomial is not hyperbolic");

  PolyaReport rep;
  rep.G = MultiPoly(2);
  UniPoly d = f;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j < d.coeffs().size(); ++j) {
      rep.G.add_term(Exponent{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j)}, d.coeffs()[j] * GaussRat(b[k]));
    }
    d = d.derivative();
  }
  rep.intersection = intersection_property(rep.G, Slope::Positive, cfg);
  return rep;
}

PreserverVerdict strict_necessary_check(const WeylOp& T, const SampleConfig& cfg) {
  if (T.is_zero()) throw std::invalid_argument("the zero operator is not a candidate preserver");
  const std::size_t n = T.nvars();
  PreserverVerdict v;
  v.path = TheoremPath::StrictNecessary;
  v.tested_symbol = T.symbol_negate_w();
  v.inner.cls = T.is_real() ? StabilityClass::HRStrict : StabilityClass::HCStrict;
  RationalSampler rng(cfg.denominator_bound, cfg.seed);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Line line{std::vector<Rational>(2 * n), std::vector<Rational>(2 * n, Rational(1))};
    if (trial > 0) {
      for (auto& a : line.alpha) a = rng.in_range(-cfg.alpha_bound, cfg.alpha_bound);
      for (std::size_t i = 0; i < n; ++i) line.v[i] = rng.uniform_int(0, 3) == 0 ? Rational(0) : rng.positive(cfg.v_max);
      for (std::size_t i = n; i < 2 * n; ++i) line.v[i] = rng.positive(cfg.v_max);
    }
    UniPoly r = v.tested_symbol.restrict_to_line(line.alpha, line.v);
    if (r.is_zero() || !is_stable_complex(r)) {
      v.inner.status = VerdictStatus::Refuted;
      v.inner.trials = trial + 1;
      v.inner.refutation = Refutation{RefutationKind::LineRestriction, std::move(line), trial, std::move(r)};
      return v;
    }
  }
  v.inner.status = VerdictStatus::SampledPass;
  v.inner.trials = cfg.trials;
  return v;
}

PreserverVerdict strict_sufficient_check(const WeylOp& T, const SampleConfig& cfg, bool real) {
  if (T.is_zero()) throw std::invalid_argument("the zero operator is not a candidate preserver");
  PreserverVerdict v;
  v.path = TheoremPath::StrictSufficient;
  v.tested_symbol = T.symbol_negate_w();
  v.inner = check_strictly_stable(v.tested_symbol, cfg, real);
  return v;
}

DominatingPart dominating_part(const WeylOp& T) {
  if (T.is_zero()) throw std::invalid_argument("dominating part of the zero operator");
  const std::size_t n = T.nvars();
  const auto terms = T.terms();
  std::vector<long> best;
  long best_norm = -1;
  for (const auto& t : terms) {
    std::vector<long> g(n);
    long norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = static_cast<long>(t.zexp[i]) - static_cast<long>(t.dexp[i]);
      norm += g[i] < 0 ? -g[i] : g[i];
    }
    if (norm > best_norm || (norm == best_norm && g > best)) {
      best_norm = norm;
      best = std::move(g);
    }
  }
  DominatingPart dp{WeylOp(n), best};
  for (const auto& t : terms) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = static_cast<long>(t.zexp[i]) - static_cast<long>(t.dexp[i]) == best[i];
    }
    if (match) dp.part.add_term(t.dexp, t.dexp, t.coeff);
  }
  return dp;
}

WeylOp homotopy(const WeylOp& T, std::span<const Rational> mu, std::span<const Rational> lambda) {
  const std::size_t n = T.nvars();
  if (mu.size() != n || lambda.size() != n) throw std::invalid_argument("scaling vectors have wrong length");
  std::vector<Rational> s(mu.begin(), mu.end());
  s.insert(s.end(), lambda.begin(), lambda.end());
  return WeylOp::from_symbol(T.symbol().scale_variables(std::span<const Rational>(s)));
}

std::optional<StabilityVerdict> certified_image(const PreserverVerdict& op, const StabilityVerdict& input,
                                                const MultiPoly& image) {
  if (op.inner.status != VerdictStatus::ProvenStable) return std::nullopt;
  if (op.path != TheoremPath::SymbolTestComplex && op.path != TheoremPath::SymbolTestReal) return std::nullopt;
  if (input.status != VerdictStatus::ProvenStable && input.status != VerdictStatus::ProvenZero) return std::nullopt;
  StabilityVerdict v;
  v.cls = op.inner.cls;
  if (image.is_zero()) {
    v.status = VerdictStatus::ProvenZero;
  } else {
    v.status = VerdictStatus::ProvenStable;
    v.certificate = CertificateKind::SymbolOfCertifiedPreserverAppliedToCertified;
  }
  return v;
}

}  // namespace stabkit
