#include "stabkit/stability.hpp"

#include <stdexcept>

#include "stabkit/real_roots.hpp"

namespace stabkit {

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::HC: return "HC";
    case StabilityClass::HR: return "HR";
    case StabilityClass::HCStrict: return "HCs";
    case StabilityClass::HRStrict: return "HRs";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::NonzeroConstant: return "NonzeroConstant";
    case CertificateKind::Univariate: return "Univariate";
    case CertificateKind::TwoByTwoMultiAffine: return "TwoByTwoMultiAffine";
    case CertificateKind::PencilCertificate: return "PencilCertificate";
    case CertificateKind::SymbolOfCertifiedPreserverAppliedToCertified:
      return "SymbolOfCertifiedPreserverAppliedToCertified";
  }
  return "?";
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ProvenStable: return "ProvenStable";
    case VerdictStatus::Refuted: return "Refuted";
    case VerdictStatus::SampledPass: return "SampledPass";
    case VerdictStatus::ProvenZero: return "ProvenZero";
  }
  return "?";
}

std::string to_string(RefutationKind k) {
  switch (k) {
    case RefutationKind::LineRestriction: return "LineRestriction";
    case RefutationKind::NonRealCoefficients: return "NonRealCoefficients";
    case RefutationKind::DegreeDrop: return "DegreeDrop";
  }
  return "?";
}

StabilityClass parse_stability_class(const std::string& text) {
  if (text == "HC") return StabilityClass::HC;
  if (text == "HR") return StabilityClass::HR;
  if (text == "HCs") return StabilityClass::HCStrict;
  if (text == "HRs") return StabilityClass::HRStrict;
  throw std::invalid_argument("unknown stability class \"" + text + "\" (expected HC, HR, HCs or HRs)");
}

bool is_strict(StabilityClass c) { return c == StabilityClass::HCStrict || c == StabilityClass::HRStrict; }

bool is_real_class(StabilityClass c) { return c == StabilityClass::HR || c == StabilityClass::HRStrict; }

bool restriction_ok(const UniPoly& r, StabilityClass cls) {
  if (r.is_zero()) return false;
  if (is_strict(cls)) return is_strictly_stable_complex(r);
  if (r.is_real()) return is_hyperbolic(r);
  return is_stable_complex(r);
}

namespace {

Line diagonal_line(std::size_t n) { return Line{std::vector<Rational>(n), std::vector<Rational>(n, Rational(1))}; }

UniPoly univariate_in(const MultiPoly& f, std::size_t var) {
  std::vector<GaussRat> c(f.degree_in(var) + 1);
  for (const auto& [e, v] : f.terms()) c[e[var]] += v;
  return UniPoly(std::move(c));
}

StabilityVerdict refuted_on(const MultiPoly& f, StabilityClass cls, Line line, std::size_t trial) {
  StabilityVerdict v;
  v.status = VerdictStatus::Refuted;
  v.cls = cls;
  v.trials = trial + 1;
  UniPoly r = f.restrict_to_line(line.alpha, line.v);
  v.refutation = Refutation{RefutationKind::LineRestriction, std::move(line), trial, std::move(r)};
  return v;
}

StabilityVerdict proven(StabilityClass cls, CertificateKind kind) {
  StabilityVerdict v;
  v.status = VerdictStatus::ProvenStable;
  v.cls = cls;
  v.certificate = kind;
  return v;
}

StabilityVerdict zero_verdict(StabilityClass cls) {
  StabilityVerdict v;
  v.status = VerdictStatus::ProvenZero;
  v.cls = cls;
  return v;
}

StabilityVerdict nonreal_verdict(StabilityClass cls) {
  StabilityVerdict v;
  v.status = VerdictStatus::Refuted;
  v.cls = cls;
  v.refutation = Refutation{RefutationKind::NonRealCoefficients, std::nullopt, 0, UniPoly{}};
  return v;
}

StabilityVerdict sample_lines(const MultiPoly& f, StabilityClass cls, const SampleConfig& cfg,
                              std::span<const Line> hints, bool allow_zero_directions) {
  std::size_t trial = 0;
  for (const auto& line : hints) {
    if (!restriction_ok(f.restrict_to_line(line.alpha, line.v), cls)) return refuted_on(f, cls, line, trial);
    ++trial;
  }
  LineSampler sampler(f.nvars(), cfg, allow_zero_directions);
  for (std::size_t k = 0; k < cfg.trials; ++k, ++trial) {
    Line line = sampler.next();
    if (!restriction_ok(f.restrict_to_line(line.alpha, line.v), cls)) return refuted_on(f, cls, std::move(line), trial);
  }
  StabilityVerdict v;
  v.status = VerdictStatus::SampledPass;
  v.cls = cls;
  v.trials = trial;
  return v;
}

// Real multi-affine polynomial in the two variables i, j: stable iff
// a00 a11 - a01 a10 <= 0. Otherwise returns a line on which f fails.
StabilityVerdict two_by_two(const MultiPoly& f, StabilityClass cls, std::size_t i, std::size_t j) {
  const std::size_t n = f.nvars();
  Exponent e(n, 0);
  const Rational a00 = f.coefficient(e).re;
  e[i] = 1;
  const Rational a10 = f.coefficient(e).re;
  e[j] = 1;
  const Rational a11 = f.coefficient(e).re;
  e[i] = 0;
  const Rational a01 = f.coefficient(e).re;
  const Rational det = a00 * a11 - a01 * a10;
  if (sgn(det) <= 0) return proven(cls, CertificateKind::TwoByTwoMultiAffine);

  Line line = diagonal_line(n);
  if (sgn(a11) != 0) {
    // f = a11 (z_i - alpha_i)(z_j - alpha_j) + det / a11, so the diagonal restriction is a11 t^2 + det / a11
    line.alpha[i] = -a01 / a11;
    line.alpha[j] = -a10 / a11;
  } else {
    // a01 and a10 have opposite signs; f vanishes on the whole line
    line.v[i] = abs(a01);
    line.v[j] = abs(a10);
    line.alpha[i] = -a00 / a10;
  }
  return refuted_on(f, cls, std::move(line), 0);
}

}  // namespace

StabilityVerdict sample_stability(const MultiPoly& f, StabilityClass cls, const SampleConfig& cfg,
                                  std::span<const Line> hints) {
  if (f.is_zero()) return zero_verdict(cls);
  if (is_real_class(cls) && !f.is_real()) return nonreal_verdict(cls);
  return sample_lines(f, cls, cfg, hints, is_strict(cls));
}

StabilityVerdict check_stable(const MultiPoly& f, StabilityClass cls, const SampleConfig& cfg,
                              std::span<const Line> hints) {
  if (is_strict(cls)) return check_strictly_stable(f, cfg, cls == StabilityClass::HRStrict);
  if (f.is_zero()) return zero_verdict(cls);
  if (is_real_class(cls) && !f.is_real()) return nonreal_verdict(cls);

  const auto used = f.used_variables();
  if (used.empty()) return proven(cls, CertificateKind::NonzeroConstant);
  if (used.size() == 1) {
    if (is_stable_complex(univariate_in(f, used[0]))) return proven(cls, CertificateKind::Univariate);
    return refuted_on(f, cls, diagonal_line(f.nvars()), 0);
  }
  if (used.size() == 2 && f.is_real() && f.is_multi_affine()) return two_by_two(f, cls, used[0], used[1]);
  return sample_lines(f, cls, cfg, hints, false);
}

StabilityVerdict check_strictly_stable(const MultiPoly& f, const SampleConfig& cfg, bool real) {
  const StabilityClass cls = real ? StabilityClass::HRStrict : StabilityClass::HCStrict;
  if (f.is_zero()) return zero_verdict(cls);
  if (real && !f.is_real()) return nonreal_verdict(cls);
  const auto used = f.used_variables();
  if (used.empty()) return proven(cls, CertificateKind::NonzeroConstant);
  if (used.size() == 1) {
    if (is_strictly_stable_complex(univariate_in(f, used[0]))) return proven(cls, CertificateKind::Univariate);
    return refuted_on(f, cls, diagonal_line(f.nvars()), 0);
  }
  return sample_lines(f, cls, cfg, {}, true);
}

StabilityVerdict proper_position_multi(const MultiPoly& f, const MultiPoly& g, const SampleConfig& cfg) {
  if (!f.is_real() || !g.is_real()) throw std::domain_error("proper position needs real polynomials");
  return check_stable(g + f.scale(GaussRat::i()), StabilityClass::HC, cfg);
}

IntersectionReport intersection_property(const MultiPoly& f, Slope which, const SampleConfig& cfg) {
  if (f.nvars() != 2) throw std::invalid_argument("intersection property needs a polynomial in two variables");
  if (f.is_zero()) throw std::invalid_argument("intersection property of the zero polynomial");
  if (!f.is_real()) throw std::domain_error("intersection property needs real coefficients");

  IntersectionReport report;
  report.verdict.cls = StabilityClass::HR;
  const int d = f.degree();
  const int sign = which == Slope::Positive ? 1 : -1;
  RationalSampler rng(cfg.denominator_bound, cfg.seed);
  const Rational width(1, 1024);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rational a = sign;
    Rational b = 0;
    if (trial > 0) {
      a = rng.positive(cfg.v_max) * sign;
      b = rng.in_range(-cfg.alpha_bound, cfg.alpha_bound);
    }
    Line line{{Rational(0), b}, {Rational(1), a}};
    UniPoly p = f.restrict_to_line(line.alpha, line.v);
    const bool drop = p.degree() != d;
    if (drop || !is_hyperbolic(p)) {
      report.verdict.status = VerdictStatus::Refuted;
      report.verdict.trials = trial + 1;
      report.verdict.refutation = Refutation{drop ? RefutationKind::DegreeDrop : RefutationKind::LineRestriction,
                                             std::move(line), trial, std::move(p)};
      return report;
    }
    const RatPoly q = RatPoly::from_uni(p);
    const RatPoly s = squarefree_part(q);
    for (auto root : isolate_real_roots(q)) {
      while (!root.exact && root.hi - root.lo > width) refine_root(s, root);
      Rational x = root.exact ? root.lo : Rational((root.lo + root.hi) / 2);
      Rational y = a * x + b;
      report.points.emplace_back(std::move(x), std::move(y));
    }
  }
  report.verdict.status = VerdictStatus::SampledPass;
  report.verdict.trials = cfg.trials;
  return report;
}

}  // namespace stabkit
