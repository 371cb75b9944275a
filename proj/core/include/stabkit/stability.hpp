#ifndef STABKIT_STABILITY_HPP
#define STABKIT_STABILITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/multi_poly.hpp"
#include "stabkit/sampling.hpp"
#include "stabkit/uni_poly.hpp"

namespace stabkit {

/// HC: stable. HR: real stable. The strict variants ask for no zeros when
/// every imaginary part is >= 0.
enum class StabilityClass { HC, HR, HCStrict, HRStrict };

enum class CertificateKind {
  NonzeroConstant,
  Univariate,
  TwoByTwoMultiAffine,
  PencilCertificate,
  SymbolOfCertifiedPreserverAppliedToCertified,
};

enum class VerdictStatus { ProvenStable, Refuted, SampledPass, ProvenZero };

enum class RefutationKind { LineRestriction, NonRealCoefficients, DegreeDrop };

struct Refutation {
  RefutationKind kind = RefutationKind::LineRestriction;
  /// Absent for NonRealCoefficients.
  std::optional<Line> line;
  std::size_t trial = 0;
  /// f restricted to the line; zero when f vanishes on the whole line.
  UniPoly restriction;
};

struct StabilityVerdict {
  VerdictStatus status = VerdictStatus::SampledPass;
  StabilityClass cls = StabilityClass::HC;
  std::optional<CertificateKind> certificate;
  std::optional<Refutation> refutation;
  std::size_t trials = 0;

  bool passed() const { return status != VerdictStatus::Refuted; }
  bool refuted() const { return status == VerdictStatus::Refuted; }
  /// True unless the verdict rests on sampling.
  bool exact() const { return status != VerdictStatus::SampledPass; }
};

std::string to_string(StabilityClass c);
std::string to_string(CertificateKind k);
std::string to_string(VerdictStatus s);
std::string to_string(RefutationKind k);
/// Accepts HC, HR, HCs, HRs.
StabilityClass parse_stability_class(const std::string& text);
bool is_strict(StabilityClass c);
bool is_real_class(StabilityClass c);

/// Exact test of a univariate restriction for the given class.
/// The zero polynomial fails every class.
bool restriction_ok(const UniPoly& r, StabilityClass cls);

/// Membership of f in the class. Exact for constants, polynomials in one
/// effective variable and real multi-affine polynomials in two effective
/// variables; otherwise samples cfg.trials lines after the hint lines.
StabilityVerdict check_stable(const MultiPoly& f, StabilityClass cls, const SampleConfig& cfg = {},
                              std::span<const Line> hints = {});

/// Line sampling only, bypassing the exact deciders.
StabilityVerdict sample_stability(const MultiPoly& f, StabilityClass cls, const SampleConfig& cfg = {},
                                  std::span<const Line> hints = {});

/// Strict stability: exact in one effective variable; otherwise samples lines
/// whose directions are nonnegative and may have zero coordinates.
StabilityVerdict check_strictly_stable(const MultiPoly& f, const SampleConfig& cfg = {}, bool real = false);

/// Whether f << g in n variables, decided as stability of g + i f.
/// Throws std::domain_error if f or g has nonreal coefficients.
StabilityVerdict proper_position_multi(const MultiPoly& f, const MultiPoly& g, const SampleConfig& cfg = {});

enum class Slope { Positive, Negative };

struct IntersectionReport {
  StabilityVerdict verdict;
  /// Approximate real points of the curve f = 0 met by the sampled lines.
  std::vector<std::pair<Rational, Rational>> points;
};

/// Samples lines w = a z + b with a of the given sign and checks that f(z, a z + b)
/// keeps degree deg f and has only real zeros. A degree drop is reported with
/// RefutationKind::DegreeDrop. The witness line is alpha = (0, b), v = (1, a).
IntersectionReport intersection_property(const MultiPoly& f, Slope which, const SampleConfig& cfg = {});

}  // namespace stabkit

#endif  // STABKIT_STABILITY_HPP
