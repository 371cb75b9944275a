#ifndef STABKIT_SAMPLING_HPP
#define STABKIT_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stabkit/gauss_rational.hpp"

namespace stabkit {

struct SampleConfig {
  std::size_t trials = 200;
  /// Sampled rationals have denominators in [1, denominator_bound].
  long denominator_bound = 64;
  /// Base points are drawn from [-alpha_bound, alpha_bound]^n.
  Rational alpha_bound = 4;
  /// Directions are drawn from (0, v_max]^n.
  Rational v_max = 4;
  std::uint64_t seed = 0;
};

/// Real line t -> alpha + v t in n-space.
struct Line {
  std::vector<Rational> alpha;
  std::vector<Rational> v;

  std::string to_string() const;
};

/// Deterministic source of rational points and lines. The engine is
/// std::mt19937_64 (fully specified by the standard); the integer draws use
/// our own rejection step so streams agree across standard libraries.
class RationalSampler {
 public:
  RationalSampler(long denominator_bound, std::uint64_t seed);

  /// Uniform integer in [lo, hi].
  long long uniform_int(long long lo, long long hi);
  /// Rational in [lo, hi] with denominator in [1, denominator_bound].
  Rational in_range(const Rational& lo, const Rational& hi);
  /// Rational in (0, hi].
  Rational positive(const Rational& hi);

 private:
  std::mt19937_64 engine_;
  long denominator_bound_;
};

class LineSampler {
 public:
  /// With allow_zero_directions, each direction coordinate is 0 with
  /// probability 1/4 (never all of them); otherwise every v_i > 0.
  LineSampler(std::size_t nvars, const SampleConfig& cfg, bool allow_zero_directions = false);

  /// The first line is alpha = 0, v = (1, ..., 1); later ones are random.
  Line next();

 private:
  std::size_t nvars_;
  SampleConfig cfg_;
  bool allow_zero_;
  RationalSampler rng_;
  std::size_t drawn_ = 0;
};

}  // namespace stabkit

#endif  // STABKIT_SAMPLING_HPP
