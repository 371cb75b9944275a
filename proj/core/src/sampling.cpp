#include "stabkit/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace stabkit {

std::string Line::to_string() const {
  std::string out = "alpha=(";
  for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + format_rational(alpha[i]);
  out += ") v=(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_rational(v[i]);
  return out + ")";
}

RationalSampler::RationalSampler(long denominator_bound, std::uint64_t seed)
    : engine_(seed), denominator_bound_(denominator_bound) {
  if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be positive");
}

long long RationalSampler::uniform_int(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

Rational RationalSampler::in_range(const Rational& lo, const Rational& hi) {
  const long q = static_cast<long>(uniform_int(1, denominator_bound_));
  Rational a = lo * q;
  Rational b = hi * q;
  mpz_class lo_num, hi_num;
  mpz_cdiv_q(lo_num.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_fdiv_q(hi_num.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  if (hi_num < lo_num) return lo;
  const long long p = uniform_int(lo_num.get_si(), hi_num.get_si());
  Rational r(static_cast<long>(p), q);
  r.canonicalize();
  return r;
}

Rational RationalSampler::positive(const Rational& hi) {
  const long q = static_cast<long>(uniform_int(1, denominator_bound_));
  Rational b = hi * q;
  mpz_class hi_num;
  mpz_fdiv_q(hi_num.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  if (hi_num < 1) return hi;
  const long long p = uniform_int(1, hi_num.get_si());
  Rational r(static_cast<long>(p), q);
  r.canonicalize();
  return r;
}

LineSampler::LineSampler(std::size_t nvars, const SampleConfig& cfg, bool allow_zero_directions)
    : nvars_(nvars), cfg_(cfg), allow_zero_(allow_zero_directions), rng_(cfg.denominator_bound, cfg.seed) {}

Line LineSampler::next() {
  Line line{std::vector<Rational>(nvars_), std::vector<Rational>(nvars_, Rational(1))};
  if (drawn_++ == 0) return line;
  for (std::size_t i = 0; i < nvars_; ++i) line.alpha[i] = rng_.in_range(-cfg_.alpha_bound, cfg_.alpha_bound);
  bool any_positive = false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (allow_zero_ && rng_.uniform_int(0, 3) == 0) {
      line.v[i] = 0;
    } else {
      line.v[i] = rng_.positive(cfg_.v_max);
      any_positive = true;
    }
  }
  if (!any_positive && nvars_ > 0) {
    line.v[static_cast<std::size_t>(rng_.uniform_int(0, static_cast<long long>(nvars_) - 1))] = rng_.positive(cfg_.v_max);
  }
  return line;
}

}  // namespace stabkit
