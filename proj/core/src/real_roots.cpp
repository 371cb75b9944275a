#include "stabkit/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabkit {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::from_uni(const UniPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) {
    if (!z.is_real()) throw std::domain_error("polynomial has nonreal coefficients");
    c.push_back(z.re);
  }
  return RatPoly(std::move(c));
}

UniPoly RatPoly::to_uni() const { return UniPoly::from_rationals(c_); }

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int RatPoly::sign_at_pos_inf() const { return c_.empty() ? 0 : sgn(c_.back()); }

int RatPoly::sign_at_neg_inf() const {
  if (c_.empty()) return 0;
  const int s = sgn(c_.back());
  return degree() % 2 == 0 ? s : -s;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return {};
  return scale(1 / c_.back());
}

RatPoly RatPoly::operator-() const { return scale(-1); }

RatPoly RatPoly::scale(const Rational& c) const {
  if (sgn(c) == 0) return {};
  std::vector<Rational> out = c_;
  for (auto& q : out) q *= c;
  return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {RatPoly{}, *this};
  std::vector<Rational> r = c_;
  std::vector<Rational> q(c_.size() - d.c_.size() + 1);
  const Rational inv = 1 / d.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = r[k + d.c_.size() - 1] * inv;
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
  }
  r.resize(d.c_.size() - 1);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

std::string RatPoly::to_string(const std::string& var) const { return to_uni().to_string(var); }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a.monic();
  RatPoly y = b.monic();
  while (!y.is_zero()) {
    RatPoly r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  return p.exact_div(gcd(p, p.derivative())).monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<RatPoly> out;
  if (p.degree() == 0) return out;
  const RatPoly dp = p.derivative();
  const RatPoly a0 = gcd(p, dp);
  RatPoly b = p.exact_div(a0);
  RatPoly c = dp.exact_div(a0);
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    out.push_back(a.monic());
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Rational cauchy_bound(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(k)]) / lc;
    if (r > m) m = r;
  }
  return m + 1;
}

SturmChain::SturmChain(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  auto normalize = [](const RatPoly& q) { return q.scale(1 / abs(q.leading())); };
  chain_.push_back(normalize(p));
  RatPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(normalize(d));
  for (;;) {
    RatPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(normalize(-r));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.sign_at_neg_inf());
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.sign_at_pos_inf());
  return count_variations(s);
}

double RealRoot::approx() const {
  if (exact) return lo.get_d();
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

namespace {

// Root isolation for a squarefree polynomial s on (lo, hi), where neither end is a root.
void isolate_rec(const RatPoly& s, const SturmChain& chain, const Rational& lo, const Rational& hi, int vlo,
                 int vhi, std::vector<RealRoot>& out) {
  const int c = vlo - vhi;
  if (c <= 0) return;
  if (c == 1) {
    out.push_back(RealRoot{lo, hi, false, 1});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (s.sign_at(mid) != 0) {
    const int vm = chain.variations_at(mid);
    isolate_rec(s, chain, lo, mid, vlo, vm, out);
    isolate_rec(s, chain, mid, hi, vm, vhi, out);
    return;
  }
  Rational delta = (hi - lo) / 4;
  Rational a, b;
  int va = 0, vb = 0;
  for (;;) {
    a = mid - delta;
    b = mid + delta;
    if (s.sign_at(a) != 0 && s.sign_at(b) != 0) {
      va = chain.variations_at(a);
      vb = chain.variations_at(b);
      if (va - vb == 1) break;
    }
    delta /= 2;
  }
  isolate_rec(s, chain, lo, a, vlo, va, out);
  out.push_back(RealRoot{mid, mid, true, 1});
  isolate_rec(s, chain, b, hi, vb, vhi, out);
}

std::vector<RealRoot> isolate_squarefree(const RatPoly& s) {
  std::vector<RealRoot> out;
  if (s.degree() <= 0) return out;
  const SturmChain chain(s);
  const Rational bound = cauchy_bound(s);
  isolate_rec(s, chain, -bound, bound, chain.variations_at(-bound), chain.variations_at(bound), out);
  return out;
}

// s squarefree and every root of s is a root of the polynomial that r isolates.
bool has_root_in(const RatPoly& s, const RealRoot& r) {
  if (s.degree() <= 0) return false;
  if (r.exact) return s.sign_at(r.lo) == 0;
  return s.sign_at(r.lo) * s.sign_at(r.hi) < 0;
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  const auto factors = squarefree_decomposition(p);
  RatPoly s({Rational(1)});
  for (const auto& f : factors) s = s * f;
  auto roots = isolate_squarefree(s);
  for (auto& r : roots) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (has_root_in(factors[k], r)) {
        r.multiplicity = static_cast<unsigned>(k + 1);
        break;
      }
    }
  }
  return roots;
}

std::vector<RealRoot> isolate_real_roots(const UniPoly& p) { return isolate_real_roots(RatPoly::from_uni(p)); }

void refine_root(const RatPoly& s, RealRoot& r) {
  if (r.exact) return;
  Rational mid = (r.lo + r.hi) / 2;
  const int sm = s.sign_at(mid);
  if (sm == 0) {
    r.lo = mid;
    r.hi = mid;
    r.exact = true;
    return;
  }
  if (sm == s.sign_at(r.lo)) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

std::vector<Rational> gap_sample_points(const std::vector<RealRoot>& roots) {
  if (roots.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.push_back(roots.front().lo - 1);
  for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
    const auto& a = roots[k];
    const auto& b = roots[k + 1];
    if (!a.exact) {
      out.push_back(a.hi);
    } else if (!b.exact) {
      out.push_back(b.lo);
    } else {
      out.push_back((a.hi + b.lo) / 2);
    }
  }
  out.push_back(roots.back().hi + 1);
  return out;
}

std::size_t count_real_roots(const RatPoly& p, const Interval& interval) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (interval.lo && interval.hi && *interval.lo > *interval.hi) return 0;
  const RatPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  const SturmChain chain(s);
  const int vlo = interval.lo ? chain.variations_at(*interval.lo) : chain.variations_at_neg_inf();
  const int vhi = interval.hi ? chain.variations_at(*interval.hi) : chain.variations_at_pos_inf();
  int n = vlo - vhi;
  if (interval.lo && s.sign_at(*interval.lo) == 0) ++n;
  return static_cast<std::size_t>(n);
}

std::size_t count_real_roots(const UniPoly& p, const Interval& interval) {
  return count_real_roots(RatPoly::from_uni(p), interval);
}

bool is_hyperbolic(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("hyperbolicity of the zero polynomial");
  const RatPoly s = squarefree_part(p);
  if (s.degree() <= 0) return true;
  return static_cast<int>(count_real_roots(s)) == s.degree();
}

bool is_hyperbolic(const UniPoly& p) { return is_hyperbolic(RatPoly::from_uni(p)); }

bool is_strictly_hyperbolic(const UniPoly& p) {
  const RatPoly q = RatPoly::from_uni(p);
  if (q.is_zero()) throw std::domain_error("hyperbolicity of the zero polynomial");
  if (gcd(q, q.derivative()).degree() > 0) return false;
  return is_hyperbolic(q);
}

std::string to_string(RootSigns s) {
  switch (s) {
    case RootSigns::AllNonneg: return "AllNonneg";
    case RootSigns::AllNonpos: return "AllNonpos";
    case RootSigns::Mixed: return "Mixed";
    case RootSigns::NoRoots: return "NoRoots";
  }
  return "?";
}

RootSigns roots_all_same_sign(const UniPoly& p) {
  RatPoly q = RatPoly::from_uni(p);
  if (q.is_zero() || !is_hyperbolic(q)) throw std::domain_error("root sign classification needs a hyperbolic polynomial");
  std::size_t zeros = 0;
  while (sgn(q.coeffs().front()) == 0) {
    q = RatPoly(std::vector<Rational>(q.coeffs().begin() + 1, q.coeffs().end()));
    ++zeros;
  }
  if (q.degree() == 0) return zeros > 0 ? RootSigns::AllNonpos : RootSigns::NoRoots;
  const std::size_t neg = count_real_roots(q, Interval{std::nullopt, Rational(0)});
  const std::size_t pos = count_real_roots(q, Interval{Rational(0), std::nullopt});
  if (neg > 0 && pos > 0) return RootSigns::Mixed;
  return neg > 0 ? RootSigns::AllNonpos : RootSigns::AllNonneg;
}

RatPoly wronskian(const RatPoly& f, const RatPoly& g) { return f.derivative() * g - f * g.derivative(); }

UniPoly wronskian(const UniPoly& f, const UniPoly& g) { return f.derivative() * g - f * g.derivative(); }

bool roots_interlace(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("interlacing needs nonzero polynomials");
  const RatPoly q = squarefree_part(f * g);
  const auto roots = isolate_squarefree(q);
  const auto ff = squarefree_decomposition(f);
  const auto gf = squarefree_decomposition(g);
  std::vector<long> a, b;
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    for (std::size_t k = 0; k < ff.size(); ++k) {
      if (has_root_in(ff[k], roots[idx])) a.insert(a.end(), k + 1, static_cast<long>(idx));
    }
    for (std::size_t k = 0; k < gf.size(); ++k) {
      if (has_root_in(gf[k], roots[idx])) b.insert(b.end(), k + 1, static_cast<long>(idx));
    }
  }
  return interlace_check<long>(a, b);
}

std::string to_string(Position p) {
  switch (p) {
    case Position::FirstLLSecond: return "FirstLLSecond";
    case Position::SecondLLFirst: return "SecondLLFirst";
    case Position::Both: return "Both";
    case Position::Neither: return "Neither";
  }
  return "?";
}

namespace {

ProperPositionVerdict proper_position_rat(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("proper position of two zero polynomials");
  if (f.is_zero()) return {is_hyperbolic(g) ? Position::Both : Position::Neither, std::nullopt};
  if (g.is_zero()) return {is_hyperbolic(f) ? Position::Both : Position::Neither, std::nullopt};

  const RatPoly w = wronskian(f, g);
  const bool hyperbolic = is_hyperbolic(f) && is_hyperbolic(g);
  if (w.is_zero()) return {hyperbolic ? Position::Both : Position::Neither, std::nullopt};

  std::optional<Rational> positive_at;
  bool has_negative = false;
  for (const auto& x : gap_sample_points(isolate_squarefree(squarefree_part(w)))) {
    const int s = w.sign_at(x);
    if (s > 0 && !positive_at) positive_at = x;
    if (s < 0) has_negative = true;
  }
  if (!hyperbolic || !roots_interlace(f, g)) return {Position::Neither, positive_at};
  if (!positive_at) return {Position::FirstLLSecond, std::nullopt};
  if (!has_negative) return {Position::SecondLLFirst, positive_at};
  return {Position::Neither, positive_at};
}

}  // namespace

ProperPositionVerdict proper_position(const UniPoly& f, const UniPoly& g) {
  return proper_position_rat(RatPoly::from_uni(f), RatPoly::from_uni(g));
}

bool is_stable_complex(const UniPoly& h) {
  if (h.is_zero()) throw std::domain_error("stability of the zero polynomial");
  return proper_position_rat(RatPoly::from_uni(h.imag_part()), RatPoly::from_uni(h.real_part())).first_ll_second();
}

RatPoly real_root_factor(const UniPoly& h) {
  if (h.is_zero()) throw std::domain_error("real roots of the zero polynomial");
  return gcd(RatPoly::from_uni(h.real_part()), RatPoly::from_uni(h.imag_part()));
}

bool is_strictly_stable_complex(const UniPoly& h) {
  if (!is_stable_complex(h)) return false;
  const RatPoly r = real_root_factor(h);
  return r.degree() <= 0 || count_real_roots(r) == 0;
}

}  // namespace stabkit
