#include "stabkit/multi_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabkit {

namespace {

using RatVec = std::vector<Rational>;

RatVec rat_mul(const RatVec& a, const RatVec& b) {
  RatVec c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::string default_name(std::size_t i, std::size_t n) {
  if (n == 1) return "z";
  return "z" + std::to_string(i + 1);
}

}  // namespace

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto k : e) d += k;
  return d;
}

MultiPoly::MultiPoly(std::size_t nvars, std::span<const Term> terms) : nvars_(nvars) {
  for (const auto& t : terms) add_term(t.exponent, t.coeff);
}

MultiPoly MultiPoly::constant(std::size_t nvars, const GaussRat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars, 0);
  e[var] = 1;
  MultiPoly p(nvars);
  p.add_term(e, GaussRat(1));
  return p;
}

MultiPoly MultiPoly::monomial(Exponent exponent, const GaussRat& c) {
  MultiPoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

void MultiPoly::add_term(const Exponent& e, const GaussRat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

GaussRat MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

std::vector<Exponent> MultiPoly::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::vector<std::size_t> MultiPoly::used_variables() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] > 0) used[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_real(); });
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return static_cast<int>(total_degree(kv.first)) == d; });
}

bool MultiPoly::is_multi_affine() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](auto k) { return k > 1; })) return false;
  }
  return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scale(const GaussRat& c) const {
  MultiPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(nvars_, GaussRat(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

MultiPoly MultiPoly::conj() const {
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v.conj());
  return out;
}

MultiPoly MultiPoly::real_part() const {
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, GaussRat(v.re));
  return out;
}

MultiPoly MultiPoly::imag_part() const {
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, GaussRat(v.im));
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var, unsigned k) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) {
    if (e[var] < k) continue;
    Rational factor = 1;
    for (unsigned j = 0; j < k; ++j) factor *= e[var] - j;
    Exponent f = e;
    f[var] -= k;
    out.add_term(f, v * GaussRat(factor));
  }
  return out;
}

MultiPoly MultiPoly::substitute_constant(std::size_t var, const GaussRat& c) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  MultiPoly out(nvars_ - 1);
  std::vector<GaussRat> powers{GaussRat(1)};
  for (const auto& [e, v] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * c);
    Exponent f;
    f.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var) f.push_back(e[i]);
    }
    out.add_term(f, v * powers[e[var]]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& q) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  check_same_ring(q);
  std::vector<MultiPoly> powers{constant(nvars_, GaussRat(1))};
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * q);
    Exponent f = e;
    f[var] = 0;
    out += monomial(f, v) * powers[e[var]];
  }
  return out;
}

GaussRat MultiPoly::evaluate(std::span<const GaussRat> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::vector<GaussRat>> powers(nvars_, std::vector<GaussRat>{GaussRat(1)});
  GaussRat acc;
  for (const auto& [e, v] : terms_) {
    GaussRat m = v;
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& p = powers[i];
      while (p.size() <= e[i]) p.push_back(p.back() * point[i]);
      if (e[i] > 0) m *= p[e[i]];
    }
    acc += m;
  }
  return acc;
}

UniPoly MultiPoly::restrict_to_line(std::span<const Rational> alpha, std::span<const Rational> v) const {
  if (alpha.size() != nvars_ || v.size() != nvars_) {
    throw std::invalid_argument("line has wrong dimension");
  }
  // powers[i][k] = (alpha_i + v_i t)^k as a dense real polynomial
  std::vector<std::vector<RatVec>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(RatVec{Rational(1)});
  const std::size_t deg = static_cast<std::size_t>(std::max(degree(), 0));
  RatVec re(deg + 1), im(deg + 1);
  for (const auto& [e, c] : terms_) {
    RatVec prod{Rational(1)};
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& p = powers[i];
      while (p.size() <= e[i]) p.push_back(rat_mul(p.back(), RatVec{alpha[i], v[i]}));
      prod = rat_mul(prod, p[e[i]]);
    }
    const bool has_re = sgn(c.re) != 0;
    const bool has_im = sgn(c.im) != 0;
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (sgn(prod[k]) == 0) continue;
      if (has_re) re[k] += c.re * prod[k];
      if (has_im) im[k] += c.im * prod[k];
    }
  }
  std::vector<GaussRat> out(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) out[k] = GaussRat(std::move(re[k]), std::move(im[k]));
  return UniPoly(std::move(out));
}

MultiPoly MultiPoly::homogenize() const {
  if (is_zero()) throw std::invalid_argument("homogenization of the zero polynomial");
  MultiPoly out(nvars_ + 1);
  const int d = degree();
  for (const auto& [e, v] : terms_) {
    Exponent f = e;
    f.push_back(static_cast<std::uint32_t>(d) - total_degree(e));
    out.terms_.emplace(std::move(f), v);
  }
  return out;
}

MultiPoly MultiPoly::scale_variables(std::span<const Rational> lambda) const {
  std::vector<GaussRat> g(lambda.begin(), lambda.end());
  return scale_variables(std::span<const GaussRat>(g));
}

MultiPoly MultiPoly::scale_variables(std::span<const GaussRat> lambda) const {
  if (lambda.size() != nvars_) throw std::invalid_argument("scaling vector has wrong dimension");
  std::vector<std::vector<GaussRat>> powers(nvars_, std::vector<GaussRat>{GaussRat(1)});
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) {
    GaussRat m = v;
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& p = powers[i];
      while (p.size() <= e[i]) p.push_back(p.back() * lambda[i]);
      m *= p[e[i]];
    }
    out.add_term(e, m);
  }
  return out;
}

MultiPoly MultiPoly::top_component() const {
  MultiPoly out(nvars_);
  const int d = degree();
  for (const auto& [e, v] : terms_) {
    if (static_cast<int>(total_degree(e)) == d) out.terms_.emplace_hint(out.terms_.end(), e, v);
  }
  return out;
}

std::pair<Term, MultiPoly> MultiPoly::leading_and_dominating_part() const {
  if (is_zero()) throw std::domain_error("leading term of the zero polynomial");
  MultiPoly top = top_component();
  const auto& last = *top.terms_.rbegin();
  return {Term{last.first, last.second}, std::move(top)};
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, unsigned k) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, v] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), v);
  }
  return out;
}

MultiPoly MultiPoly::embed(std::size_t new_nvars, std::span<const std::size_t> var_map) const {
  if (var_map.size() != nvars_) throw std::invalid_argument("variable map has wrong length");
  MultiPoly out(new_nvars);
  for (const auto& [e, v] : terms_) {
    Exponent f(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (var_map[i] >= new_nvars) throw std::out_of_range("variable map target out of range");
      f[var_map[i]] += e[i];
    }
    out.add_term(f, v);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars_; ++i) names.push_back(default_name(i, nvars_));
  return to_string(names);
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, v] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += stabkit::to_string(v);
    } else if (v == GaussRat(1)) {
      out += mono;
    } else {
      out += stabkit::to_string(v) + "*" + mono;
    }
  }
  return out;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly scale(const MultiPoly& a, const GaussRat& c) { return a.scale(c); }
MultiPoly substitute_constant(const MultiPoly& p, std::size_t var, const GaussRat& c) {
  return p.substitute_constant(var, c);
}
UniPoly restrict_to_line(const MultiPoly& f, std::span<const Rational> alpha, std::span<const Rational> v) {
  return f.restrict_to_line(alpha, v);
}
MultiPoly homogenize(const MultiPoly& f) { return f.homogenize(); }
MultiPoly scale_variables(const MultiPoly& f, std::span<const Rational> lambda) {
  return f.scale_variables(lambda);
}
std::pair<Term, MultiPoly> leading_and_dominating_part(const MultiPoly& f) {
  return f.leading_and_dominating_part();
}

}  // namespace stabkit
