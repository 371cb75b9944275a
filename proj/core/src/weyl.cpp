#include "stabkit/weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace stabkit {

namespace {

Exponent concat(const Exponent& a, const Exponent& b) {
  Exponent e = a;
  e.insert(e.end(), b.begin(), b.end());
  return e;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational factorial(const Exponent& a) {
  Rational r = 1;
  for (auto k : a) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    r *= f;
  }
  return r;
}

// Calls fn(k) for every k with 0 <= k <= bound componentwise.
template <typename Fn>
void for_each_below(const Exponent& bound, Fn&& fn) {
  Exponent k(bound.size(), 0);
  for (;;) {
    fn(static_cast<const Exponent&>(k));
    std::size_t i = 0;
    while (i < k.size() && k[i] == bound[i]) k[i++] = 0;
    if (i == k.size()) return;
    ++k[i];
  }
}

void check_arity(const WeylOp& a, const WeylOp& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("operators act in different numbers of variables");
}

}  // namespace

Rational falling_factorial(const Exponent& a, const Exponent& b) {
  Rational r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return 0;
    for (unsigned j = 0; j < b[i]; ++j) r *= a[i] - j;
  }
  return r;
}

WeylOp WeylOp::identity(std::size_t nvars) { return constant(nvars, GaussRat(1)); }

WeylOp WeylOp::constant(std::size_t nvars, const GaussRat& c) {
  WeylOp t(nvars);
  t.add_term(Exponent(nvars, 0), Exponent(nvars, 0), c);
  return t;
}

WeylOp WeylOp::z(std::size_t nvars, std::size_t i) {
  WeylOp t(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  t.add_term(e, Exponent(nvars, 0), GaussRat(1));
  return t;
}

WeylOp WeylOp::d(std::size_t nvars, std::size_t i) {
  WeylOp t(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  t.add_term(Exponent(nvars, 0), e, GaussRat(1));
  return t;
}

WeylOp WeylOp::multiplication(const MultiPoly& p) {
  WeylOp t(p.nvars());
  for (const auto& [e, c] : p.terms()) t.add_term(e, Exponent(p.nvars(), 0), c);
  return t;
}

WeylOp WeylOp::from_derivative_poly(const UniPoly& p) {
  WeylOp t(1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    t.add_term(Exponent{0}, Exponent{static_cast<std::uint32_t>(k)}, p.coeffs()[k]);
  }
  return t;
}

WeylOp WeylOp::from_symbol(const MultiPoly& F) {
  if (F.nvars() % 2 != 0) throw std::invalid_argument("a symbol needs an even number of variables");
  WeylOp t(F.nvars() / 2);
  t.symbol_ = F;
  return t;
}

void WeylOp::add_term(const Exponent& zexp, const Exponent& dexp, const GaussRat& c) {
  if (zexp.size() != nvars_ || dexp.size() != nvars_) throw std::invalid_argument("operator exponent has wrong length");
  symbol_.add_term(concat(zexp, dexp), c);
}

std::vector<WeylOp::OpTerm> WeylOp::terms() const {
  std::vector<OpTerm> out;
  out.reserve(symbol_.term_count());
  for (const auto& [e, c] : symbol_.terms()) {
    out.push_back(OpTerm{Exponent(e.begin(), e.begin() + static_cast<long>(nvars_)),
                         Exponent(e.begin() + static_cast<long>(nvars_), e.end()), c});
  }
  return out;
}

bool WeylOp::is_diagonal() const {
  for (const auto& t : terms()) {
    if (t.zexp != t.dexp) return false;
  }
  return true;
}

int WeylOp::order() const {
  int r = -1;
  for (const auto& t : terms()) r = std::max(r, static_cast<int>(total_degree(t.dexp)));
  return r;
}

MultiPoly WeylOp::apply(const MultiPoly& f) const {
  if (f.nvars() != nvars_) throw std::invalid_argument("operator and polynomial have different arity");
  MultiPoly out(nvars_);
  Exponent e(nvars_);
  for (const auto& t : terms()) {
    for (const auto& [g, c] : f.terms()) {
      const Rational ff = falling_factorial(g, t.dexp);
      if (sgn(ff) == 0) continue;
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = t.zexp[i] + g[i] - t.dexp[i];
      out.add_term(e, t.coeff * c * GaussRat(ff));
    }
  }
  return out;
}

WeylOp WeylOp::adjoint() const {
  WeylOp out(nvars_);
  for (const auto& t : terms()) out.add_term(t.dexp, t.zexp, t.coeff.conj());
  return out;
}

MultiPoly WeylOp::symbol_negate_w() const {
  MultiPoly out(2 * nvars_);
  for (const auto& t : terms()) {
    out.add_term(concat(t.zexp, t.dexp), total_degree(t.dexp) % 2 == 0 ? t.coeff : -t.coeff);
  }
  return out;
}

WeylOp WeylOp::scale(const GaussRat& c) const { return from_symbol(symbol_.scale(c)); }

WeylOp operator+(const WeylOp& a, const WeylOp& b) {
  check_arity(a, b);
  return WeylOp::from_symbol(a.symbol_ + b.symbol_);
}

WeylOp operator-(const WeylOp& a, const WeylOp& b) {
  check_arity(a, b);
  return WeylOp::from_symbol(a.symbol_ - b.symbol_);
}

// (z^a D^b)(z^c D^e) = sum_k C(b, k) (c)_k z^(a + c - k) D^(b + e - k), which is the
// symbol product sum_k (1/k!) d_w^k F_S d_z^k F_T taken term by term.
WeylOp operator*(const WeylOp& S, const WeylOp& T) {
  check_arity(S, T);
  const std::size_t n = S.nvars_;
  WeylOp out(n);
  const auto st = S.terms();
  const auto tt = T.terms();
  Exponent bound(n), ze(n), de(n);
  for (const auto& s : st) {
    for (const auto& t : tt) {
      for (std::size_t i = 0; i < n; ++i) bound[i] = std::min(s.dexp[i], t.zexp[i]);
      const GaussRat base = s.coeff * t.coeff;
      for_each_below(bound, [&](const Exponent& k) {
        Rational c = falling_factorial(t.zexp, k);
        for (std::size_t i = 0; i < n; ++i) c *= binomial(s.dexp[i], k[i]);
        for (std::size_t i = 0; i < n; ++i) {
          ze[i] = s.zexp[i] + t.zexp[i] - k[i];
          de[i] = s.dexp[i] + t.dexp[i] - k[i];
        }
        out.add_term(ze, de, base * GaussRat(c));
      });
    }
  }
  return out;
}

std::string WeylOp::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars_; ++i) names.push_back(nvars_ == 1 ? "z" : "z" + std::to_string(i + 1));
  for (std::size_t i = 0; i < nvars_; ++i) names.push_back(nvars_ == 1 ? "D" : "D" + std::to_string(i + 1));
  return symbol_.to_string(names);
}

MultiPoly apply(const WeylOp& T, const MultiPoly& f) { return T.apply(f); }
MultiPoly symbol(const WeylOp& T) { return T.symbol(); }
WeylOp op_from_symbol(const MultiPoly& F) { return WeylOp::from_symbol(F); }
WeylOp compose(const WeylOp& S, const WeylOp& T) { return S * T; }
WeylOp adjoint(const WeylOp& T) { return T.adjoint(); }
MultiPoly symbol_negate_w(const WeylOp& T) { return T.symbol_negate_w(); }

MultiPoly star_product(const MultiPoly& F, const MultiPoly& G) {
  if (F.nvars() != G.nvars() || F.nvars() % 2 != 0) throw std::invalid_argument("star product needs two symbols of equal even arity");
  const std::size_t n = F.nvars() / 2;
  MultiPoly out(F.nvars());
  Exponent bound(n), e(2 * n);
  for (const auto& [ef, cf] : F.terms()) {
    for (const auto& [eg, cg] : G.terms()) {
      for (std::size_t i = 0; i < n; ++i) bound[i] = std::min(ef[i], eg[n + i]);
      const GaussRat base = cf * cg;
      for_each_below(bound, [&](const Exponent& k) {
        Rational c = 1;
        for (std::size_t i = 0; i < n; ++i) {
          c *= binomial(ef[i], k[i]);
          for (unsigned j = 0; j < k[i]; ++j) c *= eg[n + i] - j;
        }
        if (total_degree(k) % 2 != 0) c = -c;
        for (std::size_t i = 0; i < n; ++i) {
          e[i] = ef[i] + eg[i] - k[i];
          e[n + i] = ef[n + i] + eg[n + i] - k[i];
        }
        out.add_term(e, base * GaussRat(c));
      });
    }
  }
  return out;
}

MultiplierData::MultiplierData(std::vector<std::size_t> ext) : nvars(ext.size()), extents(std::move(ext)) {
  std::size_t total = 1;
  for (auto x : extents) {
    if (x == 0) throw std::invalid_argument("multiplier box has an empty side");
    total *= x;
  }
  values.assign(total, Rational(0));
}

std::size_t MultiplierData::index_of(const Exponent& a) const {
  if (a.size() != nvars) throw std::invalid_argument("multi-index has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] >= extents[i]) throw std::out_of_range("multi-index outside the multiplier box");
    idx = idx * extents[i] + a[i];
  }
  return idx;
}

Exponent MultiplierData::exponent_of(std::size_t index) const {
  Exponent a(nvars);
  for (std::size_t i = nvars; i-- > 0;) {
    a[i] = static_cast<std::uint32_t>(index % extents[i]);
    index /= extents[i];
  }
  return a;
}

bool MultiplierData::contains(const Exponent& a) const {
  if (a.size() != nvars) return false;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] >= extents[i]) return false;
  }
  return true;
}

WeylOp diag_from_sequence(const MultiplierData& lambda) {
  if (lambda.values.empty()) throw std::invalid_argument("empty multiplier data");
  const std::size_t n = lambda.nvars;
  std::vector<Rational> v = lambda.values;
  // forward differences at 0 along each axis in turn
  std::size_t stride = 1;
  for (std::size_t axis = n; axis-- > 0;) {
    const std::size_t len = lambda.extents[axis];
    for (std::size_t start = 0; start < v.size(); ++start) {
      if ((start / stride) % len != 0) continue;
      std::vector<Rational> line(len);
      for (std::size_t k = 0; k < len; ++k) line[k] = v[start + k * stride];
      for (std::size_t k = 0; k < len; ++k) {
        Rational acc = 0;
        for (std::size_t j = 0; j <= k; ++j) {
          Rational term = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * line[j];
          acc += (k - j) % 2 == 0 ? term : Rational(-term);
        }
        v[start + k * stride] = acc;
      }
    }
    stride *= len;
  }
  WeylOp T(n);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (sgn(v[idx]) == 0) continue;
    const Exponent b = lambda.exponent_of(idx);
    T.add_term(b, b, GaussRat(Rational(v[idx] / factorial(b))));
  }
  return T;
}

MultiplierData sequence_from_diag(const WeylOp& T, const std::vector<std::size_t>& extents) {
  if (extents.size() != T.nvars()) throw std::invalid_argument("box dimension does not match the operator");
  if (!T.is_diagonal()) throw std::invalid_argument("operator is not diagonal");
  if (!T.is_real()) throw std::domain_error("diagonal operator has nonreal coefficients");
  MultiplierData lambda(extents);
  const auto terms = T.terms();
  for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
    const Exponent a = lambda.exponent_of(idx);
    Rational acc = 0;
    for (const auto& t : terms) acc += t.coeff.re * falling_factorial(a, t.dexp);
    lambda.values[idx] = acc;
  }
  return lambda;
}

}  // namespace stabkit
