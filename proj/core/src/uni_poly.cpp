#include "stabkit/uni_poly.hpp"

#include <stdexcept>

namespace stabkit {

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::from_rationals(std::span<const Rational> coeffs) {
  std::vector<GaussRat> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.emplace_back(q);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRat UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussRat(0); }

const GaussRat& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool UniPoly::is_real() const {
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

UniPoly UniPoly::real_part() const {
  std::vector<GaussRat> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.emplace_back(z.re);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::imag_part() const {
  std::vector<GaussRat> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.emplace_back(z.im);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::conj() const {
  std::vector<GaussRat> c;
  c.reserve(coeffs_.size());
  for (const auto& z : coeffs_) c.push_back(z.conj());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussRat> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    c[k - 1] = coeffs_[k] * GaussRat(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

GaussRat UniPoly::evaluate(const GaussRat& t) const {
  GaussRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::scale(const GaussRat& c) const {
  if (c.is_zero()) return {};
  std::vector<GaussRat> out = coeffs_;
  for (auto& z : out) z *= c;
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = stabkit::to_string(coeffs_[k]);
    if (k == 0) {
      out += c;
      continue;
    }
    if (coeffs_[k] != GaussRat(1)) out += c + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace stabkit
