#include "stabkit/matrix.hpp"

#include <bit>
#include <stdexcept>

namespace stabkit {

GaussianMatrix::GaussianMatrix(std::size_t order) : order_(order), entries_(order * order) {}

GaussianMatrix::GaussianMatrix(std::size_t order, std::vector<GaussRat> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order * order) throw std::invalid_argument("matrix entry count does not match its order");
}

GaussianMatrix GaussianMatrix::identity(std::size_t order) {
  GaussianMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = GaussRat(1);
  return m;
}

GaussianMatrix GaussianMatrix::diagonal(const std::vector<Rational>& d) {
  GaussianMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = GaussRat(d[i]);
  return m;
}

bool GaussianMatrix::hermitian() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i).conj()) return false;
    }
  }
  return true;
}

bool GaussianMatrix::is_real() const {
  for (const auto& e : entries_) {
    if (!e.is_real()) return false;
  }
  return true;
}

bool GaussianMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

GaussianMatrix GaussianMatrix::conj_transpose() const {
  GaussianMatrix m(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) m(j, i) = (*this)(i, j).conj();
  }
  return m;
}

GaussianMatrix GaussianMatrix::minor(std::size_t i, std::size_t j) const {
  if (i >= order_ || j >= order_) throw std::out_of_range("minor index out of range");
  GaussianMatrix m(order_ - 1);
  for (std::size_t r = 0, rr = 0; r < order_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < order_; ++c) {
      if (c == j) continue;
      m(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return m;
}

GaussianMatrix operator+(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("matrix orders differ");
  GaussianMatrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] += b.entries_[k];
  return m;
}

GaussianMatrix operator-(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("matrix orders differ");
  GaussianMatrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] -= b.entries_[k];
  return m;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("matrix orders differ");
  const std::size_t n = a.order_;
  GaussianMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

GaussianMatrix GaussianMatrix::scale(const GaussRat& c) const {
  GaussianMatrix m = *this;
  for (auto& e : m.entries_) e *= c;
  return m;
}

std::string GaussianMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < order_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < order_; ++j) out += (j ? ", " : "") + stabkit::to_string((*this)(i, j));
    out += "]";
  }
  return out + "]";
}

MultiPoly determinant(const std::vector<MultiPoly>& entries, std::size_t order, std::size_t nvars) {
  if (order > kMaxDeterminantOrder) {
    throw std::invalid_argument("determinant order " + std::to_string(order) + " exceeds the limit of " +
                                std::to_string(kMaxDeterminantOrder));
  }
  if (entries.size() != order * order) throw std::invalid_argument("matrix entry count does not match its order");
  if (order == 0) return MultiPoly::constant(nvars, GaussRat(1));
  // dp[mask]: signed sum over assignments of the first popcount(mask) rows to the columns in mask
  const std::size_t full = (std::size_t{1} << order) - 1;
  std::vector<MultiPoly> dp(full + 1, MultiPoly(nvars));
  std::vector<bool> live(full + 1, false);
  dp[0] = MultiPoly::constant(nvars, GaussRat(1));
  live[0] = true;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (!live[mask] || dp[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < order; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const MultiPoly& e = entries[row * order + col];
      if (e.is_zero()) continue;
      const int above = std::popcount(mask >> (col + 1));
      MultiPoly term = dp[mask] * e;
      const std::size_t next = mask | (std::size_t{1} << col);
      if (above % 2 == 0) {
        dp[next] += term;
      } else {
        dp[next] -= term;
      }
      live[next] = true;
    }
  }
  return dp[full];
}

GaussRat determinant(const GaussianMatrix& A) {
  // Gaussian elimination over the field Q(i)
  const std::size_t n = A.order();
  std::vector<GaussRat> m = A.entries();
  GaussRat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * n + c].is_zero()) ++p;
    if (p == n) return GaussRat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      det = -det;
    }
    const GaussRat pivot = m[c * n + c];
    det *= pivot;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r * n + c].is_zero()) continue;
      const GaussRat f = m[r * n + c] / pivot;
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

}  // namespace stabkit
