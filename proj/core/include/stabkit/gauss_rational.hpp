#ifndef STABKIT_GAUSS_RATIONAL_HPP
#define STABKIT_GAUSS_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace stabkit {

/// Arbitrary precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws std::invalid_argument
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical string form: "p" when the denominator is one, "p/q" otherwise.
std::string format_rational(const Rational& q);

int sign(const Rational& q);

/// Element of Q(i). Both parts are canonical rationals, so equality is exact.
struct GaussRat {
  Rational re;
  Rational im;

  GaussRat() = default;
  GaussRat(long value) : re(value), im(0) {}
  GaussRat(Rational real) : re(std::move(real)), im(0) { re.canonicalize(); }
  GaussRat(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRat conj() const { return GaussRat(re, -im); }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace stabkit

#endif  // STABKIT_GAUSS_RATIONAL_HPP
