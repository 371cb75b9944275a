#include "stabkit/gauss_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace stabkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw std::invalid_argument("zero denominator in rational: \"" + std::string(text) + "\"");
  }
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Rational q(canonical, 10);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

int sign(const Rational& q) { return sgn(q); }

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im) == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  const Rational n = o.norm();
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussRat& z) {
  if (z.is_real()) return format_rational(z.re);
  if (sgn(z.re) == 0) return format_rational(z.im) + "i";
  std::string out = "(" + format_rational(z.re);
  out += sgn(z.im) < 0 ? "-" : "+";
  out += format_rational(abs(z.im)) + "i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace stabkit
