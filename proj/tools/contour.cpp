#include "contour.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stabkit::contour {

namespace {

std::string decimal(const Rational& q) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

std::string pixel(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

Window parse_window(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) throw std::invalid_argument("window needs four values z_lo,z_hi,w_lo,w_hi");
  if (v[0] >= v[1] || v[2] >= v[3]) throw std::invalid_argument("window bounds must be increasing");
  return {v[0], v[1], v[2], v[3]};
}

Contour extract(const MultiPoly& F, const Window& win, unsigned resolution) {
  if (F.nvars() != 2 || !F.is_real()) throw std::invalid_argument("contour needs a real polynomial in two variables");
  if (resolution == 0) throw std::invalid_argument("resolution must be positive");
  const std::size_t N = resolution;
  std::vector<Rational> xs(N + 1), ys(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    xs[k] = win.z_lo + (win.z_hi - win.z_lo) * Rational(static_cast<long>(k), static_cast<long>(N));
    ys[k] = win.w_lo + (win.w_hi - win.w_lo) * Rational(static_cast<long>(k), static_cast<long>(N));
    xs[k].canonicalize();
    ys[k].canonicalize();
  }
  std::vector<Rational> val((N + 1) * (N + 1));
  auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return val[i * (N + 1) + j]; };
  for (std::size_t i = 0; i <= N; ++i) {
    for (std::size_t j = 0; j <= N; ++j) {
      const GaussRat p[2] = {GaussRat(xs[i]), GaussRat(ys[j])};
      val[i * (N + 1) + j] = F.evaluate(p).re;
    }
  }

  Contour out;
  // keyed by coordinates so a zero at a grid node is a single point
  std::map<std::pair<Rational, Rational>, std::size_t> index_of;
  auto crossing = [&](std::size_t i, std::size_t j, bool vertical) -> std::size_t {
    const std::size_t i2 = vertical ? i : i + 1, j2 = vertical ? j + 1 : j;
    const Rational& a = at(i, j);
    const Rational& b = at(i2, j2);
    Rational t = a / (a - b);
    t.canonicalize();
    Rational z = xs[i] + (xs[i2] - xs[i]) * t, w = ys[j] + (ys[j2] - ys[j]) * t;
    z.canonicalize();
    w.canonicalize();
    auto [it, fresh] = index_of.emplace(std::make_pair(z, w), out.points.size());
    if (fresh) out.points.emplace_back(z, w);
    return it->second;
  };

  std::vector<std::array<std::size_t, 2>> segments;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const bool c00 = sgn(at(i, j)) > 0, c10 = sgn(at(i + 1, j)) > 0;
      const bool c11 = sgn(at(i + 1, j + 1)) > 0, c01 = sgn(at(i, j + 1)) > 0;
      std::vector<std::size_t> hits;
      if (c00 != c10) hits.push_back(crossing(i, j, false));      // bottom
      if (c10 != c11) hits.push_back(crossing(i + 1, j, true));   // right
      if (c01 != c11) hits.push_back(crossing(i, j + 1, false));  // top
      if (c00 != c01) hits.push_back(crossing(i, j, true));       // left
      if (hits.size() == 2) {
        if (hits[0] != hits[1]) segments.push_back({hits[0], hits[1]});
      } else if (hits.size() == 4) {
        const Rational centre = at(i, j) + at(i + 1, j) + at(i + 1, j + 1) + at(i, j + 1);
        if ((sgn(centre) > 0) == c00) {
          segments.push_back({hits[0], hits[1]});
          segments.push_back({hits[2], hits[3]});
        } else {
          segments.push_back({hits[3], hits[0]});
          segments.push_back({hits[1], hits[2]});
        }
      }
    }
  }

  for (auto& s : segments) {
    if (s[0] > s[1]) std::swap(s[0], s[1]);
  }
  std::sort(segments.begin(), segments.end());
  segments.erase(std::unique(segments.begin(), segments.end()), segments.end());
  std::vector<std::vector<std::size_t>> adj(out.points.size());
  for (const auto& s : segments) {
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  std::vector<bool> seen(out.points.size(), false);
  auto walk = [&](std::size_t start) {
    std::vector<std::size_t> chain{start};
    seen[start] = true;
    std::size_t prev = start, cur = start;
    for (;;) {
      std::size_t next = cur;
      for (std::size_t nb : adj[cur]) {
        if (!seen[nb]) {
          next = nb;
          break;
        }
        if (nb == start && nb != prev && chain.size() > 2) next = nb;
      }
      if (next == cur) break;
      chain.push_back(next);
      if (next == start) break;
      seen[next] = true;
      prev = cur;
      cur = next;
    }
    out.polylines.push_back(std::move(chain));
  };
  for (std::size_t p = 0; p < adj.size(); ++p) {
    if (!seen[p] && adj[p].size() == 1) walk(p);
  }
  for (std::size_t p = 0; p < adj.size(); ++p) {
    if (!seen[p] && !adj[p].empty()) walk(p);
  }
  return out;
}

std::string to_csv(const Contour& c) {
  std::string s = "curve,z,w\n";
  for (std::size_t k = 0; k < c.polylines.size(); ++k) {
    for (std::size_t p : c.polylines[k]) {
      s += std::to_string(k) + "," + decimal(c.points[p].first) + "," + decimal(c.points[p].second) + "\n";
    }
  }
  return s;
}

std::string to_svg(const Contour& c, const Window& win) {
  constexpr double kSize = 480;
  const double z0 = win.z_lo.get_d(), z1 = win.z_hi.get_d();
  const double w0 = win.w_lo.get_d(), w1 = win.w_hi.get_d();
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  for (const auto& line : c.polylines) {
    s += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < line.size(); ++k) {
      const auto& [z, w] = c.points[line[k]];
      if (k) s += ' ';
      s += pixel((z.get_d() - z0) / (z1 - z0) * kSize) + "," + pixel((w1 - w.get_d()) / (w1 - w0) * kSize);
    }
    s += "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace stabkit::contour
