#include "io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace stabkit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Exponent exponent_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) fail(where, "expected an array of " + std::to_string(n) + " exponents");
  Exponent e(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = count_from_json(j[k], where + "/" + std::to_string(k));
    if (v > std::numeric_limits<std::uint32_t>::max()) fail(where, "exponent too large");
    e[k] = static_cast<std::uint32_t>(v);
  }
  return e;
}

GaussRat coeff_from_fields(const Json& t, const std::string& where) {
  Rational re = 0, im = 0;
  if (auto it = t.find("re"); it != t.end()) re = rational_from_json(*it, where + "/re");
  if (auto it = t.find("im"); it != t.end()) im = rational_from_json(*it, where + "/im");
  return GaussRat(re, im);
}

Json ints(const Exponent& e) {
  Json a = Json::array();
  for (auto x : e) a.push_back(x);
  return a;
}

Json rationals(std::span<const Rational> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // the library message already carries "at line L, column C"
    throw InputError(origin + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const GaussRat& c) { return Json{{"re", to_json(c.re)}, {"im", to_json(c.im)}}; }

MultiPoly poly_from_json(const Json& j, const std::string& where) {
  const std::size_t n = count_from_json(member(j, "nvars", where), where + "/nvars");
  const Json& terms = member(j, "terms", where);
  if (!terms.is_array()) fail(where + "/terms", "expected an array");
  MultiPoly p(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = where + "/terms/" + std::to_string(k);
    const Exponent e = exponent_from_json(member(terms[k], "exp", at), n, at + "/exp");
    p.add_term(e, coeff_from_fields(terms[k], at));
  }
  return p;
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t{{"exp", ints(e)}};
    t.update(to_json(c));
    terms.push_back(std::move(t));
  }
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

UniPoly uni_from_json(const Json& j, const std::string& where) {
  const MultiPoly p = poly_from_json(j, where);
  if (p.nvars() != 1) fail(where, "expected a polynomial in one variable");
  std::vector<GaussRat> c(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UniPoly(std::move(c));
}

Json to_json(const UniPoly& p) {
  MultiPoly m(1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) m.add_term({static_cast<std::uint32_t>(k)}, p.coeffs()[k]);
  return to_json(m);
}

WeylOp op_from_json(const Json& j, const std::string& where) {
  const std::size_t n = count_from_json(member(j, "nvars", where), where + "/nvars");
  const Json& terms = member(j, "terms", where);
  if (!terms.is_array()) fail(where + "/terms", "expected an array");
  WeylOp T(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = where + "/terms/" + std::to_string(k);
    const Exponent a = exponent_from_json(member(terms[k], "zexp", at), n, at + "/zexp");
    const Exponent b = exponent_from_json(member(terms[k], "dexp", at), n, at + "/dexp");
    T.add_term(a, b, coeff_from_fields(terms[k], at));
  }
  return T;
}

Json to_json(const WeylOp& T) {
  Json terms = Json::array();
  for (const auto& t : T.terms()) {
    Json o{{"zexp", ints(t.zexp)}, {"dexp", ints(t.dexp)}};
    o.update(to_json(t.coeff));
    terms.push_back(std::move(o));
  }
  return Json{{"nvars", T.nvars()}, {"terms", std::move(terms)}};
}

GaussianMatrix matrix_from_json(const Json& j, const std::string& where) {
  const std::size_t d = count_from_json(member(j, "order", where), where + "/order");
  if (d == 0) fail(where + "/order", "order must be positive");
  const Json& entries = member(j, "entries", where);
  if (!entries.is_array() || entries.size() != d * d) {
    fail(where + "/entries", "expected " + std::to_string(d * d) + " entries");
  }
  std::vector<GaussRat> e;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string at = where + "/entries/" + std::to_string(k);
    if (entries[k].is_object()) {
      e.push_back(coeff_from_fields(entries[k], at));
    } else {
      e.emplace_back(rational_from_json(entries[k], at));
    }
  }
  return GaussianMatrix(d, std::move(e));
}

Json to_json(const GaussianMatrix& A) {
  Json entries = Json::array();
  for (const auto& x : A.entries()) entries.push_back(x.is_real() ? to_json(x.re) : to_json(x));
  return Json{{"order", A.order()}, {"entries", std::move(entries)}};
}

MultiplierData multiplier_from_json(const Json& j, const std::string& where) {
  const Json& ext = member(j, "extents", where);
  if (!ext.is_array() || ext.empty()) fail(where + "/extents", "expected a nonempty array");
  std::vector<std::size_t> extents;
  for (std::size_t k = 0; k < ext.size(); ++k) {
    const std::size_t e = count_from_json(ext[k], where + "/extents/" + std::to_string(k));
    if (e == 0) fail(where + "/extents/" + std::to_string(k), "extent must be positive");
    extents.push_back(e);
  }
  MultiplierData m(extents);
  const Json& values = member(j, "values", where);
  if (!values.is_array() || values.size() != m.size()) {
    fail(where + "/values", "expected " + std::to_string(m.size()) + " values");
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    m.values[k] = rational_from_json(values[k], where + "/values/" + std::to_string(k));
  }
  return m;
}

Json to_json(const MultiplierData& m) {
  Json ext = Json::array();
  for (auto e : m.extents) ext.push_back(e);
  return Json{{"extents", std::move(ext)}, {"values", rationals(m.values)}};
}

Json to_json(const Line& l) { return Json{{"alpha", rationals(l.alpha)}, {"v", rationals(l.v)}}; }

Json to_json(const StabilityVerdict& v) {
  Json out{{"status", to_string(v.status)},
           {"class", to_string(v.cls)},
           {"certificate", v.certificate ? Json(to_string(*v.certificate)) : Json(nullptr)},
           {"trials", v.trials},
           {"exact", v.exact()}};
  if (v.refutation) {
    const auto& r = *v.refutation;
    out["refutation"] = Json{{"kind", to_string(r.kind)},
                             {"trial", r.trial},
                             {"line", r.line ? to_json(*r.line) : Json(nullptr)},
                             {"restriction", to_json(r.restriction)}};
  } else {
    out["refutation"] = nullptr;
  }
  return out;
}

Json to_json(const PreserverVerdict& v) {
  Json out{{"passed", v.passed()},
           {"path", to_string(v.path)},
           {"tested_symbol", to_json(v.tested_symbol)},
           {"verdict", to_json(v.inner)},
           {"pullback", to_string(v.pullback)}};
  if (v.refutation) {
    out["counterexample"] = Json{{"input", to_json(v.refutation->input)},
                                 {"image", to_json(v.refutation->image)},
                                 {"image_verdict", to_json(v.refutation->image_verdict)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json to_json(const MultiplierReport& r) {
  Json out{{"passed", r.passed()},
           {"rank1_relations_ok", r.rank1_relations_ok},
           {"support_is_box", r.support_is_box},
           {"sign_pattern", to_string(r.sign_pattern)},
           {"univariate_slices_ok", r.univariate_slices_ok}};
  if (r.factor_decomposition) {
    Json f = Json::array();
    for (const auto& seq : *r.factor_decomposition) f.push_back(rationals(seq));
    out["factors"] = std::move(f);
  } else {
    out["factors"] = nullptr;
  }
  return out;
}

Json to_json(const FiniteMultiplierReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(f));
  return Json{{"certified", r.certified()},
              {"rank_one", r.rank_one},
              {"factors", std::move(factors)},
              {"factors_nonpositive_rooted", r.factors_nonpositive_rooted}};
}

Json to_json(const CauchyPoincareReport& r) {
  return Json{{"passed", r.passed()},
              {"derivative_identity", r.derivative_identity},
              {"proper_position", to_json(r.proper_position)},
              {"eigenvalues_interlace", r.eigenvalues_interlace}};
}

Json to_json(const LaxReport& r) {
  return Json{{"passed", r.verdict.passed() && r.coefficient_claim_ok},
              {"polynomial", to_json(r.poly)},
              {"verdict", to_json(r.verdict)},
              {"coefficient_claim_ok", r.coefficient_claim_ok},
              {"a_plus_b_identity", r.a_plus_b_identity}};
}

}  // namespace stabkit::io
