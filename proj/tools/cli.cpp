#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "contour.hpp"
#include "io.hpp"
#include "stabkit/pencils.hpp"
#include "stabkit/preservers.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/weyl.hpp"

namespace stabkit::cli {

namespace {

using io::Json;

struct Outcome {
  Outcome(Json r, int c = kPass, std::optional<std::string> t = std::nullopt)
      : result(std::move(r)), code(c), text(std::move(t)) {}
  Json result;
  int code;
  /// Replaces the JSON envelope for csv and svg output.
  std::optional<std::string> text;
};

struct Globals {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  long denominator_bound = 64;
  std::string out;
  std::string format = "json";
};

int verdict_code(bool passed) { return passed ? kPass : kRefuted; }

std::size_t default_trials() {
  const char* env = std::getenv("STABKIT_TRIALS");
  if (env == nullptr || *env == '\0') return 200;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || v == 0) throw io::InputError("STABKIT_TRIALS must be a positive integer");
  return static_cast<std::size_t>(v);
}

StabilityClass class_flag(const std::string& text) {
  try {
    return parse_stability_class(text);
  } catch (const std::invalid_argument&) {
    throw io::InputError("--class: expected one of HC, HR, HCs, HRs");
  }
}

std::vector<Rational> rational_list(const std::vector<std::string>& items, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& s : items) {
    try {
      out.push_back(parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw io::InputError(flag + ": " + e.what());
    }
  }
  return out;
}

MultiPoly load_poly(const std::string& path) { return io::poly_from_json(io::load_file(path), path); }
WeylOp load_op(const std::string& path) { return io::op_from_json(io::load_file(path), path); }
GaussianMatrix load_matrix(const std::string& path) { return io::matrix_from_json(io::load_file(path), path); }

Json verdict_result(const MultiPoly& f, const StabilityVerdict& v) {
  return Json{{"polynomial", io::to_json(f)},
              {"zero", v.status == VerdictStatus::ProvenZero},
              {"verdict", io::to_json(v)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for stable polynomials and stability preservers", "stabkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  Globals g;
  app.add_option("--trials", g.trials, "Sampled lines per check (default 200, or STABKIT_TRIALS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Sampler seed");
  app.add_option("--denominator-bound", g.denominator_bound, "Largest denominator of sampled rationals")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));

  SampleConfig cfg;
  std::vector<std::pair<CLI::App*, std::function<Outcome()>>> commands;
  auto command = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  std::string file, file2, file3, cls = "HC";
  std::vector<std::string> files, list;
  std::size_t index = 0, index2 = 0;
  std::string window = "-3,3,-3,3", alpha = "1", bfile;
  unsigned resolution = 60;
  bool no_pullback = false;

  {
    auto* c = command("check-stable", "Decide or sample membership of a polynomial in a stability class");
    c->add_option("file", file, "Polynomial JSON")->required();
    c->add_option("--class", cls, "HC, HR, HCs or HRs");
    commands.emplace_back(c, [&] {
      const MultiPoly f = load_poly(file);
      const StabilityVerdict v = check_stable(f, class_flag(cls), cfg);
      return Outcome{verdict_result(f, v), verdict_code(v.passed())};
    });
  }
  {
    auto* c = command("check-strict", "Strict stability (no zeros with all imaginary parts >= 0)");
    c->add_option("file", file, "Polynomial JSON")->required();
    c->add_option("--class", cls, "HCs or HRs (HC and HR are read as their strict forms)");
    commands.emplace_back(c, [&] {
      const MultiPoly f = load_poly(file);
      const StabilityVerdict v = check_strictly_stable(f, cfg, is_real_class(class_flag(cls)));
      return Outcome{verdict_result(f, v), verdict_code(v.passed())};
    });
  }
  {
    auto* c = command("certify-preserver", "Symbol test for a linear stability preserver");
    c->add_option("file", file, "Operator JSON")->required();
    c->add_option("--class", cls, "HC or HR");
    c->add_flag("--no-pullback", no_pullback, "Skip the search for a refuted image");
    commands.emplace_back(c, [&] {
      const WeylOp T = load_op(file);
      PreserverOptions opts;
      opts.attempt_pullback = !no_pullback;
      const PreserverVerdict v = certify_preserver(T, class_flag(cls), cfg, {}, opts);
      return Outcome{Json{{"operator", io::to_json(T)}, {"preserver", io::to_json(v)}}, verdict_code(v.passed())};
    });
  }
  {
    auto* c = command("adjoint", "Formal adjoint (z and D exchanged)");
    c->add_option("file", file, "Operator JSON")->required();
    commands.emplace_back(c, [&] { return Outcome{Json{{"operator", io::to_json(adjoint(load_op(file)))}}}; });
  }
  {
    auto* c = command("compose", "Normal-ordered product OP1 OP2 (OP2 applied first)");
    c->add_option("op1", file, "Operator JSON")->required();
    c->add_option("op2", file2, "Operator JSON")->required();
    commands.emplace_back(c, [&] {
      return Outcome{Json{{"operator", io::to_json(compose(load_op(file), load_op(file2)))}}};
    });
  }
  {
    auto* c = command("weyl-product", "Star product of two symbols in 2n variables");
    c->add_option("f", file, "Polynomial JSON")->required();
    c->add_option("g", file2, "Polynomial JSON")->required();
    commands.emplace_back(c, [&] {
      return Outcome{Json{{"polynomial", io::to_json(star_product(load_poly(file), load_poly(file2)))}}};
    });
  }
  {
    auto* c = command("multiplier-check", "Structure of a multiplier sequence on a box");
    c->add_option("file", file, "Multiplier JSON")->required();
    commands.emplace_back(c, [&] {
      const MultiplierData m = io::multiplier_from_json(io::load_file(file), file);
      const MultiplierReport r = multiplier_structure_check(m);
      return Outcome{Json{{"operator", io::to_json(diag_from_sequence(m))}, {"report", io::to_json(r)}},
                     verdict_code(r.passed())};
    });
  }
  {
    auto* c = command("finite-multiplier", "Certify a diagonal operator as a finite multiplier sequence");
    c->add_option("file", file, "Operator JSON")->required();
    commands.emplace_back(c, [&] {
      const FiniteMultiplierReport r = finite_multiplier_certify(load_op(file));
      return Outcome{Json{{"report", io::to_json(r)}}, verdict_code(r.certified())};
    });
  }
  {
    auto* c = command("schur-compose", "Composition of a univariate f with a stable F in one variable");
    c->add_option("f", file, "Univariate polynomial JSON")->required();
    c->add_option("F", file2, "Polynomial JSON")->required();
    c->add_option("--var", index, "0-based variable of F");
    commands.emplace_back(c, [&] {
      const CompositionReport r = schur_composition(io::uni_from_json(io::load_file(file), file), load_poly(file2),
                                                    index, cfg);
      return Outcome{verdict_result(r.result, r.verdict), verdict_code(r.verdict.passed())};
    });
  }
  {
    auto* c = command("polya-curve", "G(x, y) = sum b_k x^k f^(k)(y) and its intersection property");
    c->add_option("f", file, "Univariate polynomial JSON")->required();
    c->add_option("--b", list, "b_0 ... b_n as rationals")->required()->delimiter(',');
    commands.emplace_back(c, [&] {
      const std::vector<Rational> b = rational_list(list, "--b");
      const PolyaReport r = polya_curve(b, io::uni_from_json(io::load_file(file), file), cfg);
      Json pts = Json::array();
      for (const auto& [x, y] : r.intersection.points) pts.push_back(Json::array({io::to_json(x), io::to_json(y)}));
      return Outcome{Json{{"polynomial", io::to_json(r.G)},
                          {"verdict", io::to_json(r.intersection.verdict)},
                          {"points", std::move(pts)}},
                     verdict_code(r.intersection.verdict.passed())};
    });
  }
  {
    auto* c = command("pencil-expand", "det(z_1 A_1 + ... + z_n A_n + B) for PSD A_i and Hermitian B");
    c->add_option("matrices", files, "A_1 ... A_n as matrix JSON")->required();
    c->add_option("--b", bfile, "B as matrix JSON (zero when omitted)");
    commands.emplace_back(c, [&] {
      std::vector<GaussianMatrix> As;
      for (const auto& p : files) As.push_back(load_matrix(p));
      const GaussianMatrix B = bfile.empty() ? GaussianMatrix(As.front().order()) : load_matrix(bfile);
      const PencilResult r = pencil_polynomial(As, B);
      return Outcome{verdict_result(r.poly, r.verdict), verdict_code(r.verdict.passed())};
    });
  }
  {
    auto* c = command("cp-check", "Cauchy-Poincare interlacing for a Hermitian matrix");
    c->add_option("matrix", file, "Matrix JSON")->required();
    c->add_option("--index", index, "0-based index j")->required();
    commands.emplace_back(c, [&] {
      const CauchyPoincareReport r = cauchy_poincare_check(load_matrix(file), index, cfg);
      return Outcome{Json{{"report", io::to_json(r)}}, verdict_code(r.passed())};
    });
  }
  {
    auto* c = command("cd-verify", "Christoffel-Darboux identity for the (i, j) minor");
    c->add_option("matrix", file, "Matrix JSON")->required();
    c->add_option("--i", index, "0-based row")->required();
    c->add_option("--j", index2, "0-based column")->required();
    commands.emplace_back(c, [&] {
      const bool ok = christoffel_darboux_verify(load_matrix(file), index, index2);
      return Outcome{Json{{"identity_holds", ok}}, verdict_code(ok)};
    });
  }
  {
    auto* c = command("garding-check", "Real zeros of the homogenization along positive directions");
    c->add_option("file", file, "Polynomial JSON")->required();
    commands.emplace_back(c, [&] {
      const MultiPoly f = load_poly(file);
      const StabilityVerdict v = garding_direction_check(f, cfg);
      return Outcome{verdict_result(f, v), verdict_code(v.passed())};
    });
  }
  {
    auto* c = command("lax-verify", "alpha det(xA + yB + C) for PSD A, B and real symmetric C");
    c->add_option("a", file, "Matrix JSON")->required();
    c->add_option("b", file2, "Matrix JSON")->required();
    c->add_option("c", file3, "Matrix JSON")->required();
    c->add_option("--alpha", alpha, "Nonzero rational scale");
    commands.emplace_back(c, [&] {
      const Rational a = rational_list({alpha}, "--alpha").front();
      const LaxReport r = lax_verify(load_matrix(file), load_matrix(file2), load_matrix(file3), a, cfg);
      return Outcome{Json{{"report", io::to_json(r)}}, verdict_code(r.verdict.passed() && r.coefficient_claim_ok)};
    });
  }
  {
    auto* c = command("symbol-curve", "Real zero set of the symbol of a one-variable operator");
    c->add_option("file", file, "Operator JSON")->required();
    c->add_option("--window", window, "z_lo,z_hi,w_lo,w_hi");
    c->add_option("--resolution", resolution, "Grid cells per side")->check(CLI::Range(1u, 2000u));
    commands.emplace_back(c, [&] {
      const WeylOp T = load_op(file);
      if (T.nvars() != 1) throw io::InputError(file + ": symbol-curve needs an operator in one variable");
      contour::Window w;
      try {
        w = contour::parse_window(window);
      } catch (const std::invalid_argument& e) {
        throw io::InputError(std::string("--window: ") + e.what());
      }
      const contour::Contour curve = contour::extract(symbol(T), w, resolution);
      if (g.format == "csv") return Outcome{Json(), kPass, contour::to_csv(curve)};
      if (g.format == "svg") return Outcome{Json(), kPass, contour::to_svg(curve, w)};
      Json pts = Json::array(), lines = Json::array();
      for (const auto& [z, x] : curve.points) pts.push_back(Json::array({io::to_json(z), io::to_json(x)}));
      for (const auto& l : curve.polylines) lines.push_back(l);
      return Outcome{Json{{"symbol", io::to_json(symbol(T))},
                          {"window", Json::array({io::to_json(w.z_lo), io::to_json(w.z_hi), io::to_json(w.w_lo),
                                                  io::to_json(w.w_hi)})},
                          {"resolution", resolution},
                          {"points", std::move(pts)},
                          {"polylines", std::move(lines)}}};
    });
  }

  std::vector<const char*> argv{"stabkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (app.count("--trials") == 0) g.trials = default_trials();
    cfg.trials = g.trials;
    cfg.seed = g.seed;
    cfg.denominator_bound = g.denominator_bound;

    for (auto& [sub, action] : commands) {
      if (!sub->parsed()) continue;
      if (g.format != "json" && sub->get_name() != "symbol-curve") {
        throw io::InputError("--format " + g.format + " is only available for symbol-curve");
      }
      const Outcome o = action();
      std::string text;
      if (o.text) {
        text = *o.text;
      } else {
        const Json envelope{{"tool", kToolVersion},
                            {"command", sub->get_name()},
                            {"seed", g.seed},
                            {"trials", g.trials},
                            {"denominator_bound", g.denominator_bound},
                            {"result", o.result}};
        text = envelope.dump(2) + "\n";
      }
      if (g.out.empty()) {
        out << text;
      } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw io::InputError(g.out + ": cannot write output");
        f << text;
      }
      return o.code;
    }
  } catch (const io::InputError& e) {
    err << "stabkit: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "stabkit: invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "stabkit: hypothesis not met: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace stabkit::cli
