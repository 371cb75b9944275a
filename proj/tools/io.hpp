// JSON encodings shared by the command-line tool and its tests.
#ifndef STABKIT_TOOLS_IO_HPP
#define STABKIT_TOOLS_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stabkit/matrix.hpp"
#include "stabkit/multi_poly.hpp"
#include "stabkit/pencils.hpp"
#include "stabkit/preservers.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/weyl.hpp"

namespace stabkit::io {

using Json = nlohmann::ordered_json;

/// Malformed or ill-typed input; the message names the file and the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_file(const std::string& path);
Json parse_text(const std::string& text, const std::string& origin);

Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& q);
/// {"re": "p/q", "im": "r/s"}.
Json to_json(const GaussRat& c);

/// {"nvars": n, "terms": [{"exp": [...], "re": ..., "im": ...}]}; "re" and "im" default to "0".
MultiPoly poly_from_json(const Json& j, const std::string& where);
Json to_json(const MultiPoly& p);

/// Polynomial JSON with nvars 1.
UniPoly uni_from_json(const Json& j, const std::string& where);
Json to_json(const UniPoly& p);

/// {"nvars": n, "terms": [{"zexp": [...], "dexp": [...], "re": ..., "im": ...}]}.
WeylOp op_from_json(const Json& j, const std::string& where);
Json to_json(const WeylOp& T);

/// {"order": d, "entries": [...]} row-major; an entry is a rational string or {"re", "im"}.
GaussianMatrix matrix_from_json(const Json& j, const std::string& where);
Json to_json(const GaussianMatrix& A);

/// {"extents": [...], "values": [...]} row-major, last index fastest.
MultiplierData multiplier_from_json(const Json& j, const std::string& where);
Json to_json(const MultiplierData& m);

Json to_json(const Line& l);
Json to_json(const StabilityVerdict& v);
Json to_json(const PreserverVerdict& v);
Json to_json(const MultiplierReport& r);
Json to_json(const FiniteMultiplierReport& r);
Json to_json(const CauchyPoincareReport& r);
Json to_json(const LaxReport& r);

}  // namespace stabkit::io

#endif  // STABKIT_TOOLS_IO_HPP
