#pragma once

// JSON forms of the library objects. Scalars are decimal strings "n" or "n/d";
// polynomials are lists of {"exp": [...], "coeff": "n/d"} in descending grlex.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "epw/curves.hpp"
#include "epw/epw.hpp"
#include "epw/errors.hpp"
#include "epw/lagrangian.hpp"
#include "epw/planes.hpp"
#include "epw/poly.hpp"

namespace epw::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json rows_to_json(const Matrix<Rational>& m);
Matrix<Rational> rows_from_json(const Json& j, std::size_t cols);

Json to_json(const QSubspace& s);  // {"basis": rows}
Json to_json(const PlaneFamily& family);
/// Accepts {"ambient", "planes"} or any object wrapping it under "result".
PlaneFamily family_from_json(const Json& j);

/// A Lagrangian with an optional list of known members of Θ_A.
struct LagrangianFile {
    std::optional<LagrangianSubspace> a;
    std::vector<QSubspace> planes;
};
Json to_json(const LagrangianSubspace& a, const std::vector<QSubspace>& planes = {});
LagrangianFile lagrangian_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, std::size_t nvars);

Json to_json(const FamilyReport& r);
Json to_json(const Certificate& c);
Json to_json(const EpwEquation& e);
Json to_json(const CurveEquation& c);
Json to_json(const CurveOracleReport& r);
Json to_json(const SingularityReport& r);
Json to_json(const RoncisvalleReport& r);
Json to_json(const BoundAudit& b);
Json to_json(const Multiplicity& m);

Json error_json(ErrorCode code, const std::string& message);

/// Parse with ParseError on malformed text.
Json parse(const std::string& text);

}  // namespace epw::io
