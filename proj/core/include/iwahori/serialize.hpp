#pragma once

// JSON forms of the library's values.
//
//   LaurentPoly   [[exponent, coefficient], ...] in ascending exponent order
//   HeckeElt      [{"word": "sigma,1,2", "coeff": <LaurentPoly>}, ...]
//   Report        {"algebra", "n", "checks": [{"kind", "indices", "pass", "witness"?}]}
//
// Integers that fit in 64 bits are JSON numbers, larger ones are decimal
// strings.  Rationals are numbers when integral and "p/q" strings otherwise.

#include <nlohmann/json.hpp>

#include "iwahori/hecke.hpp"
#include "iwahori/laurent.hpp"
#include "iwahori/plancherel.hpp"
#include "iwahori/presentations.hpp"
#include "iwahori/specdims.hpp"

namespace iwahori {

using Json = nlohmann::json;

Json to_json(const BigInt& value);
Json to_json(const BigRational& value);
Json to_json(const LaurentPoly& p);
Json to_json(const RationalLaurent& p);
Json to_json(const HeckeElt& h);
Json to_json(const Check& check);
Json to_json(const Report& report);
Json to_json(const PoincareSeries& series);
Json to_json(const FormalDegree& fd);
Json to_json(const FdComparison& comparison);
Json to_json(const CosetSeriesCheck& check);
Json to_json(const SubalgebraDatum<RationalLaurent>& datum);
Json to_json(const SubalgebraDatum<BigRational>& datum);

BigInt big_int_from_json(const Json& j);
BigRational big_rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
/// Rebuilds an element of the given algebra.  Throws InvalidArgument on
/// malformed input or words outside the algebra.
HeckeElt hecke_from_json(const AlgebraPtr& algebra, const Json& j);
Report report_from_json(const Json& j);

}  // namespace iwahori
