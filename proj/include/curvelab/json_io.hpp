#ifndef CURVELAB_JSON_IO_HPP
#define CURVELAB_JSON_IO_HPP

#include <json.hpp>

#include "curvelab/acm.hpp"
#include "curvelab/bresinsky.hpp"
#include "curvelab/groebner.hpp"
#include "curvelab/monomial.hpp"

namespace curvelab {

using Json = nlohmann::json;

// Objects are emitted with keys in sorted order and integers only, so
// parse(dump(x)).dump() == dump(x).

Json json_of(const Monomial& m);                // {"exponents": [...]}
Json json_of(const MonomialOrder& ord);         // {"kind": "degrevlex", "priority": [...]}
Json json_of(const Binomial& b);                // {"lead": ..., "trail": ...}
Json json_of(const BinomialBasis& basis);       // {"order": ..., "elements": [...]}
Json json_of(const BresinskyData& d);           // the eight base parameters
Json json_of(const DegreeVector& a);
Json json_of(const Condition& c);               // {"name", "value", "pass"}

struct ReportDetail {
  /// Include the reduced basis computed by the Gröbner oracle.
  bool reduced_basis = false;
};
Json json_of(const AcmReport& r, const ReportDetail& detail = {});

Monomial monomial_from_json(const Json& j);
MonomialOrder order_from_json(const Json& j);
Binomial binomial_from_json(const Json& j, const MonomialOrder& ord);
BinomialBasis basis_from_json(const Json& j);
BresinskyData bresinsky_from_json(const Json& j);

}  // namespace curvelab

#endif  // CURVELAB_JSON_IO_HPP
