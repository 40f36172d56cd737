#pragma once

// JSON forms of expansions and reports. Keys keep insertion order and terms
// follow canonical key order, so equal values serialize to equal bytes.

#include <json.hpp>

#include "rbnc/ncsym.hpp"
#include "rbnc/verify.hpp"

namespace rbnc {

using Json = nlohmann::ordered_json;

/// {"degree": n, "basis": "p", "terms": [{"blocks": "1/2", "coeff": "1"}]}
Json to_json(const NCSymElement& x);
/// Throws ParseError on malformed input.
NCSymElement ncsym_from_json(const Json& j);

/// {"degree": n, "basis": "m", "commutative": true, "terms": [{"partition": [2,1], "coeff": "2"}]}
Json to_json(const CSymElement& x);
CSymElement csym_from_json(const Json& j);

/// {"check": ..., "status": "pass"|"fail"|"skipped", "witness"?: ..., "reason"?: ...}
Json to_json(const VerificationReport& report);

}  // namespace rbnc
