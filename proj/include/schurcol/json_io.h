#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "schurcol/colligation.h"
#include "schurcol/hessenberg.h"
#include "schurcol/rational.h"
#include "schurcol/redheffer.h"
#include "schurcol/schur_state.h"

namespace schurcol::io {

using Json = nlohmann::ordered_json;

/// Parse errors and malformed documents raise Error(kInvalidInput).
Json parse(std::string_view text);

/// Compact, deterministic rendering: object keys in insertion order, floating
/// point with 17 significant digits, non-finite numbers as null. Ends with a
/// newline.
std::string dump(const Json& value);

// Complex numbers are [re, im]. A bare real number is accepted on input.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const Matrix& m);  // row-major nested [re, im]
Matrix matrix_from_json(const Json& j);

std::vector<Complex> complex_list_from_json(const Json& j);

Json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const Json& j);  // "c" defaults to 1

Json to_json(const RationalInner& s);
RationalInner rational_from_json(const Json& j);

Json to_json(const SchurParameterSequence& p);
SchurParameterSequence params_from_json(const Json& j);

Json to_json(const UnitaryColligation& col);
/// {"n", "matrix"}; "n" is optional but must match when present.
Matrix colligation_matrix_from_json(const Json& j);
UnitaryColligation colligation_from_json(const Json& j);

Json to_json(const PartitionedColligation& col);
/// Also accepts {"section": s0} for the elementary Schur section.
PartitionedColligation partitioned_from_json(const Json& j);

Json to_json(const HessenbergCertificate& cert);
Json to_json(const SchurStateTrace& trace);

}  // namespace schurcol::io
