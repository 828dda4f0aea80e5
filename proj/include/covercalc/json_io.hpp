#pragma once

#include <string>

#include <json.hpp>

#include "covercalc/int_matrix.hpp"
#include "covercalc/poly.hpp"

namespace covercalc {

using Json = nlohmann::ordered_json;

/// BigInt as a JSON number when it fits in int64, decimal string otherwise.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

/// Matrix wire format: array of arrays of integers.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);
IntMatrix matrix_from_file(const std::string& path);

/// Polynomial as ascending coefficient array plus display string.
Json poly_to_json(const IntPoly& p);

std::vector<BigInt> parse_int_csv(const std::string& csv);

}  // namespace covercalc
