#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "subinv/matrix/inversion.hpp"

namespace subinv {

// Matrix documents look like
//   { "ring": "<ring-spec>", "n": 2, "rows": [[1, 2], [3, 4]] }
// with entries in the ring's own encoding: integers for int and zmod,
// [x, y] for dual numbers, nested row arrays for mat:k, [num, den] for frac.

RingMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::ordered_json matrix_to_json(const RingMatrix& m);

/// Parses document text; throws ParseError with a readable message.
RingMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const RingMatrix& m);

RingMatrix load_matrix_file(const std::string& path);

nlohmann::ordered_json fraction_matrix_to_json(const FractionMatrix& m);

}  // namespace subinv
