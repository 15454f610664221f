#pragma once

#include <nlohmann/json.hpp>

#include "sdlab/poly/parser.hpp"
#include "sdlab/simplex/maps.hpp"

namespace sdlab::simplex {

/// {"source_dim", "target_dim", "matrix": [[poly-text, ...], ...]} with rows
/// of the barycentric matrix.
nlohmann::ordered_json to_json(const AffineSimplexMap& map);
AffineSimplexMap map_from_json(const nlohmann::ordered_json& j, const poly::VariableDeclaration& decl,
                               const CoefficientMode& mode = CoefficientMode::rational());

}  // namespace sdlab::simplex
