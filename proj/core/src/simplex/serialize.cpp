#include "sdlab/simplex/serialize.hpp"

#include <stdexcept>

namespace sdlab::simplex {

nlohmann::ordered_json to_json(const AffineSimplexMap& map) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const auto& m = map.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"source_dim", map.source_dim()}, {"target_dim", map.target_dim()}, {"matrix", std::move(rows)}};
}

AffineSimplexMap map_from_json(const nlohmann::ordered_json& j, const poly::VariableDeclaration& decl,
                               const CoefficientMode& mode) {
  const int p = j.at("source_dim").get<int>();
  const int q = j.at("target_dim").get<int>();
  const auto& rows = j.at("matrix");
  if (p < 0 || q < 0 || rows.size() != static_cast<std::size_t>(q + 1)) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix m(static_cast<std::size_t>(q + 1), static_cast<std::size_t>(p + 1), mode);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(p + 1)) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = poly::parse_poly(rows[r][c].get<std::string>(), decl, mode);
  }
  return AffineSimplexMap(std::move(m));
}

}  // namespace sdlab::simplex
