#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdlab/lab/census.hpp"
#include "sdlab/relcheck/degrees.hpp"
#include "sdlab/relcheck/relations.hpp"
#include "sdlab/shell/complex.hpp"
#include "sdlab/shell/telescoping.hpp"

namespace sdlab::io {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Reduced "a/b" (or "a" when b divides a); "0" for an empty denominator.
std::string fraction(std::uint64_t numerator, std::uint64_t denominator);

Json to_json(const relcheck::RelationInstance& r);
Json to_json(const relcheck::RelationReport& r);
Json to_json(const relcheck::ChartRecord& r);
Json to_json(const relcheck::DegreeReport& r);

Json to_json(const shell::HomologyGroup& h);
Json to_json(const shell::FormalMapSum& sum);
Json to_json(const shell::SignConvention& c);
Json to_json(const shell::TelescopingReport& r);

Json to_json(const lab::DimensionEstimate& d);
Json to_json(const lab::FaceConditionReport& r);
Json to_json(const lab::EquidimReport& r);
Json to_json(const lab::BadCenterReport& r);
Json to_json(const lab::VanishingReport& r, std::uint32_t q, int N);
Json to_json(const lab::HomotopyFaceReport& r);

/// Pretty-printed with a trailing newline; key order is insertion order, so
/// identical inputs give identical bytes.
std::string dump(const Json& j);

}  // namespace sdlab::io
