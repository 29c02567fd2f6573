#pragma once

#include "gendo/invariants.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace gendo {

inline constexpr int kSchemaVersion = 1;

/// {schema_version, name, field, basis, mult, unit, idempotents,
/// radical_generators}; mult[i][j] is the coordinate vector of b_i b_j.
nlohmann::json algebra_to_json(const BasedAlgebra& a);
/// Throws InvalidInput on malformed JSON, then the usual validation errors.
AlgebraPtr algebra_from_json(const nlohmann::json& j);

/// {schema_version, algebra_ref, dim, action}; action[b] is the dim x dim
/// matrix of basis element b (rows), column convention.
nlohmann::json module_to_json(const RightModule& m);
RightModule module_from_json(const AlgebraPtr& a, const nlohmann::json& j);

/// An unknown value records at_least and the cutoff it was computed under.
nlohmann::json dim_to_json(const HomologicalDim& d, std::size_t cutoff);
nlohmann::json verdict_to_json(const GpVerdict& v);

/// Module expressions over a:
///   A, DA, P<v>, I<v>, S<v>, (i,k) or [i,k] (needs a series), M(u,v) (local
///   algebra with generators x, y; u, v are field element codes), and the
///   prefix operators rad<k>(..), syz<k>(..), cosyz<k>(..), tau(..) and
///   tauinv(..). Throws InvalidInput.
RightModule parse_module_spec(const AlgebraPtr& a, const std::string& spec,
                              const std::optional<KupischSeries>& series = std::nullopt);

/// "4,5,5" -> {4, 5, 5}; throws InvalidInput.
std::vector<std::size_t> parse_series(const std::string& text);

/// Reads a whole file; throws InvalidInput.
std::string read_file(const std::string& path);

}  // namespace gendo
