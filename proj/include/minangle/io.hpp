#pragma once

#include <string>

#include <json.hpp>

#include "minangle/grassmann.hpp"
#include "minangle/maps.hpp"

namespace minangle {

/// Matrix wire format, used repo-wide:
///   {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}
/// with row-major nested arrays. Parsing rejects shape mismatches and
/// non-finite entries.
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

/// Subspace wire format: {"ambient_dim": d, "basis": <matrix>}.
nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j, const Tolerance& tol = {});

nlohmann::json isometry_to_json(const IsometryMap& u);
IsometryMap isometry_from_json(const nlohmann::json& j, const Tolerance& tol = {});

/// Map wire format:
///   {"kind": ..., "n": n, "d": d, "isometry": {...}, "pairs": [[s, t], ...]}
/// The nonstandard_demo kind serializes its selector by name; only the
/// built-in selectors round-trip.
nlohmann::json map_to_json(const GrassmannMap& map);
GrassmannMap map_from_json(const nlohmann::json& j, const Tolerance& tol = {});

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace minangle
