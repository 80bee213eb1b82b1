#pragma once

#include <string>

#include <json.hpp>

#include "wtits/utits.hpp"

namespace wtits {

/// "sl3" (alpha1 = e2-e3, alpha2 = e1-e2), "sl<n>" for n >= 2 (generic block labeling), "so24".
GroupPreset load_preset(const std::string& name);

GroupPreset make_sl3();
GroupPreset make_sln(std::size_t n);
GroupPreset make_so24();

/// Custom group from the config schema
///   {n, generators, c_generators, simple_roots, a_basis, multiplicities}.
/// Rationals are integers or {"num": p, "den": q}; a_basis is "diagonal" or a
/// list of n x n integer matrices. Throws ParseError on malformed input; the
/// group invariants are checked when the preset is handed to TitsGroup.
GroupPreset preset_from_json(const nlohmann::json& config);

}  // namespace wtits
