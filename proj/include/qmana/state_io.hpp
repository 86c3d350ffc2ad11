#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qmana/state.hpp"

namespace qmana {

// {"dims": [d, ...], "kind": "pure" | "mixed", "data": [[re, im], ...] or rows of pairs}
struct LoadedState {
  std::optional<PureVector> pure;
  DensityState state;
};

nlohmann::json to_json(const PureVector& psi, const std::vector<int>& dims);
nlohmann::json to_json(const DensityState& rho);

LoadedState state_from_json(const nlohmann::json& j);
LoadedState load_state_file(const std::string& path);

}  // namespace qmana
