#pragma once

#include "photondual/duality.hpp"
#include "photondual/evolve.hpp"
#include "photondual/fock.hpp"
#include "photondual/search.hpp"

#include <nlohmann/json.hpp>

namespace photondual {

// PureState:      {"shape": [S, L], "n": N,
//                  "terms": [{"occ": [[...]], "re": x, "im": y}, ...]}
//                 terms in canonical (lexicographic occupation) order.
// Interferometer: {"dim": S, "re": [[...]], "im": [[...]]}, row-major.
// Ports in SearchSpec JSON are 1-based, matching the CLI surface.

nlohmann::json state_to_json(const PureState& state);
PureState state_from_json(const nlohmann::json& j);

nlohmann::json interferometer_to_json(const Interferometer& interferometer);
Interferometer interferometer_from_json(const nlohmann::json& j);

nlohmann::json search_spec_to_json(const SearchSpec& spec);
SearchSpec search_spec_from_json(const nlohmann::json& j);

nlohmann::json search_result_to_json(const SearchResult& result,
                                     const SearchSpec& spec);

nlohmann::json decomposition_to_json(const DualityDecomposition& decomposition);

}  // namespace photondual
