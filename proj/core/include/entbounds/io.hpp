#pragma once

#include <optional>
#include <string>

#include "entbounds/state.hpp"

namespace entbounds {

// State files are JSON:
//   {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}   row-major
// or, for pure states,
//   {"dims": [dA, dB], "vector": [[re, im], ...]}
// "dims" may also be a single integer when no split is meant (dB = 1).
struct StateFile {
    QuantumState state;
    BipartiteSplit split;
    std::optional<PureState> vector;  // set when the file carried a "vector"
};

StateFile load_state(const std::string& path);

void save_state(const QuantumState& state, const BipartiteSplit& split,
                const std::string& path);
void save_state(const PureState& psi, const BipartiteSplit& split,
                const std::string& path);

}  // namespace entbounds
