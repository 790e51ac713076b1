#pragma once

#include <map>
#include <optional>
#include <string>

#include "entbounds/decomposition.hpp"
#include "entbounds/state.hpp"

namespace entbounds {

// Observable bounds on squared concurrence plus per-inequality slack values.
struct BoundsReport {
    double lower_sq = 0.0;  // 2 [Tr rho^2 - Tr (rho^A)^2], may be negative
    double upper_sq = 0.0;  // 2 [1 - Tr (rho^A)^2]
    std::optional<double> c_reference;
    std::map<std::string, double> slacks;
    std::map<std::string, bool> pass;

    double lower_sq_clamped() const { return lower_sq > 0.0 ? lower_sq : 0.0; }
    bool all_pass() const;
};

// The three fidelity links evaluated on one pair of bipartite pure states:
// 1 >= G(marginals) >= F(marginals) >= F(joint).
struct ChainReport {
    double g_marginal = 0.0;
    double f_marginal = 0.0;
    double f_joint = 0.0;
    double link_slacks[3] = {0.0, 0.0, 0.0};

    bool holds(double tolerance = tol::ineq) const {
        return link_slacks[0] >= -tolerance && link_slacks[1] >= -tolerance &&
               link_slacks[2] >= -tolerance;
    }
};

// 2 [Tr rho^2 - Tr (rho^A)^2]; reported as computed, even when negative.
double lower_bound(const QuantumState& rho, const BipartiteSplit& split,
                   Subsystem marginal = Subsystem::A);

// 2 [1 - Tr (rho^A)^2]
double upper_bound(const QuantumState& rho, const BipartiteSplit& split,
                   Subsystem marginal = Subsystem::A);

ChainReport chain_check(const PureState& psi_i, const PureState& psi_j,
                        const BipartiteSplit& split);

// Verifies, for an arbitrary decomposition of rho, the double-sum expansions
// of (avg C)^2, Tr rho^2 and Tr (rho^A)^2 over ensemble pairs, and the
// sandwich 2 >= (avg C)^2 + 2 Tr (rho^A)^2 >= 2 Tr rho^2. None of the steps
// need the decomposition to be optimal.
BoundsReport proof_chain_check(const Decomposition& dec, const BipartiteSplit& split);

// Checks lower_sq <= c_reference^2 and, when the reference is exact,
// c_reference^2 <= upper_sq, both at tol::ineq slack.
BoundsReport sandwich_check(const QuantumState& rho, const BipartiteSplit& split,
                            double c_reference, bool reference_exact = true,
                            Subsystem marginal = Subsystem::A);

}  // namespace entbounds
