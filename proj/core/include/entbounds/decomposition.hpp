#pragma once

#include <vector>

#include "entbounds/random.hpp"
#include "entbounds/state.hpp"

namespace entbounds {

// Weighted pure-state ensemble {t_j, |psi_j>} summing to a target density.
struct Decomposition {
    std::vector<double> weights;
    std::vector<PureState> states;
    int target_dim = 0;

    std::size_t size() const { return weights.size(); }
    // sum_j t_j |psi_j><psi_j|
    Matrix reconstruct() const;
};

struct SearchConfig {
    int ensemble_size = 0;  // 0 -> rank^2
    int restarts = 20;
    int max_sweeps = 200;
    double step_tolerance = 1e-9;
    SeedSpec seed;
};

// Spectral decomposition restricted to nonzero eigenvalues, descending.
Decomposition eigen_ensemble(const QuantumState& rho);

// Schrodinger-HJW: ensemble |phi_j> = sum_k V_jk sqrt(lambda_k) |e_k| with
// weights t_j = <phi_j|phi_j>. V must be m x rank(rho) with orthonormal
// columns. Elements with t_j < 1e-14 are dropped.
Decomposition from_isometry(const QuantumState& rho, const Isometry& v);

struct SearchResult {
    Decomposition decomposition;
    double average_concurrence = 0.0;
    // objective after each sweep of the winning restart; non-increasing
    std::vector<double> objective_history;
};

// Minimizes the ensemble-average concurrence over isometry-parametrized
// decompositions by alternating Givens-rotation descent with random restarts.
// The value found upper-estimates the mixed-state concurrence.
SearchResult minimize_average_concurrence(const QuantumState& rho,
                                          const BipartiteSplit& split,
                                          const SearchConfig& cfg);

}  // namespace entbounds
