#pragma once

#include <utility>

#include "entbounds/state.hpp"

namespace entbounds {

struct Decomposition;  // decomposition.hpp

// sqrt(2 (1 - Tr (rho^A)^2)) for the reduced state of |psi><psi|. Zero iff
// psi is a product state across the split.
double concurrence_pure(const PureState& psi, const BipartiteSplit& split);

// Uhlmann fidelity. Computed as the squared sum of singular values of
// sqrt(rho1) sqrt(rho2), which avoids the ill-conditioned nested square root.
double fidelity(const QuantumState& rho1, const QuantumState& rho2);

// Tr(rho1 rho2) + sqrt((1 - Tr rho1^2)(1 - Tr rho2^2)); upper-bounds fidelity.
double super_fidelity(const QuantumState& rho1, const QuantumState& rho2);

// sum_j t_j concurrence_pure(psi_j)
double average_concurrence(const Decomposition& dec, const BipartiteSplit& split);

// Exact two-qubit mixed-state concurrence: max(0, mu1 - mu2 - mu3 - mu4) with
// mu_i the descending square roots of the eigenvalues of
// rho (sy x sy) conj(rho) (sy x sy), conjugation in the computational basis.
double concurrence_two_qubit(const QuantumState& rho);

// Purifications of rho1 and rho2 whose overlap attains the Uhlmann fidelity:
// canonical purifications with the second ancilla rotated by the unitary from
// the polar decomposition of the Schmidt-frame cross matrix.
std::pair<PureState, PureState> aligned_purifications(const QuantumState& rho1,
                                                      const QuantumState& rho2);

}  // namespace entbounds
