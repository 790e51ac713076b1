#include "entbounds/bounds.hpp"

#include <cmath>

#include "entbounds/measures.hpp"

namespace entbounds {

namespace {

QuantumState marginal_of(const QuantumState& rho, const BipartiteSplit& split,
                         Subsystem marginal) {
    return partial_trace(rho, split,
                         marginal == Subsystem::A ? Subsystem::A : Subsystem::B);
}

}  // namespace

bool BoundsReport::all_pass() const {
    for (const auto& [name, ok] : pass)
        if (!ok) return false;
    return true;
}

double lower_bound(const QuantumState& rho, const BipartiteSplit& split,
                   Subsystem marginal) {
    const QuantumState reduced = marginal_of(rho, split, marginal);
    return 2.0 * (purity(rho) - purity(reduced));
}

double upper_bound(const QuantumState& rho, const BipartiteSplit& split,
                   Subsystem marginal) {
    const QuantumState reduced = marginal_of(rho, split, marginal);
    return 2.0 * (1.0 - purity(reduced));
}

ChainReport chain_check(const PureState& psi_i, const PureState& psi_j,
                        const BipartiteSplit& split) {
    if (psi_i.dim() != split.total() || psi_j.dim() != split.total())
        throw DimensionMismatch("chain_check: state dimension does not match split");

    const QuantumState rho_i = density_from_pure(psi_i);
    const QuantumState rho_j = density_from_pure(psi_j);
    const QuantumState a_i = partial_trace(rho_i, split, Subsystem::A);
    const QuantumState a_j = partial_trace(rho_j, split, Subsystem::A);

    ChainReport report;
    report.g_marginal = super_fidelity(a_i, a_j);
    report.f_marginal = fidelity(a_i, a_j);
    // both joint states are pure, so the joint fidelity is their overlap
    report.f_joint = overlap(psi_i, psi_j);
    report.link_slacks[0] = 1.0 - report.g_marginal;
    report.link_slacks[1] = report.g_marginal - report.f_marginal;
    report.link_slacks[2] = report.f_marginal - report.f_joint;
    return report;
}

BoundsReport proof_chain_check(const Decomposition& dec,
                               const BipartiteSplit& split) {
    if (dec.target_dim != split.total())
        throw DimensionMismatch("proof_chain_check: split does not match "
                                "decomposition dimension");
    QuantumState rho = [&] {
        try {
            return validate_density(dec.reconstruct());
        } catch (const Error& e) {
            throw ReconstructionFailure(
                std::string("proof_chain_check: ensemble does not sum to a "
                            "valid density: ") +
                e.what());
        }
    }();

    const std::size_t n = dec.size();

    // Per-element reduced states and their purity complements.
    std::vector<Matrix> marginals(n);
    std::vector<double> complements(n);
    for (std::size_t i = 0; i < n; ++i) {
        const QuantumState rho_i = density_from_pure(dec.states[i]);
        marginals[i] = partial_trace(rho_i, split, Subsystem::A).matrix();
        complements[i] =
            std::max(0.0, 1.0 - (marginals[i] * marginals[i]).trace().real());
    }

    // Double-sum expansions over ensemble pairs.
    double sum_sq_avg = 0.0;    // expansion of (avg C)^2
    double sum_marginal = 0.0;  // expansion of Tr (rho^A)^2
    double sum_joint = 0.0;     // expansion of Tr rho^2
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double tt = dec.weights[i] * dec.weights[j];
            sum_sq_avg += tt * std::sqrt(complements[i] * complements[j]);
            sum_marginal +=
                tt * (marginals[i] * marginals[j]).trace().real();
            sum_joint += tt * overlap(dec.states[i], dec.states[j]);
        }

    const double avg_c = average_concurrence(dec, split);
    const double a = avg_c * avg_c;
    const QuantumState rho_a = partial_trace(rho, split, Subsystem::A);
    const double b = 2.0 * purity(rho_a);
    const double c = 2.0 * purity(rho);

    BoundsReport report;
    report.lower_sq = c - b;
    report.upper_sq = 2.0 - b;
    report.c_reference = avg_c;

    constexpr double id_tol = 1e-9;
    report.slacks["id_avg_sq"] = std::abs(a - 2.0 * sum_sq_avg);
    report.slacks["id_marginal_purity"] = std::abs(b - 2.0 * sum_marginal);
    report.slacks["id_joint_purity"] = std::abs(c - 2.0 * sum_joint);
    report.pass["id_avg_sq"] = report.slacks["id_avg_sq"] <= id_tol;
    report.pass["id_marginal_purity"] =
        report.slacks["id_marginal_purity"] <= id_tol;
    report.pass["id_joint_purity"] = report.slacks["id_joint_purity"] <= id_tol;

    report.slacks["chain_upper"] = 2.0 - (a + b);
    report.slacks["chain_lower"] = (a + b) - c;
    report.pass["chain_upper"] = report.slacks["chain_upper"] >= -tol::ineq;
    report.pass["chain_lower"] = report.slacks["chain_lower"] >= -tol::ineq;

    return report;
}

BoundsReport sandwich_check(const QuantumState& rho, const BipartiteSplit& split,
                            double c_reference, bool reference_exact,
                            Subsystem marginal) {
    BoundsReport report;
    report.lower_sq = lower_bound(rho, split, marginal);
    report.upper_sq = upper_bound(rho, split, marginal);
    report.c_reference = c_reference;

    const double c_sq = c_reference * c_reference;
    report.slacks["lower"] = c_sq - report.lower_sq;
    report.pass["lower"] = report.slacks["lower"] >= -tol::ineq;
    if (reference_exact) {
        report.slacks["upper"] = report.upper_sq - c_sq;
        report.pass["upper"] = report.slacks["upper"] >= -tol::ineq;
    }
    return report;
}

}  // namespace entbounds
