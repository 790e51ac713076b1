#include "entbounds/state.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace entbounds {

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0)
        throw DimensionMismatch("PureState: empty amplitude vector");
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > tol::norm) throw NotNormalized(std::abs(n2 - 1.0));
}

QuantumState validate_density(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("validate_density: matrix is not square");

    const double herm_violation = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_violation > tol::herm) throw NotHermitian(herm_violation);

    Matrix sym = 0.5 * (m + m.adjoint());

    const double trace_violation = std::abs(sym.trace().real() - 1.0);
    if (trace_violation > tol::trace) throw TraceNotOne(trace_violation);

    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success)
        throw NumericalBreakdown("validate_density: eigensolver failed");
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol::psd) throw NotPositive(min_eig);

    // Negatives beyond fp noise get clamped via reconstruction; anything
    // closer to zero is left untouched so validation is idempotent and file
    // round trips stay bit-exact.
    if (min_eig < -1e-14) {
        Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
        sym = es.eigenvectors() * clamped.asDiagonal() *
              es.eigenvectors().adjoint();
        sym = 0.5 * (sym + sym.adjoint().eval());
    }
    return QuantumState(std::move(sym));
}

QuantumState density_from_pure(const PureState& psi) {
    const Vector& a = psi.amplitudes();
    return validate_density(a * a.adjoint());
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    const int da = a.dim();
    const int db = b.dim();
    Matrix out(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    return validate_density(out);
}

QuantumState partial_trace(const QuantumState& state, const BipartiteSplit& split,
                           Subsystem keep) {
    if (state.dim() != split.total())
        throw DimensionMismatch("partial_trace: state dimension " +
                                std::to_string(state.dim()) +
                                " != dimA*dimB = " + std::to_string(split.total()));
    const int da = split.dimA();
    const int db = split.dimB();
    const Matrix& rho = state.matrix();

    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(da, da);
        for (int a1 = 0; a1 < da; ++a1)
            for (int a2 = 0; a2 < da; ++a2)
                for (int b = 0; b < db; ++b)
                    out(a1, a2) += rho(a1 * db + b, a2 * db + b);
        return validate_density(out);
    }
    Matrix out = Matrix::Zero(db, db);
    for (int b1 = 0; b1 < db; ++b1)
        for (int b2 = 0; b2 < db; ++b2)
            for (int a = 0; a < da; ++a)
                out(b1, b2) += rho(a * db + b1, a * db + b2);
    return validate_density(out);
}

std::pair<PureState, BipartiteSplit> purify(const QuantumState& rho) {
    const int d = rho.dim();
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    if (es.info() != Eigen::Success)
        throw NumericalBreakdown("purify: eigensolver failed");

    // ancilla index k runs over eigenvalues in descending order
    Vector psi = Vector::Zero(d * d);
    for (int k = 0; k < d; ++k) {
        const int src = d - 1 - k;  // Eigen sorts ascending
        const double lambda = es.eigenvalues()(src);
        if (lambda < 1e-15) continue;  // fp noise around exact zeros
        const double w = std::sqrt(lambda);
        for (int i = 0; i < d; ++i) psi(i * d + k) = w * es.eigenvectors()(i, src);
    }
    psi /= psi.norm();
    return {PureState(std::move(psi)), BipartiteSplit(d, d)};
}

double overlap(const PureState& psi1, const PureState& psi2) {
    if (psi1.dim() != psi2.dim())
        throw DimensionMismatch("overlap: dimensions differ");
    return std::norm(psi1.amplitudes().dot(psi2.amplitudes()));
}

double purity(const QuantumState& state) {
    return (state.matrix() * state.matrix()).trace().real();
}

}  // namespace entbounds
