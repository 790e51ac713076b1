#include "entbounds/measures.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "entbounds/decomposition.hpp"

namespace entbounds {

namespace {

Matrix hermitian_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success)
        throw NumericalBreakdown("hermitian_sqrt: eigensolver failed");
    Eigen::VectorXd roots = es.eigenvalues();
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        // eigenvalues at fp-noise level are exact zeros of the true matrix;
        // taking their square root would inject O(1e-8) ghost directions
        roots(i) = roots(i) > 1e-14 ? std::sqrt(roots(i)) : 0.0;
    }
    return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double concurrence_pure(const PureState& psi, const BipartiteSplit& split) {
    if (psi.dim() != split.total())
        throw DimensionMismatch("concurrence_pure: state dimension " +
                                std::to_string(psi.dim()) + " != " +
                                std::to_string(split.total()));
    // 1 - Tr (rho^A)^2 = 2 * sum over squared 2x2 minors of the amplitude
    // matrix (Lagrange identity); free of the cancellation in forming Tr rho^2
    const Vector& amps = psi.amplitudes();
    const int da = split.dimA();
    const int db = split.dimB();
    double minors = 0.0;
    for (int a1 = 0; a1 < da; ++a1)
        for (int a2 = a1 + 1; a2 < da; ++a2)
            for (int b1 = 0; b1 < db; ++b1)
                for (int b2 = b1 + 1; b2 < db; ++b2)
                    minors += std::norm(amps(a1 * db + b1) * amps(a2 * db + b2) -
                                        amps(a1 * db + b2) * amps(a2 * db + b1));
    return 2.0 * std::sqrt(minors);
}

double fidelity(const QuantumState& rho1, const QuantumState& rho2) {
    if (rho1.dim() != rho2.dim())
        throw DimensionMismatch("fidelity: dimensions differ");
    const Matrix prod = hermitian_sqrt(rho1.matrix()) * hermitian_sqrt(rho2.matrix());
    Eigen::JacobiSVD<Matrix> svd(prod);
    const double root = svd.singularValues().sum();
    return std::clamp(root * root, 0.0, 1.0);
}

double super_fidelity(const QuantumState& rho1, const QuantumState& rho2) {
    if (rho1.dim() != rho2.dim())
        throw DimensionMismatch("super_fidelity: dimensions differ");
    const double cross = (rho1.matrix() * rho2.matrix()).trace().real();
    const double c1 = std::max(0.0, 1.0 - purity(rho1));
    const double c2 = std::max(0.0, 1.0 - purity(rho2));
    return cross + std::sqrt(c1 * c2);
}

double average_concurrence(const Decomposition& dec, const BipartiteSplit& split) {
    if (dec.target_dim != split.total())
        throw DimensionMismatch("average_concurrence: split does not match "
                                "decomposition dimension");
    double sum = 0.0;
    for (std::size_t j = 0; j < dec.size(); ++j)
        sum += dec.weights[j] * concurrence_pure(dec.states[j], split);
    return sum;
}

double concurrence_two_qubit(const QuantumState& rho) {
    if (rho.dim() != 4)
        throw DimensionMismatch("concurrence_two_qubit: need a 4x4 state");
    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;

    // mu_i^2 are the eigenvalues of rho (yy rho* yy); conjugating with
    // sqrt(rho) makes the problem hermitian without changing the spectrum
    const Matrix root = hermitian_sqrt(rho.matrix());
    const Matrix spun = root * (yy * rho.matrix().conjugate() * yy) * root;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (spun + spun.adjoint()));
    if (es.info() != Eigen::Success)
        throw NumericalBreakdown("concurrence_two_qubit: eigensolver failed");

    std::array<double, 4> mu{};
    for (int i = 0; i < 4; ++i) {
        const double lambda = es.eigenvalues()(i);
        mu[i] = lambda > 1e-14 ? std::sqrt(lambda) : 0.0;
    }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

std::pair<PureState, PureState> aligned_purifications(const QuantumState& rho1,
                                                      const QuantumState& rho2) {
    if (rho1.dim() != rho2.dim())
        throw DimensionMismatch("aligned_purifications: dimensions differ");
    const int d = rho1.dim();

    auto [psi1, split1] = purify(rho1);
    auto [psi2, split2] = purify(rho2);

    // Cross matrix of the two Schmidt frames: M = sqrt(rho1') . sqrt(rho2')
    // expressed through the purification amplitudes, M_{kl} =
    // sum_i conj(psi1[i,k]) psi2[i,l].
    Matrix cross = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            Complex s = 0.0;
            for (int i = 0; i < d; ++i)
                s += std::conj(psi1.amplitudes()(i * d + k)) *
                     psi2.amplitudes()(i * d + l);
            cross(k, l) = s;
        }

    // Ancilla rotation from the polar/SVD factors maximizing |<psi1|psi2>|.
    Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix u_t = svd.matrixV() * svd.matrixU().adjoint();

    Vector rotated = Vector::Zero(d * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            Complex s = 0.0;
            for (int l = 0; l < d; ++l)
                s += u_t(l, k) * psi2.amplitudes()(i * d + l);
            rotated(i * d + k) = s;
        }
    rotated /= rotated.norm();
    return {psi1, PureState(std::move(rotated))};
}

}  // namespace entbounds
