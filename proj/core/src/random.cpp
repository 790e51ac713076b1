#include "entbounds/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace entbounds {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(SeedSpec seed)
    : counter_(mix64(mix64(seed.master_seed + kGolden) +
                     (seed.stream_index + 1) * kGolden)) {}

std::uint64_t RandomStream::next_u64() {
    counter_ += kGolden;
    return mix64(counter_);
}

double RandomStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex RandomStream::next_complex_gaussian() {
    // Box-Muller; u1 kept away from zero so the log is finite
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

Isometry::Isometry(Matrix v) : v_(std::move(v)) {
    if (v_.rows() < v_.cols())
        throw DimensionMismatch("Isometry: need rows >= cols");
    const double dev =
        (v_.adjoint() * v_ - Matrix::Identity(v_.cols(), v_.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (dev > 1e-10)
        throw ValidationError("Isometry: columns not orthonormal, deviation " +
                              std::to_string(dev));
}

PureState haar_pure(int d, SeedSpec seed) {
    if (d < 1) throw DimensionMismatch("haar_pure: d must be >= 1");
    RandomStream rng(seed);
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = rng.next_complex_gaussian();
    v /= v.norm();
    return PureState(std::move(v));
}

QuantumState random_density(int d, int rank, SeedSpec seed) {
    if (rank < 1 || rank > d)
        throw DimensionMismatch("random_density: need 1 <= rank <= d");
    RandomStream rng(seed);
    Matrix g(d, rank);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = rng.next_complex_gaussian();
    Matrix w = g * g.adjoint();
    w /= w.trace().real();
    return validate_density(w);
}

Isometry random_isometry(int m, int r, SeedSpec seed) {
    if (m < r) throw DimensionMismatch("random_isometry: need m >= r");
    RandomStream rng(seed);
    Matrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = rng.next_complex_gaussian();

    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase gauge so Q follows the Haar distribution
    for (int j = 0; j < m; ++j) {
        const Complex diag = rmat(j, j);
        const double mag = std::abs(diag);
        const Complex phase = mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return Isometry(q.leftCols(r));
}

}  // namespace entbounds
