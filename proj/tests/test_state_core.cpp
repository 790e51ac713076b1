#include <doctest.h>

#include "entbounds/random.hpp"
#include "entbounds/state.hpp"

using namespace entbounds;

namespace {

Vector ket(int d, int i) {
    Vector v = Vector::Zero(d);
    v(i) = 1.0;
    return v;
}

Vector bell() {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return v;
}

}  // namespace

TEST_CASE("validate_density accepts the maximally mixed qubit") {
    const QuantumState s = validate_density(Matrix::Identity(2, 2) / 2.0);
    CHECK(s.dim() == 2);
    CHECK(std::abs(s.matrix()(0, 0).real() - 0.5) < 1e-15);
}

TEST_CASE("validate_density rejects wrong trace") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 0.1;
    CHECK_THROWS_AS(validate_density(m), TraceNotOne);
}

TEST_CASE("validate_density rejects negative eigenvalues") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    CHECK_THROWS_AS(validate_density(m), NotPositive);
}

TEST_CASE("validate_density rejects non-hermitian input") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = m(1, 1) = 0.5;
    m(0, 1) = 0.3;
    CHECK_THROWS_AS(validate_density(m), NotHermitian);
}

TEST_CASE("validate_density clamps roundoff negatives") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0 + 5e-10;
    m(1, 1) = -5e-10;
    const QuantumState s = validate_density(m);
    Eigen::SelfAdjointEigenSolver<Matrix> es(s.matrix());
    CHECK(es.eigenvalues().minCoeff() >= -1e-15);
}

TEST_CASE("density_from_pure basics") {
    const QuantumState zero = density_from_pure(PureState(ket(2, 0)));
    CHECK(std::abs(zero.matrix()(0, 0).real() - 1.0) < 1e-15);
    CHECK(std::abs(zero.matrix()(1, 1)) < 1e-15);

    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const QuantumState p = density_from_pure(PureState(plus));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(p.matrix()(i, j).real() - 0.5) < 1e-15);

    const QuantumState b = density_from_pure(PureState(bell()));
    CHECK(b.dim() == 4);
    CHECK(std::abs(purity(b) - 1.0) < 1e-12);
}

TEST_CASE("tensor products") {
    const QuantumState half = validate_density(Matrix::Identity(2, 2) / 2.0);
    const QuantumState quarter = tensor(half, half);
    CHECK((quarter.matrix() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <
          1e-15);

    const QuantumState p0 = density_from_pure(PureState(ket(2, 0)));
    const QuantumState p1 = density_from_pure(PureState(ket(2, 1)));
    const QuantumState prod = tensor(p0, p1);
    CHECK(std::abs(prod.matrix()(1, 1).real() - 1.0) < 1e-15);

    // purity is multiplicative under tensor products
    for (std::uint64_t s = 0; s < 20; ++s) {
        const QuantumState a = random_density(2, 2, {11, s});
        const QuantumState b = random_density(3, 2, {12, s});
        CHECK(std::abs(purity(tensor(a, b)) - purity(a) * purity(b)) < 1e-12);
    }
}

TEST_CASE("partial_trace basics") {
    const BipartiteSplit split(2, 2);
    const QuantumState b = density_from_pure(PureState(bell()));
    const QuantumState a = partial_trace(b, split, Subsystem::A);
    CHECK((a.matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);

    const QuantumState ra = random_density(2, 2, {21, 0});
    const QuantumState rb = random_density(2, 2, {22, 0});
    const QuantumState prod = tensor(ra, rb);
    CHECK((partial_trace(prod, split, Subsystem::A).matrix() - ra.matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((partial_trace(prod, split, Subsystem::B).matrix() - rb.matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    CHECK_THROWS_AS(partial_trace(ra, split, Subsystem::A), DimensionMismatch);
}

TEST_CASE("pure bipartite marginals share their purity") {
    for (const auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        const BipartiteSplit split(da, db);
        for (std::uint64_t s = 0; s < 200; ++s) {
            const PureState psi = haar_pure(da * db, {31, s});
            const QuantumState rho = density_from_pure(psi);
            const double pa = purity(partial_trace(rho, split, Subsystem::A));
            const double pb = purity(partial_trace(rho, split, Subsystem::B));
            CHECK(std::abs(pa - pb) <= 1e-10);
        }
    }
}

TEST_CASE("purify of the maximally mixed qubit") {
    const QuantumState half = validate_density(Matrix::Identity(2, 2) / 2.0);
    auto [psi, split] = purify(half);
    CHECK(split.dimA() == 2);
    CHECK(split.dimB() == 2);
    const QuantumState back =
        partial_trace(density_from_pure(psi), split, Subsystem::A);
    CHECK((back.matrix() - half.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("purify of a pure state is that state times |0>") {
    const PureState phi = haar_pure(3, {41, 0});
    const QuantumState rho = density_from_pure(phi);
    auto [psi, split] = purify(rho);
    // amplitudes at ancilla index 0, up to a global phase
    Complex phase = 0.0;
    for (int i = 0; i < 3; ++i)
        if (std::abs(phi.amplitudes()(i)) > 0.3)
            phase = psi.amplitudes()(i * 3) / phi.amplitudes()(i);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(psi.amplitudes()(i * 3) - phase * phi.amplitudes()(i)) <
              1e-10);
        CHECK(std::abs(psi.amplitudes()(i * 3 + 1)) < 1e-12);
        CHECK(std::abs(psi.amplitudes()(i * 3 + 2)) < 1e-12);
    }
}

TEST_CASE("purify round trip on random states up to d = 8") {
    for (const int d : {2, 3, 4, 8}) {
        for (int rank = 1; rank <= d; rank += (d > 4 ? 3 : 1)) {
            for (std::uint64_t s = 0; s < 20; ++s) {
                const QuantumState rho =
                    random_density(d, rank, {100 + (std::uint64_t)d, s});
                auto [psi, split] = purify(rho);
                const QuantumState back =
                    partial_trace(density_from_pure(psi), split, Subsystem::A);
                CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <=
                      1e-10);
            }
        }
    }
}

TEST_CASE("overlap basics and properties") {
    const PureState k0(ket(2, 0));
    const PureState k1(ket(2, 1));
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(overlap(k0, k0) == doctest::Approx(1.0));
    CHECK(overlap(k0, k1) == doctest::Approx(0.0));
    CHECK(overlap(k0, PureState(plus)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(overlap(k0, PureState(ket(3, 0))), DimensionMismatch);

    for (std::uint64_t s = 0; s < 1000; ++s) {
        const PureState a = haar_pure(4, {51, 2 * s});
        const PureState b = haar_pure(4, {51, 2 * s + 1});
        CHECK(std::abs(overlap(a, a) - 1.0) < 1e-12);
        CHECK(std::abs(overlap(a, b) - overlap(b, a)) < 1e-12);
    }
}

TEST_CASE("purity range and special values") {
    for (const int d : {2, 4}) {
        const QuantumState mixed =
            validate_density(Matrix::Identity(d, d) / double(d));
        CHECK(purity(mixed) == doctest::Approx(1.0 / d));
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
        const int d = 4;
        const QuantumState rho = random_density(d, 1 + int(s % d), {61, s});
        const double p = purity(rho);
        CHECK(p >= 1.0 / d - 1e-12);
        CHECK(p <= 1.0 + 1e-12);
    }
    const PureState psi = haar_pure(5, {62, 0});
    CHECK(std::abs(purity(density_from_pure(psi)) - 1.0) < 1e-12);
}

TEST_CASE("Werner state purity matches the analytic value") {
    // rho = p |singlet><singlet| + (1-p) I/4, purity (1 + 3 p^2) / 4
    const double p = 0.8;
    Vector singlet = Vector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);
    const Matrix w = p * (singlet * singlet.adjoint()) +
                     (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
    CHECK(purity(validate_density(w)) == doctest::Approx(0.73).epsilon(1e-12));
}
