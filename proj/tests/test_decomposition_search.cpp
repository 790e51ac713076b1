#include <doctest.h>

#include <cmath>

#include "entbounds/decomposition.hpp"
#include "entbounds/measures.hpp"
#include "entbounds/random.hpp"

using namespace entbounds;

TEST_CASE("eigen_ensemble basics") {
    const PureState psi = haar_pure(4, {90, 0});
    const Decomposition pure = eigen_ensemble(density_from_pure(psi));
    REQUIRE(pure.size() == 1);
    CHECK(pure.weights[0] == doctest::Approx(1.0).epsilon(1e-10));

    const Decomposition mixed =
        eigen_ensemble(validate_density(Matrix::Identity(2, 2) / 2.0));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(mixed.states[0].amplitudes().dot(
              mixed.states[1].amplitudes())) < 1e-12);

    const QuantumState rho = random_density(4, 3, {91, 0});
    const Decomposition dec = eigen_ensemble(rho);
    REQUIRE(dec.size() == 3);
    CHECK((dec.reconstruct() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("from_isometry with identity reproduces the eigen-ensemble") {
    const QuantumState rho = random_density(4, 3, {92, 0});
    const Decomposition eigen = eigen_ensemble(rho);
    const Decomposition dec =
        from_isometry(rho, Isometry(Matrix::Identity(3, 3)));
    REQUIRE(dec.size() == eigen.size());
    for (std::size_t j = 0; j < dec.size(); ++j) {
        CHECK(dec.weights[j] == doctest::Approx(eigen.weights[j]).epsilon(1e-10));
        CHECK(overlap(dec.states[j], eigen.states[j]) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("from_isometry with a Hadamard-like unitary mixes the basis") {
    const QuantumState half = validate_density(Matrix::Identity(2, 2) / 2.0);
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    const Decomposition dec = from_isometry(half, Isometry(h));
    REQUIRE(dec.size() == 2);
    CHECK(dec.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dec.weights[1] == doctest::Approx(0.5).epsilon(1e-12));
    // states are (|0> +- |1>)/sqrt(2) up to phase and ordering
    for (const PureState& s : dec.states)
        CHECK(std::abs(std::abs(s.amplitudes()(0)) - 1.0 / std::sqrt(2.0)) <
              1e-12);
}

TEST_CASE("from_isometry round trip over random draws") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const int rank = 1 + int(s % 4);
        const QuantumState rho = random_density(4, rank, {93, s});
        const Isometry v = random_isometry(rank * rank, rank, {94, s});
        const Decomposition dec = from_isometry(rho, v);
        CHECK((dec.reconstruct() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-9);
        double total = 0.0;
        for (double w : dec.weights) total += w;
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("from_isometry rejects a rank mismatch") {
    const QuantumState rho = random_density(4, 2, {95, 0});
    CHECK_THROWS_AS(from_isometry(rho, Isometry(Matrix::Identity(3, 3))),
                    RankMismatch);
}

TEST_CASE("search on a pure state returns its own concurrence") {
    const BipartiteSplit split(2, 2);
    const PureState psi = haar_pure(4, {96, 0});
    SearchConfig cfg;
    cfg.restarts = 2;
    cfg.seed = {97, 0};
    const SearchResult res =
        minimize_average_concurrence(density_from_pure(psi), split, cfg);
    CHECK(std::abs(res.average_concurrence - concurrence_pure(psi, split)) <
          1e-9);
}

TEST_CASE("search finds the separable decomposition of I/4") {
    const BipartiteSplit split(2, 2);
    SearchConfig cfg;
    cfg.restarts = 5;
    cfg.seed = {98, 0};
    const SearchResult res = minimize_average_concurrence(
        validate_density(Matrix::Identity(4, 4) / 4.0), split, cfg);
    CHECK(res.average_concurrence <= 1e-3);
}

TEST_CASE("search never beats the closed form and usually matches it") {
    const BipartiteSplit split(2, 2);
    int close = 0;
    const int n = 20;
    for (std::uint64_t s = 0; s < n; ++s) {
        const QuantumState rho = random_density(4, 4, {99, s});
        SearchConfig cfg;
        cfg.restarts = 10;
        cfg.ensemble_size = 16;
        cfg.seed = {100 + s, 0};
        const SearchResult res =
            minimize_average_concurrence(rho, split, cfg);
        const double oracle = concurrence_two_qubit(rho);
        CHECK(res.average_concurrence >= oracle - 1e-7);
        CHECK((res.decomposition.reconstruct() - rho.matrix())
                  .cwiseAbs()
                  .maxCoeff() <= 1e-9);
        if (res.average_concurrence - oracle <= 5e-3) ++close;
    }
    CHECK(close >= n * 9 / 10);
}

TEST_CASE("descent is monotone across sweeps") {
    const BipartiteSplit split(2, 2);
    for (std::uint64_t s = 0; s < 5; ++s) {
        const QuantumState rho = random_density(4, 4, {110, s});
        SearchConfig cfg;
        cfg.restarts = 3;
        cfg.seed = {111, s};
        const SearchResult res = minimize_average_concurrence(rho, split, cfg);
        for (std::size_t i = 1; i < res.objective_history.size(); ++i)
            CHECK(res.objective_history[i] <=
                  res.objective_history[i - 1] + 1e-12);
    }
}

TEST_CASE("search is reproducible for a fixed seed") {
    const BipartiteSplit split(2, 2);
    const QuantumState rho = random_density(4, 3, {101, 0});
    SearchConfig cfg;
    cfg.restarts = 3;
    cfg.seed = {102, 5};
    const SearchResult a = minimize_average_concurrence(rho, split, cfg);
    const SearchResult b = minimize_average_concurrence(rho, split, cfg);
    CHECK(a.average_concurrence == b.average_concurrence);
}

TEST_CASE("search rejects undersized ensembles") {
    const BipartiteSplit split(2, 2);
    const QuantumState rho = random_density(4, 3, {103, 0});
    SearchConfig cfg;
    cfg.ensemble_size = 2;
    CHECK_THROWS_AS(minimize_average_concurrence(rho, split, cfg), ConfigError);
}
