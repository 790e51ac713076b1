#pragma once

#include <cstdint>

#include "entbounds/state.hpp"
#include "entbounds/types.hpp"

namespace entbounds {

// Identifies one reproducible random stream. Equal (master_seed, stream_index)
// gives bit-identical draws on every run and platform.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

// Counter-based generator (splitmix64 finalizer over a per-stream counter).
// Streams derived from distinct stream_index values start at well-separated
// counters, so parallel streams never depend on scheduling.
class RandomStream {
  public:
    explicit RandomStream(SeedSpec seed);

    std::uint64_t next_u64();
    double next_double();  // uniform in [0, 1)
    // Complex Gaussian with independent N(0,1) real and imaginary parts.
    Complex next_complex_gaussian();

  private:
    std::uint64_t counter_;
};

// m x r matrix with orthonormal columns (V^dag V = I_r).
class Isometry {
  public:
    explicit Isometry(Matrix v);
    int rows() const { return static_cast<int>(v_.rows()); }
    int cols() const { return static_cast<int>(v_.cols()); }
    const Matrix& matrix() const { return v_; }

  private:
    Matrix v_;
};

// Haar-random pure state: normalized vector of complex Gaussians.
PureState haar_pure(int d, SeedSpec seed);

// Ginibre-induced random density matrix: G G^dag / Tr(G G^dag) with G a
// d x rank complex Gaussian matrix.
QuantumState random_density(int d, int rank, SeedSpec seed);

// Haar-random isometry: first r columns of the Q factor of an m x m Gaussian
// matrix, with R's diagonal made real positive.
Isometry random_isometry(int m, int r, SeedSpec seed);

}  // namespace entbounds
