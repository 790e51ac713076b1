#pragma once

#include <utility>

#include "entbounds/errors.hpp"
#include "entbounds/types.hpp"

namespace entbounds {

// A (dimA, dimB) factorization of a composite Hilbert space. Subsystem A is
// the slow (most significant) index in the composite basis, row-major.
class BipartiteSplit {
  public:
    BipartiteSplit(int dim_a, int dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
        if (dim_a < 1 || dim_b < 1)
            throw DimensionMismatch("BipartiteSplit: dimensions must be >= 1");
    }
    int dimA() const { return dim_a_; }
    int dimB() const { return dim_b_; }
    int total() const { return dim_a_ * dim_b_; }

  private:
    int dim_a_;
    int dim_b_;
};

enum class Subsystem { A, B };

// Unit-norm complex amplitude vector.
class PureState {
  public:
    explicit PureState(Vector amplitudes);
    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }

  private:
    Vector amps_;
};

// Validated density matrix: hermitian, positive semidefinite, unit trace.
class QuantumState {
  public:
    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& matrix() const { return mat_; }

    friend QuantumState validate_density(const Matrix& m);

  private:
    explicit QuantumState(Matrix m) : mat_(std::move(m)) {}
    Matrix mat_;
};

// Checks the three density-matrix invariants; stores the symmetrized input.
// Eigenvalues in [-tol::psd, 0) are clamped to zero, more negative ones are a
// hard NotPositive error.
QuantumState validate_density(const Matrix& m);

QuantumState density_from_pure(const PureState& psi);

// Kronecker product, A as the slow index.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

QuantumState partial_trace(const QuantumState& state, const BipartiteSplit& split,
                           Subsystem keep);

// Canonical purification sum_k sqrt(lambda_k) |e_k> (x) |k> on a d*d space,
// ancilla basis ordered by descending eigenvalue. Tracing out the ancilla
// (subsystem B of the returned split) recovers the input.
std::pair<PureState, BipartiteSplit> purify(const QuantumState& rho);

// |<psi1|psi2>|^2
double overlap(const PureState& psi1, const PureState& psi2);

// Tr rho^2
double purity(const QuantumState& state);

}  // namespace entbounds
