#pragma once

#include <complex>

#include <Eigen/Dense>

namespace entbounds {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Validation and comparison tolerances used throughout the library.
namespace tol {
inline constexpr double norm = 1e-9;   // pure-state normalization
inline constexpr double trace = 1e-9;  // unit trace
inline constexpr double herm = 1e-9;   // hermiticity, max entry
inline constexpr double psd = 1e-9;    // eigenvalue clamp window
inline constexpr double num = 1e-8;    // generic numerical comparison
inline constexpr double ineq = 1e-8;   // slack for inequality checks
}  // namespace tol

}  // namespace entbounds
