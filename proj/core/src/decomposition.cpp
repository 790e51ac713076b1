#include "entbounds/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include <Eigen/Eigenvalues>

#include "entbounds/measures.hpp"

namespace entbounds {

namespace {

constexpr double kRankCut = 1e-12;   // eigenvalues below this count as zero
constexpr double kWeightCut = 1e-14; // ensemble elements below this are dropped

struct Spectrum {
    Eigen::VectorXd values;  // descending, > kRankCut
    Matrix vectors;          // matching columns
};

Spectrum nonzero_spectrum(const QuantumState& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    if (es.info() != Eigen::Success)
        throw NumericalBreakdown("eigen_ensemble: eigensolver failed");
    const int d = rho.dim();
    int r = 0;
    for (int i = 0; i < d; ++i)
        if (es.eigenvalues()(i) > kRankCut) ++r;

    Spectrum s;
    s.values.resize(r);
    s.vectors.resize(d, r);
    for (int k = 0; k < r; ++k) {
        const int src = d - 1 - k;  // Eigen sorts ascending
        s.values(k) = es.eigenvalues()(src);
        s.vectors.col(k) = es.eigenvectors().col(src);
    }
    return s;
}

// Contribution of one unnormalized ensemble vector phi to the weighted
// average concurrence: t * C(phi/sqrt(t)) = sqrt(2 (|phi|^4 - Tr rhoA(phi)^2)).
double weighted_concurrence(const Vector& phi, int da, int db) {
    // |phi|^4 - Tr rhoA(phi)^2 = 2 * sum of squared 2x2 minors (Lagrange
    // identity)
    double minors = 0.0;
    for (int a1 = 0; a1 < da; ++a1)
        for (int a2 = a1 + 1; a2 < da; ++a2)
            for (int b1 = 0; b1 < db; ++b1)
                for (int b2 = b1 + 1; b2 < db; ++b2)
                    minors += std::norm(phi(a1 * db + b1) * phi(a2 * db + b2) -
                                        phi(a1 * db + b2) * phi(a2 * db + b1));
    return 2.0 * std::sqrt(minors);
}

struct SweepState {
    Matrix phis;                         // d x m, column j = unnormalized phi_j
    std::vector<double> contributions;   // per-column weighted concurrence
    double objective = 0.0;
    int da = 0;
    int db = 0;

    void rebuild_contributions() {
        objective = 0.0;
        contributions.resize(phis.cols());
        for (int j = 0; j < phis.cols(); ++j) {
            contributions[j] = weighted_concurrence(phis.col(j), da, db);
            objective += contributions[j];
        }
    }

    // Objective delta of rotating columns (j, k) by angle theta at phase phi,
    // without mutating anything.
    double pair_value(int j, int k, double theta, double phase) const {
        const Complex c = std::cos(theta);
        const Complex s = std::polar(std::sin(theta), phase);
        const Vector pj = c * phis.col(j) + s * phis.col(k);
        const Vector pk = -std::conj(s) * phis.col(j) + c * phis.col(k);
        return weighted_concurrence(pj, da, db) + weighted_concurrence(pk, da, db);
    }

    void apply_rotation(int j, int k, double theta, double phase, Matrix& isometry) {
        const Complex c = std::cos(theta);
        const Complex s = std::polar(std::sin(theta), phase);
        const Vector pj = c * phis.col(j) + s * phis.col(k);
        const Vector pk = -std::conj(s) * phis.col(j) + c * phis.col(k);
        phis.col(j) = pj;
        phis.col(k) = pk;
        const Eigen::RowVectorXcd vj =
            c * isometry.row(j) + s * isometry.row(k);
        const Eigen::RowVectorXcd vk =
            -std::conj(s) * isometry.row(j) + c * isometry.row(k);
        isometry.row(j) = vj;
        isometry.row(k) = vk;
        objective -= contributions[j] + contributions[k];
        contributions[j] = weighted_concurrence(phis.col(j), da, db);
        contributions[k] = weighted_concurrence(phis.col(k), da, db);
        objective += contributions[j] + contributions[k];
    }
};

// Golden-section minimization of f over [lo, hi].
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

Decomposition ensemble_from_columns(const Matrix& phis, int dim) {
    Decomposition dec;
    dec.target_dim = dim;
    for (int j = 0; j < phis.cols(); ++j) {
        const double t = phis.col(j).squaredNorm();
        if (t < kWeightCut) continue;
        dec.weights.push_back(t);
        dec.states.emplace_back(Vector(phis.col(j) / std::sqrt(t)));
    }
    return dec;
}

}  // namespace

Matrix Decomposition::reconstruct() const {
    Matrix out = Matrix::Zero(target_dim, target_dim);
    for (std::size_t j = 0; j < size(); ++j) {
        const Vector& a = states[j].amplitudes();
        out += weights[j] * (a * a.adjoint());
    }
    return out;
}

Decomposition eigen_ensemble(const QuantumState& rho) {
    const Spectrum s = nonzero_spectrum(rho);
    Decomposition dec;
    dec.target_dim = rho.dim();
    for (int k = 0; k < s.values.size(); ++k) {
        dec.weights.push_back(s.values(k));
        dec.states.emplace_back(Vector(s.vectors.col(k)));
    }
    return dec;
}

Decomposition from_isometry(const QuantumState& rho, const Isometry& v) {
    const Spectrum s = nonzero_spectrum(rho);
    const int r = static_cast<int>(s.values.size());
    if (v.cols() != r)
        throw RankMismatch("from_isometry: isometry has " +
                           std::to_string(v.cols()) + " columns, rank(rho) = " +
                           std::to_string(r));
    // column k scaled by sqrt(lambda_k); phi_j = sum_k V_jk sqrt(lambda_k) e_k
    const Matrix scaled = s.vectors * s.values.cwiseSqrt().asDiagonal();
    const Matrix phis = scaled * v.matrix().transpose();
    return ensemble_from_columns(phis, rho.dim());
}

SearchResult minimize_average_concurrence(const QuantumState& rho,
                                          const BipartiteSplit& split,
                                          const SearchConfig& cfg) {
    if (rho.dim() != split.total())
        throw DimensionMismatch("minimize_average_concurrence: state dimension "
                                "does not match split");
    if (cfg.restarts < 1 || cfg.max_sweeps < 1)
        throw ConfigError("minimize_average_concurrence: restarts and "
                          "max_sweeps must be >= 1");

    const Spectrum s = nonzero_spectrum(rho);
    const int r = static_cast<int>(s.values.size());
    const int m = cfg.ensemble_size > 0 ? cfg.ensemble_size : r * r;
    if (m < r)
        throw ConfigError("minimize_average_concurrence: ensemble size " +
                          std::to_string(m) + " below rank " + std::to_string(r));

    const Matrix scaled = s.vectors * s.values.cwiseSqrt().asDiagonal();

    struct RestartResult {
        Matrix phis;
        double value = std::numeric_limits<double>::infinity();
        std::vector<double> history;
    };
    std::vector<RestartResult> results(cfg.restarts);

    auto run_restart = [&](int restart) {
        const Isometry v0 = random_isometry(
            m, r, SeedSpec{cfg.seed.master_seed, cfg.seed.stream_index + restart});
        Matrix isometry = v0.matrix();

        SweepState sw;
        sw.da = split.dimA();
        sw.db = split.dimB();
        sw.phis = scaled * isometry.transpose();
        sw.rebuild_contributions();

        std::vector<double> history;
        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            const double before = sw.objective;
            for (int j = 0; j < m; ++j) {
                for (int k = j + 1; k < m; ++k) {
                    const double base =
                        sw.contributions[j] + sw.contributions[k];
                    double best_theta = 0.0, best_phase = 0.0;
                    double best_pair = base;
                    for (const double phase : {0.0, std::numbers::pi / 2.0}) {
                        auto [theta, val] = golden_min(
                            [&](double th) {
                                return sw.pair_value(j, k, th, phase);
                            },
                            0.0, std::numbers::pi / 2.0, 30);
                        if (val < best_pair) {
                            best_pair = val;
                            best_theta = theta;
                            best_phase = phase;
                        }
                    }
                    if (best_pair < base)
                        sw.apply_rotation(j, k, best_theta, best_phase, isometry);
                }
            }
            history.push_back(sw.objective);
            if (before - sw.objective < cfg.step_tolerance) break;
        }

        results[restart] = {std::move(sw.phis), sw.objective, std::move(history)};
    };

    // restarts are independent; the merge below is ordered by restart index,
    // so the outcome does not depend on scheduling
    const int workers = std::min<int>(
        cfg.restarts, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (int restart = 0; restart < cfg.restarts; ++restart)
            run_restart(restart);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const int i = next.fetch_add(1);
                    if (i >= cfg.restarts) return;
                    run_restart(i);
                }
            });
        for (std::thread& t : pool) t.join();
    }

    int best = 0;
    for (int restart = 1; restart < cfg.restarts; ++restart)
        if (results[restart].value < results[best].value) best = restart;

    SearchResult result;
    result.decomposition = ensemble_from_columns(results[best].phis, rho.dim());
    result.average_concurrence =
        average_concurrence(result.decomposition, split);
    result.objective_history = std::move(results[best].history);
    return result;
}

}  // namespace entbounds
