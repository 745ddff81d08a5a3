// bath.hpp -- thermal-bath transition rates between vertical levels.
//
// Rates follow the golden-rule form with dipole matrix elements c_jk =
// q k x_jk, k = |dE| / v; upward transitions carry the Bose occupation
// n(dE), downward n(dE) + 1, which enforces detailed balance
// Gamma(j,i) = exp[(E_j - E_i)/T] Gamma(i,j).

#pragma once

#include <Eigen/Dense>

#include "dwell/wellmodel.hpp"

namespace dwell {

struct BathSpec {
    double temperature = 5.0; // T, units of E1
    double coupling = 1.0;    // q, dimensionless
    double mode_speed = 1.0;  // v in omega = v k
};

/// Gamma(i -> j) over all level pairs plus per-level total loss rates.
/// Immutable after construction.
struct RateTable {
    Eigen::MatrixXd gamma; // gamma(i, j) = rate for level i -> level j
    Eigen::VectorXd loss;  // loss(i) = sum_j gamma(i, j)

    int n_levels() const { return static_cast<int>(gamma.rows()); }
};

/// Single transition rate, level `from` -> level `to` (0-based indices).
/// Degenerate pairs (from == to) have rate 0 by convention.
double rate(int from, int to, const BathSpec& bath, const WellModel& well);

RateTable rate_table(const BathSpec& bath, const WellModel& well);

struct ThermalAverages {
    double gamma_avg; // <Gamma> = sum_i p_i loss_i
    double g_avg;     // <g> = sum_i p_i g(E_i)
};

/// Boltzmann-weighted averages with p_i proportional to exp(-E_i / T).
ThermalAverages thermal_averages(const RateTable& table, const WellModel& well, double temperature);

/// Boltzmann weights p_i at temperature T (stable for small T).
Eigen::VectorXd boltzmann_weights(const WellModel& well, double temperature);

/// Coupling q that makes <Gamma>/<g> equal target_Q (exact q^2 scaling).
/// Throws DegenerateSpectrum when the well admits no bath transitions.
double q_for_Q(double target_Q, const WellModel& well, double temperature, double mode_speed = 1.0);

} // namespace dwell
