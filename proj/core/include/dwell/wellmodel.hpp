// wellmodel.hpp -- spectrum of the symmetric double square well.
//
// Geometry: hard walls at +-(half_width + barrier_half_width), central barrier
// of half-width `barrier_half_width` and height U0.  Each single well then has
// width `half_width`.  Units: hbar = 1 and the ground state of the isolated
// single well is E1 = 1, which fixes the particle mass.  Time is measured in
// 1/E1.

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "dwell/errors.hpp"

namespace dwell {

/// Time-dependent detuning between the two wells, epsilon(t) * sigma3.
/// The ramp is an odd cubic around t_zero, saturating at +-amplitude:
/// epsilon(0) = +amplitude, epsilon(t_zero) = 0, and the sign is fully
/// reversed half a span after t_zero.
struct BiasSchedule {
    double amplitude = 0.1; // eps0, in units of E1
    double t_zero = 0.0;    // time of zero bias
    double t_span = 0.0;    // total ramp duration; active ramp is [t_zero - t_span/2, t_zero + t_span/2]
};

struct WellSpec {
    int n_levels = 20;               // number of doublets kept
    double half_width = 7.0;         // single-well width, in units of a
    double barrier_half_width = 1.0; // a
    double barrier_height = 450.0;   // U0, in units of E1
    std::optional<BiasSchedule> bias_schedule;

    // Construction-time checks on the bias schedule (see BiasSchedule
    // invariants): amplitude >= bias_min_g_factor * max_i g(E_i) and
    // amplitude <= bias_max_gap_factor * min_i dE_i.
    double bias_min_g_factor = 10.0;
    double bias_max_gap_factor = 0.1;
};

/// Doublet-center energies E_i = i^2 of the infinite single well, i = 1..n.
std::vector<double> single_well_levels(const WellSpec& spec);

/// Half-splittings g(E_i) between the antisymmetric and symmetric member of
/// each doublet, from the exact even/odd quantization conditions of the
/// double square well (bracketed root finding).
/// Throws UnboundLevel if a requested doublet lies above the barrier,
/// RootNotBracketed if a quantization root cannot be isolated below U0.
std::vector<double> tunneling_splittings(const WellSpec& spec);

/// Both members of each doublet, (E_symmetric, E_antisymmetric).
std::vector<std::pair<double, double>> doublet_energies(const WellSpec& spec);

/// Position matrix elements x_jk between single-well states (origin at the
/// well center): zero for j-k even, 8 L j k / (pi^2 (j^2-k^2)^2) for j-k odd.
Eigen::MatrixXd dipole_matrix(const WellSpec& spec);

/// Bias value at time t.
double bias(double t, const BiasSchedule& schedule);

/// Spectrum bundle: validated spec plus cached energies, splittings and
/// dipole matrix.  Immutable after build; safe to share across threads.
struct WellModel {
    WellSpec spec;
    std::vector<double> energies;   // E_i = i^2
    std::vector<double> splittings; // g(E_i)
    Eigen::MatrixXd dipole;         // x_jk

    static WellModel build(const WellSpec& spec);

    int n_levels() const { return spec.n_levels; }
    double bias_at(double t) const
    {
        return spec.bias_schedule ? bias(t, *spec.bias_schedule) : 0.0;
    }
};

} // namespace dwell
