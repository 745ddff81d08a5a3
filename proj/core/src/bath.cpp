#include "dwell/bath.hpp"

#include <cmath>

namespace dwell {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double pair_rate(double e_from, double e_to, double x_elem, const BathSpec& bath)
{
    if (x_elem == 0.0)
        return 0.0;
    const double de = e_to - e_from;
    const double kn = std::abs(de) / bath.mode_speed;
    const double c2 = bath.coupling * bath.coupling * kn * kn * x_elem * x_elem;
    // Bose factor: n(de) for absorption, n(|de|) + 1 for emission.  Both
    // branches are 1 / |expm1(de / T)|; expm1 keeps small gaps accurate and
    // the overflow for very large gaps collapses to 0 as it should.
    const double occ = 1.0 / std::abs(std::expm1(de / bath.temperature));
    return kTwoPi * c2 * occ;
}

} // namespace

double rate(int from, int to, const BathSpec& bath, const WellModel& well)
{
    if (from < 0 || to < 0 || from >= well.n_levels() || to >= well.n_levels())
        throw OutOfRange("rate: level index out of range");
    if (bath.temperature <= 0 || bath.mode_speed <= 0 || bath.coupling < 0)
        throw OutOfRange("rate: bath parameters out of range");
    if (from == to)
        return 0.0;
    return pair_rate(well.energies[from], well.energies[to], well.dipole(from, to), bath);
}

RateTable rate_table(const BathSpec& bath, const WellModel& well)
{
    const int n = well.n_levels();
    RateTable t;
    t.gamma = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                t.gamma(i, j) = pair_rate(well.energies[i], well.energies[j], well.dipole(i, j), bath);
    t.loss = t.gamma.rowwise().sum();
    return t;
}

Eigen::VectorXd boltzmann_weights(const WellModel& well, double temperature)
{
    if (temperature <= 0)
        throw OutOfRange("temperature must be positive");
    const int n = well.n_levels();
    Eigen::VectorXd p(n);
    const double e0 = well.energies[0];
    for (int i = 0; i < n; ++i)
        p(i) = std::exp(-(well.energies[i] - e0) / temperature);
    return p / p.sum();
}

ThermalAverages thermal_averages(const RateTable& table, const WellModel& well, double temperature)
{
    if (table.n_levels() != well.n_levels())
        throw DimensionMismatch("thermal_averages: table and well disagree on level count");
    const Eigen::VectorXd p = boltzmann_weights(well, temperature);
    ThermalAverages out;
    out.gamma_avg = p.dot(table.loss);
    out.g_avg = 0.0;
    for (int i = 0; i < well.n_levels(); ++i)
        out.g_avg += p(i) * well.splittings[i];
    return out;
}

double q_for_Q(double target_Q, const WellModel& well, double temperature, double mode_speed)
{
    if (target_Q < 0)
        throw OutOfRange("target_Q must be >= 0");
    if (target_Q == 0.0)
        return 0.0;
    BathSpec unit{temperature, 1.0, mode_speed};
    const auto avg = thermal_averages(rate_table(unit, well), well, temperature);
    if (avg.gamma_avg <= 0.0)
        throw DegenerateSpectrum("q_for_Q: no bath transitions available at unit coupling");
    return std::sqrt(target_Q * avg.g_avg / avg.gamma_avg);
}

} // namespace dwell
