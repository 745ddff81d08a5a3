#include "dwell/wellmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dwell {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Quantization conditions of the symmetric double square well, in units where
// the infinite single well of width w has E1 = 1 (so k w = pi sqrt(E) and
// kappa * b = (pi b / w) sqrt(U0 - E)).  The even (symmetric) branch matches
// cosh in the barrier, the odd branch sinh:
//   even: kappa tanh(kappa b) + k cot(k w) = 0
//   odd : kappa coth(kappa b) + k cot(k w) = 0
// Both are scaled by w/pi to keep magnitudes O(1).
double matching(double energy, const WellSpec& spec, bool odd)
{
    const double u0 = spec.barrier_height;
    const double s = std::sqrt(energy);
    const double kb = kPi * spec.barrier_half_width / spec.half_width * std::sqrt(u0 - energy);
    const double h = odd ? 1.0 / std::tanh(kb) : std::tanh(kb);
    const double cot = std::cos(kPi * s) / std::sin(kPi * s);
    return std::sqrt(u0 - energy) * h + s * cot;
}

// Brent root finder on a bracketing interval [a, b] with f(a) f(b) < 0.
template <typename F>
double brent(F f, double a, double b, double fa, double fb)
{
    double c = b, fc = fb;
    double d = b - a, e = b - a;
    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 1e-300;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) { // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else { // inverse quadratic interpolation
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::abs(d) > tol1)
            b += d;
        else
            b += (xm >= 0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

double solve_branch(const WellSpec& spec, int level, bool odd)
{
    const double u0 = spec.barrier_height;
    const double n = static_cast<double>(level);
    const double lo = (n - 0.5) * (n - 0.5) * (1.0 + 1e-12) + 1e-300;
    const double hi = std::min(n * n, u0) * (1.0 - 1e-12);
    if (lo >= hi)
        throw UnboundLevel("doublet " + std::to_string(level) + " lies above the barrier (U0 = " + std::to_string(u0) + ")");
    auto f = [&](double x) { return matching(x, spec, odd); };
    const double fa = f(lo), fb = f(hi);
    if (!(fa > 0.0) || !(fb < 0.0)) {
        if (hi >= u0 * (1.0 - 1e-9))
            throw UnboundLevel("doublet " + std::to_string(level) + " has no bound root below U0");
        throw RootNotBracketed("no sign change for doublet " + std::to_string(level) + (odd ? " (odd)" : " (even)"));
    }
    return brent(f, lo, hi, fa, fb);
}

} // namespace

std::vector<double> single_well_levels(const WellSpec& spec)
{
    if (spec.n_levels < 1)
        throw OutOfRange("n_levels must be >= 1");
    std::vector<double> out(spec.n_levels);
    for (int i = 1; i <= spec.n_levels; ++i)
        out[i - 1] = static_cast<double>(i) * i;
    return out;
}

std::vector<std::pair<double, double>> doublet_energies(const WellSpec& spec)
{
    if (spec.n_levels < 1)
        throw OutOfRange("n_levels must be >= 1");
    if (spec.barrier_height <= 0 || spec.half_width <= 0 || spec.barrier_half_width <= 0)
        throw OutOfRange("well geometry parameters must be positive");
    std::vector<std::pair<double, double>> out;
    out.reserve(spec.n_levels);
    for (int i = 1; i <= spec.n_levels; ++i) {
        const double even = solve_branch(spec, i, false);
        const double odd = solve_branch(spec, i, true);
        out.emplace_back(even, odd);
    }
    return out;
}

std::vector<double> tunneling_splittings(const WellSpec& spec)
{
    const auto pairs = doublet_energies(spec);
    std::vector<double> g(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        g[i] = 0.5 * (pairs[i].second - pairs[i].first);
    return g;
}

Eigen::MatrixXd dipole_matrix(const WellSpec& spec)
{
    const int n = spec.n_levels;
    const double L = spec.half_width;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            if ((k - j) % 2 == 0)
                continue; // parity selection rule
            const double num = 8.0 * L * j * k;
            const double den = kPi * kPi * double(j * j - k * k) * double(j * j - k * k);
            x(j - 1, k - 1) = x(k - 1, j - 1) = num / den;
        }
    }
    return x;
}

double bias(double t, const BiasSchedule& schedule)
{
    const double half = 0.5 * schedule.t_span;
    if (half <= 0)
        throw OutOfRange("bias t_span must be positive");
    const double u = (t - schedule.t_zero) / half;
    const double u3 = std::clamp(u * u * u, -1.0, 1.0);
    return -schedule.amplitude * u3;
}

WellModel WellModel::build(const WellSpec& spec)
{
    WellModel m;
    m.spec = spec;
    m.energies = single_well_levels(spec);
    m.splittings = tunneling_splittings(spec);
    m.dipole = dipole_matrix(spec);

    for (int i = 0; i < spec.n_levels; ++i) {
        if (!(m.splittings[i] > 0.0))
            throw RootNotBracketed("vanishing splitting at level " + std::to_string(i + 1));
        if (i > 0 && m.splittings[i] <= m.splittings[i - 1])
            throw RootNotBracketed("splittings not increasing at level " + std::to_string(i + 1));
    }
    if (spec.bias_schedule) {
        const auto& b = *spec.bias_schedule;
        if (b.amplitude <= 0 || b.t_span <= 0)
            throw OutOfRange("bias amplitude and span must be positive");
        const double gmax = m.splittings.back();
        double gap_min = std::numeric_limits<double>::max();
        for (int i = 0; i + 1 < spec.n_levels; ++i)
            gap_min = std::min(gap_min, m.energies[i + 1] - m.energies[i]);
        if (spec.n_levels == 1)
            gap_min = 3.0; // spacing to the (untracked) next doublet
        if (b.amplitude < spec.bias_min_g_factor * gmax)
            throw OutOfRange("bias amplitude below " + std::to_string(spec.bias_min_g_factor) + " * max g");
        if (b.amplitude > spec.bias_max_gap_factor * gap_min)
            throw OutOfRange("bias amplitude above " + std::to_string(spec.bias_max_gap_factor) + " * min level gap");
    }
    return m;
}

} // namespace dwell
