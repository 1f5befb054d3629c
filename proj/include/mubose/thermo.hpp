#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "mubose/brackets.hpp"
#include "mubose/deformation.hpp"
#include "mubose/errors.hpp"
#include "mubose/special_functions.hpp"

namespace mubose {

enum class Regime { AboveTc, BelowTc };

/// Phase boundary slack: a state is condensed iff lambda^3/v exceeds
/// g_{3/2}^{(mu)}(1) - kCondensationTieBreak; ties resolve to condensed.
inline constexpr double kCondensationTieBreak = 1e-12;

/// Reduced units throughout: hbar = m = k_B = 1, so lambda = sqrt(2*pi/T).
inline double thermal_wavelength(double temperature) {
    if (!(temperature > 0.0))
        throw domain_error("thermal_wavelength requires T > 0, got " +
                           std::to_string(temperature));
    return std::sqrt(2.0 * M_PI / temperature);
}

/// Summation budget used inside the fugacity solver. Root-bracketing
/// probes near z -> 1 cost ~40/(1-z) series terms, so the solver needs
/// far more headroom than the library-wide default of 1e7.
inline SummationControl solver_summation_control(double tol = 1e-12) {
    return SummationControl(tol, 200'000'000);
}

struct FugacityResult {
    double z;
    Regime regime;
};

/// Solve g_{3/2}^{(mu)}(z) = y for the fugacity, y = lambda^3/v >= 0.
/// Below the condensation density the root is unique (g_{3/2} is strictly
/// increasing); at or above it the gas condenses and z = 1. Bisection
/// followed by a safeguarded Newton polish; residual tolerance ctl.tol.
inline FugacityResult fugacity_from_density(double y, DeformationParameter mu,
                                            const SummationControl& ctl =
                                                solver_summation_control()) {
    if (y < 0.0) throw domain_error("fugacity_from_density requires y >= 0");
    if (y == 0.0) return {0.0, Regime::AboveTc};
    const BoseOrder l32(3, 2);
    const BoseOrder l12(1, 2);
    const double saturation = mu_polylog(l32, 1.0, mu, ctl);
    if (y >= saturation - kCondensationTieBreak) return {1.0, Regime::BelowTc};

    const auto residual = [&](double z) { return mu_polylog(l32, z, mu, ctl) - y; };
    double lo = 0.0, hi = 1.0 - 1e-15;
    // f(lo) = -y < 0; f(hi) > 0 is guaranteed for mu > 0 by the tie-break
    // margin, and checked for mu = 0 where the square-root cusp can push
    // the root beyond the bracket cap.
    double z = std::min(y / saturation, hi);  // secant-flavoured start
    double fz = residual(z);
    (fz < 0.0 ? lo : hi) = z;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fz) <= ctl.tol) return {z, Regime::AboveTc};
        // Newton step from g'_{3/2}(z) = g_{1/2}(z)/z, kept inside the bracket.
        double znext = z;
        if (z > 0.0) {
            const double slope = mu_polylog(l12, z, mu, ctl) / z;
            znext = z - fz / slope;
        }
        if (!(znext > lo && znext < hi)) znext = 0.5 * (lo + hi);
        if (znext == z) break;
        z = znext;
        fz = residual(z);
        (fz < 0.0 ? lo : hi) = z;
        if (hi - lo < 1e-16 * std::max(1.0, hi)) break;
    }
    if (std::abs(fz) <= ctl.tol) return {z, Regime::AboveTc};
    throw convergence_error("fugacity solve did not meet the residual tolerance (density "
                            "within the unresolvable band below the condensation point)");
}

/// Thermodynamic state of the mu-Bose gas in reduced units. Build with
/// make_state (from T and v) or make_state_from_fugacity; both keep the
/// phase-consistency invariants (condensed states carry z = 1).
struct GasState {
    DeformationParameter mu;
    double temperature;
    double specific_volume;
    double fugacity;
    double lambda;
    Regime regime;
};

inline GasState make_state(DeformationParameter mu, double temperature, double specific_volume,
                           const SummationControl& ctl = solver_summation_control()) {
    if (!(specific_volume > 0.0)) throw domain_error("specific volume must be positive");
    const double lambda = thermal_wavelength(temperature);
    const double y = lambda * lambda * lambda / specific_volume;
    const FugacityResult f = fugacity_from_density(y, mu, ctl);
    return {mu, temperature, specific_volume, f.z, lambda, f.regime};
}

/// State pinned by its fugacity; the specific volume is derived from the
/// uncondensed density relation, so z = 1 yields the exactly-critical state.
inline GasState make_state_from_fugacity(DeformationParameter mu, double temperature, double z,
                                         const SummationControl& ctl = SummationControl()) {
    if (!(z > 0.0 && z <= 1.0))
        throw domain_error("make_state_from_fugacity requires 0 < z <= 1");
    const double lambda = thermal_wavelength(temperature);
    const double y = mu_polylog(BoseOrder(3, 2), z, mu, ctl);
    const double v = lambda * lambda * lambda / y;
    return {mu, temperature, v, z, lambda, z == 1.0 ? Regime::BelowTc : Regime::AboveTc};
}

namespace detail {

inline double cube(double x) { return x * x * x; }

inline void check_state(const GasState& s) {
    if (s.regime == Regime::BelowTc && s.fugacity != 1.0)
        throw domain_error("inconsistent gas state: condensed regime requires z = 1");
    if (!(s.fugacity >= 0.0 && s.fugacity <= 1.0))
        throw domain_error("inconsistent gas state: fugacity outside [0,1]");
}

} // namespace detail

struct ParticleNumbers {
    double thermal;
    double ground;
    double total;
};

/// Thermal (continuum) part of the particle number, (V/lambda^3) g_{3/2}(z).
inline double thermal_particle_number(const GasState& s, double volume,
                                      const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    return volume / detail::cube(s.lambda) * mu_polylog(BoseOrder(3, 2), s.fugacity, s.mu, ctl);
}

/// Total particle number split into the continuum term and the separated
/// ground-state term g_0(z). The ground term diverges at z = 1; use
/// thermal_particle_number for condensed states.
inline ParticleNumbers total_particle_number(const GasState& s, double volume,
                                             const SummationControl& ctl = SummationControl()) {
    const double thermal = thermal_particle_number(s, volume, ctl);
    const double ground = mu_polylog(BoseOrder(0), s.fugacity, s.mu, ctl);
    return {thermal, ground, thermal + ground};
}

/// ln Z^{(mu)} = (V/lambda^3) g_{5/2}(z) + g_1(z), the grand partition
/// function with the separated ground-state contribution. At mu = 0 the
/// g_1 term is the harmonic series at z = 1 and diverges.
inline double log_partition(const GasState& s, double volume,
                            const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    return volume / detail::cube(s.lambda) * mu_polylog(BoseOrder(5, 2), s.fugacity, s.mu, ctl) +
           mu_polylog(BoseOrder(1), s.fugacity, s.mu, ctl);
}

/// Equation-of-state pressure P = (T/lambda^3) g_{5/2}(z) (k_B = 1); the
/// subextensive ground term is dropped in the thermodynamic limit.
inline double pressure(const GasState& s, const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    if (s.fugacity == 0.0) return 0.0;
    return s.temperature / detail::cube(s.lambda) *
           mu_polylog(BoseOrder(5, 2), s.fugacity, s.mu, ctl);
}

/// Second to fifth virial coefficients (A, B, C, D in the paper's naming).
struct VirialCoefficients {
    double a2;
    double a3;
    double a4;
    double a5;
};

/// Closed-form virial coefficients of the deformed equation of state.
/// Deformation enters only through brackets of integers, including powers
/// of the mu-unity [1]_mu = 1/(1+mu).
inline VirialCoefficients virial_closed_form(DeformationParameter mu) {
    const double u = bracket_value<double>(1, mu.value());
    const double b2 = bracket_value<double>(2, mu.value());
    const double b3 = bracket_value<double>(3, mu.value());
    const double b4 = bracket_value<double>(4, mu.value());
    const double b5 = bracket_value<double>(5, mu.value());
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    const double u2 = u * u;
    const double u4 = u2 * u2;
    VirialCoefficients v{};
    v.a2 = -b2 / (8.0 * s2 * u2);                                   // 2^{7/2} = 8 sqrt2
    v.a3 = b2 * b2 / (32.0 * u4) - 2.0 * b3 / (27.0 * s3 * u2 * u); // 3^{7/2} = 27 sqrt3
    v.a4 = -5.0 * b2 * b2 * b2 / (256.0 * s2 * u4 * u2)             // 2^{17/2} = 256 sqrt2
           + b2 * b3 / (12.0 * s2 * s3 * u4 * u)                    // 2^{5/2} 3^{3/2} = 12 sqrt6
           - 3.0 * b4 / (128.0 * u4);
    v.a5 = 7.0 * b2 * b2 * b2 * b2 / (1024.0 * u4 * u4)
           - b2 * b2 * b3 / (24.0 * s3 * u4 * u2 * u)               // 2^3 3^{3/2} = 24 sqrt3
           + 2.0 * b3 * b3 / (243.0 * u4 * u2)
           + b2 * b4 / (32.0 * s2 * u4 * u2)                        // 2^{11/2} = 32 sqrt2
           - 4.0 * b5 / (125.0 * s5 * u4 * u);                      // 5^{7/2} = 125 sqrt5
    return v;
}

/// Condensation temperature Tc = 2*pi / (v g_{3/2}^{(mu)}(1))^{2/3}.
inline double critical_temperature(double specific_volume, DeformationParameter mu,
                                   const SummationControl& ctl = SummationControl()) {
    if (!(specific_volume > 0.0))
        throw domain_error("critical_temperature requires v > 0");
    const double g = mu_polylog(BoseOrder(3, 2), 1.0, mu, ctl);
    return 2.0 * M_PI / std::pow(specific_volume * g, 2.0 / 3.0);
}

enum class TcRatioNumerator {
    /// Computed g_{3/2}^{(0)}(1): the ratio is exactly 1 at mu = 0.
    ComputedZeta,
    /// The paper's printed 2.61.
    PaperConstant,
};

/// Ratio of the deformed condensation temperature to the undeformed one,
/// (zeta(3/2)/g_{3/2}^{(mu)}(1))^{2/3}; increasing in mu.
inline double tc_ratio(DeformationParameter mu,
                       TcRatioNumerator numerator = TcRatioNumerator::ComputedZeta,
                       const SummationControl& ctl = SummationControl()) {
    const double top = numerator == TcRatioNumerator::PaperConstant
                           ? 2.61
                           : mu_polylog(BoseOrder(3, 2), 1.0, DeformationParameter(0.0), ctl);
    const double bottom = mu_polylog(BoseOrder(3, 2), 1.0, mu, ctl);
    return std::pow(top / bottom, 2.0 / 3.0);
}

/// Internal energy U = (3/2) N T (v/lambda^3) g_{5/2}(z); the same form
/// holds below Tc with z = 1 (which condensed states carry).
inline double internal_energy(const GasState& s, double particle_number,
                              const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    if (s.fugacity == 0.0) return 0.0;
    return 1.5 * particle_number * s.temperature * s.specific_volume / detail::cube(s.lambda) *
           mu_polylog(BoseOrder(5, 2), s.fugacity, s.mu, ctl);
}

/// Heat capacity at constant volume. Above Tc,
///   Cv/Nk = (15/4)(v/lambda^3) g_{5/2}(z) - (9/4) g_{3/2}(z)/g_{1/2}(z);
/// at and below Tc the correction term is absent (it vanishes as z -> 1
/// at mu = 0 where g_{1/2} diverges, and switches off discontinuously for
/// mu > 0 -- the finite Cv jump of the deformed gas).
inline double specific_heat(const GasState& s, double particle_number,
                            const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    const double v_over_l3 = s.specific_volume / detail::cube(s.lambda);
    if (s.regime == Regime::BelowTc)
        return particle_number * 3.75 * v_over_l3 *
               mu_polylog(BoseOrder(5, 2), 1.0, s.mu, ctl);
    if (s.fugacity == 0.0) return 1.5 * particle_number;  // classical limit
    const double g52 = mu_polylog(BoseOrder(5, 2), s.fugacity, s.mu, ctl);
    const double g32 = mu_polylog(BoseOrder(3, 2), s.fugacity, s.mu, ctl);
    const double g12 = mu_polylog(BoseOrder(1, 2), s.fugacity, s.mu, ctl);
    return particle_number * (3.75 * v_over_l3 * g52 - 2.25 * g32 / g12);
}

/// Entropy S/Nk = (5/2)(v/lambda^3) g_{5/2}(z) - ln z, with v = V/N; the
/// ln z term vanishes at z = 1, so the branches agree at the transition.
inline double entropy(const GasState& s, double particle_number, double volume,
                      const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    if (!(s.fugacity > 0.0)) throw domain_error("entropy requires z > 0 for the ln z term");
    const double v_over_l3 = volume / particle_number / detail::cube(s.lambda);
    const double g52 = mu_polylog(BoseOrder(5, 2), s.fugacity, s.mu, ctl);
    return particle_number * (2.5 * v_over_l3 * g52 - std::log(s.fugacity));
}

/// Condensate fraction N_0/N = 1 - (v/lambda^3) g_{3/2}^{(mu)}(1)
///                           = 1 - (T/Tc)^{3/2}, clamped to [0,1];
/// zero above the transition.
inline double condensate_fraction(const GasState& s, double specific_volume,
                                  const SummationControl& ctl = SummationControl()) {
    detail::check_state(s);
    if (s.regime == Regime::AboveTc) return 0.0;
    const double frac = 1.0 - specific_volume / detail::cube(s.lambda) *
                                  mu_polylog(BoseOrder(3, 2), 1.0, s.mu, ctl);
    return std::clamp(frac, 0.0, 1.0);
}

inline double condensate_fraction(const GasState& s,
                                  const SummationControl& ctl = SummationControl()) {
    return condensate_fraction(s, s.specific_volume, ctl);
}

} // namespace mubose
