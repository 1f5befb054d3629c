#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "mubose/brackets.hpp"
#include "mubose/deformation.hpp"
#include "mubose/errors.hpp"

namespace mubose {

namespace detail {

/// n^(h/2) for integer h >= 0 without a transcendental pow call:
/// one sqrt and an integer power, so repeated term weights stay sharp.
inline double pow_half(double n, int h) {
    double r = 1.0;
    double base = n;
    int e = h / 2;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    if (h & 1) r *= std::sqrt(n);
    return r;
}

/// phi(x) = x^{-l}/(1 + mu x), the z = 1 summand of g_l^{(mu)} once the
/// bracket is folded in. Completely monotone on x > 0, which is what
/// makes the Euler-Maclaurin remainder bound below valid.
inline double polylog_summand_z1(double x, int twice_l, double mu) {
    return 1.0 / (pow_half(x, twice_l) * (1.0 + mu * x));
}

inline double polylog_summand_z1_deriv(double x, double l, double mu) {
    const double p = std::pow(x, -l);
    const double q = 1.0 + mu * x;
    return -l * p / (x * q) - mu * p / (q * q);
}

/// Magnitude of phi'''(x); every Leibniz term carries the same sign, so
/// the absolute values add exactly.
inline double polylog_summand_z1_third_deriv_mag(double x, double l, double mu) {
    const double q = 1.0 + mu * x;
    const double p = std::pow(x, -l);
    double sum = 0.0;
    double rising = 1.0;                     // (l)_j
    const double binom[4] = {1.0, 3.0, 3.0, 1.0};
    const double fact[4] = {6.0, 2.0, 1.0, 1.0};  // fact[j] = (3-j)!
    double xj = 1.0;
    for (int j = 0; j <= 3; ++j) {
        const double mu_pow = std::pow(mu, 3 - j);
        sum += binom[j] * rising * p / xj * fact[j] * mu_pow / std::pow(q, 4 - j);
        rising *= l + j;
        xj *= x;
    }
    return sum;
}

/// Closed form of the tail integral int_a^inf x^{-l}/(1+mu x) dx for
/// half-integer l (= h/2), mu > 0. Substituting u = sqrt(x) gives
/// 2*I_{h-1}(sqrt(a)) with I_k = int_b^inf u^{-k}/(1+mu u^2) du and the
/// partial-fraction recurrence I_k = b^{1-k}/(k-1) - mu I_{k-2}.
inline double polylog_tail_integral(double a, int twice_l, double mu) {
    if (mu == 0.0) {
        const double l = 0.5 * twice_l;
        return std::pow(a, 1.0 - l) / (l - 1.0);
    }
    const double b = std::sqrt(a);
    const double sqrt_mu = std::sqrt(mu);
    const int k_top = twice_l - 1;
    double ik;
    int k = k_top % 2;
    if (k == 0) {
        ik = std::atan(1.0 / (sqrt_mu * b)) / sqrt_mu;
    } else {
        ik = 0.5 * std::log1p(1.0 / (mu * b * b));
    }
    for (k += 2; k <= k_top; k += 2) {
        ik = std::pow(b, 1 - k) / (k - 1) - mu * ik;
    }
    return 2.0 * ik;
}

/// g_l^{(mu)}(1) = sum phi(n): direct partial sum plus the Euler-Maclaurin
/// tail correction  int + phi/2 - phi'/12, remainder <= |phi'''|/720.
inline double polylog_at_unit_fugacity(BoseOrder l, double mu, const SummationControl& ctl) {
    const int h = l.twice();
    const double lv = l.value();
    std::int64_t n_terms = 64;
    while (polylog_summand_z1_third_deriv_mag(static_cast<double>(n_terms + 1), lv, mu) / 720.0 >
           0.25 * ctl.tol) {
        n_terms *= 2;
        if (n_terms > ctl.max_terms)
            throw convergence_error("mu_polylog: z=1 tail correction did not reach tolerance "
                                    "within max_terms");
    }
    double sum = 0.0;
    for (std::int64_t n = n_terms; n >= 1; --n)
        sum += polylog_summand_z1(static_cast<double>(n), h, mu);
    const double a = static_cast<double>(n_terms + 1);
    return sum + polylog_tail_integral(a, h, mu) + 0.5 * polylog_summand_z1(a, h, mu) -
           polylog_summand_z1_deriv(a, lv, mu) / 12.0;
}

} // namespace detail

/// Deformed exponential exp_mu(x) = sum x^n/[n]_mu!. Converges for
/// |x| < 1/mu (any x when mu = 0); the running geometric tail bound uses
/// the decreasing term ratio |x|(mu + 1/(n+1)).
inline double mu_exp(double x, DeformationParameter mu, const SummationControl& ctl = {}) {
    const double m = mu.value();
    if (m > 0.0 && std::abs(x) * m >= 1.0)
        throw divergence_error("mu_exp series diverges: |x| >= 1/mu");
    double sum = 1.0;
    double term = 1.0;
    for (std::int64_t n = 1; n <= ctl.max_terms; ++n) {
        term *= x * (1.0 + m * static_cast<double>(n)) / static_cast<double>(n);
        sum += term;
        const double ratio = std::abs(x) * (m + 1.0 / static_cast<double>(n + 1));
        if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) <= ctl.tol) return sum;
    }
    throw convergence_error("mu_exp did not converge within max_terms");
}

/// Deformed logarithm ln_mu(x) = -sum (1-x)^n/[n]_mu, |1-x| < 1.
inline double mu_ln(double x, DeformationParameter mu, const SummationControl& ctl = {}) {
    const double u = 1.0 - x;
    const double au = std::abs(u);
    if (au >= 1.0)
        throw domain_error("mu_ln requires |1-x| < 1, got x = " + std::to_string(x));
    if (u == 0.0) return 0.0;
    const double m = mu.value();
    double sum = 0.0;
    double upow = 1.0;
    for (std::int64_t n = 1; n <= ctl.max_terms; ++n) {
        upow *= u;
        sum -= upow * (m + 1.0 / static_cast<double>(n));
        const double tail =
            std::abs(upow) * au * (m + 1.0 / static_cast<double>(n + 1)) / (1.0 - au);
        if (tail <= ctl.tol) return sum;
    }
    throw convergence_error("mu_ln did not converge within max_terms");
}

/// Deformed Bose function (mu-polylogarithm)
///   g_l^{(mu)}(z) = sum_{n>=1} [n]_mu z^n / n^{l+1},
/// for 0 <= z <= 1. At z = 1 the series converges iff l > 0 when mu > 0
/// (the bracket saturates at 1/mu) or l > 1 when mu = 0 (it is zeta(l)).
inline double mu_polylog(BoseOrder l, double z, DeformationParameter mu,
                         const SummationControl& ctl = {}) {
    if (z < 0.0 || z > 1.0)
        throw domain_error("mu_polylog requires 0 <= z <= 1, got z = " + std::to_string(z));
    if (z == 0.0) return 0.0;
    const double m = mu.value();
    if (z == 1.0) {
        const bool converges = m > 0.0 ? l.twice() > 0 : l.twice() > 2;
        if (!converges)
            throw divergence_error("mu_polylog diverges at z = 1 for l = " +
                                   std::to_string(l.value()) +
                                   (m > 0.0 ? " with mu > 0" : " with mu = 0"));
        return detail::polylog_at_unit_fugacity(l, m, ctl);
    }
    // z < 1: the folded coefficient n^{-l}/(1+mu n) decreases in n, so the
    // tail after term t_n is bounded by t_n * z/(1-z).
    const int h = l.twice();
    double sum = 0.0;
    double zpow = 1.0;
    const double geo = z / (1.0 - z);
    for (std::int64_t n = 1; n <= ctl.max_terms; ++n) {
        const double x = static_cast<double>(n);
        zpow *= z;
        const double term = zpow / (detail::pow_half(x, h) * (1.0 + m * x));
        sum += term;
        if (term * geo <= ctl.tol) return sum;
    }
    throw convergence_error("mu_polylog did not converge within max_terms at z = " +
                            std::to_string(z));
}

} // namespace mubose
