#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mubose/brackets.hpp"
#include "mubose/deformation.hpp"
#include "mubose/errors.hpp"

namespace mubose {

/// Power series truncated at a fixed order K: coefficients c_0..c_K of
/// z^0..z^K. Operations never report coefficients beyond K; mixed-order
/// operands truncate to the smaller K. Immutable value semantics.
class power_series {
public:
    explicit power_series(int order) : c_(static_cast<std::size_t>(order) + 1, 0.0) {
        if (order < 1) throw domain_error("power series order must be >= 1");
    }

    power_series(int order, std::vector<double> coeffs) : power_series(order) {
        const std::size_t n = std::min(coeffs.size(), c_.size());
        std::copy(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), c_.begin());
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    double coefficient(int k) const {
        return (k >= 0 && k <= order()) ? c_[static_cast<std::size_t>(k)] : 0.0;
    }

    void set_coefficient(int k, double v) {
        if (k < 0 || k > order()) throw domain_error("coefficient index beyond series order");
        c_[static_cast<std::size_t>(k)] = v;
    }

    const std::vector<double>& coefficients() const { return c_; }

    /// The identity series z (to the given order).
    static power_series identity(int order) {
        power_series s(order);
        s.set_coefficient(1, 1.0);
        return s;
    }

private:
    std::vector<double> c_;
};

/// Cauchy product truncated at min(order_a, order_b).
inline power_series multiply(const power_series& a, const power_series& b) {
    const int k = std::min(a.order(), b.order());
    power_series out(k);
    for (int i = 0; i <= k; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += a.coefficient(j) * b.coefficient(i - j);
        out.set_coefficient(i, acc);
    }
    return out;
}

inline power_series add(const power_series& a, const power_series& b) {
    const int k = std::min(a.order(), b.order());
    power_series out(k);
    for (int i = 0; i <= k; ++i) out.set_coefficient(i, a.coefficient(i) + b.coefficient(i));
    return out;
}

/// Horner composition outer(inner(z)); inner must have zero constant term.
inline power_series compose(const power_series& outer, const power_series& inner) {
    if (inner.coefficient(0) != 0.0)
        throw domain_error("compose requires the inner series to have zero constant term");
    const int k = std::min(outer.order(), inner.order());
    power_series acc(k);
    for (int n = outer.order() <= k ? outer.order() : k; n >= 0; --n) {
        acc = multiply(acc, inner);
        acc.set_coefficient(0, acc.coefficient(0) + outer.coefficient(n));
    }
    return acc;
}

/// Compositional inverse: returns g with compose(g, f) = compose(f, g) = z
/// to order K. Needs f(0) = 0 and f'(0) != 0. Coefficients are solved one
/// order at a time against the composition residue.
inline power_series revert(const power_series& f) {
    if (f.coefficient(0) != 0.0)
        throw domain_error("revert requires zero constant term");
    if (f.coefficient(1) == 0.0)
        throw domain_error("revert requires a nonzero linear coefficient");
    const int k = f.order();
    power_series g(k);
    g.set_coefficient(1, 1.0 / f.coefficient(1));
    for (int m = 2; m <= k; ++m) {
        // With g exact below order m and g_m = 0, the residue of f(g(y)) at
        // y^m depends on g_m linearly through f_1 alone.
        const power_series residue = compose(f, g);
        g.set_coefficient(m, g.coefficient(m) - residue.coefficient(m) / f.coefficient(1));
    }
    return g;
}

/// Euler operator z d/dz: multiplies coefficient n by n (kills constants).
inline power_series euler(const power_series& f) {
    power_series out(f.order());
    for (int n = 1; n <= f.order(); ++n) out.set_coefficient(n, f.coefficient(n) * n);
    return out;
}

/// Inverse Euler operator (z d/dz)^{-1}: divides coefficient n by n; the
/// n = 0 mode is not invertible, so the constant term must vanish.
inline power_series inverse_euler(const power_series& f) {
    if (f.coefficient(0) != 0.0)
        throw domain_error("inverse_euler requires zero constant term");
    power_series out(f.order());
    for (int n = 1; n <= f.order(); ++n) out.set_coefficient(n, f.coefficient(n) / n);
    return out;
}

namespace detail {

/// Series of g_l^{(mu)} in the fugacity: coefficient of z^n is
/// [n]_mu / n^{(twice_l+2)/2}, n = 1..K.
inline power_series bose_series(int twice_l, DeformationParameter mu, int order) {
    power_series s(order);
    for (int n = 1; n <= order; ++n) {
        const double x = static_cast<double>(n);
        double w = 1.0;
        const int h = twice_l + 2;
        for (int e = 0; e < h / 2; ++e) w *= x;
        if (h & 1) w *= std::sqrt(x);
        s.set_coefficient(n, bracket_value(n, mu.value()) / w);
    }
    return s;
}

} // namespace detail

/// Virial coefficients by series reversion, independent of the closed
/// forms: revert the fugacity series of lambda^3/v = g_{3/2}^{(mu)}(z),
/// substitute into Pv/kT = g_{5/2}^{(mu)}(z)/(lambda^3/v), and read off
/// the coefficients of (lambda^3/v)^1..^{K-1}. The leading coefficient of
/// the equation of state is 1 by construction.
inline std::vector<double> virial_from_reversion(DeformationParameter mu, int order) {
    if (order < 5) throw domain_error("virial_from_reversion requires order >= 5");
    const power_series density = detail::bose_series(3, mu, order);   // g_{3/2}
    const power_series pressure = detail::bose_series(5, mu, order);  // g_{5/2}
    const power_series z_of_y = revert(density);
    const power_series p_of_y = compose(pressure, z_of_y);
    // Pv/kT = p_of_y / y: shift one power down; p_of_y.coefficient(1) == 1.
    std::vector<double> out(static_cast<std::size_t>(order) - 1);
    for (int j = 2; j <= order; ++j) out[static_cast<std::size_t>(j) - 2] = p_of_y.coefficient(j);
    return out;
}

} // namespace mubose
