#pragma once

#include <cstddef>
#include <vector>

#include "mubose/brackets.hpp"
#include "mubose/deformation.hpp"
#include "mubose/errors.hpp"
#include "mubose/polynomial.hpp"

namespace mubose {

/// Ordinary derivative d/dx.
template <typename T>
polynomial<T> derivative(const polynomial<T>& p) {
    if (p.degree() < 1) return polynomial<T>();
    std::vector<T> out(static_cast<std::size_t>(p.degree()), T(0));
    for (std::size_t k = 1; k < p.coefficients().size(); ++k)
        out[k - 1] = p.coefficients()[k] * T(static_cast<long long>(k));
    return polynomial<T>(std::move(out));
}

/// Jackson q-derivative: x^n -> [n]_q x^{n-1}, [n]_q = (q^n-1)/(q-1).
/// q = 1 is routed to the ordinary derivative (the q->1 limit); q <= 0 is
/// out of domain. The bracket is accumulated as [k]_q = q[k-1]_q + 1, which
/// is exact over rationals.
template <typename T>
polynomial<T> jackson_derivative(const polynomial<T>& p, const T& q) {
    if (!(q > T(0))) throw domain_error("jackson_derivative requires q > 0");
    if (q == T(1)) return derivative(p);
    if (p.degree() < 1) return polynomial<T>();
    std::vector<T> out(static_cast<std::size_t>(p.degree()), T(0));
    T bracket(0);
    for (std::size_t k = 1; k < p.coefficients().size(); ++k) {
        bracket = bracket * q + T(1);
        out[k - 1] = p.coefficients()[k] * bracket;
    }
    return polynomial<T>(std::move(out));
}

/// Two-parameter p,q-derivative: x^n -> [n]_{p,q} x^{n-1} with
/// [n]_{p,q} = (p^n - q^n)/(p - q); p = q is the analytic limit n q^{n-1},
/// and p = 1 recovers the Jackson derivative.
template <typename T>
polynomial<T> pq_derivative(const polynomial<T>& poly, const T& p, const T& q) {
    if (!(p > T(0)) || !(q > T(0)))
        throw domain_error("pq_derivative requires positive parameters");
    if (poly.degree() < 1) return polynomial<T>();
    std::vector<T> out(static_cast<std::size_t>(poly.degree()), T(0));
    if (p == q) {
        T qpow(1);  // q^{k-1}
        for (std::size_t k = 1; k < poly.coefficients().size(); ++k) {
            out[k - 1] = poly.coefficients()[k] * T(static_cast<long long>(k)) * qpow;
            qpow = qpow * q;
        }
    } else {
        // [k]_{p,q} = p [k-1]_{p,q} + q^{k-1}
        T bracket(0);
        T qpow(1);
        for (std::size_t k = 1; k < poly.coefficients().size(); ++k) {
            bracket = bracket * p + qpow;
            out[k - 1] = poly.coefficients()[k] * bracket;
            qpow = qpow * q;
        }
    }
    return polynomial<T>(std::move(out));
}

/// mu-derivative: x^n -> [n]_mu x^{n-1}; mu = 0 gives d/dx.
template <typename T>
polynomial<T> mu_derivative(const polynomial<T>& p, const T& mu) {
    if (p.degree() < 1) return polynomial<T>();
    std::vector<T> out(static_cast<std::size_t>(p.degree()), T(0));
    for (std::size_t k = 1; k < p.coefficients().size(); ++k)
        out[k - 1] = p.coefficients()[k] * bracket_value(static_cast<std::int64_t>(k), mu);
    return polynomial<T>(std::move(out));
}

inline polynomial<double> mu_derivative(const polynomial<double>& p, DeformationParameter mu) {
    return mu_derivative(p, mu.value());
}

/// k-th power of the mu-derivative, applied as k successive derivatives;
/// on monomials it equals the factorial ratio [n]_mu!/[n-k]_mu! x^{n-k}.
template <typename T>
polynomial<T> mu_derivative_iterated(const polynomial<T>& p, const T& mu, int k) {
    if (k < 1) throw domain_error("mu_derivative_iterated requires k >= 1");
    polynomial<T> out = p;
    for (int i = 0; i < k && !out.is_zero(); ++i) out = mu_derivative(out, mu);
    return out;
}

inline polynomial<double> mu_derivative_iterated(const polynomial<double>& p,
                                                 DeformationParameter mu, int k) {
    return mu_derivative_iterated(p, mu.value(), k);
}

/// Anti-mu-derivative: x^n -> x^{n+1}/[n+1]_mu, the right inverse of
/// mu_derivative on polynomials.
template <typename T>
polynomial<T> mu_antiderivative(const polynomial<T>& p, const T& mu) {
    if (p.is_zero()) return polynomial<T>();
    std::vector<T> out(p.coefficients().size() + 1, T(0));
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        out[k + 1] = p.coefficients()[k] / bracket_value(static_cast<std::int64_t>(k) + 1, mu);
    return polynomial<T>(std::move(out));
}

inline polynomial<double> mu_antiderivative(const polynomial<double>& p, DeformationParameter mu) {
    return mu_antiderivative(p, mu.value());
}

/// mu-Leibniz rule for a product of polynomials, assembled pairwise from
/// monomials: for n,m >= 1,
///   D(x^n x^m) = ([n] + [m]) x^{n+m-1} - mu (m[n] + n[m])/(1 + mu(n+m)) x^{n+m-1},
/// where the second piece is the integration-by-parts correction and the
/// constant terms contribute g(0) D f + f(0) D g. Must agree with
/// mu_derivative(f*g) identically; the independent assembly is the point.
template <typename T>
polynomial<T> mu_leibniz(const polynomial<T>& f, const polynomial<T>& g, const T& mu) {
    if (f.is_zero() || g.is_zero()) return polynomial<T>();
    const auto& fc = f.coefficients();
    const auto& gc = g.coefficients();
    std::vector<T> out(fc.size() + gc.size() - 1, T(0));
    for (std::size_t n = 0; n < fc.size(); ++n) {
        if (fc[n] == T(0)) continue;
        for (std::size_t m = 0; m < gc.size(); ++m) {
            if (gc[m] == T(0)) continue;
            if (n + m == 0) continue;  // constant * constant
            const T cf = fc[n] * gc[m];
            if (n == 0) {
                out[m - 1] = out[m - 1] + cf * bracket_value(static_cast<std::int64_t>(m), mu);
            } else if (m == 0) {
                out[n - 1] = out[n - 1] + cf * bracket_value(static_cast<std::int64_t>(n), mu);
            } else {
                const T bn = bracket_value(static_cast<std::int64_t>(n), mu);
                const T bm = bracket_value(static_cast<std::int64_t>(m), mu);
                const T correction = mu * (T(static_cast<long long>(m)) * bn +
                                           T(static_cast<long long>(n)) * bm) /
                                     (T(1) + mu * T(static_cast<long long>(n + m)));
                out[n + m - 1] = out[n + m - 1] + cf * (bn + bm - correction);
            }
        }
    }
    return polynomial<T>(std::move(out));
}

inline polynomial<double> mu_leibniz(const polynomial<double>& f, const polynomial<double>& g,
                                     DeformationParameter mu) {
    return mu_leibniz(f, g, mu.value());
}

} // namespace mubose
