#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "mubose/deformation.hpp"
#include "mubose/errors.hpp"

namespace mubose {

/// Fixed quadrature rule on [0,1]: strictly interior nodes, positive
/// weights summing to 1 (within 1e-14). Immutable after construction.
class QuadratureRule {
public:
    /// n-point Gauss-Legendre rule mapped from [-1,1] to [0,1].
    static QuadratureRule gauss_legendre(int n) {
        if (n < 1) throw domain_error("quadrature rule needs at least one node");
        std::vector<double> nodes(n), weights(n);
        // Newton on P_n with the Tricomi initial guess; symmetric pairs.
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = 0.5 * (1.0 - x);  // descending x maps to ascending t
            nodes[n - 1 - i] = 0.5 * (1.0 + x);
            weights[i] = 0.5 * w;
            weights[n - 1 - i] = 0.5 * w;
        }
        return QuadratureRule(std::move(nodes), std::move(weights));
    }

    /// Gauss-Legendre rule composed with the grading t = s^grade, which
    /// absorbs t^alpha endpoint behaviour (alpha >= 0) into a smooth
    /// integrand. Node count stays n; weights pick up the Jacobian
    /// grade*s^{grade-1} and still sum to 1 exactly (it is a polynomial).
    static QuadratureRule gauss_legendre_graded(int n, int grade = 4) {
        if (grade < 1) throw domain_error("grading exponent must be >= 1");
        QuadratureRule base = gauss_legendre(n);
        std::vector<double> nodes(base.nodes_), weights(base.weights_);
        for (int i = 0; i < n; ++i) {
            const double s = base.nodes_[i];
            double sp = 1.0;
            for (int k = 0; k < grade - 1; ++k) sp *= s;
            nodes[i] = sp * s;
            weights[i] = base.weights_[i] * grade * sp;
        }
        return QuadratureRule(std::move(nodes), std::move(weights));
    }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    /// Approximate integral of f over [0,1].
    double integrate(const std::function<double(double)>& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
        return acc;
    }

private:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
        : nodes_(std::move(nodes)), weights_(std::move(weights)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (!(nodes_[i] > 0.0 && nodes_[i] < 1.0))
                throw domain_error("quadrature nodes must lie strictly inside (0,1)");
            if (!(weights_[i] > 0.0)) throw domain_error("quadrature weights must be positive");
            sum += weights_[i];
        }
        if (std::abs(sum - 1.0) > 1e-14)
            throw domain_error("quadrature weights must sum to 1");
    }

    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Default rule for the numeric mu-derivative: 64 graded Gauss-Legendre
/// nodes (handles the t^{mu n} endpoint behaviour of monomials to ~1e-13).
inline const QuadratureRule& default_derivative_rule() {
    static const QuadratureRule rule = QuadratureRule::gauss_legendre_graded(64);
    return rule;
}

namespace detail {

/// 5-point central difference for f'(x); step scaled to |x|.
inline double central_derivative(const std::function<double(double)>& f, double x) {
    const double h = 1e-3 * std::max(1.0, std::abs(x));
    const double v = (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
    if (!std::isfinite(v)) throw numeric_error("non-finite function evaluation in derivative");
    return v;
}

} // namespace detail

/// Numeric mu-derivative of a smooth function,
///   D_x^{(mu)} f(x) = int_0^1 t^mu f'(t^mu x) dt,
/// evaluated derivative-free through the exact integration-by-parts form
///   (f(x) - int_0^1 f(t^mu x) dt) / (mu x)          (mu > 0, x != 0).
/// mu = 0 reduces to f'(x) and uses a central difference, as does the
/// f'(0) factor at x = 0 where the integrand is constant in t.
inline double mu_derivative_numeric(const std::function<double(double)>& f, double x,
                                    DeformationParameter mu,
                                    const QuadratureRule& rule = default_derivative_rule()) {
    const double m = mu.value();
    if (m == 0.0) return detail::central_derivative(f, x);
    if (x == 0.0) return detail::central_derivative(f, 0.0) / (1.0 + m);
    double integral = 0.0;
    for (int i = 0; i < rule.node_count(); ++i) {
        const double v = f(std::pow(rule.nodes()[i], m) * x);
        if (!std::isfinite(v))
            throw numeric_error("non-finite function evaluation in mu_derivative_numeric");
        integral += rule.weights()[i] * v;
    }
    const double fx = f(x);
    if (!std::isfinite(fx))
        throw numeric_error("non-finite function evaluation in mu_derivative_numeric");
    return (fx - integral) / (m * x);
}

} // namespace mubose
