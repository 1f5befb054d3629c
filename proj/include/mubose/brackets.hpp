#pragma once

#include <cstdint>
#include <string>

#include "mubose/deformation.hpp"
#include "mubose/errors.hpp"

namespace mubose {

/// [n]_mu = n/(1 + mu*n) over any field-like coefficient type.
/// The generic form exists so polynomial operators can run in exact
/// rational arithmetic; production code uses the double overloads below.
template <typename T>
T bracket_value(std::int64_t n, const T& mu) {
    return T(n) / (T(1) + mu * T(n));
}

/// The mu-bracket [n]_mu = n/(1+mu*n), n >= 1.
inline double mu_bracket(std::int64_t n, DeformationParameter mu) {
    if (n < 1)
        throw domain_error("mu_bracket requires n >= 1, got " + std::to_string(n));
    return bracket_value(n, mu.value());
}

/// The shifted product [n; mu] = (1+mu)(1+2mu)...(1+n*mu); empty product for n = 0.
inline double mu_shift_product(std::int64_t n, DeformationParameter mu) {
    if (n < 0)
        throw domain_error("mu_shift_product requires n >= 0, got " + std::to_string(n));
    double prod = 1.0;
    for (std::int64_t k = 1; k <= n; ++k) prod *= 1.0 + mu.value() * static_cast<double>(k);
    return prod;
}

/// The mu-factorial [n]_mu! = n!/[n; mu] = prod_{k<=n} [k]_mu; [0]_mu! = 1.
inline double mu_factorial(std::int64_t n, DeformationParameter mu) {
    if (n < 0)
        throw domain_error("mu_factorial requires n >= 0, got " + std::to_string(n));
    double prod = 1.0;
    for (std::int64_t k = 1; k <= n; ++k) prod *= bracket_value(k, mu.value());
    return prod;
}

} // namespace mubose
