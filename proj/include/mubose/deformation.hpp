#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "mubose/errors.hpp"

namespace mubose {

/// Deformation strength mu of the deformed oscillator; valid range 0 <= mu < 1.
/// mu = 0 is the undeformed (ordinary Bose) limit.
class DeformationParameter {
public:
    DeformationParameter() : mu_(0.0) {}

    explicit DeformationParameter(double mu) : mu_(mu) {
        if (!(mu >= 0.0 && mu < 1.0))
            throw domain_error("deformation parameter must satisfy 0 <= mu < 1, got " +
                               std::to_string(mu));
    }

    double value() const { return mu_; }
    bool is_zero() const { return mu_ == 0.0; }

private:
    double mu_;
};

/// Accuracy budget for series summation: absolute bound on the neglected
/// tail, and a hard cap on the number of accumulated terms.
struct SummationControl {
    double tol = 1e-12;
    std::int64_t max_terms = 10'000'000;

    SummationControl() = default;
    SummationControl(double tolerance, std::int64_t terms) : tol(tolerance), max_terms(terms) {
        if (!(tol > 0.0)) throw domain_error("summation tolerance must be positive");
        if (max_terms < 1) throw domain_error("max_terms must be at least 1");
    }
};

/// Order l of a Bose function g_l, kept as an exact half-integer
/// (numerator over denominator 1 or 2) so that the n^{l+1} term weights
/// carry no exponent roundoff.
class BoseOrder {
public:
    BoseOrder(int numerator, int denominator) {
        if (denominator != 1 && denominator != 2)
            throw domain_error("Bose order denominator must be 1 or 2");
        if (numerator < 0)
            throw domain_error("Bose order must be nonnegative");
        if (denominator == 2 && numerator % 2 == 0) {
            numerator /= 2;
            denominator = 1;
        }
        num_ = numerator;
        den_ = denominator;
    }

    BoseOrder(int integer_order) : BoseOrder(integer_order, 1) {}  // NOLINT: implicit by design

    static BoseOrder halves(int twice_l) { return BoseOrder(twice_l, 2); }

    double value() const { return static_cast<double>(num_) / den_; }
    /// 2*l as an exact integer.
    int twice() const { return den_ == 1 ? 2 * num_ : num_; }
    bool is_integer() const { return den_ == 1; }

    bool operator==(const BoseOrder& other) const { return twice() == other.twice(); }

private:
    int num_;
    int den_;
};

} // namespace mubose
