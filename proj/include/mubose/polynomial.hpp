#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mubose/errors.hpp"

namespace mubose {

/// Dense polynomial over an arbitrary field-like coefficient type T:
/// coefficients()[k] multiplies x^k, trailing zeros are normalized away,
/// and the zero polynomial has an empty coefficient list.
///
/// T = double in production; tests instantiate T = rational to run the
/// derivative operators exactly.
template <typename T>
class polynomial {
public:
    polynomial() = default;

    explicit polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static polynomial monomial(std::size_t degree, T coeff = T(1)) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coeff);
        return polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<T>& coefficients() const { return c_; }

    T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    /// Horner evaluation.
    T operator()(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    polynomial operator+(const polynomial& other) const {
        std::vector<T> out(std::max(c_.size(), other.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = out[i] + c_[i];
        for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] = out[i] + other.c_[i];
        return polynomial(std::move(out));
    }

    polynomial operator-(const polynomial& other) const {
        std::vector<T> out(std::max(c_.size(), other.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = out[i] + c_[i];
        for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] = out[i] - other.c_[i];
        return polynomial(std::move(out));
    }

    polynomial operator*(const polynomial& other) const {
        if (is_zero() || other.is_zero()) return polynomial();
        std::vector<T> out(c_.size() + other.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < other.c_.size(); ++j)
                out[i + j] = out[i + j] + c_[i] * other.c_[j];
        return polynomial(std::move(out));
    }

    polynomial operator*(const T& scalar) const {
        std::vector<T> out(c_);
        for (auto& c : out) c = c * scalar;
        return polynomial(std::move(out));
    }

    bool operator==(const polynomial& other) const { return c_ == other.c_; }
    bool operator!=(const polynomial& other) const { return !(*this == other); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

template <typename T>
polynomial<T> operator*(const T& scalar, const polynomial<T>& p) {
    return p * scalar;
}

} // namespace mubose
