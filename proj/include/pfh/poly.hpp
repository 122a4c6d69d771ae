#ifndef PFH_POLY_HPP
#define PFH_POLY_HPP

/**
 * Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored in ascending order: coeffs[k] multiplies z^k.
 * The zero polynomial is represented by an empty coefficient vector (or any
 * vector of zeros; normalize() trims trailing zeros so degree() is honest).
 *
 * These are the building blocks for piecewise profiles, so the operations we
 * need are evaluation, calculus (derivative, antiderivative, definite
 * integral) and basic ring arithmetic. Everything is exact.
 */

#include <vector>

#include "pfh/rational.hpp"

namespace pfh {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> ascending_coeffs);
    /// Constant polynomial.
    explicit Poly(const Rat& constant);

    /// Degree of the polynomial; the zero polynomial has degree -1.
    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^k (zero when k exceeds the stored degree).
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& z) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// Definite integral over [a, b].
    Rat integral(const Rat& a, const Rat& b) const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly scaled(const Rat& factor) const;
    /// Substitute z -> factor * z.
    Poly compose_scale(const Rat& factor) const;

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

}  // namespace pfh

#endif  // PFH_POLY_HPP
