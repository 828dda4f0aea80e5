#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "covercalc/bigint.hpp"

namespace covercalc {

/// Integer polynomial, dense ascending coefficients, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> ascending);
    explicit IntPoly(std::vector<BigInt> ascending);
    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(std::size_t degree, const BigInt& c = BigInt(1));

    /// 1 + t + ... + t^{n-1}
    static IntPoly all_ones(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    /// degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

    bool operator==(const IntPoly& other) const = default;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const BigInt& c) const;

    BigInt eval(const BigInt& x) const;

    /// Exact quotient; throws std::domain_error when the division leaves a remainder.
    IntPoly divide_exact(const IntPoly& divisor) const;

    /// Same polynomial with positive leading coefficient (multiplies by -1 if needed).
    IntPoly positive_leading() const;

    bool is_palindromic() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Laurent polynomial: poly * t^low.
class LaurentPoly {
public:
    LaurentPoly() : low_(0) {}
    LaurentPoly(IntPoly p, long low) : low_(low), poly_(std::move(p)) { normalize(); }
    static LaurentPoly constant(const BigInt& c) { return LaurentPoly(IntPoly::constant(c), 0); }
    static LaurentPoly t_power(long k) { return LaurentPoly(IntPoly::constant(1), k); }

    bool is_zero() const { return poly_.is_zero(); }
    long low() const { return low_; }
    const IntPoly& poly() const { return poly_; }

    bool operator==(const LaurentPoly& other) const = default;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    /// Drop the unit t^k factor: the underlying IntPoly with lowest degree 0.
    IntPoly unit_normalized() const { return poly_; }

private:
    void normalize();
    long low_;
    IntPoly poly_;  // lowest coefficient nonzero after normalize
};

/// Resultant Res(f, g) via exact Sylvester-matrix determinant.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Determinant of a square polynomial matrix, fraction-free elimination.
/// A row swap flips the sign of the returned determinant.
IntPoly det_poly_matrix(std::vector<std::vector<IntPoly>> a);

}  // namespace covercalc
