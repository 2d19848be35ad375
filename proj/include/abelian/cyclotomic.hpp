#pragma once

#include <complex>
#include <string>
#include <vector>

#include "abelian/rational.hpp"

namespace abelian {

// Euler totient and the n-th cyclotomic polynomial Phi_n (monic, integer
// coefficients, degree phi(n)), computed by exact division of x^n - 1 by the
// product of Phi_d over proper divisors d | n.
int euler_phi(int n);
std::vector<Integer> cyclotomic_polynomial(int n);

// Element of Q(zeta_n), stored as a rational coefficient vector of length
// phi(n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}, reduced mod Phi_n.
// Reduction is canonical: two elements of the same order are equal iff their
// coefficient vectors are equal. Values are immutable after construction.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r, int order = 1);
    explicit Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

    // zeta_n^k, reduced mod Phi_n.
    static Cyclotomic root_of_unity(int n, long k);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    // Image in Q(zeta_m), order | m.
    Cyclotomic embedded(int m) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    // Throws DivisionByZeroError on zero.
    Cyclotomic inverse() const;

    // Ring automorphism zeta -> zeta^{-1} (complex conjugation).
    Cyclotomic conjugated() const;

    // Numeric value; absolute error well below 1e-13 for unit-scale operands.
    std::complex<double> to_complex() const;

    // Canonical text form z{n}:[c0,c1,...].
    std::string to_string() const;
    static Cyclotomic parse(const std::string& s);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  private:
    Cyclotomic(int order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    int order_;
    std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) {
    return Cyclotomic(r) * c;
}

}  // namespace abelian
