#pragma once

/// Dense polynomials over the exact rationals, rational functions, and
/// truncated power series. Just enough machinery to carry generating
/// functions and their series expansions; no symbolic simplification
/// beyond gcd normalization.

#include <vector>

#include "trisum/rational.hpp"

namespace trisum {

// Coefficients ascending by degree; trailing coefficient nonzero unless
// the polynomial is zero (empty coefficient list).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    static Polynomial constant(const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(size_t i) const;

    Rat eval(const Rat& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& o) const = default;

private:
    std::vector<Rat> coeffs_;
};

struct PowerSeries {
    std::vector<Rat> coefficients; // length = truncation order + 1
    long order() const { return static_cast<long>(coefficients.size()) - 1; }
};

// num/den with den not the zero polynomial.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    // SingularError when den(x) = 0.
    Rat eval(const Rat& x) const;

    // Cancels the polynomial gcd and scales so that den(0) = 1 when
    // possible (otherwise the leading denominator coefficient is 1).
    RationalFunction normalized() const;

    bool operator==(const RationalFunction& o) const = default;

private:
    Polynomial num_;
    Polynomial den_;
};

// Monic gcd over Q[x] (Euclid). gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Exact first N+1 Maclaurin coefficients of f. Requires f.den()(0) != 0,
// otherwise DomainError (the series does not exist at 0).
PowerSeries series_expand(const RationalFunction& f, long n_terms);

} // namespace trisum
