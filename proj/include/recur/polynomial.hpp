#pragma once

#include "recur/interval.hpp"
#include "recur/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace recur {

// Dense univariate polynomial over the rationals. coefficient(i) multiplies
// x^i; the top coefficient is always nonzero (the zero polynomial stores no
// coefficients and reports degree -1).
class Polynomial {
  public:
    Polynomial() = default;
    // Coefficients are canonicalized on entry: GMP comparison semantics
    // assume reduced fractions, so unreduced input must not survive.
    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        for (Rat& c : coeffs_)
            c.canonicalize();
        trim();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rat& c) { return Polynomial({c}); }
    // c * x^e
    static Polynomial monomial(std::size_t e, const Rat& c = Rat(1));
    // coefficients listed from the highest power down, e.g. {1,0,-2,-1} = x^3-2x-1
    static Polynomial from_descending(const std::vector<Rat>& desc);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rat& coefficient(std::size_t i) const; // 0 beyond the degree
    const Rat& leading() const;                  // top coefficient; 0 for the zero polynomial
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    bool has_positive_coefficient() const;
    bool is_integral() const; // all coefficients have denominator 1

    Rat operator()(const Rat& x) const { return eval(x); }
    Rat eval(const Rat& x) const;                    // Horner
    Interval eval_interval(const Interval& x) const; // interval Horner, exact endpoints

    Polynomial derivative() const;
    Polynomial shifted(std::size_t e) const; // multiply by x^e
    Polynomial operator-() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rat& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Quotient and remainder with deg(rem) < deg(divisor). Raises ZeroDivisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

// Exact quotient; raises NotDivisible when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

// Monic gcd (Euclid with monic normalization each step). gcd(0, 0) raises BothZero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Number of *distinct* real roots of p in the half-open interval (lo, hi],
// by Sturm's theorem. Works for non-squarefree p (multiplicities collapse).
// Endpoints that are themselves roots of p are nudged inward by
// width/2^i (i = 1..64); if no root-free endpoint is found, raises EndpointRoot.
int sturm_root_count(const Polynomial& p, const Interval& iv);

std::string to_string(const Polynomial& p); // "x^3 - 2x - 1"; "(1/2)x^2 + 1"
Polynomial parse_polynomial(const std::string& text);

} // namespace recur
