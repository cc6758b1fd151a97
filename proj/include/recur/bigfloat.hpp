#pragma once

#include "recur/rational.hpp"

#include <gmpxx.h>

namespace recur {

// Arbitrary-precision binary float. Precision travels with each value;
// helpers below construct everything at one explicit precision so mixed-
// precision surprises cannot creep in.
using BigFloat = mpf_class;

inline long bits_for_digits(long digits) {
    // ~3.33 bits per decimal digit, plus guard bits for iteration slack
    return 4 * digits + 64;
}

inline BigFloat big_float(const Rat& q, long prec_bits) { return BigFloat(q, prec_bits); }
inline BigFloat big_float(double d, long prec_bits) { return BigFloat(d, prec_bits); }

// Minimal complex value over BigFloat. gmp ships no complex type and
// std::complex over a non-trivial class is undefined behaviour, so the four
// arithmetic operations are spelled out here. Division is the textbook
// conjugate formula; inputs are well-scaled (roots of monic polynomials
// inside the Cauchy bound), so no Smith-style rescaling is needed.
struct Cplx {
    BigFloat re, im;

    Cplx() = default;
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(BigFloat r) : im(0, r.get_prec()) { re = std::move(r); }

    Cplx conj() const { return {re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm2()); }

    Cplx operator-() const { return {-re, -im}; }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        BigFloat d = b.norm2();
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
};

} // namespace recur
