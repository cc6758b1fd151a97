#pragma once

#include "recur/bigfloat.hpp"
#include "recur/errors.hpp"
#include "recur/interval.hpp"
#include "recur/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace recur {

// Certified enclosure of the unique positive root r of a characteristic
// polynomial P. Invariants: interval().lo > 0, P(lo) < 0 < P(hi), and r is
// the only root of P inside. When bisection lands on r exactly, exact() is
// set and evaluations at r become exact rational arithmetic.
class RootEnclosure {
  public:
    const Polynomial& characteristic() const { return poly_; }
    const Interval& interval() const { return iv_; }
    const std::optional<Rat>& exact() const { return exact_; }

    Rat midpoint() const { return exact_ ? *exact_ : iv_.mid(); }
    Rat width() const { return iv_.width(); }

    // Nested tighter enclosure of the same root (bisection continues).
    RootEnclosure refined(const Rat& max_width) const;

  private:
    friend RootEnclosure principal_root(const Polynomial&, const Rat&);
    RootEnclosure(Polynomial poly, Interval iv, std::optional<Rat> exact)
        : poly_(std::move(poly)), iv_(std::move(iv)), exact_(std::move(exact)) {}

    Polynomial poly_;
    Interval iv_;
    std::optional<Rat> exact_;
};

// Isolates the principal root by bisection of (0, 1 + max c_i]. P must look
// like a characteristic polynomial: monic, integer coefficients, all lower
// coefficients <= 0, constant < 0 (raises NotCharacteristic otherwise).
RootEnclosure principal_root(const Polynomial& P, const Rat& max_width = Rat(1, 1000000));

// Exact sign of Q(r). Decides Q(r) = 0 algebraically via gcd(Q, P) + Sturm
// count on the enclosure, then refines the enclosure until interval
// evaluation of Q certifies the sign. Never returns a wrong answer.
int sign_at_principal_root(const Polynomial& Q, const RootEnclosure& enclosure);
int sign_at_principal_root(const Polynomial& Q, const Polynomial& P);

struct NumericRoot {
    Cplx value;
    int multiplicity;
    BigFloat error; // first-order bound deg * |f(z)/f'(z)| on the squarefree factor
};

struct NumericRootSet {
    std::vector<NumericRoot> roots; // sorted by |value| desc, then re desc, then im desc
    long digits = 0;
    long prec_bits = 0;

    std::size_t total_with_multiplicity() const;
};

// All complex roots to ~`digits` decimal digits: squarefree decomposition
// (Yun) for exact multiplicities, then Aberth-Ehrlich simultaneous iteration
// on each squarefree factor. Raises PrecisionUnreachable if iteration stalls.
NumericRootSet all_roots_numeric(const Polynomial& p, long digits = 30);

// Shape-preserving constants: Cplx must inherit the precision of an existing
// value or fresh zeros would silently truncate accumulations.
template <typename T> struct NumericTraits;

template <> struct NumericTraits<Rat> {
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static Rat one() { return Rat(1); }
};

template <> struct NumericTraits<Cplx> {
    static Cplx zero(const Cplx& like) {
        long prec = like.re.get_prec();
        return {BigFloat(0, prec), BigFloat(0, prec)};
    }
    static Cplx one(const Cplx& like) {
        long prec = like.re.get_prec();
        return {BigFloat(1, prec), BigFloat(0, prec)};
    }
    static Cplx one() { return {BigFloat(1), BigFloat(0)}; }
};

// e_n(values): sum of all n-fold products, by the one-value-at-a-time
// recurrence e_j += v * e_{j-1}. e_0 = 1. Raises IndexOutOfRange for
// n > values.size(). Works for Rat and Cplx alike.
template <typename T> T elementary_symmetric(const std::vector<T>& values, std::size_t n) {
    if (n > values.size())
        raise(Errc::IndexOutOfRange,
              "e_" + std::to_string(n) + " of " + std::to_string(values.size()) + " values");
    if (values.empty())
        return NumericTraits<T>::one(); // n == 0
    std::vector<T> e;
    e.reserve(n + 1);
    e.push_back(NumericTraits<T>::one(values[0]));
    for (std::size_t j = 1; j <= n; ++j)
        e.push_back(NumericTraits<T>::zero(values[0]));
    std::size_t used = 0;
    for (const T& v : values) {
        ++used;
        for (std::size_t j = std::min(n, used); j >= 1; --j)
            e[j] += v * e[j - 1];
    }
    return e[n];
}

} // namespace recur
