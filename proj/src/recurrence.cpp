#include "recur/recurrence.hpp"

#include "recur/errors.hpp"

#include <numeric>

namespace recur {

Recurrence Recurrence::build(const std::vector<Int>& coefficients) {
    if (coefficients.empty())
        raise(Errc::EmptyCoefficients, "a recurrence needs at least one coefficient");
    for (const Int& c : coefficients)
        if (sgn(c) < 0)
            raise(Errc::NegativeCoefficient, "coefficient " + to_string(c) + " is negative");
    if (coefficients.back() == 0)
        raise(Errc::TrailingZero, "the last coefficient must be positive");

    Int support_gcd(0);
    std::size_t depth = 0;
    bool leading = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] == 0) {
            if (leading)
                ++depth;
            continue;
        }
        leading = false;
        Int index(static_cast<unsigned long>(i + 1));
        support_gcd = support_gcd == 0 ? index : Int(gcd(support_gcd, index));
    }
    if (support_gcd > 1)
        raise(Errc::Degenerate,
              "support indices share the factor " + to_string(support_gcd) +
                  "; the recurrence splits into that many interleaved sequences");

    return Recurrence(coefficients, depth);
}

Polynomial Recurrence::characteristic_polynomial() const {
    std::size_t L = coeffs_.size();
    std::vector<Rat> v(L + 1, Rat(0));
    v[L] = 1;
    for (std::size_t i = 0; i < L; ++i)
        v[L - 1 - i] = Rat(-coeffs_[i]);
    return Polynomial(std::move(v));
}

std::vector<Rat> Recurrence::iterate_terms(const std::vector<Rat>& init, std::size_t n) const {
    std::size_t L = coeffs_.size();
    if (init.size() != L)
        raise(Errc::WrongInitLength, "expected " + std::to_string(L) + " initial values, got " +
                                         std::to_string(init.size()));
    std::vector<Rat> terms(init.begin(), init.begin() + static_cast<std::ptrdiff_t>(std::min(n, L)));
    terms.reserve(n);
    while (terms.size() < n) {
        Rat next(0);
        std::size_t t = terms.size();
        for (std::size_t i = 0; i < L; ++i)
            if (coeffs_[i] != 0)
                next += Rat(coeffs_[i]) * terms[t - 1 - i];
        terms.push_back(next);
    }
    return terms;
}

} // namespace recur
