#pragma once

#include "recur/polynomial.hpp"
#include "recur/recurrence.hpp"
#include "recur/roots.hpp"
#include "recur/zeroing.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace recur {

// Where a_n heads as n grows: the sign of the principal-root coefficient in
// its closed-form expansion, decided exactly from the initial values.
enum class Divergence {
    MinusInfinity = -1, // a_n -> -inf
    ZeroCoefficient = 0, // principal coefficient is 0: |a_n| = o(r^n), sign oscillates
    PlusInfinity = 1,    // a_n -> +inf
};

struct DivergencePrediction {
    Divergence verdict = Divergence::ZeroCoefficient;
    int sign = 0;       // same information as verdict, as an integer
    Polynomial Q;       // a_1 x^{k-1} + (a_2-d_2) x^{k-2} + ... + (a_k-d_k)
    std::vector<Rat> d; // d_2..d_k, where d_i = sum_{j<i} a_j c_{i-j}
    // When the verdict is ZeroCoefficient: the common factor of Q and P that
    // vanishes at the principal root (certifies the zero exactly).
    std::optional<Polynomial> zero_witness;
};

// Exact divergence direction from the first k terms. Raises WrongInitLength
// and AllZeroInit.
DivergencePrediction predict_divergence(const Recurrence& rec, const std::vector<Rat>& init);

// Closed-form coefficients for the impulse start (0, ..., 0, 1): with all
// roots simple, a_n = sum_i coefficient[i] * root[i]^n where
// coefficient[i] = 1 / P'(root[i]). Raises NotSquarefree.
struct BinetCoefficients {
    NumericRootSet roots;            // every multiplicity is 1
    std::vector<Cplx> coefficients;  // aligned with roots.roots
    long digits = 0;
};

BinetCoefficients binet_squarefree(const Polynomial& P, long digits = 30);

// a_n for n = 0..count-1 summed from the closed form. Raises ImaginaryResidue
// if the imaginary parts fail to cancel (relative tolerance 1e-6).
std::vector<double> reconstruct_terms(const BinetCoefficients& binet, std::size_t count);

// Principal-root coefficient of q(1,t) = a_1 r_1^t + ...: evaluates
// a_1 = Q_0(r_1) / prod_{i>=2} (r_1 - r_i) with an exact numerator sign and
// numeric everything else.
struct PrincipalCoefficient {
    double a1 = 0;
    double error = 0;            // first-order propagated bound
    int numerator_sign = 0;      // exact sign of Q_0(r)
    bool denominator_positive = false; // observed numerically, never assumed
    bool magnitude_ties = false; // non-principal |r_i| collide (conjugate pairs always do)
};

PrincipalCoefficient principal_coefficient(const ZeroingInput& input, long digits = 30);

} // namespace recur
