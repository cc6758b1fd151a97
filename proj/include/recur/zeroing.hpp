#pragma once

#include "recur/polynomial.hpp"
#include "recur/recurrence.hpp"
#include "recur/roots.hpp"

#include <optional>
#include <vector>

namespace recur {

// One run of the coefficient-zeroing iteration Q_t = x Q_{t-1} - q(1,t-1) P,
// where q(1,t) is the x^{k-1} coefficient of Q_t. The iteration terminates at
// the first t where Q_t has no positive coefficient; this happens for some
// finite t if and only if Q_0(r) < 0 at the principal root r of P.

struct ZeroingInput {
    Polynomial P;          // characteristic polynomial, degree k
    std::vector<Rat> beta; // Q_0 = beta_1 x^{k-1} + ... + beta_k, length k
};

enum class Termination {
    Terminated,      // reached a Q_t with no positive coefficient
    WontTerminate,   // refused up front: Q_0(r) >= 0
    BudgetExhausted, // forced run hit the step budget
};

struct ZeroingOptions {
    unsigned long budget = 1'000'000;
    bool keep_trace = false;
    bool force_run = false;                   // iterate even when Q_0(r) >= 0
    const RootEnclosure* root_hint = nullptr; // cached enclosure for P (reused, never mutated)
};

struct ZeroingResult {
    Termination termination = Termination::Terminated;
    unsigned long steps = 0; // terminating t, or steps actually taken
    int sign_q0_at_r = 0;    // exact sign of Q_0(r)
    std::optional<unsigned long> last_positive_q1; // last t with q(1,t) > 0
    Polynomial final_q;                            // Q_steps
    std::vector<Polynomial> trace;                 // Q_0..Q_steps when keep_trace

    // First step from which q(1,t) stays non-positive (0 when it never was
    // positive). Terminating runs satisfy steps - q1_nonpositive_from() <= k-2.
    unsigned long q1_nonpositive_from() const {
        return last_positive_q1 ? *last_positive_q1 + 1 : 0;
    }
};

ZeroingResult run_zeroing(const ZeroingInput& input, const ZeroingOptions& options = {});

// q(1,j) for j = 0..k-1 directly from beta, without running the iteration:
// q(1,j) = beta_{j+1} + sum_{i=1..j} c_i q(1,j-i).
std::vector<Rat> q1_initial_values(const ZeroingInput& input);

// Prefix-constrained runs: pin the leading coefficients of the output to
// gamma_1..gamma_m, then iterate freely until no positive coefficient
// remains. The result p(x) = x^k Gamma(x) + Q_final is an exact multiple of
// P whose top coefficients are the gammas and whose remaining coefficients
// are all <= 0. Requires Gamma(r) > 0.

struct DerivationRequest {
    Polynomial P;
    std::vector<Rat> gamma; // gamma_1 first (leading coefficient of the prefix)
    unsigned long budget = 1'000'000;
};

struct DerivationResult {
    Polynomial p;        // degree k + m + t0 - 1
    Polynomial quotient; // p / P, exact by construction
    unsigned long t0 = 0; // free-phase steps after the m prefix steps
    std::optional<unsigned long> last_positive_q1; // within the free phase (0 = at Q_m)
    // Populated when gamma_1 = 1 and p is integral: the recurrence read off p
    // via c'_i = -(coefficient of x^{deg - i}).
    std::optional<Recurrence> derived;
};

DerivationResult run_modified(const DerivationRequest& request);

// The derived positive recurrence of a ZLRR: gamma = (1, -n) with integer
// 1 <= n < r. Raises NTooLarge when n >= r.
DerivationResult derive_plrr(const Recurrence& rec, const Int& n = Int(1),
                             unsigned long budget = 1'000'000);

} // namespace recur
