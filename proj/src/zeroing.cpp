#include "recur/zeroing.hpp"

#include "recur/errors.hpp"

#include <algorithm>

namespace recur {

namespace {

Polynomial q0_from_beta(const Polynomial& P, const std::vector<Rat>& beta) {
    std::size_t k = static_cast<std::size_t>(P.degree());
    if (beta.size() != k)
        raise(Errc::WrongInitLength,
              "expected " + std::to_string(k) + " beta values, got " + std::to_string(beta.size()));
    if (std::all_of(beta.begin(), beta.end(), [](const Rat& b) { return b == 0; }))
        raise(Errc::AllZeroBeta, "beta must not be identically zero");
    return Polynomial::from_descending(beta);
}

// Q -> x Q - q(1) P. The x^k terms cancel (P is monic), so the degree stays
// below k.
Polynomial zero_step(const Polynomial& Q, const Polynomial& P, std::size_t k) {
    return Q.shifted(1) - Q.coefficient(k - 1) * P;
}

RootEnclosure enclosure_for(const Polynomial& P, const RootEnclosure* hint) {
    if (hint && hint->characteristic() == P)
        return *hint;
    return principal_root(P, Rat(1, 1 << 20));
}

} // namespace

ZeroingResult run_zeroing(const ZeroingInput& input, const ZeroingOptions& options) {
    RootEnclosure enclosure = enclosure_for(input.P, options.root_hint);
    std::size_t k = static_cast<std::size_t>(input.P.degree());
    Polynomial Q = q0_from_beta(input.P, input.beta);

    ZeroingResult result;
    result.sign_q0_at_r = sign_at_principal_root(Q, enclosure);
    if (options.keep_trace)
        result.trace.push_back(Q);
    if (sgn(Q.coefficient(k - 1)) > 0)
        result.last_positive_q1 = 0;

    if (result.sign_q0_at_r >= 0 && !options.force_run) {
        result.termination = Termination::WontTerminate;
        result.final_q = Q;
        return result;
    }

    unsigned long t = 0;
    while (Q.has_positive_coefficient()) {
        if (t >= options.budget) {
            if (result.sign_q0_at_r < 0)
                raise(Errc::BudgetExhausted,
                      "step budget hit despite Q_0(r) < 0; raise the budget");
            result.termination = Termination::BudgetExhausted;
            result.steps = t;
            result.final_q = Q;
            return result;
        }
        Q = zero_step(Q, input.P, k);
        ++t;
        if (sgn(Q.coefficient(k - 1)) > 0)
            result.last_positive_q1 = t;
        if (options.keep_trace)
            result.trace.push_back(Q);
    }

    result.termination = Termination::Terminated;
    result.steps = t;
    result.final_q = Q;
    return result;
}

std::vector<Rat> q1_initial_values(const ZeroingInput& input) {
    std::size_t k = static_cast<std::size_t>(input.P.degree());
    q0_from_beta(input.P, input.beta); // validates beta
    std::vector<Rat> q1(k);
    for (std::size_t j = 0; j < k; ++j) {
        Rat v = input.beta[j];
        for (std::size_t i = 1; i <= j; ++i) {
            Rat ci = -input.P.coefficient(k - i);
            if (ci != 0)
                v += ci * q1[j - i];
        }
        q1[j] = v;
    }
    return q1;
}

DerivationResult run_modified(const DerivationRequest& request) {
    if (request.gamma.empty())
        raise(Errc::EmptyCoefficients, "the gamma prefix must not be empty");
    RootEnclosure enclosure = principal_root(request.P, Rat(1, 1 << 20));
    std::size_t k = static_cast<std::size_t>(request.P.degree());
    std::size_t m = request.gamma.size();

    Polynomial gamma_poly = Polynomial::from_descending(request.gamma);
    if (sign_at_principal_root(gamma_poly, enclosure) <= 0)
        raise(Errc::GammaNotPositiveAtRoot,
              "prefix polynomial " + to_string(gamma_poly) + " is not positive at the root");

    // Prefix phase: Q_1 = gamma_1 (P - x^k), then
    // Q_t = x Q_{t-1} - (q(1,t-1) - gamma_t) P - gamma_t x^k for t = 2..m.
    // Each right-hand side cancels the x^k term, keeping deg Q < k.
    Polynomial xk = Polynomial::monomial(k);
    Polynomial Q = request.gamma[0] * (request.P - xk);
    unsigned long total_steps = 1;
    for (std::size_t t = 2; t <= m; ++t) {
        if (total_steps >= request.budget)
            raise(Errc::BudgetExhausted, "budget hit during the prefix phase");
        const Rat& gt = request.gamma[t - 1];
        Q = Q.shifted(1) - Rat(Q.coefficient(k - 1) - gt) * request.P - gt * xk;
        ++total_steps;
    }

    // Free phase: plain zeroing steps until no positive coefficient remains.
    DerivationResult result;
    if (sgn(Q.coefficient(k - 1)) > 0)
        result.last_positive_q1 = 0;
    unsigned long t0 = 0;
    while (Q.has_positive_coefficient()) {
        if (total_steps >= request.budget)
            raise(Errc::BudgetExhausted, "budget of " + std::to_string(request.budget) +
                                             " steps hit after " + std::to_string(t0) +
                                             " free-phase steps");
        Q = zero_step(Q, request.P, k);
        ++total_steps;
        ++t0;
        if (sgn(Q.coefficient(k - 1)) > 0)
            result.last_positive_q1 = t0;
    }

    result.t0 = t0;
    result.p = gamma_poly.shifted(k + t0) + Q;
    result.quotient = divide_exact(result.p, request.P);

    if (request.gamma[0] == 1 && result.p.is_integral()) {
        // Read the recurrence off p, dropping any trailing x-factor first
        // (possible only when the final q(1,t-1) was 0; P(0) != 0 keeps the
        // quotient property intact).
        Polynomial reduced = result.p;
        while (!reduced.is_zero() && reduced.coefficient(0) == 0) {
            std::vector<Rat> shifted(reduced.coefficients().begin() + 1,
                                     reduced.coefficients().end());
            reduced = Polynomial(std::move(shifted));
        }
        std::vector<Int> coeffs;
        for (int i = reduced.degree() - 1; i >= 0; --i)
            coeffs.push_back(Int(-reduced.coefficient(static_cast<std::size_t>(i)).get_num()));
        try {
            result.derived = Recurrence::build(coeffs);
        } catch (const Error&) {
            // gamma produced a prefix that is not a valid positive recurrence
        }
    }
    return result;
}

DerivationResult derive_plrr(const Recurrence& rec, const Int& n, unsigned long budget) {
    if (n < 1)
        raise(Errc::InvalidArgument, "n must be a positive integer");
    Polynomial P = rec.characteristic_polynomial();
    Polynomial x_minus_n = Polynomial::from_descending({Rat(1), Rat(-n)});
    if (sign_at_principal_root(x_minus_n, P) <= 0)
        raise(Errc::NTooLarge, "n = " + to_string(n) + " is not below the principal root");
    DerivationRequest request{P, {Rat(1), Rat(-n)}, budget};
    return run_modified(request);
}

} // namespace recur
