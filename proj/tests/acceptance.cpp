// Acceptance gate: one line per criterion, process exit code = number of
// failures. Every tolerance and sample size is pinned here as a constant.

#include "recur/analysis.hpp"
#include "recur/errors.hpp"
#include "recur/io.hpp"
#include "recur/lab.hpp"
#include "recur/polynomial.hpp"
#include "recur/recurrence.hpp"
#include "recur/roots.hpp"
#include "recur/zeroing.hpp"

#include "golden_conversions.hpp"

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace recur;

namespace {

// one base seed; each criterion draws from its own offset stream
constexpr std::uint64_t kBaseSeed = 20240101;

constexpr int kPredictorTrials = 1000;   // criterion 3
constexpr std::size_t kBruteTerms = 400; // criterion 3 brute-force horizon
constexpr std::size_t kBruteWindow = 20; // criterion 3 decisive tail length
constexpr int kSignTrials = 1000;        // criterion 4
constexpr unsigned long kForcedWindow = 600;   // criterion 4, random refusals
constexpr unsigned long kBoundaryWindow = 1500; // criterion 4, zero-sign cases
constexpr int kBinetTrials = 100;        // criterion 6
constexpr double kBinetValueTol = 1e-12; // criterion 6
constexpr double kReconstructTol = 1e-6; // criterion 6, relative
constexpr int kPrincipalTrials = 100;    // criterion 7
constexpr double kPrincipalTol = 1e-4;   // criterion 7
constexpr double kSpearmanCeiling = -0.5; // criterion 8
constexpr double kTimeBudgetSeconds = 600; // criterion 10

double inv_sqrt5() { return 0.44721359549995793928183473374625; }

Recurrence rec_of(const std::vector<long>& coeffs) {
    return Recurrence::build(std::vector<Int>(coeffs.begin(), coeffs.end()));
}

std::vector<Rat> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// terminating runs collected by criteria 1, 2 and 4, re-checked by criterion 5
struct TailCase {
    unsigned long steps = 0;
    unsigned long nonpos_from = 0;
    int k = 0;
};
std::vector<TailCase> g_tail_cases;

// -1/0/+1 if the last kBruteWindow of kBruteTerms exact terms share a sign
// with magnitude above 10^6; 9 when that tail is not decisive
int brute_force_vote(const Recurrence& rec, const std::vector<Rat>& init) {
    std::vector<Rat> terms = rec.iterate_terms(init, kBruteTerms);
    int s = sign(terms[terms.size() - kBruteWindow]);
    if (s == 0)
        return 9;
    for (std::size_t i = terms.size() - kBruteWindow; i < terms.size(); ++i) {
        if (sign(terms[i]) != s)
            return 9;
        if (Rat(abs(terms[i])) <= Rat(1000000))
            return 9;
    }
    return s;
}

std::vector<Rat> impulse_terms(const Recurrence& rec, std::size_t count) {
    std::size_t k = rec.order();
    std::vector<Rat> s(count, Rat(0));
    if (k - 1 < count)
        s[k - 1] = 1;
    const auto& c = rec.coefficients();
    for (std::size_t n = k; n < count; ++n)
        for (std::size_t i = 1; i <= k; ++i)
            s[n] += Rat(c[i - 1]) * s[n - i];
    return s;
}

bool criterion_1(std::string& detail) {
    int exact = 0, integral = 0;
    const auto& cases = golden::conversion_cases();
    for (const auto& item : cases) {
        Recurrence rec = rec_of(item.coefficients);
        DerivationResult result = derive_plrr(rec, Int(1));
        if (to_string(result.p) == item.derived)
            ++exact;
        Polynomial P = rec.characteristic_polynomial();
        Polynomial quotient = divide_exact(result.p, P);
        if (quotient.is_integral() && quotient * P == result.p)
            ++integral;
        g_tail_cases.push_back(TailCase{
            result.t0, result.last_positive_q1 ? *result.last_positive_q1 + 1 : 0, P.degree()});
    }
    std::ostringstream s;
    s << exact << "/" << cases.size() << " exact, " << integral << "/" << cases.size()
      << " integral quotients";
    detail = s.str();
    return exact == static_cast<int>(cases.size()) && integral == static_cast<int>(cases.size());
}

bool criterion_2(std::string& detail) {
    ZeroingOptions opts;
    opts.keep_trace = true;
    ZeroingResult run = run_zeroing({parse_polynomial("x^3 - 2x - 1"), rats({3, -2, -5})}, opts);
    const std::vector<const char*> expected = {"3x^2 - 2x - 5", "-2x^2 + x + 3", "x^2 - x - 2",
                                               "-x^2 + 1", "-x - 1"};
    bool ok = run.termination == Termination::Terminated && run.steps == 4 &&
              run.trace.size() == expected.size();
    if (ok)
        for (std::size_t i = 0; i < expected.size(); ++i)
            ok = ok && run.trace[i] == parse_polynomial(expected[i]);
    g_tail_cases.push_back(TailCase{run.steps, run.q1_nonpositive_from(), 3});
    detail = ok ? "5 rows exact, t = 4" : "trace mismatch";
    return ok;
}

bool criterion_3(std::string& detail) {
    Recurrence worked = rec_of({0, 2, 1});
    DivergencePrediction pred = predict_divergence(worked, rats({3, -2, 1}));
    if (pred.verdict != Divergence::MinusInfinity || pred.Q != parse_polynomial("3x^2 - 2x - 5") ||
        pred.d != rats({0, 6})) {
        detail = "worked instance mismatch";
        return false;
    }

    Rng rng(kBaseSeed + 3);
    int decided = 0, mismatches = 0;
    for (int trial = 0; trial < kPredictorTrials; ++trial) {
        Recurrence rec = random_zlrr(rng, static_cast<int>(rng.uniform(3, 6)), 9);
        std::vector<Rat> init = random_beta(rng, rec.order(), 10);
        int vote = brute_force_vote(rec, init);
        if (vote == 9)
            continue;
        ++decided;
        if (static_cast<int>(predict_divergence(rec, init).verdict) != vote)
            ++mismatches;
    }
    std::ostringstream s;
    s << decided << "/" << kPredictorTrials << " decided, " << mismatches << " mismatches";
    detail = s.str();
    return mismatches == 0 && decided > kPredictorTrials / 2;
}

bool criterion_4(std::string& detail) {
    Rng rng(kBaseSeed + 4);
    int terminated = 0, refused = 0, mismatches = 0;
    for (int trial = 0; trial < kSignTrials; ++trial) {
        Recurrence rec = random_zlrr(rng, static_cast<int>(rng.uniform(3, 6)), 9);
        Polynomial P = rec.characteristic_polynomial();
        std::vector<Rat> beta = random_beta(rng, rec.order(), 10);
        int s = sign_at_principal_root(Polynomial::from_descending(beta), P);
        ZeroingInput input{P, beta};
        if (s < 0) {
            ZeroingResult run = run_zeroing(input);
            if (run.termination != Termination::Terminated) {
                ++mismatches;
                continue;
            }
            ++terminated;
            g_tail_cases.push_back(
                TailCase{run.steps, run.q1_nonpositive_from(), P.degree()});
        } else {
            if (run_zeroing(input).termination != Termination::WontTerminate) {
                ++mismatches;
                continue;
            }
            // independent evidence: a forced window makes no progress to a
            // non-positive state
            ZeroingOptions forced;
            forced.force_run = true;
            forced.budget = kForcedWindow;
            if (run_zeroing(input, forced).termination == Termination::Terminated)
                ++mismatches;
            else
                ++refused;
        }
    }

    // boundary cases Q0(r) = 0, built from a factor of P that carries the
    // principal root; the sign test must refuse them and forced windows must
    // never reach termination
    struct Boundary {
        std::vector<long> rec;
        std::vector<Rat> beta;
    };
    const std::vector<Boundary> boundaries = {
        {{0, 2, 1}, rats({1, -1, -1})},      // x^2-x-1 itself
        {{0, 2, 1}, rats({2, -2, -2})},      // a positive multiple
        {{0, 2, 1}, rats({-3, 3, 3})},       // a negative multiple
        {{0, 1, 2, 1}, rats({1, 0, -2, -1})}, // (x^2-x-1)(x+1)
        {{0, 1, 2, 1}, rats({1, -3, 1, 2})},  // (x^2-x-1)(x-2)
        {{0, 3, 2}, rats({1, 3, -10})},      // (x-2)(x+5) against (x+1)^2(x-2)
    };
    int boundary_ok = 0;
    for (const Boundary& b : boundaries) {
        Polynomial P = rec_of(b.rec).characteristic_polynomial();
        ZeroingInput input{P, b.beta};
        int s = sign_at_principal_root(Polynomial::from_descending(b.beta), P);
        if (s != 0) {
            ++mismatches;
            continue;
        }
        if (run_zeroing(input).termination != Termination::WontTerminate) {
            ++mismatches;
            continue;
        }
        ZeroingOptions forced;
        forced.force_run = true;
        forced.budget = kBoundaryWindow;
        if (run_zeroing(input, forced).termination == Termination::Terminated)
            ++mismatches;
        else
            ++boundary_ok;
    }

    std::ostringstream s;
    s << terminated << " terminated, " << refused << " refused, " << boundary_ok << "/"
      << boundaries.size() << " zero-sign cases, " << mismatches << " mismatches";
    detail = s.str();
    return mismatches == 0 && terminated > 0 && refused > 0;
}

bool criterion_5(std::string& detail) {
    int violations = 0;
    for (const TailCase& t : g_tail_cases)
        if (static_cast<long>(t.steps) - static_cast<long>(t.nonpos_from) > t.k - 2)
            ++violations;
    std::ostringstream s;
    s << g_tail_cases.size() << " terminating runs checked, " << violations << " violations";
    detail = s.str();
    return !g_tail_cases.empty() && violations == 0;
}

bool criterion_6(std::string& detail) {
    BinetCoefficients fib = binet_squarefree(parse_polynomial("x^2 - x - 1"), 30);
    double c0 = fib.coefficients[0].re.get_d();
    double c1 = fib.coefficients[1].re.get_d();
    if (std::abs(c0 - inv_sqrt5()) > kBinetValueTol || std::abs(c1 + inv_sqrt5()) > kBinetValueTol) {
        detail = "coefficients for x^2 - x - 1 are not +-1/sqrt(5)";
        return false;
    }

    Rng rng(kBaseSeed + 6);
    int done = 0, bad_terms = 0;
    double worst = 0;
    while (done < kBinetTrials) {
        Recurrence rec = random_zlrr(rng, static_cast<int>(rng.uniform(3, 6)), 9);
        Polynomial P = rec.characteristic_polynomial();
        if (gcd(P, P.derivative()).degree() != 0)
            continue;
        ++done;
        BinetCoefficients binet = binet_squarefree(P, 30);
        std::vector<double> approx = reconstruct_terms(binet, 40);
        std::vector<Rat> exact = impulse_terms(rec, 40);
        for (std::size_t n = 0; n < 40; ++n) {
            double e = to_double(exact[n]);
            double rel = std::abs(approx[n] - e) / std::max(1.0, std::abs(e));
            worst = std::max(worst, rel);
            if (rel >= kReconstructTol)
                ++bad_terms;
        }
    }
    std::ostringstream s;
    s << done << " reconstructions, worst relative error " << worst;
    detail = s.str();
    return bad_terms == 0;
}

bool criterion_7(std::string& detail) {
    Rng rng(kBaseSeed + 7);
    Rat tight(Int(1), Int("1000000000000000")); // 1e-15 enclosure for r^200
    int done = 0, value_bad = 0, sign_bad = 0;
    double worst = 0;
    std::ostringstream stragglers;
    while (done < kPrincipalTrials) {
        Recurrence rec = random_zlrr(rng, static_cast<int>(rng.uniform(3, 6)), 9);
        Polynomial P = rec.characteristic_polynomial();
        if (gcd(P, P.derivative()).degree() != 0)
            continue;
        std::vector<Rat> beta = random_beta(rng, rec.order(), 10);
        int exact_sign = sign_at_principal_root(Polynomial::from_descending(beta), P);
        if (exact_sign == 0)
            continue;
        ++done;

        ZeroingInput input{P, beta};
        PrincipalCoefficient pc = principal_coefficient(input, 30);
        std::vector<Rat> q1 = rec.iterate_terms(q1_initial_values(input), 201);
        Rat r_mid = principal_root(P).refined(tight).midpoint();
        Rat r_pow(1);
        for (int i = 0; i < 200; ++i)
            r_pow *= r_mid;
        double empirical = to_double(q1[200] / r_pow);

        double diff = std::abs(pc.a1 - empirical);
        worst = std::max(worst, diff);
        if (diff >= kPrincipalTol) {
            ++value_bad;
            // The miss is a convergence artifact, not a formula error, when
            // the top two root moduli nearly tie: the residual must shrink by
            // (|r_2|/r_1)^200 once the horizon doubles. Show that in-line.
            NumericRootSet roots = all_roots_numeric(P);
            double top = 0, second = 0;
            for (const NumericRoot& nr : roots.roots) {
                double m = nr.value.abs().get_d();
                if (m > top) {
                    second = top;
                    top = m;
                } else if (m > second) {
                    second = m;
                }
            }
            std::vector<Rat> q1_long = rec.iterate_terms(q1_initial_values(input), 401);
            double resid400 = std::abs(pc.a1 - to_double(q1_long[400] / (r_pow * r_pow)));
            stragglers << " [" << to_string(P) << ": diff=" << diff
                       << ", |r2/r1|=" << second / top << ", at t=400 diff=" << resid400 << "]";
        }
        if (sign_of(pc.a1) != exact_sign)
            ++sign_bad;
    }
    std::ostringstream s;
    s << done - value_bad << "/" << done << " within " << kPrincipalTol
      << " at t=200, worst |a1 - q(1,200)/r^200| = " << worst << ", " << sign_bad
      << " sign mismatches" << stragglers.str();
    detail = s.str();
    return value_bad == 0 && sign_bad == 0;
}

bool criterion_8(std::string& detail) {
    LabConfig config; // defaults are the full desk scale: 3..6, 10 polys, 500 samples
    ExperimentResult result = runtime_experiment(config);

    std::ostringstream s;
    bool ok = true;
    for (int degree = config.degree_min; degree <= config.degree_max; ++degree) {
        auto it = result.spearman_by_degree.find(degree);
        if (it == result.spearman_by_degree.end()) {
            ok = false;
            s << "degree " << degree << ": no correlation; ";
            continue;
        }
        if (it->second > kSpearmanCeiling)
            ok = false;
        s << "rho(" << degree << ") = " << it->second << ", ";
    }

    std::string csv = render_csv(result.records);
    std::string svg = render_svg(result.records);
    std::ofstream("acceptance_runtime.csv") << csv;
    std::ofstream("acceptance_runtime.svg") << svg;

    ExperimentResult again = runtime_experiment(config);
    bool deterministic =
        render_csv(again.records) == csv && render_svg(again.records) == svg;
    if (!deterministic)
        ok = false;
    s << result.records.size() << " trials, artifacts "
      << (deterministic ? "deterministic" : "NOT deterministic");
    detail = s.str();
    return ok;
}

bool criterion_9(std::string& detail) {
    std::vector<SlowdownPoint> points = slowdown_experiment(1, 8);
    bool ok = points.size() == 8;
    std::ostringstream s;
    s << "t0 =";
    for (std::size_t i = 0; i < points.size(); ++i) {
        ok = ok && points[i].completed;
        if (i > 0)
            ok = ok && points[i].t0 > points[i - 1].t0;
        s << " " << points[i].t0;
    }
    if (points.size() == 8) {
        ok = ok && points[0].derived_degree == 5;   // matches table item for s = 1
        ok = ok && points[1].derived_degree == 20;  // s = 2
        ok = ok && points[7].derived_degree == 488; // s = 8
        s << "; degrees " << points[0].derived_degree << ", " << points[1].derived_degree
          << ", ..., " << points[7].derived_degree;
    }
    detail = s.str();
    return ok;
}

bool criterion_10(double elapsed_seconds, std::string& detail) {
    std::ostringstream s;
    s << "seeds are compile-time constants; this gate took " << elapsed_seconds
      << "s of the " << kTimeBudgetSeconds << "s budget (ctest runs the unit suite alongside)";
    detail = s.str();
    return elapsed_seconds < kTimeBudgetSeconds;
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    auto t_start = Clock::now();
    int failures = 0;

    struct Entry {
        int id;
        const char* name;
        bool (*run)(std::string&);
    };
    const Entry entries[] = {
        {1, "derived positive forms match the frozen 19-entry table", criterion_1},
        {2, "zeroing trace of the worked example is exact", criterion_2},
        {3, "divergence predictions agree with long exact iterations", criterion_3},
        {4, "termination matches the exact sign test in both directions", criterion_4},
        {5, "termination comes within k-2 steps of q(1,t) turning non-positive", criterion_5},
        {6, "closed-form coefficients reconstruct exact sequences", criterion_6},
        {7, "principal coefficient matches the empirical growth ratio", criterion_7},
        {8, "run-time sweep shows strong negative rank correlation, deterministically",
         criterion_8},
        {9, "slowdown family: free-phase steps strictly increase, endpoints pinned",
         criterion_9},
    };

    for (const Entry& entry : entries) {
        auto t0 = Clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = entry.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream line;
        line.precision(3);
        line << "[criterion " << entry.id << "] " << entry.name << ": "
             << (ok ? "PASS" : "FAIL") << " (" << detail << "; " << secs << "s)";
        std::cout << line.str() << std::endl;
        if (!ok)
            ++failures;
    }

    {
        double total = std::chrono::duration<double>(Clock::now() - t_start).count();
        std::string detail;
        bool ok = criterion_10(total, detail);
        std::ostringstream line;
        line.precision(3);
        line << "[criterion 10] every suite runs under one command within the time budget: "
             << (ok ? "PASS" : "FAIL") << " (" << detail << ")";
        std::cout << line.str() << std::endl;
        if (!ok)
            ++failures;
    }

    double total = std::chrono::duration<double>(Clock::now() - t_start).count();
    std::cout << "acceptance: " << (10 - failures) << "/10 passed in " << total << "s"
              << std::endl;
    return failures;
}
