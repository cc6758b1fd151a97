#include "recur/analysis.hpp"

#include "recur/errors.hpp"

#include <algorithm>
#include <cmath>

namespace recur {

namespace {

// Pinned tolerances (documented behavior, not tunables).
constexpr double kImaginaryResidueTol = 1e-6;
const char* kTieTol = "1/1000000000000"; // 1e-12, exact rational threshold on |r_i| gaps

bool is_squarefree(const Polynomial& P) {
    if (P.degree() <= 1)
        return true;
    return gcd(P, P.derivative()).degree() == 0;
}

void check_support_not_degenerate(const Polynomial& P) {
    std::size_t k = static_cast<std::size_t>(P.degree());
    Int support_gcd(0);
    for (std::size_t i = 1; i <= k; ++i) {
        if (P.coefficient(k - i) == 0)
            continue;
        Int idx(static_cast<unsigned long>(i));
        support_gcd = support_gcd == 0 ? idx : Int(gcd(support_gcd, idx));
    }
    if (support_gcd > 1)
        raise(Errc::Degenerate, "support of " + to_string(P) +
                                    " has gcd " + to_string(support_gcd) +
                                    "; the principal root is not strictly dominant");
}

} // namespace

DivergencePrediction predict_divergence(const Recurrence& rec, const std::vector<Rat>& init) {
    std::size_t k = rec.order();
    if (init.size() != k)
        raise(Errc::WrongInitLength, "expected " + std::to_string(k) + " initial values, got " +
                                         std::to_string(init.size()));
    if (std::all_of(init.begin(), init.end(), [](const Rat& a) { return a == 0; }))
        raise(Errc::AllZeroInit, "the zero sequence has no divergence direction");

    const std::vector<Int>& c = rec.coefficients(); // c[i] = c_{i+1}
    DivergencePrediction out;
    std::vector<Rat> q_desc;
    q_desc.reserve(k);
    q_desc.push_back(init[0]); // a_1
    for (std::size_t i = 2; i <= k; ++i) {
        Rat di(0);
        for (std::size_t j = 1; j < i; ++j)
            di += init[j - 1] * Rat(c[i - j - 1]);
        out.d.push_back(di);
        q_desc.push_back(init[i - 1] - di);
    }
    out.Q = Polynomial::from_descending(q_desc);

    Polynomial P = rec.characteristic_polynomial();
    RootEnclosure enclosure = principal_root(P, Rat(1, 1 << 20));
    out.sign = sign_at_principal_root(out.Q, enclosure);
    out.verdict = static_cast<Divergence>(out.sign);
    if (out.sign == 0 && !out.Q.is_zero()) {
        Polynomial g = gcd(out.Q, P);
        if (g.degree() >= 1)
            out.zero_witness = g;
    }
    return out;
}

BinetCoefficients binet_squarefree(const Polynomial& P, long digits) {
    if (P.degree() < 1)
        raise(Errc::InvalidArgument, "need a polynomial of degree at least 1");
    if (!is_squarefree(P))
        raise(Errc::NotSquarefree, to_string(P) + " has repeated roots");

    BinetCoefficients out;
    out.digits = digits;
    out.roots = all_roots_numeric(P, digits);
    long prec = out.roots.prec_bits;

    Polynomial dP = P.derivative();
    std::vector<Cplx> dcoeffs;
    for (int i = 0; i <= dP.degree(); ++i)
        dcoeffs.push_back(
            Cplx(big_float(dP.coefficient(static_cast<std::size_t>(i)), prec), BigFloat(0, prec)));

    for (const NumericRoot& root : out.roots.roots) {
        Cplx acc{BigFloat(0, prec), BigFloat(0, prec)};
        for (auto it = dcoeffs.rbegin(); it != dcoeffs.rend(); ++it)
            acc = acc * root.value + *it;
        out.coefficients.push_back(NumericTraits<Cplx>::one(acc) / acc);
    }
    return out;
}

std::vector<double> reconstruct_terms(const BinetCoefficients& binet, std::size_t count) {
    long prec = binet.roots.prec_bits;
    std::vector<Cplx> powers; // root^n accumulators, starting at n = 0
    for (const auto& r : binet.roots.roots) {
        (void)r;
        powers.push_back(NumericTraits<Cplx>::one(Cplx{BigFloat(0, prec), BigFloat(0, prec)}));
    }
    std::vector<double> terms;
    terms.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Cplx sum{BigFloat(0, prec), BigFloat(0, prec)};
        for (std::size_t i = 0; i < powers.size(); ++i) {
            sum += binet.coefficients[i] * powers[i];
            powers[i] = powers[i] * binet.roots.roots[i].value;
        }
        BigFloat scale = abs(sum.re);
        if (scale < 1)
            scale = 1;
        if (abs(sum.im) > scale * kImaginaryResidueTol)
            raise(Errc::ImaginaryResidue, "term " + std::to_string(n) +
                                              " kept an imaginary part beyond tolerance");
        terms.push_back(sum.re.get_d());
    }
    return terms;
}

PrincipalCoefficient principal_coefficient(const ZeroingInput& input, long digits) {
    if (!is_squarefree(input.P))
        raise(Errc::NotSquarefree, to_string(input.P) + " has repeated roots");
    check_support_not_degenerate(input.P);

    if (input.beta.size() != static_cast<std::size_t>(input.P.degree()))
        raise(Errc::WrongInitLength, "beta length must match the degree");
    PrincipalCoefficient out;
    RootEnclosure enclosure = principal_root(input.P, Rat(1, 1 << 20));
    Polynomial Q0 = Polynomial::from_descending(input.beta);
    out.numerator_sign = sign_at_principal_root(Q0, enclosure);

    // Tight rational enclosure of r: width 10^-digits.
    Int denom_pow;
    mpz_ui_pow_ui(denom_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    enclosure = enclosure.refined(Rat(Int(1), denom_pow));
    Rat r_mid = enclosure.midpoint();

    NumericRootSet roots = all_roots_numeric(input.P, digits);
    long prec = roots.prec_bits;

    // The principal root is the numeric root nearest the certified midpoint.
    BigFloat r_bf = big_float(r_mid, prec);
    std::size_t principal = 0;
    BigFloat best(-1, prec);
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        Cplx diff{roots.roots[i].value.re - r_bf, roots.roots[i].value.im};
        BigFloat dist = diff.norm2();
        if (best < 0 || dist < best) {
            best = dist;
            principal = i;
        }
    }

    Cplx denom{BigFloat(1, prec), BigFloat(0, prec)};
    Cplx r_cplx{r_bf, BigFloat(0, prec)};
    BigFloat relative_err(0, prec);
    Rat tie_tol = rat_from_string(kTieTol);
    std::vector<BigFloat> other_magnitudes;
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        if (i == principal)
            continue;
        Cplx gap = r_cplx - roots.roots[i].value;
        denom = denom * gap;
        BigFloat gap_abs = gap.abs();
        if (sgn(gap_abs) > 0)
            relative_err += roots.roots[i].error / gap_abs;
        other_magnitudes.push_back(roots.roots[i].value.abs());
    }

    std::sort(other_magnitudes.begin(), other_magnitudes.end());
    BigFloat tie_eps = big_float(tie_tol, prec);
    for (std::size_t i = 0; i + 1 < other_magnitudes.size(); ++i) {
        BigFloat gap = other_magnitudes[i + 1] - other_magnitudes[i];
        BigFloat scale = other_magnitudes[i + 1];
        if (scale < 1)
            scale = 1;
        if (gap <= scale * tie_eps) {
            out.magnitude_ties = true;
            break;
        }
    }

    BigFloat numerator = big_float(Q0.eval(r_mid), prec);
    Cplx a1 = Cplx(numerator, BigFloat(0, prec)) / denom;
    out.a1 = a1.re.get_d();
    out.denominator_positive = sgn(denom.re) > 0;

    // First-order error: the numerator moves by |Q0'(r)| * width, the
    // denominator contributes the summed relative root errors.
    BigFloat num_slope = big_float(Q0.derivative().eval(r_mid), prec);
    BigFloat num_err = abs(num_slope) * big_float(enclosure.width(), prec);
    BigFloat denom_abs = denom.abs();
    BigFloat abs_err(0, prec);
    if (sgn(denom_abs) > 0)
        abs_err = num_err / denom_abs + a1.abs() * relative_err;
    out.error = abs_err.get_d();
    return out;
}

} // namespace recur
