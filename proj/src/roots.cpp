#include "recur/roots.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace recur {

namespace {

void check_characteristic_shape(const Polynomial& P) {
    if (P.degree() < 1)
        raise(Errc::NotCharacteristic, "degree must be at least 1");
    if (P.leading() != 1)
        raise(Errc::NotCharacteristic, "polynomial is not monic");
    if (!P.is_integral())
        raise(Errc::NotCharacteristic, "coefficients are not integers");
    for (int i = 0; i < P.degree(); ++i)
        if (sgn(P.coefficient(static_cast<std::size_t>(i))) > 0)
            raise(Errc::NotCharacteristic, "positive coefficient below the leading term");
    if (sgn(P.coefficient(0)) == 0)
        raise(Errc::NotCharacteristic, "constant term vanishes (trailing zero recurrence)");
}

// One bisection pass; on an exact hit records the root instead.
struct Bisection {
    const Polynomial& P;
    Rat lo, hi;
    std::optional<Rat> exact;

    // Invariant: P(lo) <= 0 < P(hi), with lo == 0 allowed only initially.
    void refine_until(const Rat& max_width) {
        while (!exact && (sgn(lo) == 0 || hi - lo > max_width)) {
            Rat mid = (lo + hi) / 2;
            int s = sgn(P.eval(mid));
            if (s == 0) {
                exact = mid;
            } else if (s < 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    // Sign-correct enclosure around an exact hit: any point of (0, r) is
    // negative, any point above r positive, because r is the only positive root.
    Interval exact_interval(const Rat& max_width) const {
        Rat half = max_width / 2;
        Rat lo2 = *exact - half;
        if (sgn(lo2) <= 0)
            lo2 = *exact / 2;
        return Interval(lo2, *exact + half);
    }
};

} // namespace

RootEnclosure principal_root(const Polynomial& P, const Rat& max_width) {
    check_characteristic_shape(P);
    if (sgn(max_width) <= 0)
        raise(Errc::InvalidArgument, "enclosure width must be positive");

    Rat bound(1);
    for (int i = 0; i < P.degree(); ++i) {
        Rat c = -P.coefficient(static_cast<std::size_t>(i));
        if (c > bound)
            bound = c;
    }
    bound += 1; // Cauchy: every root has |z| < 1 + max c_i

    Bisection bis{P, Rat(0), bound, std::nullopt};
    if (sgn(P.eval(bis.hi)) <= 0)
        raise(Errc::NotCharacteristic, "no sign change on the initial bracket");
    bis.refine_until(max_width);
    if (bis.exact)
        return RootEnclosure(P, bis.exact_interval(max_width), bis.exact);
    return RootEnclosure(P, Interval(bis.lo, bis.hi), std::nullopt);
}

RootEnclosure RootEnclosure::refined(const Rat& max_width) const {
    if (width() <= max_width)
        return *this;
    if (exact_) {
        Rat half = max_width / 2;
        Rat lo = *exact_ - half;
        if (lo <= iv_.lo) // stay nested inside the current interval
            lo = (*exact_ + iv_.lo) / 2;
        Rat hi = *exact_ + half;
        if (hi >= iv_.hi)
            hi = (*exact_ + iv_.hi) / 2;
        return RootEnclosure(poly_, Interval(lo, hi), exact_);
    }
    Bisection bis{poly_, iv_.lo, iv_.hi, std::nullopt};
    bis.refine_until(max_width);
    if (bis.exact)
        return RootEnclosure(poly_, bis.exact_interval(max_width), bis.exact);
    return RootEnclosure(poly_, Interval(bis.lo, bis.hi), std::nullopt);
}

int sign_at_principal_root(const Polynomial& Q, const RootEnclosure& enclosure) {
    if (Q.is_zero())
        return 0;
    if (enclosure.exact())
        return sgn(Q.eval(*enclosure.exact()));

    // Zero test first: Q(r) = 0 iff gcd(Q, P) has a root in the enclosure
    // (r is the only root of P there, and roots of the gcd are shared roots).
    Polynomial g = gcd(Q, enclosure.characteristic());
    if (g.degree() >= 1 && sturm_root_count(g, enclosure.interval()) > 0)
        return 0;

    RootEnclosure e = enclosure;
    for (int round = 0; round < 4096; ++round) {
        int s = Q.eval_interval(e.interval()).certified_sign();
        if (s != 0)
            return s;
        e = e.refined(e.width() / 2);
    }
    // Unreachable: Q(r) != 0 was certified above, and interval evaluation of
    // a polynomial converges to the point value as the enclosure shrinks.
    raise(Errc::PrecisionUnreachable, "sign refinement did not converge");
}

int sign_at_principal_root(const Polynomial& Q, const Polynomial& P) {
    return sign_at_principal_root(Q, principal_root(P, Rat(1, 1024)));
}

std::size_t NumericRootSet::total_with_multiplicity() const {
    std::size_t n = 0;
    for (const auto& r : roots)
        n += static_cast<std::size_t>(r.multiplicity);
    return n;
}

namespace {

// Yun's squarefree decomposition: returns (factor, multiplicity) pairs with
// monic factors, product of factor^mult = p / leading.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    Polynomial f = (Rat(1) / p.leading()) * p;
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial df = f.derivative();
    Polynomial a0 = gcd(f, df);
    if (a0.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Polynomial b = divide_exact(f, a0);
    Polynomial c = divide_exact(df, a0);
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial ai = d.is_zero() ? b : gcd(b, d);
        if (ai.degree() > 0)
            out.emplace_back(ai, i);
        b = divide_exact(b, ai);
        c = divide_exact(d, ai);
        d = c - b.derivative();
    }
    return out;
}

Cplx horner(const std::vector<Cplx>& coeffs, const Cplx& z, long prec) {
    Cplx acc{BigFloat(0, prec), BigFloat(0, prec)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

// Aberth-Ehrlich simultaneous iteration on a squarefree monic polynomial.
std::vector<Cplx> aberth(const Polynomial& f, long prec, long digits) {
    const int n = f.degree();
    std::vector<Cplx> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] =
            Cplx(big_float(f.coefficient(static_cast<std::size_t>(i)), prec),
                 BigFloat(0, prec));
    std::vector<Cplx> dc(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        dc[static_cast<std::size_t>(i - 1)] =
            Cplx(BigFloat(i, prec) * c[static_cast<std::size_t>(i)].re, BigFloat(0, prec));

    // Start on a circle at half the Cauchy bound, angles offset so no guess
    // sits on the real axis (double precision is plenty for starting points).
    double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(to_double(f.coefficient(static_cast<std::size_t>(i)))));
    radius = 0.5 * (1.0 + radius);
    std::vector<Cplx> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double theta = 2.0 * 3.14159265358979323846 * j / n + 0.41;
        z.push_back(Cplx(big_float(radius * std::cos(theta), prec),
                         big_float(radius * std::sin(theta), prec)));
    }

    BigFloat tol = big_float(1, prec); // 10^-(digits+2)
    for (long i = 0; i < digits + 2; ++i)
        tol /= 10;

    long max_rounds = 200 + digits * 4;
    for (long round = 0; round < max_rounds; ++round) {
        BigFloat worst(0, prec);
        for (std::size_t i = 0; i < z.size(); ++i) {
            Cplx fz = horner(c, z[i], prec);
            Cplx dfz = horner(dc, z[i], prec);
            if (sgn(dfz.re) == 0 && sgn(dfz.im) == 0) {
                // derivative vanished under us; nudge and retry next round
                z[i].re += tol;
                worst = 1;
                continue;
            }
            Cplx w = fz / dfz;
            Cplx s{BigFloat(0, prec), BigFloat(0, prec)};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i)
                    s += NumericTraits<Cplx>::one(s) / (z[i] - z[j]);
            Cplx denom = NumericTraits<Cplx>::one(s) - w * s;
            Cplx corr = (sgn(denom.re) == 0 && sgn(denom.im) == 0) ? w : w / denom;
            z[i] = z[i] - corr;
            BigFloat scale = z[i].abs();
            if (scale < 1)
                scale = 1;
            BigFloat rel = corr.abs() / scale;
            if (rel > worst)
                worst = rel;
        }
        if (worst <= tol)
            return z;
    }
    raise(Errc::PrecisionUnreachable, "root iteration did not converge for " + to_string(f));
}

} // namespace

NumericRootSet all_roots_numeric(const Polynomial& p, long digits) {
    if (p.is_zero())
        raise(Errc::InvalidArgument, "roots of the zero polynomial");
    if (digits < 1)
        raise(Errc::InvalidArgument, "digits must be positive");
    long prec = bits_for_digits(digits);
    NumericRootSet out;
    out.digits = digits;
    out.prec_bits = prec;
    if (p.degree() == 0)
        return out;

    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<Cplx> zs;
        if (factor.degree() == 1) {
            // monic x + c0: root is -c0, exact to full precision
            zs.push_back(Cplx(big_float(-factor.coefficient(0), prec), BigFloat(0, prec)));
        } else {
            zs = aberth(factor, prec, digits);
        }
        Polynomial dfactor = factor.derivative();
        for (const Cplx& zv : zs) {
            std::vector<Cplx> fc, dfc;
            for (int i = 0; i <= factor.degree(); ++i)
                fc.push_back(Cplx(big_float(factor.coefficient(static_cast<std::size_t>(i)), prec),
                                  BigFloat(0, prec)));
            for (int i = 0; i <= dfactor.degree(); ++i)
                dfc.push_back(Cplx(big_float(dfactor.coefficient(static_cast<std::size_t>(i)), prec),
                                   BigFloat(0, prec)));
            BigFloat df_abs = horner(dfc, zv, prec).abs();
            BigFloat err = sgn(df_abs) == 0
                               ? BigFloat(1, prec)
                               : BigFloat(factor.degree(), prec) * horner(fc, zv, prec).abs() / df_abs;
            out.roots.push_back(NumericRoot{zv, mult, err});
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const NumericRoot& a, const NumericRoot& b) {
        BigFloat ma = a.value.norm2(), mb = b.value.norm2();
        if (ma != mb)
            return ma > mb;
        if (a.value.re != b.value.re)
            return a.value.re > b.value.re;
        return a.value.im > b.value.im;
    });
    return out;
}

} // namespace recur
