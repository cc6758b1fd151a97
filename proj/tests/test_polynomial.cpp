#include "recur/polynomial.hpp"

#include "recur/errors.hpp"
#include "recur/lab.hpp"

#include <doctest.h>

using namespace recur;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(text); }

Polynomial random_poly(Rng& rng, int max_degree, long bound) {
    int deg = static_cast<int>(rng.uniform(0, max_degree));
    std::vector<Rat> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs)
        c = Rat(rng.uniform(-bound, bound));
    if (coeffs.back() == 0)
        coeffs.back() = Rat(1);
    return Polynomial(coeffs);
}

} // namespace

TEST_CASE("construction trims trailing zeros and reports degree") {
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial({Rat(0), Rat(0)}).is_zero());
    CHECK(Polynomial::constant(Rat(5)).degree() == 0);
    Polynomial p({Rat(-1), Rat(-2), Rat(0), Rat(1)}); // x^3 - 2x - 1
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(0) == -1);
    CHECK(p.coefficient(1) == -2);
    CHECK(p.coefficient(2) == 0);
    CHECK(p.coefficient(3) == 1);
    CHECK(p.coefficient(17) == 0); // beyond the degree
    CHECK(p.leading() == 1);
    CHECK(Polynomial().leading() == 0);
}

TEST_CASE("from_descending matches manual coefficient order") {
    Polynomial p = Polynomial::from_descending({Rat(1), Rat(0), Rat(-2), Rat(-1)});
    CHECK(p == P("x^3 - 2x - 1"));
    CHECK(Polynomial::monomial(4, Rat(3)) == P("3x^4"));
    CHECK(Polynomial::monomial(2, Rat(0)).is_zero());
}

TEST_CASE("arithmetic oracles") {
    CHECK(P("x^2 - x - 1") * P("x + 1") == P("x^3 - 2x - 1"));
    CHECK(P("x^2 - x - 1") * P("x^2 + x + 1") == P("x^4 - x^2 - 2x - 1"));
    CHECK(P("x + 1") + P("x - 1") == P("2x"));
    CHECK(P("x + 1") - P("x + 1") == Polynomial());
    CHECK(-P("x - 3") == P("3 - x"));
    CHECK(Rat(1, 2) * P("2x^2 - 4") == P("x^2 - 2"));
    CHECK(P("x").shifted(3) == P("x^4"));
    CHECK(P("x^3 - 2x - 1").derivative() == P("3x^2 - 2"));
    CHECK(P("7").derivative().is_zero());
}

TEST_CASE("evaluation by Horner") {
    Polynomial p = P("x^3 - 2x - 1");
    CHECK(p.eval(Rat(2)) == 3);
    CHECK(p.eval(Rat(-1)) == 0);
    CHECK(p.eval(Rat(1, 2)) == Rat(-15, 8));
    CHECK(p(Rat(0)) == -1);
    CHECK(P("x^2 - x - 1").eval(Rat(2)) == 1);
    CHECK(Polynomial().eval(Rat(7)) == 0);
}

TEST_CASE("coefficients stay canonical") {
    Polynomial p({Rat(2, 4)});
    CHECK(p.coefficient(0).get_num() == 1);
    CHECK(p.coefficient(0).get_den() == 2);
    Polynomial q = Rat(2) * p; // 2 * 1/2 = 1/1, reduced
    CHECK(q.coefficient(0).get_num() == 1);
    CHECK(q.coefficient(0).get_den() == 1);
}

TEST_CASE("interval evaluation is exact on rational endpoints") {
    // x^2 - x - 1 straddles its positive root on [21/13, 13/8]
    Interval iv(Rat(21, 13), Rat(13, 8));
    Interval image = P("x^2 - x - 1").eval_interval(iv);
    CHECK(image == Interval(Rat(-1, 169), Rat(1, 64)));
    CHECK(image.certified_sign() == 0);
    CHECK(image.contains(Rat(0)));

    CHECK(P("x").eval_interval(Interval(Rat(1), Rat(2))) == Interval(Rat(1), Rat(2)));

    Interval cubic = P("x^3 - 2x - 1").eval_interval(Interval(Rat(3, 2), Rat(17, 10)));
    CHECK(cubic == Interval(Rat(-5, 8), Rat(513, 1000)));
    CHECK(cubic.lo > -1);
    CHECK(cubic.hi < 1);
    CHECK(cubic.contains(P("x^3 - 2x - 1").eval(Rat(8, 5))));
}

TEST_CASE("interval evaluation encloses point evaluations (1000 sampled points)") {
    Rng rng(101);
    for (int trial = 0; trial < 250; ++trial) {
        Polynomial p = random_poly(rng, 5, 8);
        Rat lo = Rat(rng.uniform(-20, 19), 7);
        Interval iv(lo, lo + Rat(rng.uniform(0, 10), 3));
        Interval image = p.eval_interval(iv);
        Rat interior = iv.lo + iv.width() * Rat(rng.uniform(0, 16), 16);
        for (const Rat& x : {iv.lo, iv.mid(), iv.hi, interior}) {
            CAPTURE(to_string(p));
            CHECK(image.contains(p.eval(x)));
        }
    }
}

TEST_CASE("interval evaluation is monotone in the input interval") {
    Rng rng(707);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(rng, 5, 8);
        Rat lo = Rat(rng.uniform(-12, 12), 5);
        Interval wide(lo, lo + Rat(rng.uniform(1, 8), 2));
        Interval narrow(wide.lo + wide.width() / 4, wide.hi - wide.width() / 4);
        CHECK(p.eval_interval(wide).contains(p.eval_interval(narrow)));
    }
}

TEST_CASE("division with remainder") {
    auto [q, r] = divmod(P("x^3 - 2x - 1"), P("x^2 - x - 1"));
    CHECK(q == P("x + 1"));
    CHECK(r.is_zero());

    auto [q2, r2] = divmod(P("x^3"), P("x - 1"));
    CHECK(q2 == P("x^2 + x + 1"));
    CHECK(r2 == P("1"));

    auto [q3, r3] = divmod(P("x + 1"), P("x^2"));
    CHECK(q3.is_zero());
    CHECK(r3 == P("x + 1"));

    try {
        divmod(P("x"), Polynomial());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroDivisor);
    }
}

TEST_CASE("exact division accepts multiples and rejects the rest") {
    CHECK(divide_exact(P("x^3 - 2x - 1"), P("x + 1")) == P("x^2 - x - 1"));
    CHECK(divide_exact(P("x^5 - x^4 - 1"), P("x^3 - x - 1")) == P("x^2 - x + 1"));
    CHECK_THROWS_AS(divide_exact(P("x^2 + 1"), P("x - 1")), Error);
    try {
        divide_exact(P("x^2"), P("x + 1"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotDivisible);
    }
}

TEST_CASE("exact division round-trips against multiplication") {
    Rng rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial b = random_poly(rng, 4, 9);
        Polynomial q = random_poly(rng, 4, 9);
        Polynomial a = b * q;
        CHECK(divide_exact(a, b) == q);
        CHECK(b * divide_exact(a, b) == a);
    }
}

TEST_CASE("division identity holds on random pairs") {
    Rng rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_poly(rng, 6, 9);
        Polynomial b = random_poly(rng, 3, 9);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd is monic and divides both inputs") {
    CHECK(gcd(P("x^3 - 2x - 1"), P("x^2 - x - 1")) == P("x^2 - x - 1"));
    CHECK(gcd(P("x^2 - 1"), P("x^2 - 2x + 1")) == P("x - 1"));
    CHECK(gcd(P("x^2 + 1"), P("x^2 - 1")) == P("1"));
    CHECK(gcd(P("2x + 2"), Polynomial()) == P("x + 1")); // normalized to monic
    try {
        gcd(Polynomial(), Polynomial());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BothZero);
    }
}

TEST_CASE("gcd property on random products") {
    Rng rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial common = random_poly(rng, 2, 5);
        Polynomial a = common * random_poly(rng, 3, 5);
        Polynomial b = common * random_poly(rng, 3, 5);
        Polynomial g = gcd(a, b);
        CHECK(g.leading() == 1);
        CHECK(g * divide_exact(a, g) == a);
        CHECK(g * divide_exact(b, g) == b);
        // the planted factor divides the gcd
        Polynomial monic_common = (Rat(1) / common.leading()) * common;
        CHECK(monic_common * divide_exact(g, monic_common) == g);
    }
}

TEST_CASE("distinct real roots counted on half-open intervals") {
    Polynomial p = P("x^3 - 2x - 1"); // roots -1, (1-sqrt 5)/2, (1+sqrt 5)/2
    CHECK(sturm_root_count(p, Interval(Rat(0), Rat(2))) == 1);
    CHECK(sturm_root_count(p, Interval(Rat(-2), Rat(2))) == 3);
    CHECK(sturm_root_count(p, Interval(Rat(-2), Rat(-3, 4))) == 1);
    CHECK(sturm_root_count(p, Interval(Rat(2), Rat(3))) == 0);
    CHECK(sturm_root_count(P("x^2 - x - 1"), Interval(Rat(1), Rat(2))) == 1);
    CHECK(sturm_root_count(P("x^2 - x - 1"), Interval(Rat(2), Rat(3))) == 0);
    CHECK(sturm_root_count(P("x^2 + 1"), Interval(Rat(-5), Rat(5))) == 0);
}

TEST_CASE("repeated roots are counted once") {
    CHECK(sturm_root_count(P("x^2"), Interval(Rat(-1), Rat(1))) == 1);
    CHECK(sturm_root_count(P("x^4 - 2x^2 + 1"), Interval(Rat(-2), Rat(2))) == 2);
    CHECK(sturm_root_count(P("x^3 - 3x - 2"), Interval(Rat(-2), Rat(3))) == 2);
}

TEST_CASE("endpoint roots are nudged off or reported") {
    // root at an interior-reachable endpoint: the count proceeds on a shrunken interval
    CHECK(sturm_root_count(P("x^2 - x - 1"), Interval(Rat(-10), Rat(10))) == 2);
    // a zero-width interval sitting exactly on a root cannot be nudged
    try {
        sturm_root_count(P("x + 1"), Interval(Rat(-1), Rat(-1)));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EndpointRoot);
    }
    CHECK_THROWS_AS(sturm_root_count(Polynomial(), Interval(Rat(0), Rat(1))), Error);
    CHECK(sturm_root_count(P("5"), Interval(Rat(-1), Rat(1))) == 0);
}

TEST_CASE("root counts match planted factorizations") {
    Rng rng(404);
    int done = 0;
    while (done < 25) {
        // plant 1-3 distinct integer roots and one quadratic with no real roots
        long r1 = rng.uniform(-6, 6), r2 = rng.uniform(-6, 6), r3 = rng.uniform(-6, 6);
        if (r1 == r2 || r1 == r3 || r2 == r3)
            continue;
        ++done;
        Polynomial p = P("x^2 + 1");
        for (long root : {r1, r2, r3})
            p = p * (Polynomial::monomial(1) - Polynomial::constant(Rat(root)));
        CHECK(sturm_root_count(p, Interval(Rat(-7), Rat(7))) == 3);
        long cut = 0; // count roots in (cut-1/2, 7]
        int expected = 0;
        for (long root : {r1, r2, r3})
            if (2 * root > 2 * cut - 1)
                ++expected;
        CHECK(sturm_root_count(p, Interval(Rat(2 * cut - 1, 2), Rat(7))) == expected);
    }
}

TEST_CASE("rendering and parsing round-trip") {
    CHECK(to_string(P("x^3 - 2x - 1")) == "x^3 - 2x - 1");
    CHECK(to_string(Polynomial()) == "0");
    CHECK(to_string(P("-x + 3")) == "-x + 3");
    CHECK(to_string(Polynomial({Rat(1, 2), Rat(0), Rat(3, 2)})) == "(3/2)x^2 + (1/2)");
    CHECK(P("(3/2)x^2 + 1/2") == Polynomial({Rat(1, 2), Rat(0), Rat(3, 2)}));
    CHECK(P("(-1/3)x") == Polynomial({Rat(0), Rat(-1, 3)}));
    CHECK(P("x^29 - x^28 - 310601172680577x^4") ==
          Polynomial::monomial(29) - Polynomial::monomial(28) -
              Polynomial::monomial(4, Rat(int_from_string("310601172680577"))));

    Rng rng(505);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(rng, 7, 12);
        CHECK(parse_polynomial(to_string(p)) == p);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_polynomial(""), Error);
    CHECK_THROWS_AS(parse_polynomial("x +"), Error);
    CHECK_THROWS_AS(parse_polynomial("x 1"), Error);
    CHECK_THROWS_AS(parse_polynomial("(1/2 x"), Error);
    CHECK_THROWS_AS(parse_polynomial("y + 1"), Error);
    CHECK_THROWS_AS(parse_polynomial("x^"), Error);
}

TEST_CASE("interval basics") {
    CHECK_THROWS_AS(Interval(Rat(1), Rat(0)), Error);
    Interval iv(Rat(-1), Rat(2));
    CHECK(iv.width() == 3);
    CHECK(iv.mid() == Rat(1, 2));
    CHECK(iv.contains(Rat(0)));
    CHECK(!iv.contains(Rat(3)));
    CHECK(iv.certified_sign() == 0);
    CHECK(Interval(Rat(1), Rat(2)).certified_sign() == 1);
    CHECK(Interval(Rat(-2), Rat(-1)).certified_sign() == -1);
    CHECK((Interval(Rat(-1), Rat(2)) * Interval(Rat(-3), Rat(1))) ==
          Interval(Rat(-6), Rat(3)));
    CHECK((-Interval(Rat(1), Rat(2))) == Interval(Rat(-2), Rat(-1)));
    CHECK(to_string(Interval(Rat(1, 2), Rat(3, 4))) == "[1/2, 3/4]");
}
