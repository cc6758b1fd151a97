#pragma once

#include "recur/errors.hpp"
#include "recur/rational.hpp"

#include <algorithm>
#include <string>

namespace recur {

// Closed interval with exact rational endpoints. Arithmetic is exact, so the
// usual outward-rounding dance is unnecessary: results are the tightest
// enclosures possible and inclusion-monotone by construction.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(const Rat& point) : lo(point), hi(point) {}
    Interval(const Rat& lo_, const Rat& hi_) : lo(lo_), hi(hi_) {
        if (lo > hi)
            raise(Errc::InvalidArgument, "interval endpoints out of order");
    }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    // Sign certificate: +1 if the whole interval is > 0, -1 if < 0, else 0
    // (zero inside or touching — undecided).
    int certified_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }

    Interval operator-() const { return Interval(-hi, -lo); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                        std::max(std::max(p1, p2), std::max(p3, p4)));
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

std::string to_string(const Interval& iv); // "[lo, hi]"

} // namespace recur
