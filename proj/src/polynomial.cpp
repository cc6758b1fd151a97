#include "recur/polynomial.hpp"

#include "recur/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace recur {

namespace {
const Rat kZero(0);
} // namespace

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t e, const Rat& c) {
    if (c == 0)
        return Polynomial();
    std::vector<Rat> v(e + 1, Rat(0));
    v[e] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_descending(const std::vector<Rat>& desc) {
    return Polynomial(std::vector<Rat>(desc.rbegin(), desc.rend()));
}

const Rat& Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rat& Polynomial::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

bool Polynomial::has_positive_coefficient() const {
    return std::any_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return sgn(c) > 0; });
}

bool Polynomial::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c.get_den() == 1; });
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Interval Polynomial::eval_interval(const Interval& x) const {
    Interval acc; // [0, 0]
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Interval(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return Polynomial();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(std::size_t e) const {
    if (is_zero() || e == 0)
        return *this;
    std::vector<Rat> v(coeffs_.size() + e, Rat(0));
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(e));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] = -coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rat& s, const Polynomial& p) {
    if (s == 0)
        return Polynomial();
    std::vector<Rat> v(p.coeffs_);
    for (auto& c : v)
        c *= s;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        raise(Errc::ZeroDivisor, "polynomial division by zero");
    if (num.degree() < den.degree())
        return {Polynomial(), num};
    std::vector<Rat> rem(num.coefficients());
    std::vector<Rat> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rat(0));
    const Rat& lead = den.leading();
    for (int i = num.degree(); i >= den.degree(); --i) {
        Rat factor = rem[static_cast<std::size_t>(i)] / lead;
        if (factor == 0)
            continue;
        quot[static_cast<std::size_t>(i - den.degree())] = factor;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<std::size_t>(i - den.degree() + j)] -=
                factor * den.coefficient(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    auto [quot, rem] = divmod(num, den);
    if (!rem.is_zero())
        raise(Errc::NotDivisible, to_string(den) + " does not divide " + to_string(num));
    return quot;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        raise(Errc::BothZero, "gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = y;
        // monic normalization keeps coefficient growth in check
        y = r.is_zero() ? r : (Rat(1) / r.leading()) * r;
    }
    return (Rat(1) / x.leading()) * x;
}

namespace {

// Canonical Sturm sequence p, p', -rem(...), each entry scaled by a positive
// constant (1/|leading|) — positive scaling preserves every sign evaluation.
std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq;
    seq.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero())
        return seq;
    seq.push_back(d);
    while (true) {
        const Polynomial& s1 = seq[seq.size() - 2];
        const Polynomial& s2 = seq[seq.size() - 1];
        Polynomial r = divmod(s1, s2).second;
        if (r.is_zero())
            break;
        Rat lead = r.leading();
        Rat scale = sgn(lead) > 0 ? Rat(1) / lead : Rat(-1) / lead; // positive factor
        seq.push_back(Rat(-1) * (scale * r));
    }
    return seq;
}

int sign_changes(const std::vector<Polynomial>& seq, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& s : seq) {
        int sg = sgn(s.eval(x));
        if (sg == 0)
            continue;
        if (prev != 0 && sg != prev)
            ++changes;
        prev = sg;
    }
    return changes;
}

} // namespace

int sturm_root_count(const Polynomial& p, const Interval& iv) {
    if (p.is_zero())
        raise(Errc::InvalidArgument, "root count of the zero polynomial");
    if (p.degree() == 0)
        return 0;
    Rat lo = iv.lo, hi = iv.hi;
    // Sturm needs nonroot endpoints; nudge inward by width/2^i, i = 1..64.
    Rat offset = iv.width() / 2;
    for (int i = 0; p.eval(lo) == 0; ++i) {
        if (i >= 64 || offset == 0)
            raise(Errc::EndpointRoot, "could not move off a root at the lower endpoint");
        lo = iv.lo + offset;
        offset /= 2;
    }
    offset = (hi - lo) / 2;
    for (int i = 0; p.eval(hi) == 0; ++i) {
        if (i >= 64 || offset == 0)
            raise(Errc::EndpointRoot, "could not move off a root at the upper endpoint");
        hi = iv.hi - offset;
        offset /= 2;
    }
    if (lo >= hi)
        return 0;
    auto seq = sturm_sequence(p);
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coefficient(static_cast<std::size_t>(i));
        if (c == 0)
            continue;
        Rat mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        bool show_coeff = (mag != 1) || (i == 0);
        if (show_coeff) {
            if (mag.get_den() == 1)
                out += mag.get_str();
            else
                out += "(" + mag.get_str() + ")";
        }
        if (i > 0) {
            out += "x";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit PolyParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool take(char c) {
        if (!peek(c))
            return false;
        ++pos;
        return true;
    }

    std::string take_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            raise(Errc::InvalidArgument, "expected digits at position " + std::to_string(pos) +
                                             " in '" + text + "'");
        return text.substr(start, pos - start);
    }

    // coefficient: digits [ '/' digits ], or parenthesized signed rational
    Rat take_coeff() {
        if (take('(')) {
            skip_ws();
            bool neg = take('-');
            if (!neg)
                take('+');
            Rat v = take_coeff();
            if (!take(')'))
                raise(Errc::InvalidArgument, "unbalanced '(' in '" + text + "'");
            return neg ? Rat(-v) : v;
        }
        std::string num = take_digits();
        if (take('/'))
            return rat_from_string(num + "/" + take_digits());
        return rat_from_string(num);
    }

    Polynomial parse() {
        Polynomial acc;
        skip_ws();
        if (pos == text.size())
            raise(Errc::InvalidArgument, "empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == text.size())
                break;
            int sg = 1;
            if (take('-'))
                sg = -1;
            else if (take('+'))
                sg = 1;
            else if (!first)
                raise(Errc::InvalidArgument, "expected '+' or '-' at position " +
                                                 std::to_string(pos) + " in '" + text + "'");
            skip_ws();
            Rat coeff(1);
            bool have_coeff = false;
            if (pos < text.size() &&
                (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '(')) {
                coeff = take_coeff();
                have_coeff = true;
            }
            std::size_t expo = 0;
            skip_ws();
            if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
                ++pos;
                expo = 1;
                if (take('^'))
                    expo = std::stoull(take_digits());
            } else if (!have_coeff) {
                raise(Errc::InvalidArgument, "expected a term at position " + std::to_string(pos) +
                                                 " in '" + text + "'");
            }
            acc = acc + Polynomial::monomial(expo, sg < 0 ? Rat(-coeff) : coeff);
            first = false;
        }
        return acc;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

} // namespace recur
