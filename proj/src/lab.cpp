#include "recur/lab.hpp"

#include "recur/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

namespace recur {

long Rng::uniform(long lo, long hi) {
    if (lo > hi)
        raise(Errc::InvalidArgument, "empty range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) // the full 64-bit range
        return static_cast<long>(engine_());
    // accept only below the largest multiple of range: unbiased and portable
    std::uint64_t max_valid = std::numeric_limits<std::uint64_t>::max() / range * range;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= max_valid);
    return lo + static_cast<long>(x % range);
}

Recurrence random_zlrr(Rng& rng, int order, long coeff_bound) {
    if (order < 2)
        raise(Errc::InvalidArgument, "a ZLRR needs order at least 2");
    if (coeff_bound < 1)
        raise(Errc::InvalidArgument, "coefficient bound must be at least 1");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Int> c(static_cast<std::size_t>(order));
        c[0] = 0; // depth >= 1
        for (int i = 1; i + 1 < order; ++i)
            c[static_cast<std::size_t>(i)] = rng.uniform(0, coeff_bound);
        c.back() = rng.uniform(1, coeff_bound);
        try {
            return Recurrence::build(c);
        } catch (const Error& e) {
            if (e.code() != Errc::Degenerate)
                throw;
        }
    }
    raise(Errc::Degenerate, "no valid ZLRR of order " + std::to_string(order) +
                                " found in 10000 draws (order 2 has none at all)");
}

std::vector<Rat> random_beta(Rng& rng, std::size_t k, long beta_bound) {
    while (true) {
        std::vector<Rat> beta(k);
        bool all_zero = true;
        for (auto& b : beta) {
            long v = rng.uniform(-beta_bound, beta_bound);
            b = v;
            all_zero = all_zero && v == 0;
        }
        if (!all_zero)
            return beta;
    }
}

ExperimentResult runtime_experiment(const LabConfig& config) {
    if (config.degree_min < 3 || config.degree_max < config.degree_min)
        raise(Errc::InvalidArgument, "degree range must start at 3 or above");
    Rng rng(config.seed);
    ExperimentResult out;
    Int trillion;
    mpz_ui_pow_ui(trillion.get_mpz_t(), 10, 12);
    Rat enclosure_width(Int(1), trillion);

    for (int degree = config.degree_min; degree <= config.degree_max; ++degree) {
        for (int poly_id = 0; poly_id < config.polys_per_degree; ++poly_id) {
            Recurrence rec = random_zlrr(rng, degree, config.coeff_bound);
            Polynomial P = rec.characteristic_polynomial();
            RootEnclosure enclosure = principal_root(P, enclosure_width);
            Rat r_mid = enclosure.midpoint();

            for (int sample = 0; sample < config.samples_per_poly; ++sample) {
                std::vector<Rat> beta =
                    random_beta(rng, static_cast<std::size_t>(degree), config.beta_bound);
                TrialRecord record;
                record.degree = degree;
                record.poly_id = poly_id;
                record.coefficients = rec.coefficients();
                record.q0_at_r = to_double(Polynomial::from_descending(beta).eval(r_mid));

                ZeroingOptions options;
                options.budget = config.budget;
                options.root_hint = &enclosure;
                ZeroingResult run = run_zeroing(ZeroingInput{P, beta}, options);
                if (run.termination == Termination::Terminated) {
                    record.terminated = true;
                    record.steps = static_cast<long>(run.steps);
                    record.q1_nonpos_step = static_cast<long>(run.q1_nonpositive_from());
                }
                out.records.push_back(std::move(record));
            }
        }
    }

    for (int degree = config.degree_min; degree <= config.degree_max; ++degree) {
        std::vector<double> magnitude, steps;
        for (const TrialRecord& record : out.records) {
            if (record.degree != degree || !record.terminated)
                continue;
            magnitude.push_back(std::fabs(record.q0_at_r));
            steps.push_back(static_cast<double>(record.steps));
        }
        if (magnitude.size() >= 2)
            out.spearman_by_degree[degree] = spearman(magnitude, steps);
    }
    return out;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]])
            ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t)
            rank[order[t]] = avg;
        i = j + 1;
    }
    return rank;
}

double format_guard(double v) { return std::isfinite(v) ? v : 0.0; }

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, format_guard(v));
    return buf;
}

} // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        raise(Errc::InvalidArgument, "need two equal-length samples of size >= 2");
    std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
    double n = static_cast<double>(x.size());
    double mean = (n + 1) / 2.0;
    double cov = 0, vx = 0, vy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = rx[i] - mean, dy = ry[i] - mean;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0 || vy == 0)
        return 0; // a constant sample has no rank order to correlate
    return cov / std::sqrt(vx * vy);
}

std::string render_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "degree,poly_id,p_coeffs,q0_at_r,steps,terminated,q1_nonpos_step\n";
    for (const TrialRecord& r : records) {
        out << r.degree << ',' << r.poly_id << ',';
        for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
            if (i)
                out << ';';
            out << r.coefficients[i].get_str();
        }
        out << ',' << fmt("%.17g", r.q0_at_r) << ',' << r.steps << ',' << (r.terminated ? 1 : 0)
            << ',' << r.q1_nonpos_step << '\n';
    }
    return out.str();
}

std::vector<TrialRecord> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "degree,poly_id,p_coeffs,q0_at_r,steps,terminated,q1_nonpos_step")
        raise(Errc::InvalidArgument, "unrecognized CSV header");
    std::vector<TrialRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (fields.size() != 7)
            raise(Errc::InvalidArgument, "line " + std::to_string(line_no) + ": expected 7 fields");
        try {
            TrialRecord r;
            r.degree = std::stoi(fields[0]);
            r.poly_id = std::stoi(fields[1]);
            std::istringstream cs(fields[2]);
            std::string c;
            while (std::getline(cs, c, ';'))
                r.coefficients.push_back(int_from_string(c));
            r.q0_at_r = std::stod(fields[3]);
            r.steps = std::stol(fields[4]);
            r.terminated = fields[5] == "1";
            r.q1_nonpos_step = std::stol(fields[6]);
            records.push_back(std::move(r));
        } catch (const std::exception&) {
            raise(Errc::InvalidArgument, "line " + std::to_string(line_no) + ": malformed field");
        }
    }
    return records;
}

std::string render_svg(const std::vector<TrialRecord>& records) {
    struct Point {
        double x, y;
        int degree;
    };
    std::vector<Point> points;
    std::vector<int> degrees;
    for (const TrialRecord& r : records) {
        if (!r.terminated || r.steps < 1 || r.q0_at_r == 0)
            continue;
        points.push_back({std::log10(std::fabs(r.q0_at_r)), std::log10(double(r.steps)), r.degree});
        if (std::find(degrees.begin(), degrees.end(), r.degree) == degrees.end())
            degrees.push_back(r.degree);
    }
    std::sort(degrees.begin(), degrees.end());

    const double W = 800, H = 600, L = 70, R = 640, T = 40, B = 550;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!points.empty()) {
        xmin = xmax = points[0].x;
        ymin = ymax = points[0].y;
        for (const Point& p : points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    if (xmax - xmin < 1e-9) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-9) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    double xpad = 0.04 * (xmax - xmin), ypad = 0.04 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;
    auto sx = [&](double v) { return L + (v - xmin) / (xmax - xmin) * (R - L); };
    auto sy = [&](double v) { return B - (v - ymin) / (ymax - ymin) * (B - T); };

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#17becf"};
    auto color_of = [&](int degree) {
        std::size_t i = 0;
        for (; i < degrees.size(); ++i)
            if (degrees[i] == degree)
                break;
        return kPalette[i % 6];
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (L + R) / 2
        << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">zeroing run-time vs |Q0(r)|"
           "</text>\n";

    // frame
    svg << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << R - L << "\" height=\""
        << B - T << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // decade ticks
    auto ticks = [](double lo, double hi) {
        std::vector<int> t;
        int a = static_cast<int>(std::ceil(lo)), b = static_cast<int>(std::floor(hi));
        int step = std::max(1, (b - a) / 10 + ((b - a) % 10 ? 1 : 0));
        for (int v = a; v <= b; v += step)
            t.push_back(v);
        return t;
    };
    for (int e : ticks(xmin, xmax)) {
        double px = sx(e);
        svg << "<line x1=\"" << fmt("%.2f", px) << "\" y1=\"" << B << "\" x2=\"" << fmt("%.2f", px)
            << "\" y2=\"" << B + 5 << "\" stroke=\"#444\"/>\n";
        svg << "<text x=\"" << fmt("%.2f", px) << "\" y=\"" << B + 20
            << "\" text-anchor=\"middle\">1e" << e << "</text>\n";
    }
    for (int e : ticks(ymin, ymax)) {
        double py = sy(e);
        svg << "<line x1=\"" << L - 5 << "\" y1=\"" << fmt("%.2f", py) << "\" x2=\"" << L
            << "\" y2=\"" << fmt("%.2f", py) << "\" stroke=\"#444\"/>\n";
        svg << "<text x=\"" << L - 8 << "\" y=\"" << fmt("%.2f", py + 4)
            << "\" text-anchor=\"end\">1e" << e << "</text>\n";
    }
    svg << "<text x=\"" << (L + R) / 2 << "\" y=\"" << H - 8
        << "\" text-anchor=\"middle\">|Q0(r)| (log scale)</text>\n";
    svg << "<text x=\"16\" y=\"" << (T + B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (T + B) / 2 << ")\">steps (log scale)</text>\n";

    for (const Point& p : points)
        svg << "<circle cx=\"" << fmt("%.2f", sx(p.x)) << "\" cy=\"" << fmt("%.2f", sy(p.y))
            << "\" r=\"2.5\" fill=\"" << color_of(p.degree) << "\" fill-opacity=\"0.45\"/>\n";

    double ly = T + 12;
    for (int degree : degrees) {
        std::size_t count = 0;
        for (const Point& p : points)
            if (p.degree == degree)
                ++count;
        svg << "<rect x=\"" << R + 16 << "\" y=\"" << fmt("%.2f", ly - 9)
            << "\" width=\"12\" height=\"12\" fill=\"" << color_of(degree) << "\"/>\n";
        svg << "<text x=\"" << R + 34 << "\" y=\"" << fmt("%.2f", ly + 2) << "\">degree " << degree
            << " (" << count << ")</text>\n";
        ly += 20;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::vector<SlowdownPoint> slowdown_experiment(int s_min, int s_max, unsigned long budget) {
    if (s_min < 1 || s_max < s_min)
        raise(Errc::InvalidArgument, "need 1 <= s_min <= s_max");
    std::vector<SlowdownPoint> out;
    for (int s = s_min; s <= s_max; ++s) {
        std::size_t L = static_cast<std::size_t>(s) + 2;
        std::vector<Int> c(L, Int(0));
        c[L - 2] = 1;
        c[L - 1] = 1; // x^{s+2} - x - 1
        Recurrence rec = Recurrence::build(c);
        SlowdownPoint point;
        point.s = s;
        try {
            DerivationResult derivation = derive_plrr(rec, Int(1), budget);
            point.completed = true;
            point.t0 = derivation.t0;
            point.derived_degree = derivation.p.degree();
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExhausted)
                throw;
        }
        out.push_back(point);
    }
    return out;
}

std::string repeated_root_probe(const ZeroingInput& input, long digits, unsigned long iterations) {
    RootEnclosure enclosure = principal_root(input.P, Rat(1, 1 << 20));
    std::size_t k = static_cast<std::size_t>(input.P.degree());
    if (iterations < k)
        iterations = k;
    std::vector<Rat> q1 = q1_initial_values(input);

    Int denom_pow;
    mpz_ui_pow_ui(denom_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    enclosure = enclosure.refined(Rat(Int(1), denom_pow));
    Rat r_mid = enclosure.midpoint();

    NumericRootSet roots = all_roots_numeric(input.P, digits);
    long prec = roots.prec_bits;
    BigFloat r_bf = big_float(r_mid, prec);

    // identify the principal root and collect the others with multiplicities
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
    Cplx r_cplx{r_bf, BigFloat(0, prec)};
    Cplx denom{BigFloat(1, prec), BigFloat(0, prec)};
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        if (i == principal)
            continue;
        Cplx gap = r_cplx - roots.roots[i].value;
        for (int m = 0; m < roots.roots[i].multiplicity; ++m)
            denom = denom * gap;
    }
    BigFloat numerator = big_float(Polynomial::from_descending(input.beta).eval(r_mid), prec);
    Cplx formula = Cplx(numerator, BigFloat(0, prec)) / denom;

    // empirical limit q(1,t) / r^t using the exact coefficient sequence
    std::vector<Rat> q(q1);
    for (unsigned long t = q.size(); t <= iterations; ++t) {
        Rat next(0);
        for (std::size_t i = 1; i <= k; ++i) {
            Rat ci = -input.P.coefficient(k - i);
            if (ci != 0)
                next += ci * q[q.size() - i];
        }
        q.push_back(next);
    }
    BigFloat r_pow(0, prec);
    mpf_pow_ui(r_pow.get_mpf_t(), r_bf.get_mpf_t(), iterations);
    BigFloat empirical = big_float(q.back(), prec) / r_pow;

    std::ostringstream out;
    out << "repeated-root coefficient probe (numeric, no claim of proof)\n";
    out << "P(x) = " << to_string(input.P) << "\n";
    out << "root multiplicities:";
    for (const auto& root : roots.roots)
        out << " " << root.multiplicity;
    out << "\n";
    if (roots.roots[principal].multiplicity != 1)
        out << "warning: principal root is not simple; the formula does not apply\n";
    out << "formula  Q0(r)/prod(r - r_j)^m_j  = " << fmt("%.12g", formula.re.get_d()) << "\n";
    out << "empirical q(1," << iterations << ")/r^" << iterations << "      = "
        << fmt("%.12g", empirical.get_d()) << "\n";
    out << "difference                        = "
        << fmt("%.3g", std::fabs(formula.re.get_d() - empirical.get_d())) << "\n";
    return out.str();
}

} // namespace recur
