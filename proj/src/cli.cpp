#include "recur/cli.hpp"

#include "recur/analysis.hpp"
#include "recur/errors.hpp"
#include "recur/io.hpp"
#include "recur/lab.hpp"
#include "recur/recurrence.hpp"
#include "recur/zeroing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace recur {

namespace {

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::BudgetExhausted:
    case Errc::PrecisionUnreachable:
        return 3;
    case Errc::NotSquarefree:
    case Errc::GammaNotPositiveAtRoot:
    case Errc::NTooLarge:
        return 2;
    default:
        return 1;
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        raise(Errc::InvalidArgument, "cannot write '" + path + "'");
    out << content;
}

// Shared --coeffs/--file input pair. Inline and file input are exclusive.
struct InputSpec {
    std::string coeffs;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--coeffs", coeffs, "recurrence coefficients c_1,...,c_L inline");
        cmd->add_option("--file", file, "recurrence JSON file with 'coefficients' and optional 'initial'");
    }

    RecurrenceFile resolve() const {
        if (!coeffs.empty() && !file.empty())
            raise(Errc::InvalidArgument, "give either --coeffs or --file, not both");
        if (!coeffs.empty())
            return RecurrenceFile{parse_int_list(coeffs), std::nullopt};
        if (!file.empty())
            return read_recurrence_json(file);
        raise(Errc::InvalidArgument, "missing input: use --coeffs or --file");
    }
};

std::string render_recurrence(const Recurrence& rec, const std::string& symbol) {
    std::ostringstream out;
    out << symbol << "_{n+1} = ";
    bool first = true;
    const auto& c = rec.coefficients();
    for (std::size_t i = 1; i <= c.size(); ++i) {
        if (c[i - 1] == 0)
            continue;
        if (!first)
            out << " + ";
        if (c[i - 1] != 1)
            out << c[i - 1].get_str() << " ";
        out << symbol << (i == 1 ? "_n" : "_{n-" + std::to_string(i - 1) + "}");
        first = false;
    }
    return out.str();
}

std::string describe(const Recurrence& rec) {
    std::ostringstream out;
    if (rec.is_plrr())
        out << "PLRR (order " << rec.order() << ")";
    else
        out << "ZLRR (order " << rec.order() << ", depth " << rec.depth() << ")";
    return out.str();
}

std::string format_bigfloat(const BigFloat& v, long digits) {
    std::ostringstream out;
    out << std::setprecision(static_cast<int>(digits)) << v;
    return out.str();
}

std::string format_cplx(const Cplx& z, long digits) {
    // suppress numeric noise in the imaginary part of real roots
    BigFloat threshold = big_float(1, z.re.get_prec());
    for (long i = 0; i < digits - 3; ++i)
        threshold /= 10;
    BigFloat scale = abs(z.re);
    if (scale < 1)
        scale = 1;
    if (abs(z.im) <= scale * threshold)
        return format_bigfloat(z.re, digits);
    std::string im = format_bigfloat(abs(z.im), digits);
    return format_bigfloat(z.re, digits) + (sgn(z.im) < 0 ? " - " : " + ") + im + "i";
}

struct Args {
    InputSpec input;

    // convert
    long long n = 1;
    std::string gamma;
    unsigned long long budget = 1'000'000;

    // zeroing / probe
    std::string beta;
    bool force = false;
    bool show_trace = false;
    std::string trace_out;

    // predict
    std::string init;

    // binet / probe
    long digits = 30;
    long terms = 0;

    // lab
    std::string csv_path;
    std::string svg_path;
    std::string degrees = "3:6";
    int polys = 10;
    int samples = 500;
    long coeff_bound = 9;
    long beta_bound = 10;
    std::uint64_t seed = LabConfig{}.seed;
    bool slowdown = false;
    bool probe = false;
    std::string s_range = "1:8";

    // plot
    std::string csv_in;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        raise(Errc::InvalidArgument, "bad range '" + text + "' (expected lo:hi)");
    }
}

int cmd_classify(const Args& a, std::ostream& out) {
    RecurrenceFile file = a.input.resolve();
    try {
        Recurrence rec = Recurrence::build(file.coefficients);
        out << "classification: " << describe(rec) << "\n";
        out << "characteristic polynomial: " << to_string(rec.characteristic_polynomial())
            << "\n";
        out << "recurrence: " << render_recurrence(rec, "G") << "\n";
    } catch (const Error& e) {
        out << "classification: not a valid PLRR/ZLRR\n";
        out << "reason: " << e.what() << "\n";
    }
    return 0;
}

int cmd_convert(const Args& a, std::ostream& out, bool n_given, bool gamma_given) {
    if (n_given && gamma_given)
        raise(Errc::InvalidArgument, "give either --n or --gamma, not both");
    RecurrenceFile file = a.input.resolve();
    Recurrence rec = Recurrence::build(file.coefficients);
    out << "input: " << describe(rec) << ": " << render_recurrence(rec, "G") << "\n";
    out << "characteristic polynomial: " << to_string(rec.characteristic_polynomial()) << "\n";

    DerivationResult result;
    if (gamma_given) {
        DerivationRequest request{rec.characteristic_polynomial(), parse_rat_list(a.gamma),
                                  static_cast<unsigned long>(a.budget)};
        out << "gamma prefix: " << a.gamma << "\n";
        result = run_modified(request);
    } else {
        result = derive_plrr(rec, Int(static_cast<long>(a.n)),
                             static_cast<unsigned long>(a.budget));
        out << "gamma prefix: 1, -" << a.n << "\n";
    }
    out << "steps after prefix (t0): " << result.t0 << "\n";
    out << "derived polynomial: " << to_string(result.p) << "\n";
    if (result.derived)
        out << "derived recurrence: " << render_recurrence(*result.derived, "H") << "\n";
    else
        out << "derived recurrence: none (prefix is not a positive integer recurrence)\n";
    out << "quotient by P: " << to_string(result.quotient) << "\n";
    return 0;
}

int cmd_zeroing(const Args& a, std::ostream& out) {
    RecurrenceFile file = a.input.resolve();
    Recurrence rec = Recurrence::build(file.coefficients);
    if (a.beta.empty())
        raise(Errc::InvalidArgument, "--beta is required");
    ZeroingInput input{rec.characteristic_polynomial(), parse_rat_list(a.beta)};
    ZeroingOptions options;
    options.budget = static_cast<unsigned long>(a.budget);
    options.force_run = a.force;
    options.keep_trace = a.show_trace || !a.trace_out.empty();
    ZeroingResult result = run_zeroing(input, options);

    out << "characteristic polynomial: " << to_string(input.P) << "\n";
    out << "sign of Q0 at principal root: " << result.sign_q0_at_r << "\n";
    switch (result.termination) {
    case Termination::Terminated:
        out << "terminated at t = " << result.steps << "\n";
        if (result.last_positive_q1)
            out << "q(1,t) last positive at t = " << *result.last_positive_q1 << "\n";
        else
            out << "q(1,t) was never positive\n";
        out << "final polynomial: " << to_string(result.final_q) << "\n";
        break;
    case Termination::WontTerminate:
        out << "will not terminate (Q0 is non-negative at the principal root)\n";
        break;
    case Termination::BudgetExhausted:
        out << "budget exhausted after " << result.steps << " steps\n";
        break;
    }
    std::string trace;
    if (options.keep_trace)
        trace = render_trace(result, rec.order());
    if (a.show_trace)
        out << "trace:\n" << trace;
    if (!a.trace_out.empty()) {
        write_file(a.trace_out, trace);
        out << "trace written: " << a.trace_out << "\n";
    }
    if (result.termination == Termination::WontTerminate)
        return 2;
    if (result.termination == Termination::BudgetExhausted)
        return 3;
    return 0;
}

int cmd_predict(const Args& a, std::ostream& out) {
    RecurrenceFile file = a.input.resolve();
    Recurrence rec = Recurrence::build(file.coefficients);
    std::vector<Rat> init;
    if (!a.init.empty())
        init = parse_rat_list(a.init);
    else if (file.initial)
        init = *file.initial;
    else
        raise(Errc::InvalidArgument, "no initial values: use --init or a file with 'initial'");

    DivergencePrediction prediction = predict_divergence(rec, init);
    switch (prediction.verdict) {
    case Divergence::PlusInfinity:
        out << "diverges to +infinity; Q(x) = " << to_string(prediction.Q) << "\n";
        break;
    case Divergence::MinusInfinity:
        out << "diverges to -infinity; Q(x) = " << to_string(prediction.Q) << "\n";
        break;
    case Divergence::ZeroCoefficient:
        out << "principal coefficient is zero (|a_n| = o(r^n)); Q(x) = "
            << to_string(prediction.Q) << "\n";
        break;
    }
    for (std::size_t i = 0; i < prediction.d.size(); ++i)
        out << "d_" << i + 2 << " = " << to_string(prediction.d[i]) << "\n";
    if (prediction.zero_witness)
        out << "zero witness (common factor with P): " << to_string(*prediction.zero_witness)
            << "\n";
    return 0;
}

int cmd_binet(const Args& a, std::ostream& out) {
    RecurrenceFile file = a.input.resolve();
    Recurrence rec = Recurrence::build(file.coefficients);
    BinetCoefficients binet = binet_squarefree(rec.characteristic_polynomial(), a.digits);
    out << "characteristic polynomial: " << to_string(rec.characteristic_polynomial()) << "\n";
    out << "digits: " << a.digits << "\n";
    for (std::size_t i = 0; i < binet.roots.roots.size(); ++i) {
        out << "root[" << i << "] = " << format_cplx(binet.roots.roots[i].value, a.digits)
            << "  coefficient = " << format_cplx(binet.coefficients[i], a.digits) << "\n";
    }
    if (a.terms > 0) {
        std::vector<double> terms = reconstruct_terms(binet, static_cast<std::size_t>(a.terms));
        out << "impulse sequence (a_0..a_" << a.terms - 1 << "):";
        std::ostringstream line;
        line << std::setprecision(12);
        for (double t : terms)
            line << " " << t;
        out << line.str() << "\n";
    }
    return 0;
}

int cmd_lab(const Args& a, std::ostream& out) {
    if (a.probe) {
        RecurrenceFile file = a.input.resolve();
        Recurrence rec = Recurrence::build(file.coefficients);
        if (a.beta.empty())
            raise(Errc::InvalidArgument, "--beta is required for the probe");
        ZeroingInput input{rec.characteristic_polynomial(), parse_rat_list(a.beta)};
        out << repeated_root_probe(input, a.digits);
        return 0;
    }
    if (a.slowdown) {
        auto [s_lo, s_hi] = parse_range(a.s_range);
        std::vector<SlowdownPoint> points =
            slowdown_experiment(s_lo, s_hi, static_cast<unsigned long>(a.budget));
        out << "s\tt0\tderived_degree\tstatus\n";
        for (const SlowdownPoint& p : points) {
            if (p.completed)
                out << p.s << '\t' << p.t0 << '\t' << p.derived_degree << "\tok\n";
            else
                out << p.s << "\t-\t-\tbudget exhausted\n";
        }
        return 0;
    }

    if (a.csv_path.empty())
        raise(Errc::InvalidArgument, "--csv is required for the run-time experiment");
    LabConfig config;
    auto [d_lo, d_hi] = parse_range(a.degrees);
    config.degree_min = d_lo;
    config.degree_max = d_hi;
    config.polys_per_degree = a.polys;
    config.samples_per_poly = a.samples;
    config.coeff_bound = a.coeff_bound;
    config.beta_bound = a.beta_bound;
    config.seed = a.seed;
    config.budget = static_cast<unsigned long>(a.budget);

    ExperimentResult result = runtime_experiment(config);
    std::size_t terminated = 0;
    for (const TrialRecord& r : result.records)
        if (r.terminated)
            ++terminated;
    out << "trials: " << result.records.size() << " (terminated: " << terminated << ")\n";
    for (const auto& [degree, rho] : result.spearman_by_degree) {
        std::ostringstream v;
        v << std::setprecision(4) << rho;
        out << "spearman degree " << degree << ": " << v.str() << "\n";
    }
    write_file(a.csv_path, render_csv(result.records));
    out << "csv written: " << a.csv_path << "\n";
    if (!a.svg_path.empty()) {
        write_file(a.svg_path, render_svg(result.records));
        out << "svg written: " << a.svg_path << "\n";
    }
    return 0;
}

int cmd_plot(const Args& a, std::ostream& out) {
    std::ifstream in(a.csv_in);
    if (!in)
        raise(Errc::InvalidArgument, "cannot open '" + a.csv_in + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::vector<TrialRecord> records = parse_csv(buf.str());
    write_file(a.svg_path, render_svg(records));
    out << "svg written: " << a.svg_path << " (" << records.size() << " records)\n";
    return 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of integer linear recurrences: classification, positive-"
                 "coefficient conversion, divergence prediction, closed-form coefficients, "
                 "and run-time experiments"};
    app.require_subcommand(1);
    Args a;

    CLI::App* classify = app.add_subcommand("classify", "validate and classify a recurrence");
    a.input.attach(classify);

    CLI::App* convert =
        app.add_subcommand("convert", "derive an all-positive recurrence from a ZLRR");
    a.input.attach(convert);
    CLI::Option* opt_n =
        convert->add_option("--n", a.n, "prefix gamma = (1, -n); n must be below the principal root");
    CLI::Option* opt_gamma =
        convert->add_option("--gamma", a.gamma, "explicit rational prefix gamma_1,...,gamma_m");
    convert->add_option("--budget", a.budget, "step budget");

    CLI::App* zeroing = app.add_subcommand("zeroing", "run the coefficient-zeroing iteration");
    a.input.attach(zeroing);
    zeroing->add_option("--beta", a.beta, "coefficients of Q_0, highest power first");
    zeroing->add_flag("--force", a.force, "iterate even when the sign test says non-terminating");
    zeroing->add_flag("--trace", a.show_trace, "print every Q_t row");
    zeroing->add_option("--out", a.trace_out, "write the trace to a file");
    zeroing->add_option("--budget", a.budget, "step budget");

    CLI::App* predict =
        app.add_subcommand("predict", "divergence direction from initial values");
    a.input.attach(predict);
    predict->add_option("--init", a.init, "initial values a_1,...,a_k (overrides the file)");

    CLI::App* binet = app.add_subcommand("binet", "closed-form coefficients (squarefree only)");
    a.input.attach(binet);
    binet->add_option("--digits", a.digits, "working decimal digits");
    binet->add_option("--terms", a.terms, "also reconstruct this many impulse-start terms");

    CLI::App* lab = app.add_subcommand("lab", "experiments: run-time sweep, slowdown family, probe");
    a.input.attach(lab);
    lab->add_option("--csv", a.csv_path, "output CSV path (run-time experiment)");
    lab->add_option("--svg", a.svg_path, "output SVG scatter path");
    lab->add_option("--degrees", a.degrees, "degree range lo:hi")->capture_default_str();
    lab->add_option("--polys", a.polys, "polynomials per degree")->capture_default_str();
    lab->add_option("--samples", a.samples, "beta samples per polynomial")->capture_default_str();
    lab->add_option("--coeff-bound", a.coeff_bound, "coefficient bound")->capture_default_str();
    lab->add_option("--beta-bound", a.beta_bound, "beta bound")->capture_default_str();
    lab->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
    lab->add_option("--budget", a.budget, "step budget per run");
    lab->add_flag("--slowdown", a.slowdown, "run the x^{s+2}-x-1 slowdown family instead");
    lab->add_option("--s-range", a.s_range, "slowdown s range lo:hi")->capture_default_str();
    lab->add_flag("--probe", a.probe, "numeric repeated-root coefficient probe (needs input + --beta)");
    lab->add_option("--beta", a.beta, "beta for --probe");
    lab->add_option("--digits", a.digits, "digits for --probe");

    CLI::App* plot = app.add_subcommand("plot", "re-render an SVG scatter from an experiment CSV");
    plot->add_option("--csv", a.csv_in, "input CSV")->required();
    plot->add_option("--svg", a.svg_path, "output SVG")->required();

    std::vector<const char*> argv;
    argv.push_back("recur");
    for (const std::string& s : args)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (classify->parsed())
            return cmd_classify(a, out);
        if (convert->parsed())
            return cmd_convert(a, out, opt_n->count() > 0, opt_gamma->count() > 0);
        if (zeroing->parsed())
            return cmd_zeroing(a, out);
        if (predict->parsed())
            return cmd_predict(a, out);
        if (binet->parsed())
            return cmd_binet(a, out);
        if (lab->parsed())
            return cmd_lab(a, out);
        if (plot->parsed())
            return cmd_plot(a, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace recur
