#include <emz/bernoulli.hpp>
#include <emz/constants.hpp>
#include <emz/em_zeta.hpp>
#include <emz/format.hpp>
#include <emz/zero_refine.hpp>

#include "../tests/acceptance/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace emz;
using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_invalid = 2;
constexpr int exit_precision = 3;
constexpr long digit_guard = 16;

struct InvalidInput : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Common
{
    std::optional<long> digits;
    std::optional<long> prec;
    std::string format = "text";
    int workers = 1;
    bool omit_timing = false;

    long bits() const
    {
        if (prec) {
            return *prec;
        }
        return static_cast<long>(std::ceil(static_cast<double>(digits.value_or(30)) * std::log2(10.0))) + digit_guard;
    }
    int out_digits() const
    {
        if (digits) {
            return static_cast<int>(*digits);
        }
        if (prec) {
            return std::max(1, static_cast<int>(std::floor(static_cast<double>(*prec) * std::log10(2.0))));
        }
        return 30;
    }
};

void add_common(CLI::App *cmd, Common &c, bool precision = true)
{
    if (precision) {
        auto *d = cmd->add_option("--digits", c.digits, "decimal digits")->check(CLI::PositiveNumber);
        cmd->add_option("--prec", c.prec, "working precision in bits")->check(CLI::Range(2L, 1L << 30))->excludes(d);
    }
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--workers", c.workers, "power-sum threads")->check(CLI::Range(1, 1024));
    cmd->add_flag("--omit-timing", c.omit_timing, "leave wall_time out of json output");
}

// ---- literals ----

RealBall parse_real(const std::string &text, long prec)
{
    static const std::regex rational(R"([+-]?\d+/\d+)");
    static const std::regex decimal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
    if (std::regex_match(text, rational)) {
        mpq_class q(text);
        if (q.get_den() == 0) {
            throw InvalidInput("zero denominator in '" + text + "'");
        }
        q.canonicalize();
        return RealBall::from_mpq(q, prec);
    }
    if (std::regex_match(text, decimal)) {
        return RealBall::from_decimal(text[0] == '+' ? text.substr(1) : text, prec);
    }
    throw InvalidInput("cannot parse number '" + text + "'");
}

// "re", "re+im i", "im i" with decimal or rational components.
ComplexBall parse_complex(std::string text, long prec)
{
    std::string t;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            t += ch;
        }
    }
    if (t.empty()) {
        throw InvalidInput("empty complex literal");
    }
    if (t.back() != 'i') {
        return ComplexBall(parse_real(t, prec));
    }
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re = split == std::string::npos ? "0" : t.substr(0, split);
    std::string im = split == std::string::npos ? t : t.substr(split);
    if (im.empty() || im == "+" || im == "-") {
        im += "1";
    }
    return ComplexBall(parse_real(re, prec), parse_real(im, prec));
}

// ---- rendering ----

// Midpoint without exponent when the decimal exponent is modest.
std::string plain(const std::string &sci, int digits)
{
    const auto e = sci.find('e');
    if (e == std::string::npos) {
        return sci;
    }
    const long x = std::stol(sci.substr(e + 1));
    if (x < -10 || x >= digits) {
        return sci;
    }
    std::string mant = sci.substr(0, e);
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string ds;
    for (char ch : mant) {
        if (ch != '.') {
            ds += ch;
        }
    }
    std::string out;
    if (x < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-x - 1), '0') + ds;
    } else {
        const auto ip = static_cast<std::size_t>(x + 1);
        if (ds.size() < ip) {
            ds.append(ip - ds.size(), '0');
        }
        out = ds.substr(0, ip);
        if (ds.size() > ip) {
            out += "." + ds.substr(ip);
        }
    }
    return sign + out;
}

struct Parts
{
    std::string mid;
    std::string rad;
};

Parts parts(const RealBall &x, int digits)
{
    const std::string s = to_decimal(x, digits);
    const auto sep = s.find(" +/- ");
    return {plain(s.substr(0, sep), digits), s.substr(sep + 5)};
}

std::string text_of(const ComplexBall &z, int digits)
{
    const Parts re = parts(z.re(), digits);
    if (z.is_real()) {
        return re.mid + " +/- " + re.rad;
    }
    const Parts im = parts(z.im(), digits);
    return "(" + re.mid + " +/- " + re.rad + ") + (" + im.mid + " +/- " + im.rad + ")i";
}

void put_value(json &j, const ComplexBall &z, int digits)
{
    const Parts re = parts(z.re(), digits);
    j["midpoint"] = re.mid;
    j["radius"] = re.rad;
    if (!z.is_real()) {
        const Parts im = parts(z.im(), digits);
        j["im_midpoint"] = im.mid;
        j["im_radius"] = im.rad;
    }
}

bool all_real(const std::vector<ComplexBall> &v)
{
    for (const auto &z : v) {
        if (!z.is_real()) {
            return false;
        }
    }
    return true;
}

std::string csv_rows(const std::vector<ComplexBall> &v, int digits)
{
    std::ostringstream os;
    const bool real = all_real(v);
    os << (real ? "index,midpoint,radius\n" : "index,re_midpoint,re_radius,im_midpoint,im_radius\n");
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Parts re = parts(v[k].re(), digits);
        os << k << ',' << re.mid << ',' << re.rad;
        if (!real) {
            const Parts im = parts(v[k].im(), digits);
            os << ',' << im.mid << ',' << im.rad;
        }
        os << '\n';
    }
    return os.str();
}

json json_rows(const std::vector<ComplexBall> &v, int digits)
{
    json rows = json::array();
    for (std::size_t k = 0; k < v.size(); ++k) {
        json e;
        e["index"] = k;
        put_value(e, v[k], digits);
        rows.push_back(std::move(e));
    }
    return rows;
}

// Scalar or jet result in the chosen format.
void emit(const Common &c, const std::vector<ComplexBall> &values, json meta, double seconds)
{
    const int digits = c.out_digits();
    if (c.format == "csv") {
        std::cout << csv_rows(values, digits);
        return;
    }
    if (c.format == "json") {
        json j;
        put_value(j, values.at(0), digits);
        for (auto &[k, v] : meta.items()) {
            j[k] = v;
        }
        if (values.size() > 1) {
            j["coefficients"] = json_rows(values, digits);
        }
        if (!c.omit_timing) {
            j["wall_time"] = seconds;
        }
        std::cout << j.dump(2) << '\n';
        return;
    }
    if (values.size() == 1) {
        std::cout << text_of(values[0], digits) << '\n';
        return;
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::cout << k << ": " << text_of(values[k], digits) << '\n';
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- subcommands ----

struct ZetaArgs
{
    Common c;
    std::string s;
    std::string a = "1";
    int D = 1;
    std::optional<unsigned long> force_N;
    std::optional<unsigned long> force_M;
};

int run_zeta(const ZetaArgs &z)
{
    const long prec = z.c.bits();
    const ComplexBall s = parse_complex(z.s, prec);
    const ComplexBall a = parse_complex(z.a, prec);
    if (s.contains(ComplexBall(1))) {
        throw InvalidInput("s = 1 is a pole");
    }
    HurwitzOptions opts;
    opts.workers = z.c.workers;
    if (z.force_N || z.force_M) {
        const ParamSelection sel = select_params(s, a, prec, z.D);
        opts.force = EMParams{z.force_N.value_or(sel.params.N), z.force_M.value_or(sel.params.M)};
    }
    const auto t0 = std::chrono::steady_clock::now();
    const HurwitzResult r = hurwitz_series_ex(s, a, z.D, prec, opts);
    const double dt = seconds_since(t0);
    std::vector<ComplexBall> values(r.value.coeffs().begin(), r.value.coeffs().end());
    values.resize(static_cast<std::size_t>(z.D), ComplexBall(0));
    json meta;
    meta["prec_used"] = prec;
    meta["N"] = r.params.N;
    meta["M"] = r.params.M;
    emit(z.c, values, meta, dt);
    if (!r.preconditions_ok) {
        std::cerr << "error: remainder bound preconditions unmet (need Re(a) + N > 1 and Re(s) + 2M > 1)\n";
        return exit_precision;
    }
    if (!r.target_reached) {
        std::cerr << "error: precision target not reached within the parameter search range\n";
        return exit_precision;
    }
    return 0;
}

// Brackets around the first ten ordinates.
constexpr std::array<std::pair<double, double>, 10> zero_brackets{{{14.10, 14.17},
                                                                  {21.00, 21.05},
                                                                  {24.99, 25.03},
                                                                  {30.40, 30.45},
                                                                  {32.91, 32.96},
                                                                  {37.56, 37.61},
                                                                  {40.90, 40.94},
                                                                  {43.31, 43.35},
                                                                  {47.98, 48.03},
                                                                  {49.75, 49.80}}};

struct ZeroArgs
{
    Common c;
    std::optional<int> index;
    std::optional<double> lo;
    std::optional<double> hi;
};

int run_zero(const ZeroArgs &z)
{
    IsolatingInterval b0;
    if (z.index) {
        if (*z.index < 1 || *z.index > static_cast<int>(zero_brackets.size())) {
            throw InvalidInput("--index must be in 1..10; use --lo/--hi for other zeros");
        }
        const auto &br = zero_brackets[static_cast<std::size_t>(*z.index - 1)];
        b0 = IsolatingInterval::from_endpoints(br.first, br.second);
    } else if (z.lo && z.hi) {
        b0 = IsolatingInterval::from_endpoints(*z.lo, *z.hi);
    } else {
        throw InvalidInput("zero needs --index or both --lo and --hi");
    }
    const long bits = z.c.bits();
    const auto t0 = std::chrono::steady_clock::now();
    RefineResult r;
    try {
        r = refine_zero_ex(b0, bits, z.c.workers);
    } catch (const RefinementError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precision;
    }
    const double dt = seconds_since(t0);
    json meta;
    meta["prec_used"] = bits;
    meta["N"] = nullptr;
    meta["M"] = nullptr;
    meta["newton_steps"] = r.steps.size();
    emit(z.c, {ComplexBall(r.interval.ball())}, meta, dt);
    return 0;
}

struct TableArgs
{
    Common c;
    unsigned long n = 10;
    std::string a = "1";
    bool plot = false;
};

void emit_table(const Common &c, const CoefficientTable &t, long prec_used, double seconds)
{
    const int digits = c.out_digits();
    if (c.format == "csv") {
        std::cout << csv_rows(t.values, digits);
        return;
    }
    if (c.format == "json") {
        json j;
        j["kind"] = t.kind == CoefficientTable::Kind::keiper_li ? "keiper_li" : "stieltjes";
        if (t.kind == CoefficientTable::Kind::stieltjes) {
            j["a"] = text_of(t.a, digits);
        }
        j["prec_used"] = prec_used;
        j["working_prec"] = t.working_prec;
        j["N"] = t.N;
        j["M"] = t.M;
        j["values"] = json_rows(t.values, digits);
        if (t.kind == CoefficientTable::Kind::keiper_li) {
            j["undetermined"] = t.undetermined;
        }
        if (!c.omit_timing) {
            j["wall_time"] = seconds;
        }
        std::cout << j.dump(2) << '\n';
        return;
    }
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        std::cout << k << ": " << text_of(t.values[k], digits) << '\n';
    }
}

int run_keiper_li(const TableArgs &a)
{
    if (a.n < 1) {
        throw InvalidInput("--n must be at least 1");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const CoefficientTable t = keiper_li(a.n, a.c.prec, a.c.workers);
    const double dt = seconds_since(t0);
    if (a.plot) {
        std::cout << li_plot_csv(t);
    } else {
        Common c = a.c;
        if (!c.digits) {
            c.digits = 20;
        }
        emit_table(c, t, t.working_prec, dt);
    }
    if (!t.undetermined.empty()) {
        std::cerr << "error: sign of " << t.undetermined.size() << " coefficient(s) undetermined, first index "
                  << t.undetermined.front() << "; rerun with a larger --prec\n";
        return exit_precision;
    }
    return 0;
}

int run_stieltjes(const TableArgs &a)
{
    const long p = a.c.bits();
    const ComplexBall shift = parse_complex(a.a, p + static_cast<long>(a.n) + 64);
    const auto t0 = std::chrono::steady_clock::now();
    const CoefficientTable t = stieltjes(a.n, shift, p, a.c.workers);
    const double dt = seconds_since(t0);
    if (a.plot) {
        std::cout << stieltjes_plot_csv(t);
    } else {
        emit_table(a.c, t, p, dt);
    }
    for (const auto &v : t.values) {
        if (!v.is_finite()) {
            std::cerr << "error: enclosure is unbounded\n";
            return exit_precision;
        }
    }
    return 0;
}

struct BernoulliArgs
{
    Common c;
    unsigned long n = 0;
};

int run_bernoulli(const BernoulliArgs &b)
{
    const auto t0 = std::chrono::steady_clock::now();
    const BigRational v = bernoulli(b.n);
    const double dt = seconds_since(t0);
    const std::string num = v.get_num().get_str();
    const std::string den = v.get_den().get_str();
    if (b.c.format == "csv") {
        std::cout << "index,numerator,denominator\n" << b.n << ',' << num << ',' << den << '\n';
    } else if (b.c.format == "json") {
        json j;
        j["index"] = b.n;
        j["numerator"] = num;
        j["denominator"] = den;
        if (!b.c.omit_timing) {
            j["wall_time"] = dt;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << num << '/' << den << '\n';
    }
    return 0;
}

int run_selftest(bool skip_long, int workers)
{
    acceptance::Options opts;
    opts.skip_long = skip_long;
    opts.workers = workers;
    std::error_code ec;
    opts.cli_path = std::filesystem::read_symlink("/proc/self/exe", ec).string();
    bool ok = true;
    acceptance::run_all(opts, [&](const acceptance::Outcome &o) {
        std::cout << acceptance::format_line(o) << std::endl;
        ok = ok && o.pass;
    });
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app("Hurwitz zeta function and related constants with certified error bounds");
    app.require_subcommand(1);

    ZetaArgs zeta_args;
    auto *zeta = app.add_subcommand("zeta", "Riemann zeta jet zeta(s + x) mod x^D");
    add_common(zeta, zeta_args.c);
    zeta->add_option("--s", zeta_args.s, "argument, e.g. 2, 1/2+14i")->required();
    zeta->add_option("--D", zeta_args.D, "jet length")->check(CLI::Range(1, 1 << 20));
    zeta->add_option("--force-N", zeta_args.force_N, "power-sum length")->check(CLI::PositiveNumber);
    zeta->add_option("--force-M", zeta_args.force_M, "tail length")->check(CLI::PositiveNumber);

    ZetaArgs hz_args;
    auto *hurwitz = app.add_subcommand("hurwitz", "Hurwitz zeta jet zeta(s + x, a) mod x^D");
    add_common(hurwitz, hz_args.c);
    hurwitz->add_option("--s", hz_args.s, "argument")->required();
    hurwitz->add_option("--a", hz_args.a, "shift")->required();
    hurwitz->add_option("--D", hz_args.D, "jet length")->check(CLI::Range(1, 1 << 20));
    hurwitz->add_option("--force-N", hz_args.force_N, "power-sum length")->check(CLI::PositiveNumber);
    hurwitz->add_option("--force-M", hz_args.force_M, "tail length")->check(CLI::PositiveNumber);

    ZeroArgs zero_args;
    auto *zero = app.add_subcommand("zero", "refine a zero 1/2 + it on the critical line");
    add_common(zero, zero_args.c);
    auto *idx = zero->add_option("--index", zero_args.index, "1..10");
    zero->add_option("--lo", zero_args.lo, "bracket start")->excludes(idx);
    zero->add_option("--hi", zero_args.hi, "bracket end")->excludes(idx);

    TableArgs kl_args;
    auto *kl = app.add_subcommand("keiper-li", "Keiper-Li coefficients lambda_0..lambda_n");
    add_common(kl, kl_args.c);
    kl->add_option("--n", kl_args.n, "largest index")->required();
    kl->add_flag("--plot", kl_args.plot, "emit n (lambda_n - approximation) as csv");

    TableArgs st_args;
    auto *st = app.add_subcommand("stieltjes", "generalized Stieltjes constants gamma_0(a)..gamma_n(a)");
    add_common(st, st_args.c);
    st->add_option("--n", st_args.n, "largest index")->required();
    st->add_option("--a", st_args.a, "shift");
    st->add_flag("--plot", st_args.plot, "emit relative radii as csv");

    BernoulliArgs b_args;
    auto *bern = app.add_subcommand("bernoulli", "exact Bernoulli number B_n");
    add_common(bern, b_args.c, false);
    bern->add_option("--n", b_args.n, "index")->required();

    bool skip_long = false;
    int self_workers = 1;
    auto *self = app.add_subcommand("selftest", "run the acceptance criteria");
    self->add_flag("--skip-long", skip_long, "skip the 10000-digit zero run");
    self->add_option("--workers", self_workers, "power-sum threads")->check(CLI::Range(1, 1024));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*zeta) {
            return run_zeta(zeta_args);
        }
        if (*hurwitz) {
            return run_zeta(hz_args);
        }
        if (*zero) {
            return run_zero(zero_args);
        }
        if (*kl) {
            return run_keiper_li(kl_args);
        }
        if (*st) {
            return run_stieltjes(st_args);
        }
        if (*bern) {
            return run_bernoulli(b_args);
        }
        return run_selftest(skip_long, self_workers);
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
