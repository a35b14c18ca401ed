#include <emz/constants.hpp>
#include <emz/em_zeta.hpp>
#include <emz/format.hpp>
#include <emz/series.hpp>

#include <json.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace emz
{

namespace
{

long ceil_log2(unsigned long n)
{
    return static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 2.0)));
}

// zeta(k) = 1 + 2^-k + 3^-k + tail, tail <= 4^-k (1 + 4/(k-1))
RealBall zeta_direct(unsigned long k, long prec)
{
    // Enough bits that rounding stays below the 4^-k tail.
    prec = std::max(prec, 2 * static_cast<long>(k) + 16);
    RealBall sum = add(RealBall(1), mul_2exp(RealBall(1), -static_cast<long>(k)), prec);
    sum = add(sum, inv(pow_ui(RealBall(3), k, prec), prec), prec);
    const Mag quarter = Mag::pow2(-2 * static_cast<std::int64_t>(k));
    const Mag factor = Mag::from_double(1.0 + 4.0 / static_cast<double>(k - 1)) + Mag::pow2(-40);
    sum.add_error(quarter * factor);
    return sum;
}

std::pair<std::string, std::string> split_decimal(const RealBall &x, int digits)
{
    const std::string s = to_decimal(x, digits);
    const auto sep = s.find(" +/- ");
    return {s.substr(0, sep), s.substr(sep + 5)};
}

bool table_is_real(const CoefficientTable &t)
{
    for (const auto &v : t.values) {
        if (!v.is_real()) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<RealBall> zeta_int_values(unsigned long k_min, unsigned long k_max, long prec, int workers)
{
    if (k_min < 2) {
        throw std::invalid_argument("zeta_int_values needs k_min >= 2");
    }
    std::vector<RealBall> out;
    const double crossover = static_cast<double>(prec) / std::log2(3.0);
    for (unsigned long k = k_min; k <= k_max; ++k) {
        if (static_cast<double>(k) >= crossover) {
            out.push_back(zeta_direct(k, prec));
        } else {
            out.push_back(hurwitz_series(ComplexBall(static_cast<long>(k)), ComplexBall(1), 1, prec, false,
                                         std::nullopt, workers)[0]
                              .re());
        }
    }
    return out;
}

long keiper_li_precision(unsigned long n)
{
    return static_cast<long>(std::ceil(1.1 * static_cast<double>(n))) + 50;
}

long stieltjes_precision(unsigned long n, long prec_target)
{
    return static_cast<long>(n) + prec_target + 16 + ceil_log2(n);
}

CoefficientTable stieltjes(unsigned long n, const ComplexBall &a, long prec_target, int workers)
{
    const long wp = stieltjes_precision(n, prec_target);
    const int order = static_cast<int>(n + 1);
    HurwitzOptions opts;
    opts.at_pole = true;
    opts.workers = workers;
    const HurwitzResult r = hurwitz_series_ex(ComplexBall(1), a, order, wp, opts);
    CoefficientTable t;
    t.kind = CoefficientTable::Kind::stieltjes;
    t.a = a;
    t.working_prec = wp;
    t.N = r.params.N;
    t.M = r.params.M;
    mpz_class fact = 1;
    for (unsigned long k = 0; k <= n; ++k) {
        if (k > 1) {
            fact *= k;
        }
        // gamma_k(a) = (-1)^k k! c_k
        ComplexBall g = mul(r.value[k], RealBall::from_mpz(k % 2 == 0 ? fact : mpz_class(-fact)), wp);
        t.values.push_back(std::move(g));
    }
    return t;
}

RealBall li_reference(unsigned long n, long prec)
{
    if (n < 1) {
        throw std::invalid_argument("li_reference needs n >= 1");
    }
    const long wp = prec + 16;
    const RealBall gamma = stieltjes(0, ComplexBall(1), wp).values[0].re();
    RealBall v = sub(log_ui(n, wp), log(mul_2exp(const_pi(wp), 1), wp), wp);
    v = add_si(add(v, gamma, wp), -1, wp);
    return mul_2exp(v, -1).rounded(prec);
}

CoefficientTable keiper_li(unsigned long n, std::optional<long> prec_override, int workers)
{
    if (n < 1) {
        throw std::invalid_argument("keiper_li needs n >= 1");
    }
    const long wp = prec_override ? *prec_override : keiper_li_precision(n);
    const int order = static_cast<int>(n + 1);

    // (1) zeta(x) mod x^(n+1)
    HurwitzOptions opts;
    opts.workers = workers;
    const HurwitzResult z = hurwitz_series_ex(ComplexBall(0), ComplexBall(1), order, wp, opts);
    // (2) log(-zeta(x))
    BallSeries f = log(-z.value, order, wp);

    // (3) log Gamma(1 + x/2) = -gamma x/2 + sum_{k>=2} (-1)^k zeta(k) (x/2)^k / k
    const RealBall gamma = stieltjes(0, ComplexBall(1), wp, workers).values[0].re();
    std::vector<ComplexBall> lg(static_cast<std::size_t>(order), ComplexBall(0));
    if (order > 1) {
        lg[1] = ComplexBall(mul_2exp(-gamma, -1));
    }
    if (n >= 2) {
        const std::vector<RealBall> zk = zeta_int_values(2, n, wp, workers);
        for (unsigned long k = 2; k <= n; ++k) {
            RealBall c = div_si(mul_2exp(zk[k - 2], -static_cast<long>(k)), static_cast<long>(k), wp);
            lg[k] = ComplexBall(k % 2 == 0 ? c : -c);
        }
    }
    f = add(f, BallSeries(std::move(lg), order), order, wp);

    // (4) log(1 - x) - (log pi / 2) x
    std::vector<ComplexBall> tail(static_cast<std::size_t>(order), ComplexBall(0));
    const RealBall half_log_pi = mul_2exp(log(const_pi(wp), wp), -1);
    for (unsigned long k = 1; k <= n; ++k) {
        tail[k] = ComplexBall(RealBall::from_ratio(-1, static_cast<long>(k), wp));
    }
    tail[1] = sub(tail[1], ComplexBall(half_log_pi), wp);
    f = add(f, BallSeries(std::move(tail), order), order, wp);

    // (5) log xi(x / (x - 1))
    const BallSeries lam = compose_mobius(f, order, wp);

    CoefficientTable t;
    t.kind = CoefficientTable::Kind::keiper_li;
    t.working_prec = wp;
    t.N = z.params.N;
    t.M = z.params.M;
    t.constant_term = lam[0];
    t.values.push_back(ComplexBall(0));
    for (unsigned long k = 1; k <= n; ++k) {
        ComplexBall v(lam[k].re());
        if (v.re().contains_zero()) {
            t.undetermined.push_back(k);
        }
        t.values.push_back(std::move(v));
    }
    return t;
}

std::string table_csv(const CoefficientTable &t, int digits)
{
    std::ostringstream os;
    const bool real = table_is_real(t);
    os << (real ? "index,midpoint,radius\n" : "index,re_midpoint,re_radius,im_midpoint,im_radius\n");
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        const auto re = split_decimal(t.values[k].re(), digits);
        os << k << ',' << re.first << ',' << re.second;
        if (!real) {
            const auto im = split_decimal(t.values[k].im(), digits);
            os << ',' << im.first << ',' << im.second;
        }
        os << '\n';
    }
    return os.str();
}

std::string table_json(const CoefficientTable &t, int digits)
{
    nlohmann::ordered_json j;
    j["kind"] = t.kind == CoefficientTable::Kind::keiper_li ? "keiper_li" : "stieltjes";
    if (t.kind == CoefficientTable::Kind::stieltjes) {
        j["a"] = to_decimal(t.a, digits);
    }
    j["working_prec"] = t.working_prec;
    j["N"] = t.N;
    j["M"] = t.M;
    auto values = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        nlohmann::ordered_json e;
        e["index"] = k;
        const auto re = split_decimal(t.values[k].re(), digits);
        e["midpoint"] = re.first;
        e["radius"] = re.second;
        if (!t.values[k].is_real()) {
            const auto im = split_decimal(t.values[k].im(), digits);
            e["im_midpoint"] = im.first;
            e["im_radius"] = im.second;
        }
        values.push_back(std::move(e));
    }
    j["values"] = std::move(values);
    if (t.kind == CoefficientTable::Kind::keiper_li) {
        j["undetermined"] = t.undetermined;
    }
    return j.dump(2);
}

std::string li_plot_csv(const CoefficientTable &t)
{
    std::ostringstream os;
    os.precision(17);
    os << "n,value\n";
    const RealBall gamma = stieltjes(0, ComplexBall(1), 64).values[0].re();
    const double g = gamma.mid().to_double();
    for (std::size_t n = 1; n < t.values.size(); ++n) {
        const double ref = 0.5 * (std::log(static_cast<double>(n)) - std::log(2.0 * M_PI) + g - 1.0);
        os << n << ',' << static_cast<double>(n) * (t.values[n].re().mid().to_double() - ref) << '\n';
    }
    return os.str();
}

std::string stieltjes_plot_csv(const CoefficientTable &t, const CoefficientTable *reference)
{
    std::ostringstream os;
    os.precision(17);
    os << "n,value\n";
    for (std::size_t n = 0; n < t.values.size(); ++n) {
        const ComplexBall &v = t.values[n];
        const Mag num = reference != nullptr && n < reference->values.size()
                            ? sub(v, reference->values[n], t.working_prec).mag_upper()
                            : v.rad_max();
        const Mag den = v.mag_lower();
        os << n << ',' << (den.is_zero() ? INFINITY : Mag::div(num, den).to_double()) << '\n';
    }
    return os.str();
}

} // namespace emz
