#include <doctest.h>

#include <emz/constants.hpp>
#include <emz/em_zeta.hpp>
#include <emz/format.hpp>

#include "../oracles/oracles.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

using namespace emz;

namespace
{

double rel_bits(const ComplexBall &v)
{
    const Mag lo = v.mag_lower();
    if (lo.is_zero()) {
        return 0;
    }
    return lo.log2() - v.rad_max().log2();
}

// sum_{k<=m} log k / k - log^2 m / 2 - log m / (2m), error O(log m / m^2)
double gamma1_limit(long m)
{
    long double s = 0;
    for (long k = m; k >= 2; --k) {
        const long double lk = std::log(static_cast<long double>(k));
        s += lk / k;
    }
    const long double lm = std::log(static_cast<long double>(m));
    return static_cast<double>(s - lm * lm / 2 - lm / (2 * m));
}

} // namespace

TEST_CASE("zeta at integers")
{
    const long prec = 256;
    const RealBall pi = oracle::machin_pi(prec);
    const std::vector<RealBall> z = zeta_int_values(2, 6, prec);
    CHECK(z[0].overlaps(div_si(sqr(pi, prec), 6, prec)));
    CHECK(z[2].overlaps(div_si(pow_ui(pi, 4, prec), 90, prec)));
    CHECK(z[4].overlaps(div_si(pow_ui(pi, 6, prec), 945, prec)));
    for (const auto &v : z) {
        CHECK(v.rad().log2() < -prec + 10);
    }

    // direct branch
    const long small = 64;
    const std::vector<RealBall> big = zeta_int_values(40, 80, small);
    for (unsigned long k = 40; k <= 80; ++k) {
        const RealBall &v = big[k - 40];
        const RealBall lead = add(RealBall(1), mul_2exp(RealBall(1), -static_cast<long>(k)), 4 * small);
        CHECK(mpfr_cmp(v.lower(4 * small).get(), lead.mid().get()) > 0);
        // width <= 2 * 3^-k
        CHECK(v.rad().log2() <= -static_cast<double>(k) * std::log2(3.0));
    }
    // both branches agree at the crossover
    const std::vector<RealBall> a = zeta_int_values(41, 41, small);
    const std::vector<RealBall> b = zeta_int_values(41, 41, 200);
    CHECK(a[0].overlaps(b[0]));

    CHECK_THROWS_AS(zeta_int_values(1, 3, prec), std::invalid_argument);
}

TEST_CASE("Keiper-Li coefficients, small n")
{
    const unsigned long n = 60;
    const CoefficientTable t = keiper_li(n);
    const long prec = t.working_prec;
    CHECK(prec == keiper_li_precision(n));
    CHECK(prec == 116);
    REQUIRE(t.values.size() == n + 1);
    CHECK(t.values[0].contains(ComplexBall(0)));
    CHECK(t.constant_term.contains(ComplexBall(-log_ui(2, prec))));
    CHECK(t.undetermined.empty());

    // lambda_1 = 1 + gamma/2 - log(4 pi)/2
    const RealBall g = oracle::euler_gamma(prec);
    const RealBall four_pi = mul_2exp(oracle::machin_pi(prec), 2);
    const RealBall l1 = add_si(mul_2exp(sub(g, log(four_pi, prec), prec), -1), 1, prec);
    CHECK(t.values[1].re().overlaps(l1));
    CHECK(t.values[1].re().mid().to_double() == doctest::Approx(0.0230957).epsilon(1e-5));

    for (unsigned long k = 1; k <= n; ++k) {
        CHECK(t.values[k].is_real());
        CHECK(t.values[k].re().is_positive());
    }
    // more precision gives nested results
    const CoefficientTable u = keiper_li(n, 300);
    for (unsigned long k = 1; k <= n; ++k) {
        CHECK(t.values[k].overlaps(u.values[k]));
        CHECK(u.values[k].re().rad().log2() < t.values[k].re().rad().log2());
    }
}

TEST_CASE("Keiper-Li flags undetermined signs")
{
    const CoefficientTable t = keiper_li(80, 40);
    CHECK_FALSE(t.undetermined.empty());
    for (unsigned long k : t.undetermined) {
        CHECK(t.values[k].re().contains_zero());
    }
    for (unsigned long k = 1; k <= 80; ++k) {
        if (std::find(t.undetermined.begin(), t.undetermined.end(), k) == t.undetermined.end()) {
            CHECK(t.values[k].re().is_positive());
        }
    }
    CHECK_THROWS_AS(keiper_li(0), std::invalid_argument);
}

TEST_CASE("Keiper-Li accuracy decay")
{
    for (unsigned long n : {256UL, 512UL, 1024UL}) {
        const CoefficientTable t = keiper_li(n);
        CHECK(t.undetermined.empty());
        const double bits = rel_bits(t.values[n]);
        MESSAGE("n = " << n << ": " << bits << " accurate bits");
        CHECK(bits >= 0.05 * static_cast<double>(n));
        if (n == 1024) {
            const RealBall dev = sub(t.values[n].re(), li_reference(n, 64), 64);
            CHECK(std::fabs(dev.mid().to_double()) < 0.05);
        }
    }
}

TEST_CASE("li reference")
{
    CHECK(li_reference(100000).mid().to_double() == doctest::Approx(4.626132).epsilon(1e-6));
    CHECK(li_reference(1).mid().sign() < 0);
    CHECK(li_reference(1).upper(64).sign() < 0);
    // root of log n = log 2pi - gamma + 1
    const double root = 2 * M_PI * std::exp(1 - 0.5772156649015329);
    const unsigned long below = static_cast<unsigned long>(std::floor(root));
    CHECK(li_reference(below).upper(64).sign() < 0);
    CHECK(li_reference(below + 1).lower(64).sign() > 0);
    const RealBall g = oracle::euler_gamma(128);
    const RealBall expect = mul_2exp(add_si(sub(g, log(mul_2exp(oracle::machin_pi(128), 1), 128), 128), -1, 128), -1);
    CHECK(li_reference(1, 128).overlaps(expect));
    CHECK_THROWS_AS(li_reference(0), std::invalid_argument);
}

TEST_CASE("Stieltjes constants at a = 1")
{
    const CoefficientTable t = stieltjes(4, ComplexBall(1), 64);
    REQUIRE(t.values.size() == 5);
    CHECK(t.working_prec == stieltjes_precision(4, 64));
    CHECK(t.values[0].re().overlaps(oracle::euler_gamma(t.working_prec)));
    CHECK(t.values[1].re().mid().to_double() == doctest::Approx(gamma1_limit(2000000)).epsilon(1e-9));
    CHECK(t.values[1].re().mid().to_double() == doctest::Approx(-0.0728158454836767).epsilon(1e-12));
    for (const auto &v : t.values) {
        CHECK(v.is_real());
        CHECK(rel_bits(v) >= 64);
    }
    // doubled-precision rerun nests
    const CoefficientTable u = stieltjes(4, ComplexBall(1), 128);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(t.values[k].overlaps(u.values[k]));
    }
}

TEST_CASE("Stieltjes constants hold p bits")
{
    const long p = 64;
    const CoefficientTable t = stieltjes(512, ComplexBall(1), p);
    double worst = 1e9;
    for (const auto &v : t.values) {
        worst = std::min(worst, rel_bits(v));
    }
    MESSAGE("worst relative bits " << worst);
    CHECK(worst >= p);
    // at a fixed working precision the accurate bits fall off roughly linearly
    HurwitzOptions opts;
    opts.at_pole = true;
    const HurwitzResult r = hurwitz_series_ex(ComplexBall(1), ComplexBall(1), 301, 256, opts);
    const double b0 = rel_bits(r.value[0]);
    const double b150 = rel_bits(r.value[150]);
    const double b300 = rel_bits(r.value[300]);
    CHECK(b150 < b0 - 60);
    CHECK(b300 < b150 - 60);
}

TEST_CASE("Stieltjes shift identity")
{
    // zeta(s, a) = a^-s + zeta(s, a + 1)  =>  gamma_k(a) - gamma_k(a + 1) = log(a)^k / a
    const long p = 96;
    const unsigned long n = 12;
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const ComplexBall a = trial < 3 ? ComplexBall(oracle::random_point(rng, 0.2, 7, p))
                                        : oracle::random_complex(rng, 0.3, 4, p);
        const CoefficientTable x = stieltjes(n, a, p);
        const CoefficientTable y = stieltjes(n, add_si(a, 1, p), p);
        const long wp = x.working_prec;
        const ComplexBall la = log(a, wp);
        const ComplexBall ia = inv(a, wp);
        ComplexBall term = ia;
        for (unsigned long k = 0; k <= n; ++k) {
            CHECK(sub(x.values[k], y.values[k], wp).overlaps(term));
            term = mul(term, la, wp);
        }
    }
}

TEST_CASE("table export")
{
    const CoefficientTable t = keiper_li(10);
    const std::string csv = table_csv(t, 15);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,midpoint,radius");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
        ++rows;
    }
    CHECK(rows == 11);

    const auto j = nlohmann::json::parse(table_json(t, 15));
    CHECK(j["kind"] == "keiper_li");
    CHECK(j["values"].size() == 11);
    CHECK(j["values"][1]["midpoint"].get<std::string>().rfind("2.3095708966", 0) == 0);
    CHECK(j["undetermined"].empty());
    CHECK(j["working_prec"] == t.working_prec);

    const CoefficientTable s = stieltjes(3, ComplexBall(RealBall::from_ratio(1, 2, 64), RealBall(1)), 64);
    std::istringstream cin(table_csv(s, 10));
    std::getline(cin, line);
    CHECK(line == "index,re_midpoint,re_radius,im_midpoint,im_radius");
    const auto js = nlohmann::json::parse(table_json(s, 10));
    CHECK(js["kind"] == "stieltjes");
    CHECK(js["values"][0].contains("im_midpoint"));

    const std::string plot = li_plot_csv(t);
    CHECK(plot.rfind("n,value\n1,", 0) == 0);
    std::istringstream pin(stieltjes_plot_csv(s));
    std::getline(pin, line);
    CHECK(line == "n,value");
    std::getline(pin, line);
    CHECK(std::stod(line.substr(line.find(',') + 1)) < 1e-15);
}
