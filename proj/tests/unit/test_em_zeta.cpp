#include <doctest.h>

#include <emz/em_zeta.hpp>
#include <emz/format.hpp>
#include <emz/sieved_sum.hpp>

#include "../oracles/oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace emz;

namespace
{

ComplexBall ratio(long p, long q, long prec)
{
    return ComplexBall(RealBall::from_ratio(p, q, prec));
}

ComplexBall cplx(double re, double im, long prec)
{
    return ComplexBall(RealBall(BigFloat::from_double(re)).rounded(prec), RealBall(BigFloat::from_double(im)).rounded(prec));
}

// S + I + T without the remainder.
BallSeries truncated(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order, long prec)
{
    BallSeries out = add(power_sum_direct(s, a, p.N, order, prec), prefix_integral(s, a, p.N, order, prec, false),
                         order, prec);
    return add(out, tail_binary_split(s, a, p, order, prec), order, prec);
}

double rel_dev(const ComplexBall &x, const ComplexBall &y)
{
    const double dx = x.re().mid().to_double() - y.re().mid().to_double();
    const double dy = x.im().mid().to_double() - y.im().mid().to_double();
    const double n = std::hypot(y.re().mid().to_double(), y.im().mid().to_double());
    return std::hypot(dx, dy) / n;
}

} // namespace

TEST_CASE("j_sequence closed forms and quadrature")
{
    auto j0 = j_sequence(RealBall(2), RealBall(3), RealBall(0), 1);
    CHECK(mpfr_cmp_ui_2exp(j0[0].mid().get(), 1, -3) >= 0);
    CHECK(j0[0].mid().to_double() == doctest::Approx(0.125).epsilon(1e-15));

    BigFloat one_plus(64);
    mpfr_set_ui(one_plus.get(), 1, MPFR_RNDN);
    mpfr_nextabove(one_plus.get());
    auto j1 = j_sequence(RealBall(one_plus), RealBall(2), RealBall(0), 2);
    CHECK(j1[1].mid().to_double() == doctest::Approx(1.0).epsilon(1e-15));

    const RealBall half = RealBall::from_ratio(1, 2, 64);
    auto j3 = j_sequence(RealBall(2), RealBall(4), half, 4);
    for (int k = 0; k < 4; ++k) {
        const double q = oracle::j_quadrature(2.0, 4.0, 0.5, k);
        CHECK(j3[static_cast<std::size_t>(k)].mid().to_double() == doctest::Approx(q).epsilon(1e-9));
        CHECK(j3[static_cast<std::size_t>(k)].mid().to_double() >= q * (1 - 1e-12));
    }

    auto bad = j_sequence(RealBall(1), RealBall(3), RealBall(0), 3);
    for (const auto &b : bad) {
        CHECK_FALSE(b.is_finite());
    }
    CHECK_FALSE(j_sequence(RealBall(2), RealBall(1), RealBall(0), 1)[0].is_finite());
    CHECK_FALSE(j_sequence(RealBall(2), RealBall(3), RealBall(-1), 1)[0].is_finite());
}

TEST_CASE("j_sequence matches quadrature over a grid")
{
    for (double A : {1.5, 3.0, 20.0}) {
        for (double B : {1.5, 4.0, 30.0}) {
            for (double C : {0.0, 0.25, 2.0}) {
                auto j = j_sequence(RealBall(BigFloat::from_double(A)), RealBall(BigFloat::from_double(B)),
                                    RealBall(BigFloat::from_double(C)), 5);
                for (int k = 0; k < 5; ++k) {
                    const double q = oracle::j_quadrature(A, B, C, k);
                    CHECK(j[static_cast<std::size_t>(k)].mid().to_double() == doctest::Approx(q).epsilon(1e-7));
                }
            }
        }
    }
}

TEST_CASE("bound context and preconditions")
{
    const EMParams p{10, 10};
    auto ctx = bound_context(ComplexBall(2), ComplexBall(1), p);
    CHECK(ctx.valid);
    CHECK(ctx.K.equals(1));
    CHECK(ctx.C.equals(0));
    CHECK(ctx.A.equals(11));
    CHECK(ctx.B.equals(22));

    auto cc = bound_context(cplx(0.5, 30, 64), cplx(2, 1, 64), p);
    CHECK(cc.valid);
    CHECK(cc.K.mid().to_double() > 1.0);
    // K = exp(tau * atan(beta / A))
    CHECK(cc.K.mid().to_double() == doctest::Approx(std::exp(30 * std::atan(1.0 / 12.0))).epsilon(1e-12));
    const double q = 1.0 / 12.0;
    CHECK(cc.C.mid().to_double() == doctest::Approx(0.5 * std::log1p(q * q) + std::atan(q)).epsilon(1e-12));
    auto simple = bound_context(cplx(0.5, 30, 64), cplx(2, 1, 64), p, true);
    CHECK(simple.C.mid().to_double() >= cc.C.mid().to_double());

    CHECK_FALSE(em_preconditions(ComplexBall(2), ComplexBall(-20), p));
    CHECK_FALSE(em_preconditions(ComplexBall(-30), ComplexBall(1), p));
    CHECK(em_preconditions(ComplexBall(-18), ComplexBall(1), p));
    const auto inf = remainder_bound(ComplexBall(2), ComplexBall(-20), p, 3);
    for (int k = 0; k < 3; ++k) {
        CHECK_FALSE(inf[static_cast<std::size_t>(k)].is_finite());
    }
}

TEST_CASE("remainder bound for real inputs reduces to the plain formula")
{
    const EMParams p{10, 10};
    const int D = 3;
    const auto bound = remainder_bound_mags(ComplexBall(2), ComplexBall(1), p, D);
    // 4 |(2+x)_{20}| (2 pi)^-20 sum J_k(11, 22, 0) x^k / k!
    auto j = j_sequence(RealBall(11), RealBall(22), RealBall(0), D);
    std::vector<double> rising{1.0};
    for (int r = 0; r < 20; ++r) {
        std::vector<double> next(std::min<std::size_t>(rising.size() + 1, D), 0.0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] = (i < rising.size() ? rising[i] * (2 + r) : 0.0) + (i > 0 ? rising[i - 1] : 0.0);
        }
        rising = next;
    }
    const double front = 4.0 / std::pow(2 * M_PI, 20);
    for (int k = 0; k < D; ++k) {
        double acc = 0;
        double fact = 1;
        for (int i = 0; i <= k; ++i) {
            fact = 1;
            for (int t = 2; t <= k - i; ++t) {
                fact *= t;
            }
            acc += rising[static_cast<std::size_t>(i)] * j[static_cast<std::size_t>(k - i)].mid().to_double() / fact;
        }
        CHECK(bound[static_cast<std::size_t>(k)].to_double() == doctest::Approx(front * acc).epsilon(1e-10));
    }
    const auto doubled = remainder_bound_mags(ComplexBall(2), ComplexBall(1), EMParams{20, 20}, 1);
    CHECK(doubled[0] < bound[0]);
}

TEST_CASE("remainder bound exceeds the truncation error for zeta(2)")
{
    const EMParams p{10, 10};
    const BallSeries t = truncated(ComplexBall(2), ComplexBall(1), p, 1, 256);
    const RealBall pi = oracle::machin_pi(256);
    const RealBall exact = div_si(sqr(pi, 256), 6, 256);
    const RealBall err = sub(t[0].re(), exact, 256);
    const auto bound = remainder_bound_mags(ComplexBall(2), ComplexBall(1), p, 1);
    CHECK(err.mag_upper() <= bound[0]);
    // and not absurdly loose
    CHECK(err.mag_lower().mul_2exp(40) > bound[0]);
}

TEST_CASE("bound soundness on a random grid")
{
    std::mt19937_64 rng(7);
    const long prec = 128;
    const ComplexBall shifts[] = {ComplexBall(1), ratio(1, 2, prec), ratio(1, 3, prec), cplx(2, 1, prec)};
    const int orders[] = {1, 2, 8};
    std::uniform_real_distribution<double> sig(-5, 5);
    std::uniform_real_distribution<double> tau(0, 50);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<unsigned long> nm(2, 24);
    int violations = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexBall s = cplx(sig(rng), tau(rng), prec);
        const ComplexBall a = shifts[pick(rng)];
        const int D = orders[trial % 3];
        EMParams p{nm(rng), nm(rng)};
        p.M = std::max<unsigned long>(p.M, 4);
        const BallSeries t = truncated(s, a, p, D, 4 * prec);
        const BallSeries ref = hurwitz_series(s, a, D, 4 * prec);
        const auto bound = remainder_bound_mags(s, a, p, D);
        for (int k = 0; k < D; ++k) {
            const ComplexBall diff = sub(t[static_cast<std::size_t>(k)], ref[static_cast<std::size_t>(k)], 4 * prec);
            if (diff.mag_lower() > bound[static_cast<std::size_t>(k)]) {
                ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("parameter selection")
{
    const auto sel = select_params(ComplexBall(2), ComplexBall(1), 64, 1);
    CHECK(sel.target_reached);
    CHECK(sel.preconditions_ok);
    const auto b = remainder_bound_mags(ComplexBall(2), ComplexBall(1), sel.params, 1);
    CHECK(b[0] <= Mag::pow2(-64 - sel.guard_bits));
    CHECK(sel.params.M == sel.params.N);

    const ComplexBall s(RealBall::from_ratio(1, 2, 3340), RealBall::from_decimal("14.13", 3340));
    for (long prec : {100L, 400L}) {
        const auto p1 = select_params(s, ComplexBall(1), prec, 2);
        const auto p2 = select_params(s, ComplexBall(1), 2 * prec, 2);
        CHECK(p2.params.N >= p1.params.N);
    }
    const auto big = select_params(s, ComplexBall(1), 3340, 2);
    CHECK(big.target_reached);
    // With M = N the bound decays like (e pi)^(-2N), so N is near prec / (2 log2(e pi)).
    const double predicted = 3340.0 / (2.0 * std::log2(M_E * M_PI));
    CHECK(static_cast<double>(big.params.N) == doctest::Approx(predicted).epsilon(0.2));
    CHECK(big.params.N <= 4 * 3340);

    const auto hopeless = select_params(ComplexBall(2), ComplexBall(RealBall(BigFloat::from_double(-1e9))), 64, 1);
    CHECK_FALSE(hopeless.preconditions_ok);
    CHECK_FALSE(hopeless.target_reached);
}

TEST_CASE("direct power sum")
{
    const long prec = 128;
    auto one = power_sum_direct(cplx(3.25, -2, prec), ComplexBall(1), 1, 3, prec);
    CHECK(one[0].equals(1));
    CHECK(one[1].equals(0));
    CHECK(one[2].equals(0));

    auto two = power_sum_direct(ComplexBall(2), ComplexBall(1), 2, 2, prec);
    CHECK(two[0].contains(ratio(5, 4, prec)));
    const RealBall want1 = mul_2exp(-log_ui(2, prec), -2);
    CHECK(two[1].overlaps(ComplexBall(want1)));

    const ComplexBall s = cplx(0.5, 1, prec);
    const ComplexBall a = ratio(1, 3, prec);
    auto got = power_sum_direct(s, a, 50, 4, prec);
    auto ref = oracle::power_sum_terms(s, a, 50, 4, 2 * prec);
    CHECK(oracle::overlaps(got, ref));
    for (int k = 0; k < 4; ++k) {
        CHECK(got[static_cast<std::size_t>(k)].re().rad().log2() < -100);
    }
}

TEST_CASE("direct power sum is independent of the worker count")
{
    const long prec = 200;
    const ComplexBall s = cplx(0.5, 14, prec);
    auto w1 = power_sum_direct(s, ratio(1, 3, prec), 1000, 3, prec, 1);
    auto w4 = power_sum_direct(s, ratio(1, 3, prec), 1000, 3, prec, 4);
    for (int k = 0; k < 3; ++k) {
        CHECK(to_binary(w1[static_cast<std::size_t>(k)].re()) == to_binary(w4[static_cast<std::size_t>(k)].re()));
        CHECK(to_binary(w1[static_cast<std::size_t>(k)].im()) == to_binary(w4[static_cast<std::size_t>(k)].im()));
    }
}

TEST_CASE("branch cut inside the power sum gives infinite radii")
{
    // a = -2.5 +/- 0.1i: a + 1 straddles the negative real axis.
    const ComplexBall a(RealBall(BigFloat::from_double(-2.5)), RealBall(BigFloat(64), Mag::from_double(0.1)));
    auto r = power_sum_direct(ComplexBall(2), a, 5, 1, 64);
    CHECK_FALSE(r[0].is_finite());
}

TEST_CASE("sieved multiplicative sum control flow")
{
    auto add = [](unsigned long long x, unsigned long long y) { return x + y; };
    auto mul = [](unsigned long long x, unsigned long long y) { return x * y; };
    auto id = [](unsigned long k) { return static_cast<unsigned long long>(k); };
    auto sq = [](unsigned long k) { return static_cast<unsigned long long>(k) * k; };
    CHECK(sieved_multiplicative_sum<unsigned long long>(10, id, mul, add, 0ULL) == 55);
    CHECK(sieved_multiplicative_sum<unsigned long long>(4, sq, mul, add, 0ULL) == 30);
    for (unsigned long n = 0; n <= 300; ++n) {
        unsigned long long want = 0;
        for (unsigned long k = 1; k <= n; ++k) {
            want += static_cast<unsigned long long>(k) * k;
        }
        CHECK(sieved_multiplicative_sum<unsigned long long>(n, sq, mul, add, 0ULL) == want);
    }
    // Direct evaluations happen only at 1, 2 and primes, in ascending order.
    std::vector<unsigned long> seen;
    auto record = [&](unsigned long k) {
        seen.push_back(k);
        return static_cast<unsigned long long>(k);
    };
    sieved_multiplicative_sum<unsigned long long>(100, record, mul, add, 0ULL);
    CHECK(seen.size() == 26);
    CHECK(seen[0] == 2);
    CHECK(seen[1] == 1);
    for (std::size_t i = 2; i < seen.size(); ++i) {
        CHECK(seen[i] > seen[i - 1]);
        for (unsigned long d = 2; d * d <= seen[i]; ++d) {
            CHECK(seen[i] % d != 0);
        }
    }
}

TEST_CASE("sieved and direct power sums agree")
{
    const long prec = 128;
    const BallSeries sv = power_sum_sieved(cplx(0.5, 14, prec), 10000, 2, prec);
    const BallSeries dr = power_sum_direct(cplx(0.5, 14, prec), ComplexBall(1), 10000, 2, prec);
    CHECK(oracle::overlaps(sv, dr));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        const ComplexBall s = oracle::random_complex(rng, -3, 8, prec);
        const int D = 1 + trial % 4;
        const unsigned long N = 1 + rng() % 700;
        CHECK(oracle::overlaps(power_sum_sieved(s, N, D, prec), power_sum_direct(s, ComplexBall(1), N, D, prec)));
    }
    CHECK_THROWS_AS(power_sum_sieved(ComplexBall(2), 10, 5, prec), std::invalid_argument);
    // Above the ladder threshold.
    const long hp = log_ladder_threshold + 64;
    CHECK(oracle::overlaps(power_sum_sieved(cplx(0.5, 3, hp), 200, 3, hp),
                           power_sum_direct(cplx(0.5, 3, hp), ComplexBall(1), 200, 3, hp)));
}

TEST_CASE("log ladder")
{
    const long prec = 256;
    auto l2 = log_ladder({2}, prec);
    CHECK(l2[0].overlaps(log_ui(2, prec)));
    auto l23 = log_ladder({2, 3}, prec);
    CHECK(l23[1].overlaps(log_ui(3, prec)));

    std::vector<unsigned long> primes;
    for (unsigned long n = 2; n <= 1000; ++n) {
        bool prime = true;
        for (unsigned long d = 2; d * d <= n; ++d) {
            prime = prime && n % d != 0;
        }
        if (prime) {
            primes.push_back(n);
        }
    }
    for (long p : {64L, 256L, 5000L}) {
        auto logs = log_ladder(primes, p);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            CHECK(logs[i].overlaps(log_ui(primes[i], p)));
            CHECK(logs[i].rad().log2() < -p + 16);
        }
    }
}

TEST_CASE("tail by binary splitting")
{
    const long prec = 128;
    // M = 1: 11^-2 (1/2 + (1/6)(1/2)(2/11))
    auto t1 = tail_binary_split(ComplexBall(2), ComplexBall(1), EMParams{10, 1}, 1, prec);
    const mpq_class want = mpq_class(1, 121) * (mpq_class(1, 2) + mpq_class(1, 6) * mpq_class(1, 2) * mpq_class(2, 11));
    CHECK(t1[0].contains(ComplexBall(RealBall::from_mpq(want, prec))));

    auto t0 = tail_binary_split(cplx(0.5, 3, prec), ratio(1, 3, prec), EMParams{7, 0}, 2, prec);
    const ComplexBall w = add_si(ratio(1, 3, prec), 7, prec);
    const ComplexBall half_pow = mul_2exp(pow(w, -cplx(0.5, 3, prec), prec), -1);
    CHECK(t0[0].overlaps(half_pow));
    CHECK(t0[1].overlaps(mul(half_pow, -log(w, prec), prec)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        const ComplexBall s = oracle::random_complex(rng, -4, 10, prec);
        const ComplexBall a = trial % 2 == 0 ? oracle::random_complex(rng, 0.2, 3, prec) : ComplexBall(1);
        const EMParams p{static_cast<unsigned long>(5 + rng() % 20), static_cast<unsigned long>(1 + rng() % 64)};
        const int D = 1 + static_cast<int>(rng() % 8);
        const BallSeries fast = tail_binary_split(s, a, p, D, prec);
        const BallSeries slow = oracle::tail_sequential(s, a, p.N, p.M, D, prec);
        CHECK(oracle::overlaps(fast, slow));
    }
}

TEST_CASE("prefix integral")
{
    const long prec = 128;
    auto i1 = prefix_integral(ComplexBall(2), ComplexBall(1), 9, 1, prec, false);
    CHECK(i1[0].contains(ratio(1, 10, prec)));

    // (21/2)^(-2-x) / (2+x)
    auto i3 = prefix_integral(ComplexBall(3), ratio(1, 2, prec), 10, 3, prec, false);
    const long hp = 2 * prec;
    const ComplexBall w = ratio(21, 2, hp);
    BallSeries e(3);
    e.at(0) = pow(w, ComplexBall(-2), hp);
    e.at(1) = mul(e[0], -log(w, hp), hp);
    e.at(2) = mul_2exp(mul(e[1], -log(w, hp), hp), -1);
    const BallSeries want = div(e, BallSeries({ComplexBall(2), ComplexBall(1)}, 3), 3, hp);
    CHECK(oracle::overlaps(i3, want));

    auto pole = prefix_integral(ComplexBall(1), ComplexBall(1), 9, 4, prec, true);
    const RealBall L = log_ui(10, prec);
    RealBall c = -L;
    for (int i = 0; i < 4; ++i) {
        // (-1)^(i+1) L^(i+1) / i!  ... divided once more by (i+1)
        CHECK(pole[static_cast<std::size_t>(i)].overlaps(ComplexBall(c)));
        c = div_si(mul(c, -L, prec), i + 2, prec);
    }

    CHECK_THROWS_AS(prefix_integral(ratio(3, 2, prec), ComplexBall(1), 9, 2, prec, true), std::invalid_argument);
    const ComplexBall near_one(RealBall(BigFloat::from_double(1.0), Mag::from_double(1e-3)));
    auto full = prefix_integral(near_one, ComplexBall(1), 9, 2, prec, false);
    CHECK_FALSE(full[0].is_finite());
}

TEST_CASE("Hurwitz zeta special values")
{
    const RealBall pi = oracle::machin_pi(128);
    const RealBall z2 = div_si(sqr(pi, 128), 6, 128);
    auto v = hurwitz_series(ComplexBall(2), ComplexBall(1), 1, 64);
    CHECK(v[0].re().overlaps(z2));
    CHECK(v[0].re().rad().log2() < -60);
    CHECK(hurwitz_value(ComplexBall(2), ComplexBall(1), 64).re().overlaps(z2));

    auto q = hurwitz_value(ComplexBall(0), ratio(1, 4, 64), 64);
    CHECK(q.contains(ratio(1, 4, 64)));

    auto m = hurwitz_value(ComplexBall(-1), ComplexBall(1), 64);
    CHECK(m.re().overlaps(RealBall::from_ratio(-1, 12, 64)));
    auto m2 = hurwitz_series(ComplexBall(-1), ComplexBall(1), 1, 64, false, EMParams{40, 40});
    CHECK(m2[0].overlaps(m));

    auto g = hurwitz_series(ComplexBall(1), ComplexBall(1), 2, 128, true);
    CHECK(g[0].re().overlaps(oracle::euler_gamma(128)));
    CHECK(g[0].re().rad().log2() < -120);

    const RealBall three = sub(RealBall(8), RealBall(1), 64);
    auto h = hurwitz_value(ComplexBall(3), ratio(1, 2, 128), 128);
    auto z3 = hurwitz_value(ComplexBall(3), ComplexBall(1), 128);
    CHECK(h.overlaps(mul(z3, three, 128)));
}

TEST_CASE("Hurwitz zeta rejects nonpositive integer shifts")
{
    CHECK_THROWS_AS(hurwitz_value(ComplexBall(2), ComplexBall(0), 64), std::domain_error);
    CHECK_THROWS_AS(hurwitz_value(ComplexBall(2), ComplexBall(-3), 64), std::domain_error);
    const ComplexBall around(RealBall(BigFloat::from_double(-1.05), Mag::from_double(0.1)));
    CHECK_THROWS_AS(hurwitz_value(ComplexBall(2), around, 64), std::domain_error);
    CHECK_NOTHROW(hurwitz_value(ComplexBall(2), ratio(-5, 2, 64), 64));
    CHECK_THROWS_AS(hurwitz_series(ratio(1, 2, 64), ComplexBall(1), 2, 64, true), std::invalid_argument);
}

TEST_CASE("unreachable preconditions give finite midpoints with infinite radii")
{
    auto r = hurwitz_series_ex(ComplexBall(2), ratio(-41, 2, 64), 1, 64,
                               HurwitzOptions{false, EMParams{5, 5}, 1});
    CHECK_FALSE(r.preconditions_ok);
    CHECK(r.value[0].re().mid().is_finite());
    CHECK(r.value[0].re().rad().is_inf());
}

TEST_CASE("Hurwitz identities at 300 bits")
{
    const long prec = 300;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        const ComplexBall s = oracle::random_complex(rng, -4, 20, prec);
        const ComplexBall a = oracle::random_complex(rng, 0.1, 3, prec);
        if (s.equals(1)) {
            continue;
        }
        const ComplexBall two_s = pow(ComplexBall(2), s, prec);

        const ComplexBall half = hurwitz_value(s, ratio(1, 2, prec), prec);
        const ComplexBall z = hurwitz_value(s, ComplexBall(1), prec);
        CHECK(half.overlaps(mul(sub(two_s, ComplexBall(1), prec), z, prec)));

        const ComplexBall lhs = add(hurwitz_value(s, mul_2exp(a, -1), prec),
                                    hurwitz_value(s, mul_2exp(add_si(a, 1, prec), -1), prec), prec);
        CHECK(lhs.overlaps(mul(two_s, hurwitz_value(s, a, prec), prec)));

        // zeta(s, a) = a^-s + zeta(s, a + 1)
        const ComplexBall shifted = add(pow(a, -s, prec), hurwitz_value(s, add_si(a, 1, prec), prec), prec);
        CHECK(shifted.overlaps(hurwitz_value(s, a, prec)));
        CHECK(hurwitz_value(s, a, prec).re().rad().log2() < -prec + 40);
    }
}

TEST_CASE("enclosures at different parameters intersect")
{
    const long prec = 128;
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 6; ++trial) {
        const ComplexBall s = oracle::random_complex(rng, -2, 10, prec);
        const ComplexBall a = oracle::random_complex(rng, 0.5, 2, prec);
        const int D = 1 + trial % 4;
        auto p = select_params(s, a, prec, D).params;
        auto x = hurwitz_series(s, a, D, prec, false, p);
        auto y = hurwitz_series(s, a, D, prec, false, EMParams{2 * p.N, 2 * p.M});
        CHECK(oracle::overlaps(x, y));
        auto z = hurwitz_series(s, a, D, prec, false, EMParams{p.N + 7, p.M / 2 + 3});
        CHECK(oracle::overlaps(x, z));
    }
}

TEST_CASE("first derivative agrees with a central difference")
{
    const long prec = 160;
    std::mt19937_64 rng(13);
    const ComplexBall h(RealBall(BigFloat::from_mag(Mag::pow2(-40))));
    for (int trial = 0; trial < 8; ++trial) {
        const ComplexBall s = oracle::random_complex(rng, -3, 6, prec);
        const ComplexBall a = oracle::random_complex(rng, 0.3, 2, prec);
        const BallSeries jet = hurwitz_series(s, a, 2, prec);
        const ComplexBall up = hurwitz_value(add(s, h, prec), a, prec);
        const ComplexBall dn = hurwitz_value(sub(s, h, prec), a, prec);
        const ComplexBall fd = mul_2exp(mul(sub(up, dn, prec), ComplexBall(RealBall(BigFloat::from_mag(Mag::pow2(40)))), prec), -1);
        CHECK(rel_dev(fd, jet[1]) < 1e-6);
    }
}
