#include <doctest.h>

#include <emz/bernoulli.hpp>

#include "../oracles/oracles.hpp"

#include <thread>

using namespace emz;

TEST_CASE("small Bernoulli numbers")
{
    const auto b = bernoulli_table(20);
    CHECK(b[0] == 1);
    CHECK(b[1] == BigRational(-1, 2));
    CHECK(b[2] == BigRational(1, 6));
    CHECK(b[12] == BigRational(-691, 2730));
    for (unsigned long k = 3; k <= 20; k += 2) {
        CHECK(b[k] == 0);
    }
}

TEST_CASE("table agrees with the recurrence and with series inversion")
{
    const unsigned long n = 120;
    const auto b = bernoulli_table(n);
    const auto rec = oracle::bernoulli_recurrence(n);
    const auto inv = oracle::bernoulli_inversion(n);
    for (unsigned long k = 0; k <= n; ++k) {
        CHECK(b[k] == rec[k]);
        CHECK(b[k] == inv[k]);
    }
}

TEST_CASE("defining recurrence holds exactly")
{
    const unsigned long n = 200;
    const auto b = bernoulli_table(n);
    for (unsigned long m = 1; m <= n; ++m) {
        mpq_class s = 0;
        for (unsigned long j = 0; j <= m; ++j) {
            s += mpq_class(oracle::binomial(m + 1, j)) * b[j];
        }
        CHECK(s == 0);
    }
}

TEST_CASE("balls")
{
    CHECK(bernoulli_ball(3, 64).is_zero());
    CHECK(bernoulli_ball(101, 64).is_zero());
    const RealBall b2 = bernoulli_ball(2, 53);
    const BigFloat lo = b2.lower(200);
    const BigFloat hi = b2.upper(200);
    const mpq_class sixth(1, 6);
    CHECK(mpfr_cmp_q(lo.get(), sixth.get_mpq_t()) <= 0);
    CHECK(mpfr_cmp_q(hi.get(), sixth.get_mpq_t()) >= 0);
    const RealBall b12 = bernoulli_ball(12, 64);
    const mpq_class q(-691, 2730);
    CHECK(mpfr_cmp_q(b12.lower(200).get(), q.get_mpq_t()) <= 0);
    CHECK(mpfr_cmp_q(b12.upper(200).get(), q.get_mpq_t()) >= 0);
    for (unsigned long n : {2UL, 12UL, 60UL, 400UL}) {
        const RealBall x = bernoulli_ball(n, 100);
        CHECK(x.rad() <= x.mid().mag_upper().mul_2exp(-99));
    }
}

TEST_CASE("cache only grows and stays coherent")
{
    const auto first = bernoulli_table(50);
    const std::size_t size = bernoulli_cache_size();
    const auto second = bernoulli_table(300);
    CHECK(bernoulli_cache_size() >= size);
    for (unsigned long k = 0; k <= 50; ++k) {
        CHECK(first[k] == second[k]);
    }
    CHECK(bernoulli(300) == second[300]);
}

TEST_CASE("concurrent readers see identical values")
{
    std::vector<std::thread> threads;
    std::vector<BigRational> got(4);
    for (int i = 0; i < 4; ++i) {
        threads.emplace_back([&, i] { got[static_cast<std::size_t>(i)] = bernoulli(500 + 2 * static_cast<unsigned long>(i % 2)); });
    }
    for (auto &t : threads) {
        t.join();
    }
    CHECK(got[0] == got[2]);
    CHECK(got[1] == got[3]);
    CHECK(got[0] == bernoulli(500));
}
