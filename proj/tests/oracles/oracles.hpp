#ifndef EMZ_TEST_ORACLES_HPP
#define EMZ_TEST_ORACLES_HPP

// Independent reference computations used only by the tests. They avoid
// the library's own elementary functions wherever practical.

#include <emz/complex_ball.hpp>
#include <emz/real_ball.hpp>
#include <emz/series.hpp>

#include <gmpxx.h>

#include <random>
#include <vector>

namespace oracle
{

// pi from Machin's formula, 16 atan(1/5) - 4 atan(1/239), by exact
// rational partial sums with a rigorous alternating-series tail.
emz::RealBall machin_pi(long prec);

// exp(x) by direct Taylor summation of an exact rational argument, with
// a geometric tail bound.
emz::RealBall exp_taylor(const mpq_class &x, long prec);
// exp(x) as exp(x / 2^k)^(2^k) with the inner value from exp_taylor.
emz::RealBall exp_squaring(const mpq_class &x, int k, long prec);

// Euler's constant.
emz::RealBall euler_gamma(long prec);

// Exact binomial coefficient.
mpz_class binomial(unsigned long n, unsigned long k);

// Coefficient-wise alternating sum sum_k (-1)^k C(n,k) a_k.
emz::BallSeries binomial_transform_direct(const emz::BallSeries &f, int order, long prec);
// f(x/(x-1)) by Horner's rule with series arithmetic.
emz::BallSeries compose_mobius_horner(const emz::BallSeries &f, int order, long prec);

// Bernoulli numbers B_0..B_n from the recurrence
// sum_{j<=m} C(m+1, j) B_j = 0, in exact rationals.
std::vector<mpq_class> bernoulli_recurrence(unsigned long n);
// Bernoulli numbers from exact inversion of (e^x - 1)/x, scaled by k!.
std::vector<mpq_class> bernoulli_inversion(unsigned long n);

// int_A^inf t^-B (C + log t)^k dt by composite Simpson quadrature in
// u = log t, cut off where the integrand is below 1e-30 of its peak.
double j_quadrature(double A, double B, double C, int k);

// Euler-Maclaurin tail summed term by term with exact Bernoulli numbers:
// (a+N)^-(s+x) (1/2 + sum_{j<M} B_{2j+2}/(2j+2)! (s+x)_{2j+1} (a+N)^-(2j+1)).
emz::BallSeries tail_sequential(const emz::ComplexBall &s, const emz::ComplexBall &a, unsigned long N,
                                unsigned long M, int order, long prec);

// sum_{k<N} (a+k)^-(s+x), each term as pow(a+k, -s) times the exponential
// series of -x log(a+k).
emz::BallSeries power_sum_terms(const emz::ComplexBall &s, const emz::ComplexBall &a, unsigned long N, int order,
                                long prec);

// Random point ball with midpoint uniform in [lo, hi] at prec bits.
emz::RealBall random_point(std::mt19937_64 &rng, double lo, double hi, long prec);
emz::ComplexBall random_complex(std::mt19937_64 &rng, double lo, double hi, long prec);
emz::BallSeries random_series(std::mt19937_64 &rng, int order, long prec, bool real);

// Every coefficient of b overlaps the corresponding coefficient of a.
bool overlaps(const emz::BallSeries &a, const emz::BallSeries &b);
// Every coefficient of a contains the corresponding coefficient of b.
bool contains(const emz::BallSeries &a, const emz::BallSeries &b);

} // namespace oracle

#endif
