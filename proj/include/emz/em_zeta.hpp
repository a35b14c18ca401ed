#ifndef EMZ_EM_ZETA_HPP
#define EMZ_EM_ZETA_HPP

#include <emz/complex_ball.hpp>
#include <emz/series.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace emz
{

// Power-sum length N and tail length M of the Euler-Maclaurin formula
// zeta(s+x, a) = S + I + T + R.
struct EMParams
{
    unsigned long N = 0;
    unsigned long M = 0;
};

// Requires Re(a) + N > 1 and Re(s) + 2M > 1 over the whole balls.
bool em_preconditions(const ComplexBall &s, const ComplexBall &a, const EMParams &p);

// Ingredients of the remainder bound. A = N + alpha and B = sigma + 2M
// are lower bounds; C and K are upper bounds.
struct BoundContext
{
    RealBall C;
    RealBall K;
    RealBall A;
    RealBall B;
    bool valid = false;
};

// simplified_c replaces C by the cruder beta^2/(2A^2) + |beta|/A.
BoundContext bound_context(const ComplexBall &s, const ComplexBall &a, const EMParams &p, bool simplified_c = false);

// Upper bounds of J_k(A, B, C) = int_A^inf t^-B (C + log t)^k dt for
// k < count, as exact point balls. J_k decreases in A and B and increases
// in C, so the lower endpoints of A, B and the upper endpoint of C are
// used. A <= 1, B <= 1 or C < 0 anywhere gives infinities.
std::vector<RealBall> j_sequence(const RealBall &A, const RealBall &B, const RealBall &C, int count);

// Entry k bounds |[x^k] R(s+x)|. All entries are infinite when the
// preconditions fail.
RealSeries remainder_bound(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order);
std::vector<Mag> remainder_bound_mags(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order,
                                     bool simplified_c = false);

struct ParamSelection
{
    EMParams params;
    // False when even the largest probed N misses the accuracy target.
    bool target_reached = false;
    // False when no probed N satisfies the preconditions.
    bool preconditions_ok = false;
    long guard_bits = 0;
};

// Guard bits 20 + ceil(log2(N + 2)) + ceil(log2 D).
long guard_bits(unsigned long N, int order);

// Smallest N (doubling from 16, then bisecting) with M = N such that
// every remainder coefficient is at most 2^(-prec-g) times a magnitude
// estimate of the matching coefficient of (a+N)^(1-s-x)/(s+x-1).
ParamSelection select_params(const ComplexBall &s, const ComplexBall &a, long prec, int order, bool at_pole = false);

// sum_{k=0}^{N-1} (a+k)^-(s+x) mod x^order. Terms are grouped in blocks
// of fixed size so the result does not depend on the worker count.
BallSeries power_sum_direct(const ComplexBall &s, const ComplexBall &a, unsigned long N, int order, long prec,
                            int workers = 1);

// sum_{k=1}^{N} k^-(s+x) mod x^order, order <= 4, evaluating terms from
// scratch only at primes.
BallSeries power_sum_sieved(const ComplexBall &s, unsigned long N, int order, long prec);

// Logs of ascending integers >= 2, each from its predecessor through
// log q = log p + 2 atanh((q-p)/(q+p)).
std::vector<RealBall> log_ladder(const std::vector<unsigned long> &xs, long prec);

// Precision from which integer logs use the ladder.
constexpr long log_ladder_threshold = 4096;

// Tail T = (a+N)^-(s+x) (1/2 + sum_{j<M} B_{2j+2}/(2j+2)! (s+x)_{2j+1} / (a+N)^{2j+1})
// by binary splitting over (P, R) pairs.
BallSeries tail_binary_split(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order, long prec);

// (a+N)^(1-(s+x)) / ((s+x)-1), or with at_pole (s exactly 1) the limit of
// that minus 1/((s+x)-1).
BallSeries prefix_integral(const ComplexBall &s, const ComplexBall &a, unsigned long N, int order, long prec,
                           bool at_pole);

struct HurwitzOptions
{
    bool at_pole = false;
    std::optional<EMParams> force;
    int workers = 1;
};

struct HurwitzResult
{
    BallSeries value;
    EMParams params;
    bool target_reached = true;
    bool preconditions_ok = true;
};

// zeta(s+x, a) mod x^order as S + I + T with the remainder bound added to
// each coefficient radius. With at_pole, s must be exactly 1 and the
// result is zeta(1+x, a) - 1/x.
HurwitzResult hurwitz_series_ex(const ComplexBall &s, const ComplexBall &a, int order, long prec,
                                const HurwitzOptions &opts = {});
BallSeries hurwitz_series(const ComplexBall &s, const ComplexBall &a, int order, long prec, bool at_pole = false,
                          std::optional<EMParams> force = std::nullopt, int workers = 1);
ComplexBall hurwitz_value(const ComplexBall &s, const ComplexBall &a, long prec);

} // namespace emz

#endif
