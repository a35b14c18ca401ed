#include <emz/bernoulli.hpp>
#include <emz/em_zeta.hpp>
#include <emz/sieved_sum.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace emz
{

namespace
{

// Precision for bound computations.
constexpr long bound_prec = 64;
// Terms per block in the direct power sum.
constexpr unsigned long block_size = 32;
constexpr unsigned long max_probe_N = 1UL << 22;

BigFloat lower_plus(const RealBall &x, unsigned long n)
{
    BigFloat lo = x.lower(bound_prec);
    mpfr_add_ui(lo.get(), lo.get(), n, MPFR_RNDD);
    return lo;
}

RealBall point(const BigFloat &x)
{
    return RealBall(x);
}

bool is_positive_integer(const ComplexBall &a)
{
    return a.is_real() && a.re().is_exact() && mpfr_integer_p(a.re().mid().get()) != 0 && a.re().mid().sign() > 0;
}

// (s+x)_n mod x^order, one linear factor at a time.
BallSeries rising_jet_sequential(const ComplexBall &s, unsigned long n, int order, long prec)
{
    std::vector<ComplexBall> c{ComplexBall(1)};
    for (unsigned long j = 0; j < n; ++j) {
        const ComplexBall sj = add_si(s, static_cast<long>(j), prec);
        const std::size_t len = std::min<std::size_t>(c.size() + 1, static_cast<std::size_t>(order));
        std::vector<ComplexBall> next(len);
        for (std::size_t i = 0; i < len; ++i) {
            ComplexBall v = i < c.size() ? mul(c[i], sj, prec) : ComplexBall(0);
            if (i > 0) {
                v = add(v, c[i - 1], prec);
            }
            next[i] = std::move(v);
        }
        c = std::move(next);
    }
    return BallSeries(std::move(c), order);
}

BallSeries rising_jet_tree(const ComplexBall &s, unsigned long lo, unsigned long hi, int order, long prec)
{
    if (hi - lo <= 8) {
        return rising_jet_sequential(add_si(s, static_cast<long>(lo), prec), hi - lo, order, prec);
    }
    const unsigned long mid = lo + (hi - lo) / 2;
    return mul(rising_jet_tree(s, lo, mid, order, prec), rising_jet_tree(s, mid, hi, order, prec), order, prec);
}

BallSeries rising_jet(const ComplexBall &s, unsigned long n, int order, long prec)
{
    if (order >= 16 && n > 8) {
        return rising_jet_tree(s, 0, n, order, prec);
    }
    return rising_jet_sequential(s, n, order, prec);
}

Mag mag_pow(Mag base, unsigned long e)
{
    Mag r = Mag::pow2(0);
    while (e != 0) {
        if (e & 1UL) {
            r *= base;
        }
        e >>= 1;
        if (e != 0) {
            base = base * base;
        }
    }
    return r;
}

// Crude magnitude estimates of the coefficients of
// (a+N)^(1-s-x)/(s+x-1) (or of the pole-free limit), as majorants so
// that no cancellation can make them vanish.
std::vector<Mag> magnitude_estimate(const ComplexBall &s, const ComplexBall &a, unsigned long N, int order,
                                    bool at_pole)
{
    std::vector<Mag> e(static_cast<std::size_t>(order), Mag::inf());
    const ComplexBall w = add_si(a, static_cast<long>(N), bound_prec);
    const ComplexBall L = log(w, bound_prec);
    if (!L.is_finite()) {
        return e;
    }
    const Mag l = L.mag_upper();
    // |L|^k / k!
    std::vector<Mag> lk(static_cast<std::size_t>(order) + 1);
    lk[0] = Mag::pow2(0);
    for (std::size_t k = 1; k < lk.size(); ++k) {
        lk[k] = Mag::div(lk[k - 1] * l, Mag::lower_from_double(static_cast<double>(k)));
    }
    if (at_pole) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            e[k] = Mag::div(lk[k] * l * Mag::from_double(static_cast<double>(k + 1)), Mag::pow2(0));
        }
        return e;
    }
    const ComplexBall u = exp(mul(sub(ComplexBall(1), s, bound_prec), L, bound_prec), bound_prec);
    const Mag um = u.mag_upper();
    const Mag dist = sub(s, ComplexBall(1), bound_prec).mag_lower();
    const Mag inv = dist.is_zero() ? Mag::pow2(0) : Mag::div(Mag::pow2(0), dist);
    std::vector<Mag> g(e.size());
    g[0] = inv;
    for (std::size_t k = 1; k < g.size(); ++k) {
        g[k] = g[k - 1] * inv;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
        Mag acc;
        for (std::size_t j = 0; j <= k; ++j) {
            acc += lk[j] * g[k - j];
        }
        e[k] = um * acc;
    }
    return e;
}

bool meets_target(const std::vector<Mag> &bound, const std::vector<Mag> &estimate, long bits)
{
    for (std::size_t k = 0; k < bound.size(); ++k) {
        if (estimate[k].is_inf() || bound[k].is_inf()) {
            return false;
        }
        if (bound[k] > estimate[k].mul_2exp(-bits)) {
            return false;
        }
    }
    return true;
}

// atanh(u/v) for 0 < u < v by binary splitting of the Taylor series.
struct SplitTerms
{
    mpz_class P;
    mpz_class Q;
    mpz_class B;
    mpz_class T;
};

SplitTerms atanh_split(const mpz_class &u2, const mpz_class &v2, unsigned long lo, unsigned long hi)
{
    if (hi - lo == 1) {
        SplitTerms r;
        r.P = lo == 0 ? mpz_class(1) : u2;
        r.Q = lo == 0 ? mpz_class(1) : v2;
        r.B = 2 * lo + 1;
        r.T = r.P;
        return r;
    }
    const unsigned long mid = lo + (hi - lo) / 2;
    SplitTerms a = atanh_split(u2, v2, lo, mid);
    SplitTerms b = atanh_split(u2, v2, mid, hi);
    SplitTerms r;
    r.T = b.B * b.Q * a.T + a.B * a.P * b.T;
    r.P = a.P * b.P;
    r.Q = a.Q * b.Q;
    r.B = a.B * b.B;
    return r;
}

RealBall atanh_rational(unsigned long u, unsigned long v, long prec)
{
    const double ratio = std::log2(static_cast<double>(v) / static_cast<double>(u));
    const auto terms = static_cast<unsigned long>(std::ceil(static_cast<double>(prec + 8) / (2.0 * ratio))) + 1;
    const mpz_class uz(u);
    const mpz_class vz(v);
    const SplitTerms s = atanh_split(uz * uz, vz * vz, 0, terms);
    const mpz_class num = uz * s.T;
    const mpz_class den = vz * s.B * s.Q;
    const long wp = prec + 16;
    RealBall r = div(RealBall::from_mpz(num), RealBall::from_mpz(den), wp);
    // Omitted tail: z^(2K+1) / ((2K+1)(1 - z^2)) <= 2 z^(2K+1) / (2K+1).
    const double tail_log2 = -ratio * static_cast<double>(2 * terms + 1) + 1.0;
    r.add_error(Mag::pow2(static_cast<std::int64_t>(std::ceil(tail_log2))));
    return r;
}

class LogLadder
{
public:
    explicit LogLadder(long prec) : prec_(prec) {}

    RealBall next(unsigned long q)
    {
        if (p_ == 0 || q <= p_) {
            log_ = log_ui(q, prec_);
        } else {
            const RealBall t = atanh_rational(q - p_, q + p_, prec_);
            log_ = add(log_, mul_2exp(t, 1), prec_);
        }
        p_ = q;
        return log_;
    }

private:
    long prec_;
    unsigned long p_ = 0;
    RealBall log_;
};

// Series (a+k)^-(s+x) from L = log(a+k).
std::vector<ComplexBall> power_term(const ComplexBall &s, const ComplexBall &L, int order, long prec)
{
    std::vector<ComplexBall> c(static_cast<std::size_t>(order));
    c[0] = exp(-mul(s, L, prec), prec);
    const ComplexBall neg_l = -L;
    for (std::size_t i = 1; i < c.size(); ++i) {
        c[i] = div_si(mul(c[i - 1], neg_l, prec), static_cast<long>(i), prec);
    }
    return c;
}

ComplexBall log_of(const ComplexBall &w, long prec)
{
    if (w.is_real() && w.re().is_positive()) {
        return ComplexBall(log(w.re(), prec));
    }
    return log(w, prec);
}

BallSeries full_series(int order)
{
    return BallSeries(std::vector<ComplexBall>(static_cast<std::size_t>(order), ComplexBall::full()), order);
}

} // namespace

bool em_preconditions(const ComplexBall &s, const ComplexBall &a, const EMParams &p)
{
    if (!s.is_finite() || !a.is_finite() || p.N == 0) {
        return false;
    }
    const BigFloat alpha_n = lower_plus(a.re(), p.N);
    const BigFloat sigma_m = lower_plus(s.re(), 2 * p.M);
    return mpfr_cmp_ui(alpha_n.get(), 1) > 0 && mpfr_cmp_ui(sigma_m.get(), 1) > 0;
}

BoundContext bound_context(const ComplexBall &s, const ComplexBall &a, const EMParams &p, bool simplified_c)
{
    BoundContext ctx;
    ctx.A = point(lower_plus(a.re(), p.N));
    ctx.B = point(lower_plus(s.re(), 2 * p.M));
    ctx.valid = em_preconditions(s, a, p);
    if (!ctx.valid) {
        ctx.C = RealBall::full();
        ctx.K = RealBall::full();
        return ctx;
    }
    const long wp = bound_prec;
    const RealBall beta = abs(a.im());
    const RealBall q = div(beta, ctx.A, wp);
    const RealBall c = simplified_c ? add(mul_2exp(sqr(q, wp), -1), q, wp)
                                    : add(mul_2exp(log(add_si(sqr(q, wp), 1, wp), wp), -1), atan(q, wp), wp);
    ctx.C = point(c.upper(wp));
    // tau * atan(beta / (alpha + N)) over the full balls.
    const RealBall range = add_si(a.re(), static_cast<long>(p.N), wp);
    const RealBall e = mul(s.im(), atan(div(a.im(), range, wp), wp), wp);
    BigFloat top = e.upper(wp);
    if (top.sign() < 0) {
        top = BigFloat(2);
    }
    ctx.K = point(exp(point(top), wp).upper(wp));
    return ctx;
}

std::vector<RealBall> j_sequence(const RealBall &A, const RealBall &B, const RealBall &C, int count)
{
    std::vector<RealBall> out(static_cast<std::size_t>(std::max(count, 0)), RealBall::full());
    const long wp = bound_prec;
    const BigFloat a = A.lower(wp);
    const BigFloat b = B.lower(wp);
    const BigFloat c = C.upper(wp);
    if (!a.is_finite() || !b.is_finite() || !c.is_finite() || mpfr_cmp_ui(a.get(), 1) <= 0 ||
        mpfr_cmp_ui(b.get(), 1) <= 0 || C.lower(wp).sign() < 0) {
        return out;
    }
    const RealBall bm1 = add_si(point(b), -1, wp);
    const RealBall log_a = log(point(a), wp);
    const RealBall jd = mul(bm1, add(point(c), log_a, wp), wp);
    // 1 / ((B-1) A^(B-1))
    RealBall scale = inv(mul(bm1, exp(mul(bm1, log_a, wp), wp), wp), wp);
    const RealBall inv_bm1 = inv(bm1, wp);
    RealBall L(1);
    RealBall jd_pow(1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k > 0) {
            jd_pow = mul(jd_pow, jd, wp);
            L = add(mul_si(L, static_cast<long>(k), wp), jd_pow, wp);
            scale = mul(scale, inv_bm1, wp);
        }
        const RealBall j = mul(L, scale, wp);
        out[k] = j.is_finite() ? point(j.upper(wp)) : RealBall::full();
    }
    return out;
}

std::vector<Mag> remainder_bound_mags(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order,
                                     bool simplified_c)
{
    std::vector<Mag> out(static_cast<std::size_t>(order), Mag::inf());
    const BoundContext ctx = bound_context(s, a, p, simplified_c);
    if (!ctx.valid) {
        return out;
    }
    const std::vector<RealBall> J = j_sequence(ctx.A, ctx.B, ctx.C, order);
    const Mag K = ctx.K.mag_upper();
    std::vector<Mag> r(out.size());
    Mag fact_lower = Mag::pow2(0);
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k > 1) {
            fact_lower = Mag::mul_lower(fact_lower, Mag::lower_from_double(static_cast<double>(k)));
        }
        r[k] = Mag::div(K * J[k].mag_upper(), fact_lower);
    }
    const BallSeries jet = rising_jet(s, 2 * p.M, order, bound_prec);
    std::vector<Mag> jm(out.size());
    for (std::size_t k = 0; k < jm.size(); ++k) {
        jm[k] = jet[k].mag_upper();
    }
    // 4 / (2 pi)^(2M), with 2 pi bounded below.
    const Mag inv_two_pi = Mag::div(Mag::pow2(0), Mag::lower_from_double(6.283185307179586));
    const Mag front = mag_pow(inv_two_pi, 2 * p.M).mul_2exp(2);
    for (std::size_t k = 0; k < out.size(); ++k) {
        Mag acc;
        for (std::size_t i = 0; i <= k; ++i) {
            acc += jm[i] * r[k - i];
        }
        out[k] = front * acc;
    }
    return out;
}

RealSeries remainder_bound(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order)
{
    const std::vector<Mag> m = remainder_bound_mags(s, a, p, order);
    std::vector<RealBall> c;
    c.reserve(m.size());
    for (const Mag &x : m) {
        c.push_back(x.is_inf() ? RealBall::full() : RealBall(BigFloat::from_mag(x)));
    }
    return RealSeries(std::move(c), order);
}

long guard_bits(unsigned long N, int order)
{
    long g = 20;
    g += static_cast<long>(std::ceil(std::log2(static_cast<double>(N) + 2.0)));
    if (order > 1) {
        g += static_cast<long>(std::ceil(std::log2(static_cast<double>(order))));
    }
    return g;
}

ParamSelection select_params(const ComplexBall &s, const ComplexBall &a, long prec, int order, bool at_pole)
{
    ParamSelection out;
    EMParams last_valid;
    auto ok = [&](unsigned long N) {
        const EMParams p{N, N};
        if (!em_preconditions(s, a, p)) {
            return false;
        }
        last_valid = std::max(last_valid.N, N) == N ? p : last_valid;
        out.preconditions_ok = true;
        const std::vector<Mag> bound = remainder_bound_mags(s, a, p, order);
        const std::vector<Mag> est = magnitude_estimate(s, a, N, order, at_pole);
        return meets_target(bound, est, prec + guard_bits(N, order));
    };

    unsigned long hi = 16;
    while (hi <= max_probe_N && !ok(hi)) {
        hi *= 2;
    }
    if (hi > max_probe_N) {
        out.target_reached = false;
        out.params = out.preconditions_ok ? last_valid : EMParams{max_probe_N, max_probe_N};
        out.guard_bits = guard_bits(out.params.N, order);
        return out;
    }
    unsigned long lo = hi == 16 ? 0 : hi / 2;
    while (hi - lo > 1) {
        const unsigned long mid = lo + (hi - lo) / 2;
        if (ok(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.params = EMParams{hi, hi};
    out.target_reached = true;
    out.preconditions_ok = true;
    out.guard_bits = guard_bits(hi, order);
    return out;
}

BallSeries power_sum_direct(const ComplexBall &s, const ComplexBall &a, unsigned long N, int order, long prec,
                            int workers)
{
    if (N == 0) {
        return BallSeries(order);
    }
    const bool ladder = prec >= log_ladder_threshold && is_positive_integer(a);
    const unsigned long a0 = ladder ? mpfr_get_ui(a.re().mid().get(), MPFR_RNDN) : 0;
    const unsigned long blocks = (N + block_size - 1) / block_size;
    std::vector<std::vector<ComplexBall>> partial(blocks);

    auto run_block = [&](unsigned long b) {
        std::vector<ComplexBall> acc(static_cast<std::size_t>(order), ComplexBall(0));
        LogLadder logs(prec);
        const unsigned long end = std::min(N, (b + 1) * block_size);
        for (unsigned long k = b * block_size; k < end; ++k) {
            ComplexBall L;
            if (ladder) {
                L = ComplexBall(logs.next(a0 + k));
            } else {
                L = log_of(add_si(a, static_cast<long>(k), prec), prec);
            }
            const std::vector<ComplexBall> t = power_term(s, L, order, prec);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] = add(acc[i], t[i], prec);
            }
        }
        partial[b] = std::move(acc);
    };

    const unsigned long nthreads = std::min<unsigned long>(static_cast<unsigned long>(std::max(workers, 1)), blocks);
    if (nthreads <= 1) {
        for (unsigned long b = 0; b < blocks; ++b) {
            run_block(b);
        }
    } else {
        std::atomic<unsigned long> next{0};
        std::vector<std::thread> pool;
        for (unsigned long t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (unsigned long b = next++; b < blocks; b = next++) {
                    run_block(b);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::vector<ComplexBall> sum = std::move(partial[0]);
    for (unsigned long b = 1; b < blocks; ++b) {
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] = add(sum[i], partial[b][i], prec);
        }
    }
    return BallSeries(std::move(sum), order);
}

BallSeries power_sum_sieved(const ComplexBall &s, unsigned long N, int order, long prec)
{
    if (order > 4) {
        throw std::invalid_argument("sieved power sum supports order <= 4");
    }
    LogLadder ladder(prec);
    const bool use_ladder = prec >= log_ladder_threshold;
    auto eval = [&](unsigned long k) {
        if (k == 1) {
            return BallSeries::constant(ComplexBall(1), order);
        }
        const RealBall L = use_ladder && k > 2 ? ladder.next(k) : log_ui(k, prec);
        if (use_ladder && k == 2) {
            ladder.next(2);
        }
        return BallSeries(power_term(s, ComplexBall(L), order, prec), order);
    };
    auto mul_fn = [&](const BallSeries &x, const BallSeries &y) { return mul(x, y, order, prec); };
    auto add_fn = [&](const BallSeries &x, const BallSeries &y) { return add(x, y, order, prec); };
    return sieved_multiplicative_sum(N, eval, mul_fn, add_fn, BallSeries(order));
}

std::vector<RealBall> log_ladder(const std::vector<unsigned long> &xs, long prec)
{
    std::vector<RealBall> out;
    out.reserve(xs.size());
    LogLadder ladder(prec);
    for (unsigned long x : xs) {
        if (x < 2) {
            throw std::invalid_argument("log ladder inputs must be >= 2");
        }
        out.push_back(ladder.next(x));
    }
    return out;
}

namespace
{

struct TailPair
{
    BallSeries P;
    BallSeries R;
};

TailPair tail_leaf(const ComplexBall &s, const ComplexBall &inv_w, const ComplexBall &inv_w2, unsigned long j,
                   int order, long prec)
{
    BallSeries P(order);
    if (j == 0) {
        const ComplexBall c = mul_2exp(inv_w, -1);
        P = BallSeries({mul(s, c, prec), c}, order);
    } else {
        const auto jj = static_cast<long>(j);
        const ComplexBall u = add_si(s, 2 * jj - 1, prec);
        const ComplexBall v = add_si(s, 2 * jj, prec);
        // (u + x)(v + x) = uv + (u + v) x + x^2
        const ComplexBall c = div(inv_w2, RealBall::from_mpz(mpz_class((2 * j + 1)) * mpz_class(2 * j + 2)), prec);
        P = BallSeries({mul(mul(u, v, prec), c, prec), mul(add(u, v, prec), c, prec), c}, order);
    }
    TailPair out{P, scale(P, bernoulli_ball(2 * j + 2, prec), prec)};
    return out;
}

TailPair tail_range(const ComplexBall &s, const ComplexBall &inv_w, const ComplexBall &inv_w2, unsigned long lo,
                    unsigned long hi, int order, long prec)
{
    if (hi - lo == 1) {
        return tail_leaf(s, inv_w, inv_w2, lo, order, prec);
    }
    const unsigned long mid = lo + (hi - lo) / 2;
    TailPair a = tail_range(s, inv_w, inv_w2, lo, mid, order, prec);
    TailPair b = tail_range(s, inv_w, inv_w2, mid, hi, order, prec);
    TailPair out;
    out.R = add(a.R, mul(a.P, b.R, order, prec), order, prec);
    out.P = mul(a.P, b.P, order, prec);
    return out;
}

} // namespace

BallSeries tail_binary_split(const ComplexBall &s, const ComplexBall &a, const EMParams &p, int order, long prec)
{
    const ComplexBall w = add_si(a, static_cast<long>(p.N), prec);
    const ComplexBall L = log_of(w, prec);
    const BallSeries e(power_term(s, L, order, prec), order);
    BallSeries inner = BallSeries::constant(ComplexBall(RealBall::from_ratio(1, 2, prec)), order);
    if (p.M > 0) {
        // One table build instead of repeated cache growth inside the leaves.
        bernoulli_table(2 * p.M + 2);
        const ComplexBall inv_w = inv(w, prec);
        const ComplexBall inv_w2 = sqr(inv_w, prec);
        inner = add(inner, tail_range(s, inv_w, inv_w2, 0, p.M, order, prec).R, order, prec);
    }
    return mul(e, inner, order, prec);
}

BallSeries prefix_integral(const ComplexBall &s, const ComplexBall &a, unsigned long N, int order, long prec,
                           bool at_pole)
{
    const ComplexBall w = add_si(a, static_cast<long>(N), prec);
    const ComplexBall L = log_of(w, prec);
    if (at_pole) {
        if (!s.equals(1)) {
            throw std::invalid_argument("pole expansion requires s = 1 exactly");
        }
        std::vector<ComplexBall> c(static_cast<std::size_t>(order));
        const ComplexBall neg_l = -L;
        c[0] = neg_l;
        for (std::size_t i = 1; i < c.size(); ++i) {
            c[i] = div_si(mul(c[i - 1], neg_l, prec), static_cast<long>(i + 1), prec);
        }
        return BallSeries(std::move(c), order);
    }
    const ComplexBall sm1 = add_si(s, -1, prec);
    if (sm1.contains_zero()) {
        return full_series(order);
    }
    // (a+N)^(1-s-x) = (a+N) * (a+N)^-(s+x)
    BallSeries num(power_term(s, L, order, prec), order);
    num = scale(num, w, prec);
    return div(num, BallSeries({sm1, ComplexBall(1)}, order), order, prec);
}

namespace
{

void check_shift(const ComplexBall &a)
{
    if (!a.im().contains_zero()) {
        return;
    }
    if (!a.is_finite()) {
        throw std::domain_error("a must avoid 0, -1, -2, ...");
    }
    // Does [lo, hi] meet {0, -1, -2, ...}?
    BigFloat lo = a.re().lower(bound_prec);
    const BigFloat hi = a.re().upper(bound_prec);
    mpfr_ceil(lo.get(), lo.get());
    if (mpfr_cmp(lo.get(), hi.get()) <= 0 && mpfr_sgn(lo.get()) <= 0) {
        throw std::domain_error("a must avoid 0, -1, -2, ...");
    }
}

} // namespace

HurwitzResult hurwitz_series_ex(const ComplexBall &s, const ComplexBall &a, int order, long prec,
                                const HurwitzOptions &opts)
{
    if (order < 1) {
        throw std::invalid_argument("order must be at least 1");
    }
    if (prec < 2) {
        throw std::invalid_argument("precision must be at least 2 bits");
    }
    check_shift(a);
    if (opts.at_pole && !s.equals(1)) {
        throw std::invalid_argument("pole expansion requires s = 1 exactly");
    }
    HurwitzResult out;
    if (opts.force) {
        out.params = *opts.force;
        out.preconditions_ok = em_preconditions(s, a, out.params);
        out.target_reached = true;
    } else {
        const ParamSelection sel = select_params(s, a, prec, order, opts.at_pole);
        out.params = sel.params;
        out.preconditions_ok = sel.preconditions_ok;
        out.target_reached = sel.target_reached;
    }
    const EMParams &p = out.params;
    const long wp = prec + guard_bits(p.N, order);

    BallSeries S = a.equals(1) && order <= 4 ? power_sum_sieved(s, p.N, order, wp)
                                             : power_sum_direct(s, a, p.N, order, wp, opts.workers);
    BallSeries I = prefix_integral(s, a, p.N, order, wp, opts.at_pole);
    BallSeries T = tail_binary_split(s, a, p, order, wp);
    BallSeries sum = add(add(S, I, order, wp), T, order, wp);

    const std::vector<Mag> bound = remainder_bound_mags(s, a, p, order);
    const bool real = s.is_real() && a.is_real();
    std::vector<ComplexBall> c = sum.normalized();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (real && c[k].is_real()) {
            c[k].re().add_error(bound[k]);
        } else {
            c[k].add_error(bound[k]);
        }
    }
    out.value = BallSeries(std::move(c), order);
    return out;
}

BallSeries hurwitz_series(const ComplexBall &s, const ComplexBall &a, int order, long prec, bool at_pole,
                          std::optional<EMParams> force, int workers)
{
    HurwitzOptions opts;
    opts.at_pole = at_pole;
    opts.force = force;
    opts.workers = workers;
    return hurwitz_series_ex(s, a, order, prec, opts).value;
}

ComplexBall hurwitz_value(const ComplexBall &s, const ComplexBall &a, long prec)
{
    return hurwitz_series(s, a, 1, prec)[0];
}

} // namespace emz
