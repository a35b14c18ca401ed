#include <emz/bernoulli.hpp>
#include <emz/em_zeta.hpp>
#include <emz/zero_refine.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>

namespace emz
{

namespace
{

BallSeries full_series(int order)
{
    return BallSeries(std::vector<ComplexBall>(static_cast<std::size_t>(order), ComplexBall::full()), order);
}

Mag mag_pow(Mag base, unsigned long e)
{
    Mag r = Mag::pow2(0);
    for (; e != 0; e >>= 1) {
        if (e & 1UL) {
            r *= base;
        }
        base = base * base;
    }
    return r;
}

double log2_of(const BigFloat &x)
{
    long e = 0;
    const double d = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
    return std::log2(std::fabs(d)) + static_cast<double>(e);
}

// Shrinks a positive double a little so it is a safe lower bound after the
// double arithmetic that produced it.
double shade_down(double x)
{
    return x * (1.0 - 1e-12);
}

// Stirling remainder after K - 1 terms, bounded at every u with |u| >= m
// and cos^2(arg u / 2) >= cos2:
//   |B_2K| / (2K (2K-1) m^(2K-1) cos2^K)
Mag stirling_remainder(unsigned long K, double m, double cos2)
{
    const Mag b = bernoulli_ball(2 * K, 64).mag_upper();
    const Mag denom = Mag::lower_from_double(static_cast<double>(2 * K) * static_cast<double>(2 * K - 1));
    const Mag inv_m = Mag::div(Mag::pow2(0), Mag::lower_from_double(m));
    const Mag inv_c = Mag::div(Mag::pow2(0), Mag::lower_from_double(cos2));
    return Mag::div(b, denom) * mag_pow(inv_m, 2 * K - 1) * mag_pow(inv_c, K);
}

double stirling_remainder_log2(unsigned long K, double m, double cos2)
{
    const double k2 = 2.0 * static_cast<double>(K);
    return 1.0 + std::lgamma(k2 + 1.0) / std::log(2.0) - k2 * std::log2(2.0 * M_PI) - std::log2(k2 * (k2 - 1.0)) -
           (k2 - 1.0) * std::log2(m) - static_cast<double>(K) * std::log2(cos2);
}

// sum_{j<r} log(z + j) with the principal branch of each term, from one
// logarithm of the product. The product is rotated by the midpoint phi of
// the summed arguments first; once |sum arg - phi| < pi is certified, the
// principal log of the rotated product plus i phi is exact, with no branch
// cut in the way even for wide z.
ComplexBall shifted_log_sum(const ComplexBall &z, unsigned long r, long prec)
{
    if (z.is_real()) {
        RealBall prod(1);
        for (unsigned long j = 0; j < r; ++j) {
            prod = mul(prod, add_si(z.re(), static_cast<long>(j), prec), prec);
        }
        return ComplexBall(log(prod, prec));
    }
    // Multiplying complex boxes directly inflates the radius by wrapping at
    // every step, so multiply midpoints and bound the perturbation as
    //   |prod(m_j + e_j) - prod m_j| <= |prod m_j| (exp(S) - 1) <= 2 S |prod m_j|,
    // S = sum |e_j| / |m_j| <= 1.
    const ComplexBall zm(RealBall(z.re().mid()), RealBall(z.im().mid()));
    const Mag zr = z.re().rad() + z.im().rad();
    ComplexBall prod(1);
    Mag S;
    for (unsigned long j = 0; j < r; ++j) {
        const ComplexBall f = add_si(zm, static_cast<long>(j), prec);
        prod = mul(prod, f, prec);
        S += Mag::div(zr, f.mag_lower());
    }
    if (!(S <= Mag::pow2(0))) {
        return ComplexBall::full();
    }
    prod.add_error(S.mul_2exp(1) * prod.mag_upper());
    RealBall args(0);
    for (unsigned long j = 0; j < r; ++j) {
        args = add(args, arg(add_si(z, static_cast<long>(j), 64), 64), 64);
    }
    if (!args.is_finite()) {
        return ComplexBall::full();
    }
    const RealBall phi(args.mid());
    const RealBall off = sub(args, phi, 64);
    if (!(off.mag_upper() < Mag::from_double(3.0))) {
        return ComplexBall::full();
    }
    const ComplexBall rot = exp(ComplexBall(RealBall(0), -phi), prec);
    ComplexBall L = log(mul(prod, rot, prec), prec);
    L.im() = add(L.im(), phi, prec);
    return L;
}

} // namespace

BallSeries log_gamma_series(const ComplexBall &z, int order, long prec)
{
    if (order < 1) {
        throw std::invalid_argument("order must be at least 1");
    }
    if (!z.is_finite() || z.re().lower(64).sign() <= 0) {
        return full_series(order);
    }
    const long wp = prec + 32;
    const double r0 = std::max(12.0, static_cast<double>(prec) / 4.0);
    const double re_lo = z.re().lower(64).to_double();
    const auto r = re_lo >= r0 ? 0UL : static_cast<unsigned long>(std::ceil(r0 - re_lo));
    const ComplexBall w = add_si(z, static_cast<long>(r), wp);

    // Remainder bounds over the disk |u - w| <= rho; a plain value needs no disk.
    const double rho = order == 1 ? 0.0 : 1.0;
    const double w_lo = w.mag_lower().to_double();
    const double w_hi = w.mag_upper().to_double() * (1.0 + 1e-12);
    const double wre_lo = w.re().lower(64).to_double();
    const double m = shade_down(w_lo - rho);
    const double cos2 = shade_down((1.0 + shade_down((wre_lo - rho) / (w_hi + rho))) / 2.0);
    const double target = -static_cast<double>(prec) - 12.0;
    unsigned long K = 1;
    for (double best = 1e300;; ++K) {
        const double e = stirling_remainder_log2(K, m, cos2);
        if (e <= target || e > best || K > 1000000) {
            break;
        }
        best = e;
    }
    bernoulli_table(2 * K);
    const Mag remainder = stirling_remainder(K, m, cos2);

    const auto D = static_cast<std::size_t>(order);
    const BallSeries u({w, ComplexBall(1)}, order);
    const BallSeries Lu = log(u, order, wp);
    const ComplexBall half_log_2pi(mul_2exp(log(mul_2exp(const_pi(wp), 1), wp), -1));
    BallSeries main = mul(add(u, BallSeries::constant(ComplexBall(RealBall::from_ratio(-1, 2, wp)), order), order, wp),
                          Lu, order, wp);
    main = sub(main, u, order, wp);
    main = add(main, BallSeries::constant(half_log_2pi, order), order, wp);

    // sum_{k<K} B_2k/(2k(2k-1)) (w+y)^(1-2k), coefficientwise
    const ComplexBall winv = inv(w, wp);
    const ComplexBall winv2 = sqr(winv, wp);
    std::vector<ComplexBall> wi(D, ComplexBall(1));
    for (std::size_t i = 1; i < D; ++i) {
        wi[i] = mul(wi[i - 1], winv, wp);
    }
    std::vector<ComplexBall> acc(D, ComplexBall(0));
    ComplexBall wpow = winv;
    for (unsigned long k = 1; k < K; ++k) {
        if (k > 1) {
            wpow = mul(wpow, winv2, wp);
        }
        const mpq_class c = bernoulli(2 * k) / mpq_class(static_cast<long>(2 * k * (2 * k - 1)));
        const ComplexBall t = mul(wpow, RealBall::from_mpq(c, wp), wp);
        for (std::size_t i = 0; i < D; ++i) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), 2 * k - 2 + i, i);
            if (i % 2 == 1) {
                b = -b;
            }
            const ComplexBall term = i == 0 ? t : mul(mul(t, wi[i], wp), RealBall::from_mpz(b), wp);
            acc[i] = add(acc[i], term, wp);
        }
    }
    Mag err = remainder;
    for (std::size_t i = 0; i < D; ++i) {
        if (z.is_real()) {
            acc[i].re().add_error(err);
        } else {
            acc[i].add_error(err);
        }
    }
    BallSeries out = add(main, BallSeries(std::move(acc), order), order, wp);

    if (r > 0) {
        // log Gamma(z + y) = log Gamma(w + y) - sum_j log(z + j + y)
        std::vector<ComplexBall> shift(D, ComplexBall(0));
        shift[0] = shifted_log_sum(z, r, wp);
        if (D > 1) {
            for (unsigned long j = 0; j < r; ++j) {
                const ComplexBall v = inv(add_si(z, static_cast<long>(j), wp), wp);
                ComplexBall p = v;
                for (std::size_t i = 1; i < D; ++i) {
                    if (i > 1) {
                        p = mul(p, v, wp);
                    }
                    shift[i] = add(shift[i], p, wp);
                }
            }
            for (std::size_t i = 1; i < D; ++i) {
                shift[i] = div_si(shift[i], i % 2 == 1 ? static_cast<long>(i) : -static_cast<long>(i), wp);
            }
        }
        out = sub(out, BallSeries(std::move(shift), order), order, wp);
    }
    return out;
}

ComplexBall log_gamma(const ComplexBall &z, long prec)
{
    return log_gamma_series(z, 1, prec)[0];
}

BallSeries theta(const RealBall &t, int order, long prec)
{
    const long wp = prec + 16;
    const ComplexBall z(RealBall::from_ratio(1, 4, wp), mul_2exp(t, -1));
    const BallSeries g = log_gamma_series(z, order, wp);
    // logGamma(1/4 - i(t+x)/2) is the conjugate jet of logGamma(1/4 + i(t+x)/2)
    // for real t, so the difference over 2i is the imaginary part.
    const RealBall half_log_pi = mul_2exp(log(const_pi(wp), wp), -1);
    std::vector<ComplexBall> c(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        const ComplexBall v = mul_2exp(mul_i_pow(g[static_cast<std::size_t>(k)], k), -k);
        RealBall im = v.im();
        if (k == 0) {
            im = sub(im, mul(half_log_pi, t, wp), wp);
        } else if (k == 1) {
            im = sub(im, half_log_pi, wp);
        }
        c[static_cast<std::size_t>(k)] = ComplexBall(im);
    }
    return BallSeries(std::move(c), order);
}

BallSeries hardy_z(const RealBall &t, int order, long prec, int workers)
{
    const long wp = prec + 16;
    const BallSeries th = theta(t, order, wp);
    std::vector<ComplexBall> ith(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        ith[static_cast<std::size_t>(k)] = mul_i_pow(th[static_cast<std::size_t>(k)], 1);
    }
    const BallSeries e = exp(BallSeries(std::move(ith), order), order, wp);
    const ComplexBall s(RealBall::from_ratio(1, 2, wp), t);
    const BallSeries zeta = scale_variable_i(hurwitz_series(s, ComplexBall(1), order, wp, false, std::nullopt, workers));
    const BallSeries prod = mul(e, zeta, order, wp);
    std::vector<ComplexBall> out(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        const ComplexBall &c = prod[static_cast<std::size_t>(k)];
        if (!c.im().contains_zero()) {
            throw std::logic_error("Z(t) jet has a nonzero imaginary part");
        }
        out[static_cast<std::size_t>(k)] = ComplexBall(c.re());
    }
    return BallSeries(std::move(out), order);
}

RealBall IsolatingInterval::ball() const
{
    return RealBall(m, eps.mag_upper());
}

IsolatingInterval IsolatingInterval::from_endpoints(double lo, double hi)
{
    if (!(lo < hi)) {
        throw std::invalid_argument("interval endpoints must satisfy lo < hi");
    }
    IsolatingInterval out{BigFloat(128), BigFloat(64)};
    mpfr_set_d(out.m.get(), lo, MPFR_RNDN);
    mpfr_add_d(out.m.get(), out.m.get(), hi, MPFR_RNDN);
    mpfr_div_2ui(out.m.get(), out.m.get(), 1, MPFR_RNDN);
    BigFloat a(128);
    mpfr_sub_d(a.get(), out.m.get(), lo, MPFR_RNDU);
    BigFloat b(128);
    mpfr_d_sub(b.get(), hi, out.m.get(), MPFR_RNDU);
    mpfr_max(out.eps.get(), a.get(), b.get(), MPFR_RNDU);
    return out;
}

RealBall newton_constant(const IsolatingInterval &b0)
{
    const long prec = 96;
    const RealBall whole = b0.ball();
    const BigFloat lo = whole.lower(prec + 64);
    const BigFloat hi = whole.upper(prec + 64);
    // Subdivide until C eps <= 1/4 so the first Newton steps contract;
    // wide pieces overestimate |Z''| and underestimate |Z'|.
    const Mag quarter_over_eps = Mag::div(Mag::pow2(-2), b0.eps.mag_upper());
    std::optional<Mag> best;
    for (int pieces = 1; pieces <= 256; pieces *= 2) {
        Mag top;
        Mag bottom = Mag::inf();
        bool ok = true;
        for (int i = 0; i < pieces && ok; ++i) {
            BigFloat a(prec + 64);
            BigFloat b(prec + 64);
            // a = lo + (hi - lo) i / pieces, rounded outward
            mpfr_sub(a.get(), hi.get(), lo.get(), MPFR_RNDU);
            mpfr_mul_ui(b.get(), a.get(), static_cast<unsigned long>(i + 1), MPFR_RNDU);
            mpfr_div_ui(b.get(), b.get(), static_cast<unsigned long>(pieces), MPFR_RNDU);
            mpfr_add(b.get(), b.get(), lo.get(), MPFR_RNDU);
            mpfr_mul_ui(a.get(), a.get(), static_cast<unsigned long>(i), MPFR_RNDD);
            mpfr_div_ui(a.get(), a.get(), static_cast<unsigned long>(pieces), MPFR_RNDD);
            mpfr_add(a.get(), a.get(), lo.get(), MPFR_RNDD);
            const BallSeries j = hardy_z(RealBall::from_endpoints(a, b, prec), 3, prec);
            const Mag d1 = j[1].re().mag_lower();
            const Mag d2 = j[2].re().mag_upper();
            ok = !d1.is_zero() && !d2.is_inf();
            top = max(top, d2);
            bottom = d1 < bottom ? d1 : bottom;
        }
        if (ok) {
            // max|Z''| / (2 min|Z'|) with Z'' = 2 c_2
            const Mag C = Mag::div(top, bottom);
            if (C <= quarter_over_eps) {
                return RealBall(BigFloat::from_mag(C));
            }
            best = best && *best <= C ? *best : C;
        }
    }
    if (best) {
        return RealBall(BigFloat::from_mag(*best));
    }
    throw RefinementError("Z' is not bounded away from 0 on the isolating interval; supply a tighter interval");
}

RefineResult refine_zero_ex(const IsolatingInterval &b0, long target_prec, int workers)
{
    if (target_prec < 1) {
        throw std::invalid_argument("target precision must be positive");
    }
    const long guard = 20 + static_cast<long>(std::ceil(std::log2(static_cast<double>(target_prec) + 2.0))) + 1;
    const long full = target_prec + guard;
    const BigFloat C = newton_constant(b0).upper(64);

    RefineResult out;
    BigFloat m = b0.m;
    BigFloat eps = b0.eps;
    BigFloat goal(64);
    mpfr_set_ui_2exp(goal.get(), 1, -target_prec, MPFR_RNDN);
    for (int iter = 0; mpfr_cmp(eps.get(), goal.get()) > 0; ++iter) {
        if (iter > 200) {
            throw RefinementError("refinement did not converge; supply a tighter interval or more precision");
        }
        const double bits_now = -log2_of(eps);
        long wp = std::max<long>(64, static_cast<long>(std::ceil(2.0 * bits_now)) + 2 * guard);
        if (wp >= full / 2 + guard) {
            wp = std::max(wp, full);
        }
        wp = std::min(wp, full);
        if (wp == full) {
            ++out.full_precision_evals;
        }

        const BallSeries jet = hardy_z(RealBall(m), 2, wp, workers);
        const RealBall q = div(jet[0].re(), jet[1].re(), wp);
        const RealBall next = sub(RealBall(m), q, wp);
        if (!next.is_finite()) {
            throw RefinementError("Newton step is not finite; supply a tighter interval or more precision");
        }
        BigFloat eps_new(64);
        mpfr_mul(eps_new.get(), eps.get(), eps.get(), MPFR_RNDU);
        mpfr_mul(eps_new.get(), eps_new.get(), C.get(), MPFR_RNDU);
        const BigFloat err = BigFloat::from_mag(next.rad());
        mpfr_add(eps_new.get(), eps_new.get(), err.get(), MPFR_RNDU);

        // New interval inside the old one?
        const long cp = std::max<long>(wp, static_cast<long>(mpfr_get_prec(m.get()))) + 64;
        BigFloat new_lo(cp);
        BigFloat new_hi(cp);
        BigFloat old_lo(cp);
        BigFloat old_hi(cp);
        mpfr_sub(new_lo.get(), next.mid().get(), eps_new.get(), MPFR_RNDD);
        mpfr_add(new_hi.get(), next.mid().get(), eps_new.get(), MPFR_RNDU);
        mpfr_sub(old_lo.get(), m.get(), eps.get(), MPFR_RNDU);
        mpfr_add(old_hi.get(), m.get(), eps.get(), MPFR_RNDD);
        if (mpfr_cmp(new_lo.get(), old_lo.get()) < 0 || mpfr_cmp(new_hi.get(), old_hi.get()) > 0) {
            throw RefinementError("Newton step left the previous interval; supply a tighter interval or more precision");
        }
        if (mpfr_cmp(eps_new.get(), eps.get()) >= 0) {
            throw RefinementError("Newton radius is not contracting; increase the working precision");
        }
        m = next.mid();
        eps = eps_new;
        out.steps.push_back(NewtonStep{wp, log2_of(eps)});
    }
    out.interval = IsolatingInterval{m, eps};
    return out;
}

IsolatingInterval refine_zero(const IsolatingInterval &b0, long target_prec, int workers)
{
    return refine_zero_ex(b0, target_prec, workers).interval;
}

RealBall certify_zero(const IsolatingInterval &z, long prec, int workers)
{
    return hardy_z(z.ball(), 1, prec, workers)[0].re();
}

} // namespace emz
