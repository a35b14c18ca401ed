#include <emz/series.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace emz
{

namespace
{

const ComplexBall &zero_ball()
{
    static const ComplexBall z(0);
    return z;
}

std::size_t clamp_len(std::size_t len, int order)
{
    return std::min(len, static_cast<std::size_t>(std::max(order, 0)));
}

// Accumulates sum a_k * b_k over RealBall pairs into an MPFR register,
// tracking rounding error and propagated radius separately.
class RealAccumulator
{
public:
    explicit RealAccumulator(long prec) : prec_(prec), acc_(prec), tmp_(prec) {}

    void set(const RealBall &init)
    {
        mpfr_set_prec(acc_.get(), prec_);
        if (mpfr_set(acc_.get(), init.mid().get(), MPFR_RNDN) != 0) {
            err_ = acc_.ulp(prec_);
        } else {
            err_ = Mag();
        }
        rad_ = init.rad();
    }

    void clear()
    {
        mpfr_set_zero(acc_.get(), 1);
        err_ = Mag();
        rad_ = Mag();
    }

    // acc += sign * a * b
    void add_product(const RealBall &a, const RealBall &b, bool negate)
    {
        if (a.is_zero() || b.is_zero()) {
            return;
        }
        if (!a.rad().is_zero() || !b.rad().is_zero()) {
            rad_ += a.mid().mag_upper() * b.rad() + b.mid().mag_upper() * a.rad() + a.rad() * b.rad();
        }
        if (a.mid().is_zero() || b.mid().is_zero()) {
            return;
        }
        if (mpfr_mul(tmp_.get(), a.mid().get(), b.mid().get(), MPFR_RNDN) != 0) {
            err_ += tmp_.ulp(prec_);
        }
        const int t = negate ? mpfr_sub(acc_.get(), acc_.get(), tmp_.get(), MPFR_RNDN)
                             : mpfr_add(acc_.get(), acc_.get(), tmp_.get(), MPFR_RNDN);
        if (t != 0) {
            err_ += acc_.ulp(prec_);
        }
    }

    RealBall result() const
    {
        if (!acc_.is_finite()) {
            return RealBall::full();
        }
        return RealBall(acc_, rad_ + err_);
    }

private:
    long prec_;
    BigFloat acc_;
    BigFloat tmp_;
    Mag err_;
    Mag rad_;
};

// Complex dot product sum_{k<len} a[k] * b[len-1-k] style access via
// index functions, accumulated as init + sum (or init - sum).
template <class A, class B>
ComplexBall complex_dot(const ComplexBall *init, bool negate, std::size_t len, A a, B b, bool real,
                        RealAccumulator &re, RealAccumulator &im)
{
    if (init != nullptr) {
        re.set(init->re());
        im.set(init->im());
    } else {
        re.clear();
        im.clear();
    }
    for (std::size_t k = 0; k < len; ++k) {
        const ComplexBall &x = a(k);
        const ComplexBall &y = b(k);
        re.add_product(x.re(), y.re(), negate);
        if (!real) {
            re.add_product(x.im(), y.im(), !negate);
            im.add_product(x.re(), y.im(), negate);
            im.add_product(x.im(), y.re(), negate);
        }
    }
    if (real && (init == nullptr || init->is_real())) {
        return ComplexBall(re.result());
    }
    return {re.result(), im.result()};
}

BallSeries full_series(int order)
{
    std::vector<ComplexBall> c(static_cast<std::size_t>(order), ComplexBall::full());
    return BallSeries(std::move(c), order);
}

} // namespace

BallSeries::BallSeries(int order) : order_(order)
{
    if (order < 1) {
        throw std::invalid_argument("series order must be at least 1");
    }
}

BallSeries::BallSeries(std::vector<ComplexBall> coeffs, int order) : c_(std::move(coeffs)), order_(order)
{
    if (order < 1) {
        throw std::invalid_argument("series order must be at least 1");
    }
    if (c_.size() > static_cast<std::size_t>(order)) {
        c_.resize(static_cast<std::size_t>(order));
    }
}

BallSeries BallSeries::constant(ComplexBall c, int order)
{
    return BallSeries({std::move(c)}, order);
}

BallSeries BallSeries::variable(ComplexBall c0, int order)
{
    return BallSeries({std::move(c0), ComplexBall(1)}, order);
}

const ComplexBall &BallSeries::operator[](std::size_t k) const
{
    return k < c_.size() ? c_[k] : zero_ball();
}

ComplexBall &BallSeries::at(std::size_t k)
{
    if (k >= static_cast<std::size_t>(order_)) {
        throw std::out_of_range("coefficient index beyond series order");
    }
    if (k >= c_.size()) {
        c_.resize(k + 1, ComplexBall(0));
    }
    return c_[k];
}

std::vector<ComplexBall> BallSeries::normalized() const
{
    std::vector<ComplexBall> out = c_;
    out.resize(static_cast<std::size_t>(order_), ComplexBall(0));
    return out;
}

bool BallSeries::is_real() const
{
    return std::all_of(c_.begin(), c_.end(), [](const ComplexBall &z) { return z.is_real(); });
}

BallSeries BallSeries::truncated(int order) const
{
    return BallSeries(std::vector<ComplexBall>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(clamp_len(c_.size(), order))), order);
}

void BallSeries::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

void BallSeries::add_error(std::size_t k, const Mag &err)
{
    at(k).add_error(err);
}

bool BallSeries::contains(const BallSeries &other) const
{
    const std::size_t n = std::max(c_.size(), other.c_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!(*this)[k].contains(other[k])) {
            return false;
        }
    }
    return true;
}

bool BallSeries::overlaps(const BallSeries &other) const
{
    const std::size_t n = std::max(c_.size(), other.c_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!(*this)[k].overlaps(other[k])) {
            return false;
        }
    }
    return true;
}

RealSeries::RealSeries(std::vector<RealBall> coeffs, int order) : c_(std::move(coeffs)), order_(order)
{
    c_.resize(static_cast<std::size_t>(order), RealBall(0));
}

BallSeries operator-(const BallSeries &f)
{
    std::vector<ComplexBall> c;
    c.reserve(f.length());
    for (const auto &z : f.coeffs()) {
        c.push_back(-z);
    }
    return BallSeries(std::move(c), f.order());
}

BallSeries add(const BallSeries &f, const BallSeries &g, int order, long prec)
{
    const std::size_t n = clamp_len(std::max(f.length(), g.length()), order);
    std::vector<ComplexBall> c;
    c.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k >= g.length()) {
            c.push_back(f[k].rounded(prec));
        } else if (k >= f.length()) {
            c.push_back(g[k].rounded(prec));
        } else {
            c.push_back(add(f[k], g[k], prec));
        }
    }
    return BallSeries(std::move(c), order);
}

BallSeries sub(const BallSeries &f, const BallSeries &g, int order, long prec)
{
    return add(f, -g, order, prec);
}

BallSeries add(const BallSeries &f, const BallSeries &g, long prec)
{
    return add(f, g, std::min(f.order(), g.order()), prec);
}

BallSeries sub(const BallSeries &f, const BallSeries &g, long prec)
{
    return sub(f, g, std::min(f.order(), g.order()), prec);
}

BallSeries scale(const BallSeries &f, const ComplexBall &c, long prec)
{
    std::vector<ComplexBall> out;
    out.reserve(f.length());
    for (const auto &z : f.coeffs()) {
        out.push_back(mul(z, c, prec));
    }
    return BallSeries(std::move(out), f.order());
}

BallSeries scale(const BallSeries &f, const RealBall &c, long prec)
{
    std::vector<ComplexBall> out;
    out.reserve(f.length());
    for (const auto &z : f.coeffs()) {
        out.push_back(mul(z, c, prec));
    }
    return BallSeries(std::move(out), f.order());
}

BallSeries mul(const BallSeries &f, const BallSeries &g, int order, long prec)
{
    const std::size_t lf = clamp_len(f.length(), order);
    const std::size_t lg = clamp_len(g.length(), order);
    if (lf == 0 || lg == 0) {
        return BallSeries(order);
    }
    const std::size_t len = clamp_len(lf + lg - 1, order);
    const bool real = f.is_real() && g.is_real();
    RealAccumulator re(prec);
    RealAccumulator im(prec);
    std::vector<ComplexBall> out;
    out.reserve(len);
    const auto &fc = f.coeffs();
    const auto &gc = g.coeffs();
    for (std::size_t n = 0; n < len; ++n) {
        const std::size_t lo = n + 1 > lg ? n + 1 - lg : 0;
        const std::size_t hi = std::min(n, lf - 1);
        out.push_back(complex_dot(
            nullptr, false, hi - lo + 1, [&](std::size_t k) -> const ComplexBall & { return fc[lo + k]; },
            [&](std::size_t k) -> const ComplexBall & { return gc[n - lo - k]; }, real, re, im));
    }
    return BallSeries(std::move(out), order);
}

BallSeries mul(const BallSeries &f, const BallSeries &g, long prec)
{
    return mul(f, g, std::min(f.order(), g.order()), prec);
}

BallSeries inv(const BallSeries &g, int order, long prec)
{
    if (order <= 0) {
        return BallSeries(order);
    }
    if (g.length() == 0 || g[0].contains_zero()) {
        return full_series(order);
    }
    // Newton doubling. For the exact low half H of 1/g,
    //   1/g = H - x^m H ((g H) div x^m)   mod x^2m,
    // so ball radii follow the size of 1/g instead of compounding through
    // the recurrence h_n = -(g_1 h_{n-1} + ...) / g_0.
    std::vector<ComplexBall> h{inv(g[0], prec)};
    h.reserve(static_cast<std::size_t>(order));
    std::size_t m = 1;
    const std::size_t n = static_cast<std::size_t>(order);
    while (m < n) {
        const std::size_t m2 = std::min(2 * m, n);
        const int hi_len = static_cast<int>(m2 - m);
        const BallSeries hs(h, static_cast<int>(m2));
        const BallSeries e = mul(g, hs, static_cast<int>(m2), prec);
        std::vector<ComplexBall> eh;
        for (std::size_t k = m; k < m2 && k < e.length(); ++k) {
            eh.push_back(e[k]);
        }
        const BallSeries t = mul(BallSeries(h, hi_len), BallSeries(std::move(eh), hi_len), hi_len, prec);
        for (std::size_t k = 0; k < m2 - m; ++k) {
            h.push_back(k < t.length() ? -t[k] : ComplexBall(0));
        }
        m = m2;
    }
    return BallSeries(std::move(h), order);
}

BallSeries div(const BallSeries &f, const BallSeries &g, int order, long prec)
{
    if (g.length() == 0 || g[0].contains_zero()) {
        return full_series(order);
    }
    if (clamp_len(g.length(), order) == 1) {
        const ComplexBall inv_g0 = inv(g[0], prec);
        std::vector<ComplexBall> h;
        for (std::size_t k = 0; k < clamp_len(f.length(), order); ++k) {
            h.push_back(mul(f[k], inv_g0, prec));
        }
        return BallSeries(std::move(h), order);
    }
    return mul(f, inv(g, order, prec), order, prec);
}

BallSeries derivative(const BallSeries &f)
{
    std::vector<ComplexBall> c;
    for (std::size_t k = 1; k < f.length(); ++k) {
        c.push_back(mul_si(f[k], static_cast<long>(k), f[k].re().mid().precision() + 64));
    }
    return BallSeries(std::move(c), f.order());
}

BallSeries integral(const BallSeries &f, int order, long prec)
{
    const std::size_t len = clamp_len(f.length() + 1, order);
    std::vector<ComplexBall> c;
    c.reserve(len);
    if (len > 0) {
        c.emplace_back(0);
    }
    for (std::size_t k = 1; k < len; ++k) {
        c.push_back(div_si(f[k - 1], static_cast<long>(k), prec));
    }
    return BallSeries(std::move(c), order);
}

BallSeries log(const BallSeries &f, int order, long prec)
{
    if (f.length() == 0) {
        return full_series(order);
    }
    const ComplexBall c0 = log(f[0], prec);
    if (!c0.is_finite()) {
        return full_series(order);
    }
    BallSeries r = integral(div(derivative(f), f, order - 1 > 0 ? order - 1 : 1, prec), order, prec);
    r.at(0) = c0;
    return r;
}

BallSeries exp(const BallSeries &f, int order, long prec)
{
    const ComplexBall g0 = exp(f[0], prec);
    const std::size_t lf = clamp_len(f.length(), order);
    if (lf <= 1) {
        return BallSeries::constant(g0, order);
    }
    // k f_k
    std::vector<ComplexBall> kf(lf);
    for (std::size_t k = 1; k < lf; ++k) {
        kf[k] = mul_si(f[k], static_cast<long>(k), prec);
    }
    const bool real = f.is_real();
    RealAccumulator re(prec);
    RealAccumulator im(prec);
    std::vector<ComplexBall> g;
    g.reserve(static_cast<std::size_t>(order));
    g.push_back(g0);
    for (std::size_t n = 1; n < static_cast<std::size_t>(order); ++n) {
        // g_n = (1/n) sum_{k=1}^{min(n, lf-1)} k f_k g_{n-k}
        const std::size_t top = std::min(n, lf - 1);
        ComplexBall s = complex_dot(
            nullptr, false, top, [&](std::size_t k) -> const ComplexBall & { return kf[k + 1]; },
            [&](std::size_t k) -> const ComplexBall & { return g[n - 1 - k]; }, real, re, im);
        g.push_back(div_si(s, static_cast<long>(n), prec));
    }
    return BallSeries(std::move(g), order);
}

BallSeries scale_variable(const BallSeries &f, const ComplexBall &c, long prec)
{
    std::vector<ComplexBall> out;
    out.reserve(f.length());
    ComplexBall p(1);
    for (std::size_t k = 0; k < f.length(); ++k) {
        out.push_back(k == 0 ? f[0] : mul(f[k], p, prec));
        p = mul(p, c, prec);
    }
    return BallSeries(std::move(out), f.order());
}

BallSeries scale_variable_i(const BallSeries &f)
{
    std::vector<ComplexBall> out;
    out.reserve(f.length());
    for (std::size_t k = 0; k < f.length(); ++k) {
        out.push_back(mul_i_pow(f[k], static_cast<int>(k % 4)));
    }
    return BallSeries(std::move(out), f.order());
}

RealSeries majorant(const BallSeries &f)
{
    std::vector<RealBall> c;
    c.reserve(f.length());
    for (const auto &z : f.coeffs()) {
        const Mag m = z.mag_upper();
        c.emplace_back(m.is_inf() ? RealBall::full() : RealBall(BigFloat::from_mag(m)));
    }
    return RealSeries(std::move(c), f.order());
}

RealSeries add(const RealSeries &f, const RealSeries &g, long prec)
{
    const int order = std::min(f.order(), g.order());
    std::vector<RealBall> c;
    for (std::size_t k = 0; k < static_cast<std::size_t>(order); ++k) {
        c.push_back(add(f[k], g[k], prec));
    }
    return RealSeries(std::move(c), order);
}

RealSeries mul(const RealSeries &f, const RealSeries &g, int order, long prec)
{
    std::vector<ComplexBall> fc(f.coeffs().begin(), f.coeffs().end());
    std::vector<ComplexBall> gc(g.coeffs().begin(), g.coeffs().end());
    const BallSeries p = mul(BallSeries(std::move(fc), order), BallSeries(std::move(gc), order), order, prec);
    std::vector<RealBall> c;
    for (std::size_t k = 0; k < static_cast<std::size_t>(order); ++k) {
        c.push_back(p[k].re());
    }
    return RealSeries(std::move(c), order);
}

BallSeries borel(const BallSeries &f, long prec)
{
    std::vector<ComplexBall> out;
    out.reserve(f.length());
    mpz_class fact = 1;
    for (std::size_t k = 0; k < f.length(); ++k) {
        if (k > 1) {
            fact *= static_cast<unsigned long>(k);
        }
        out.push_back(k < 2 ? f[k].rounded(prec) : div(f[k], RealBall::from_mpz(fact), prec));
    }
    return BallSeries(std::move(out), f.order());
}

BallSeries borel_inverse(const BallSeries &f, long prec)
{
    std::vector<ComplexBall> out;
    out.reserve(f.length());
    mpz_class fact = 1;
    for (std::size_t k = 0; k < f.length(); ++k) {
        if (k > 1) {
            fact *= static_cast<unsigned long>(k);
        }
        out.push_back(k < 2 ? f[k].rounded(prec) : mul(f[k], RealBall::from_mpz(fact), prec));
    }
    return BallSeries(std::move(out), f.order());
}

BallSeries binomial_transform(const BallSeries &f, int order, long prec)
{
    const std::size_t lf = clamp_len(f.length(), order);
    std::vector<ComplexBall> reflected;
    reflected.reserve(lf);
    for (std::size_t k = 0; k < lf; ++k) {
        reflected.push_back(k % 2 == 1 ? -f[k] : f[k]);
    }
    // Exponential series 1/k! as exact-rational roundings.
    std::vector<ComplexBall> e;
    e.reserve(static_cast<std::size_t>(order));
    mpz_class fact = 1;
    for (std::size_t k = 0; k < static_cast<std::size_t>(order); ++k) {
        if (k > 1) {
            fact *= static_cast<unsigned long>(k);
        }
        e.emplace_back(RealBall::from_mpq(mpq_class(mpz_class(1), fact), prec));
    }
    const BallSeries b = borel(BallSeries(std::move(reflected), order), prec);
    const BallSeries prod = mul(b, BallSeries(std::move(e), order), order, prec);
    return borel_inverse(prod, prec);
}

BallSeries compose_mobius(const BallSeries &f, int order, long prec)
{
    if (order == 1) {
        return BallSeries::constant(f[0], 1);
    }
    // (a_0 - f) / x has coefficients -a_{k+1}.
    std::vector<ComplexBall> q;
    for (std::size_t k = 1; k < clamp_len(f.length(), order); ++k) {
        q.push_back(-f[k]);
    }
    const BallSeries t = binomial_transform(BallSeries(std::move(q), order - 1), order - 1, prec);
    std::vector<ComplexBall> out;
    out.reserve(static_cast<std::size_t>(order));
    out.push_back(f[0]);
    for (std::size_t k = 0; k < t.length(); ++k) {
        out.push_back(t[k]);
    }
    return BallSeries(std::move(out), order);
}

} // namespace emz
