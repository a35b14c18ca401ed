#include <emz/real_ball.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace emz
{

namespace
{

// Precision used for radius-side computations on midpoints.
constexpr long bound_prec = 32;

Mag mag_of_ulong(unsigned long n)
{
    double d = static_cast<double>(n);
    if (d < static_cast<double>(n) || static_cast<unsigned long>(d) < n) {
        d = std::nextafter(d, std::numeric_limits<double>::infinity());
    }
    return Mag::from_double(d);
}

unsigned long abs_ul(long n)
{
    return n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
}

// Finalizes a result midpoint r computed with ternary value t.
RealBall finish(BigFloat &&r, Mag rad, int t, long prec)
{
    if (!r.is_finite() || rad.is_inf()) {
        return RealBall::full();
    }
    if (t != 0) {
        rad += r.ulp(prec);
    }
    return RealBall(std::move(r), rad);
}

// Exact difference a - b, falling back to an outward-rounded one when the
// exponent gap is too large to represent exactly.
BigFloat exact_difference(const BigFloat &a, const BigFloat &b, Round fallback)
{
    if (a.is_zero()) {
        return neg(b);
    }
    if (b.is_zero()) {
        return a;
    }
    const long gap = std::labs(a.exponent() - b.exponent());
    const long p = std::max(a.precision(), b.precision()) + gap + 2;
    if (gap < (1L << 20)) {
        BigFloat d(p);
        mpfr_sub(d.get(), a.get(), b.get(), MPFR_RNDN);
        return d;
    }
    BigFloat d(std::max(a.precision(), b.precision()) + 64);
    mpfr_sub(d.get(), a.get(), b.get(), to_mpfr(fallback));
    return d;
}

} // namespace

RealBall::RealBall(long value) : mid_(value, 64) {}

RealBall::RealBall(BigFloat mid, Mag rad) : mid_(std::move(mid)), rad_(rad)
{
    if (!mid_.is_finite()) {
        mid_ = BigFloat(2);
        rad_ = Mag::inf();
    }
}

RealBall RealBall::full()
{
    return RealBall(BigFloat(2), Mag::inf());
}

RealBall RealBall::from_mpz(const mpz_class &z)
{
    const long bits = std::max<long>(2, static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)));
    BigFloat r(bits);
    mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
    return RealBall(std::move(r));
}

RealBall RealBall::from_mpq(const mpq_class &q, long prec)
{
    BigFloat r(prec);
    const int t = mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    return finish(std::move(r), Mag(), t, prec);
}

RealBall RealBall::from_ratio(long p, long q, long prec)
{
    if (q == 0) {
        return full();
    }
    mpq_class r(p, 1);
    r /= q;
    return from_mpq(r, prec);
}

RealBall RealBall::from_decimal(std::string_view text, long prec)
{
    const BigFloat lo = BigFloat::parse(text, prec, Round::down);
    const BigFloat hi = BigFloat::parse(text, prec, Round::up);
    if (lo == hi) {
        return RealBall(lo);
    }
    return from_endpoints(lo, hi, prec);
}

RealBall RealBall::from_endpoints(const BigFloat &lo, const BigFloat &hi, long prec)
{
    if (!lo.is_finite() || !hi.is_finite() || hi < lo) {
        return full();
    }
    BigFloat m(prec + 1);
    mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    m.round_to(prec);
    BigFloat d1(bound_prec);
    BigFloat d2(bound_prec);
    mpfr_sub(d1.get(), hi.get(), m.get(), MPFR_RNDU);
    mpfr_sub(d2.get(), m.get(), lo.get(), MPFR_RNDU);
    Mag r = max(d1.sign() > 0 ? d1.mag_upper() : Mag(), d2.sign() > 0 ? d2.mag_upper() : Mag());
    return RealBall(std::move(m), r);
}

bool RealBall::contains_zero() const
{
    if (rad_.is_inf()) {
        return true;
    }
    return mpfr_cmpabs(mid_.get(), BigFloat::from_mag(rad_).get()) <= 0;
}

bool RealBall::is_positive() const
{
    return mid_.sign() > 0 && !rad_.is_inf() && mpfr_cmpabs(mid_.get(), BigFloat::from_mag(rad_).get()) > 0;
}

bool RealBall::is_negative() const
{
    return mid_.sign() < 0 && !rad_.is_inf() && mpfr_cmpabs(mid_.get(), BigFloat::from_mag(rad_).get()) > 0;
}

bool RealBall::is_nonnegative() const
{
    if (rad_.is_inf()) {
        return false;
    }
    if (mid_.is_zero()) {
        return rad_.is_zero();
    }
    return mid_.sign() > 0 && mpfr_cmpabs(mid_.get(), BigFloat::from_mag(rad_).get()) >= 0;
}

bool RealBall::equals(long n) const
{
    return rad_.is_zero() && mpfr_cmp_si(mid_.get(), n) == 0;
}

bool RealBall::contains(const BigFloat &x) const
{
    if (!x.is_finite()) {
        return false;
    }
    if (rad_.is_inf()) {
        return true;
    }
    const BigFloat d = exact_difference(x, mid_, Round::away);
    return mpfr_cmpabs(d.get(), BigFloat::from_mag(rad_).get()) <= 0;
}

bool RealBall::contains(const RealBall &other) const
{
    if (rad_.is_inf()) {
        return true;
    }
    if (other.rad_.is_inf() || other.rad_ > rad_) {
        return false;
    }
    const BigFloat d = exact_difference(other.mid_, mid_, Round::away);
    const Mag need = d.mag_upper() + other.rad_;
    return need <= rad_;
}

bool RealBall::overlaps(const RealBall &other) const
{
    if (rad_.is_inf() || other.rad_.is_inf()) {
        return true;
    }
    const BigFloat d = exact_difference(other.mid_, mid_, Round::toward_zero);
    const Mag room = Mag::add_lower(rad_, other.rad_);
    return mpfr_cmpabs(d.get(), BigFloat::from_mag(room).get()) <= 0;
}

Mag RealBall::mag_upper() const
{
    return mid_.mag_upper() + rad_;
}

Mag RealBall::mag_lower() const
{
    return Mag::sub_lower(mid_.mag_lower(), rad_);
}

BigFloat RealBall::lower(long prec) const
{
    if (rad_.is_inf()) {
        return BigFloat::inf(-1);
    }
    BigFloat r(prec);
    mpfr_sub(r.get(), mid_.get(), BigFloat::from_mag(rad_).get(), MPFR_RNDD);
    return r;
}

BigFloat RealBall::upper(long prec) const
{
    if (rad_.is_inf()) {
        return BigFloat::inf(1);
    }
    BigFloat r(prec);
    mpfr_add(r.get(), mid_.get(), BigFloat::from_mag(rad_).get(), MPFR_RNDU);
    return r;
}

RealBall RealBall::rounded(long prec) const
{
    BigFloat r(prec);
    const int t = mpfr_set(r.get(), mid_.get(), MPFR_RNDN);
    return finish(std::move(r), rad_, t, prec);
}

double RealBall::rel_accuracy_bits() const
{
    if (rad_.is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    if (rad_.is_inf()) {
        return -std::numeric_limits<double>::infinity();
    }
    if (mid_.is_zero()) {
        return -rad_.log2();
    }
    return mid_.mag_lower().log2() - rad_.log2();
}

std::string RealBall::to_string(int digits) const
{
    return mid_.to_string(digits) + " +/- " + BigFloat::from_mag(rad_).to_string(3);
}

RealBall operator-(const RealBall &x)
{
    return RealBall(neg(x.mid()), x.rad());
}

RealBall add(const RealBall &x, const RealBall &y, long prec)
{
    BigFloat r(prec);
    const int t = mpfr_add(r.get(), x.mid().get(), y.mid().get(), MPFR_RNDN);
    return finish(std::move(r), x.rad() + y.rad(), t, prec);
}

RealBall sub(const RealBall &x, const RealBall &y, long prec)
{
    BigFloat r(prec);
    const int t = mpfr_sub(r.get(), x.mid().get(), y.mid().get(), MPFR_RNDN);
    return finish(std::move(r), x.rad() + y.rad(), t, prec);
}

RealBall mul(const RealBall &x, const RealBall &y, long prec)
{
    if (x.is_zero() || y.is_zero()) {
        return RealBall(BigFloat(2));
    }
    BigFloat r(prec);
    const int t = mpfr_mul(r.get(), x.mid().get(), y.mid().get(), MPFR_RNDN);
    Mag rad = x.mid().mag_upper() * y.rad() + y.mid().mag_upper() * x.rad() + x.rad() * y.rad();
    return finish(std::move(r), rad, t, prec);
}

RealBall div(const RealBall &x, const RealBall &y, long prec)
{
    if (y.contains_zero()) {
        return RealBall::full();
    }
    BigFloat r(prec);
    const int t = mpfr_div(r.get(), x.mid().get(), y.mid().get(), MPFR_RNDN);
    Mag rad;
    if (!x.rad().is_zero() || !y.rad().is_zero()) {
        const Mag ym_lo = y.mid().mag_lower();
        const Mag num = x.rad() * y.mid().mag_upper() + x.mid().mag_upper() * y.rad();
        const Mag den = Mag::mul_lower(ym_lo, Mag::sub_lower(ym_lo, y.rad()));
        rad = Mag::div(num, den);
    }
    return finish(std::move(r), rad, t, prec);
}

RealBall sqr(const RealBall &x, long prec)
{
    BigFloat r(prec);
    const int t = mpfr_sqr(r.get(), x.mid().get(), MPFR_RNDN);
    Mag rad = (x.mid().mag_upper() * x.rad()).mul_2exp(1) + x.rad() * x.rad();
    return finish(std::move(r), rad, t, prec);
}

RealBall inv(const RealBall &x, long prec)
{
    return div(RealBall(1), x, prec);
}

RealBall mul_si(const RealBall &x, long n, long prec)
{
    BigFloat r(prec);
    const int t = mpfr_mul_si(r.get(), x.mid().get(), n, MPFR_RNDN);
    return finish(std::move(r), x.rad() * mag_of_ulong(abs_ul(n)), t, prec);
}

RealBall div_si(const RealBall &x, long n, long prec)
{
    if (n == 0) {
        return RealBall::full();
    }
    BigFloat r(prec);
    const int t = mpfr_div_si(r.get(), x.mid().get(), n, MPFR_RNDN);
    Mag rad;
    if (!x.rad().is_zero()) {
        double d = static_cast<double>(abs_ul(n));
        if (static_cast<unsigned long>(d) > abs_ul(n)) {
            d = std::nextafter(d, 0.0);
        }
        rad = Mag::div(x.rad(), Mag::lower_from_double(d));
    }
    return finish(std::move(r), rad, t, prec);
}

RealBall add_si(const RealBall &x, long n, long prec)
{
    BigFloat r(prec);
    const int t = mpfr_add_si(r.get(), x.mid().get(), n, MPFR_RNDN);
    return finish(std::move(r), x.rad(), t, prec);
}

RealBall mul_2exp(const RealBall &x, long k)
{
    return RealBall(emz::mul_2exp(x.mid(), k), x.rad().mul_2exp(k));
}

RealBall abs(const RealBall &x)
{
    if (!x.contains_zero()) {
        return RealBall(emz::abs(x.mid()), x.rad());
    }
    if (x.rad().is_inf()) {
        return RealBall::full();
    }
    BigFloat hi(bound_prec);
    mpfr_abs(hi.get(), x.mid().get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), BigFloat::from_mag(x.rad()).get(), MPFR_RNDU);
    mpfr_div_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
    const Mag r = hi.mag_upper();
    return RealBall(std::move(hi), r);
}

RealBall hull(const RealBall &x, const RealBall &y, long prec)
{
    BigFloat lo = x.lower(prec);
    BigFloat lo2 = y.lower(prec);
    BigFloat hi = x.upper(prec);
    BigFloat hi2 = y.upper(prec);
    return RealBall::from_endpoints(lo2 < lo ? lo2 : lo, hi2 > hi ? hi2 : hi, prec);
}

namespace
{

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f(mid) correctly rounded, plus rad * lipschitz for the input radius.
RealBall lipschitz_apply(const RealBall &x, long prec, UnaryFn fn, const Mag &lipschitz)
{
    if (x.rad().is_inf()) {
        return RealBall::full();
    }
    BigFloat r(prec);
    const int t = fn(r.get(), x.mid().get(), MPFR_RNDN);
    return finish(std::move(r), x.rad() * lipschitz, t, prec);
}

} // namespace

RealBall exp(const RealBall &x, long prec)
{
    Mag lipschitz;
    if (!x.rad().is_zero()) {
        BigFloat u = x.upper(bound_prec);
        mpfr_exp(u.get(), u.get(), MPFR_RNDU);
        lipschitz = u.mag_upper();
    }
    return lipschitz_apply(x, prec, mpfr_exp, lipschitz);
}

RealBall log(const RealBall &x, long prec)
{
    if (!x.is_positive()) {
        return RealBall::full();
    }
    Mag lipschitz;
    if (!x.rad().is_zero()) {
        lipschitz = Mag::div(Mag::pow2(0), x.mag_lower());
    }
    return lipschitz_apply(x, prec, mpfr_log, lipschitz);
}

RealBall sqrt(const RealBall &x, long prec)
{
    if (!x.is_nonnegative()) {
        return RealBall::full();
    }
    if (x.rad().is_zero()) {
        return lipschitz_apply(x, prec, mpfr_sqrt, Mag());
    }
    if (!x.is_positive()) {
        BigFloat hi = x.upper(prec);
        mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
        return RealBall::from_endpoints(BigFloat(2), hi, prec);
    }
    BigFloat lo = x.lower(bound_prec);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    const Mag lipschitz = Mag::div(Mag::pow2(-1), lo.mag_lower());
    return lipschitz_apply(x, prec, mpfr_sqrt, lipschitz);
}

RealBall atan(const RealBall &x, long prec)
{
    return lipschitz_apply(x, prec, mpfr_atan, Mag::pow2(0));
}

RealBall atanh(const RealBall &x, long prec)
{
    const Mag hi = x.mag_upper();
    if (!(hi < Mag::pow2(0))) {
        return RealBall::full();
    }
    Mag lipschitz;
    if (!x.rad().is_zero()) {
        BigFloat h = BigFloat::from_mag(hi);
        BigFloat one_minus(bound_prec);
        mpfr_sqr(h.get(), h.get(), MPFR_RNDU);
        mpfr_ui_sub(one_minus.get(), 1, h.get(), MPFR_RNDD);
        if (one_minus.sign() <= 0) {
            return RealBall::full();
        }
        lipschitz = Mag::div(Mag::pow2(0), one_minus.mag_lower());
    }
    return lipschitz_apply(x, prec, mpfr_atanh, lipschitz);
}

RealBall sin(const RealBall &x, long prec)
{
    return lipschitz_apply(x, prec, mpfr_sin, Mag::pow2(0));
}

RealBall cos(const RealBall &x, long prec)
{
    return lipschitz_apply(x, prec, mpfr_cos, Mag::pow2(0));
}

RealBall pow_ui(const RealBall &x, unsigned long n, long prec)
{
    RealBall result(1);
    RealBall base = x;
    while (n != 0) {
        if (n & 1UL) {
            result = mul(result, base, prec);
        }
        n >>= 1;
        if (n != 0) {
            base = sqr(base, prec);
        }
    }
    return result;
}

RealBall const_pi(long prec)
{
    BigFloat r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return finish(std::move(r), Mag(), 1, prec);
}

RealBall const_log2(long prec)
{
    BigFloat r(prec);
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return finish(std::move(r), Mag(), 1, prec);
}

RealBall log_ui(unsigned long n, long prec)
{
    if (n == 0) {
        return RealBall::full();
    }
    BigFloat r(prec);
    BigFloat nn(64);
    mpfr_set_ui(nn.get(), n, MPFR_RNDN);
    const int t = mpfr_log(r.get(), nn.get(), MPFR_RNDN);
    return finish(std::move(r), Mag(), t, prec);
}

} // namespace emz
