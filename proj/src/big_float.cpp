#include <emz/big_float.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace emz
{

mpfr_rnd_t to_mpfr(Round r)
{
    switch (r) {
        case Round::down:
            return MPFR_RNDD;
        case Round::up:
            return MPFR_RNDU;
        case Round::toward_zero:
            return MPFR_RNDZ;
        case Round::away:
            return MPFR_RNDA;
        case Round::nearest:
            break;
    }
    return MPFR_RNDN;
}

namespace
{

mpfr_prec_t clamp_prec(long prec)
{
    if (prec < MPFR_PREC_MIN) {
        return MPFR_PREC_MIN;
    }
    if (prec > MPFR_PREC_MAX) {
        throw std::invalid_argument("precision too large");
    }
    return static_cast<mpfr_prec_t>(prec);
}

} // namespace

BigFloat::BigFloat(long prec)
{
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long prec)
{
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    // Steal the limbs and leave other as a valid minimal-precision zero.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_set_zero(v_, 1);
    mpfr_swap(v_, other.v_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(v_);
}

BigFloat BigFloat::from_long(long value)
{
    return BigFloat(value, 64);
}

BigFloat BigFloat::from_double(double value)
{
    BigFloat r(53);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_mag(const Mag &m)
{
    BigFloat r(53);
    if (m.is_inf()) {
        mpfr_set_inf(r.v_, 1);
        return r;
    }
    mpfr_set_d(r.v_, m.mantissa(), MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, static_cast<long>(m.exponent()), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::inf(int sign)
{
    BigFloat r(MPFR_PREC_MIN);
    mpfr_set_inf(r.v_, sign);
    return r;
}

BigFloat BigFloat::nan()
{
    BigFloat r(MPFR_PREC_MIN);
    mpfr_set_nan(r.v_);
    return r;
}

BigFloat BigFloat::parse(std::string_view text, long prec, Round rnd)
{
    BigFloat r(prec);
    const std::string s(text);
    char *end = nullptr;
    mpfr_strtofr(r.v_, s.c_str(), &end, 0, to_mpfr(rnd));
    if (end == s.c_str() || *end != '\0') {
        throw std::invalid_argument("invalid number: " + s);
    }
    return r;
}

void BigFloat::round_to(long prec)
{
    mpfr_prec_round(v_, clamp_prec(prec), MPFR_RNDN);
}

Mag BigFloat::mag_upper() const
{
    if (is_zero()) {
        return Mag();
    }
    if (!is_finite()) {
        return Mag::inf();
    }
    long e = 0;
    const double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDA);
    return Mag::from_double(d).mul_2exp(e);
}

Mag BigFloat::mag_lower() const
{
    if (is_zero() || is_nan()) {
        return Mag();
    }
    if (is_inf()) {
        return Mag::pow2(Mag::max_exp - 1);
    }
    long e = 0;
    const double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDZ);
    return Mag::lower_from_double(d).mul_2exp(e);
}

Mag BigFloat::ulp(long prec) const
{
    if (is_zero()) {
        return Mag();
    }
    if (!is_finite()) {
        return Mag::inf();
    }
    return Mag::pow2(static_cast<std::int64_t>(exponent()) - prec);
}

std::string BigFloat::to_string(int digits) const
{
    if (is_nan()) {
        return "nan";
    }
    if (is_inf()) {
        return sign() > 0 ? "inf" : "-inf";
    }
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat add(const BigFloat &a, const BigFloat &b, long prec, Round rnd)
{
    BigFloat r(prec);
    mpfr_add(r.get(), a.get(), b.get(), to_mpfr(rnd));
    return r;
}

BigFloat sub(const BigFloat &a, const BigFloat &b, long prec, Round rnd)
{
    BigFloat r(prec);
    mpfr_sub(r.get(), a.get(), b.get(), to_mpfr(rnd));
    return r;
}

BigFloat mul(const BigFloat &a, const BigFloat &b, long prec, Round rnd)
{
    BigFloat r(prec);
    mpfr_mul(r.get(), a.get(), b.get(), to_mpfr(rnd));
    return r;
}

BigFloat div(const BigFloat &a, const BigFloat &b, long prec, Round rnd)
{
    BigFloat r(prec);
    mpfr_div(r.get(), a.get(), b.get(), to_mpfr(rnd));
    return r;
}

BigFloat sqrt(const BigFloat &a, long prec, Round rnd)
{
    BigFloat r(prec);
    mpfr_sqrt(r.get(), a.get(), to_mpfr(rnd));
    return r;
}

BigFloat neg(const BigFloat &a)
{
    BigFloat r(a.precision());
    mpfr_neg(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat &a)
{
    BigFloat r(a.precision());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat mul_2exp(const BigFloat &a, long k)
{
    BigFloat r(a.precision());
    mpfr_mul_2si(r.get(), a.get(), k, MPFR_RNDN);
    return r;
}

} // namespace emz
