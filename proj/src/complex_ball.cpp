#include <emz/complex_ball.hpp>

namespace emz
{

Mag ComplexBall::mag_upper() const
{
    if (is_real()) {
        return re_.mag_upper();
    }
    const Mag a = re_.mag_upper();
    const Mag b = im_.mag_upper();
    return Mag::sqrt_upper(a * a + b * b);
}

Mag ComplexBall::mag_lower() const
{
    if (is_real()) {
        return re_.mag_lower();
    }
    const Mag a = re_.mag_lower();
    const Mag b = im_.mag_lower();
    return Mag::sqrt_lower(Mag::add_lower(Mag::mul_lower(a, a), Mag::mul_lower(b, b)));
}

std::string ComplexBall::to_string(int digits) const
{
    return "(" + re_.to_string(digits) + ") + (" + im_.to_string(digits) + ")i";
}

ComplexBall operator-(const ComplexBall &z)
{
    return {-z.re(), -z.im()};
}

ComplexBall conj(const ComplexBall &z)
{
    return {z.re(), -z.im()};
}

ComplexBall add(const ComplexBall &x, const ComplexBall &y, long prec)
{
    return {add(x.re(), y.re(), prec), add(x.im(), y.im(), prec)};
}

ComplexBall sub(const ComplexBall &x, const ComplexBall &y, long prec)
{
    return {sub(x.re(), y.re(), prec), sub(x.im(), y.im(), prec)};
}

ComplexBall mul(const ComplexBall &x, const RealBall &y, long prec)
{
    return {mul(x.re(), y, prec), mul(x.im(), y, prec)};
}

ComplexBall mul(const ComplexBall &x, const ComplexBall &y, long prec)
{
    if (y.is_real()) {
        return mul(x, y.re(), prec);
    }
    if (x.is_real()) {
        return mul(y, x.re(), prec);
    }
    const RealBall ac = mul(x.re(), y.re(), prec);
    const RealBall bd = mul(x.im(), y.im(), prec);
    const RealBall ad = mul(x.re(), y.im(), prec);
    const RealBall bc = mul(x.im(), y.re(), prec);
    return {sub(ac, bd, prec), add(ad, bc, prec)};
}

ComplexBall div(const ComplexBall &x, const RealBall &y, long prec)
{
    return {div(x.re(), y, prec), div(x.im(), y, prec)};
}

ComplexBall div(const ComplexBall &x, const ComplexBall &y, long prec)
{
    if (y.is_real()) {
        return div(x, y.re(), prec);
    }
    if (y.contains_zero()) {
        return ComplexBall::full();
    }
    const RealBall den = add(sqr(y.re(), prec), sqr(y.im(), prec), prec);
    return div(mul(x, conj(y), prec), den, prec);
}

ComplexBall inv(const ComplexBall &x, long prec)
{
    return div(ComplexBall(1), x, prec);
}

ComplexBall sqr(const ComplexBall &x, long prec)
{
    if (x.is_real()) {
        return {sqr(x.re(), prec)};
    }
    const RealBall re = sub(sqr(x.re(), prec), sqr(x.im(), prec), prec);
    const RealBall im = mul_2exp(mul(x.re(), x.im(), prec), 1);
    return {re, im};
}

ComplexBall mul_si(const ComplexBall &x, long n, long prec)
{
    return {mul_si(x.re(), n, prec), mul_si(x.im(), n, prec)};
}

ComplexBall div_si(const ComplexBall &x, long n, long prec)
{
    return {div_si(x.re(), n, prec), div_si(x.im(), n, prec)};
}

ComplexBall add_si(const ComplexBall &x, long n, long prec)
{
    return {add_si(x.re(), n, prec), x.im()};
}

ComplexBall mul_2exp(const ComplexBall &x, long k)
{
    return {mul_2exp(x.re(), k), mul_2exp(x.im(), k)};
}

ComplexBall mul_i_pow(const ComplexBall &x, int k)
{
    switch (((k % 4) + 4) % 4) {
        case 1:
            return {-x.im(), x.re()};
        case 2:
            return -x;
        case 3:
            return {x.im(), -x.re()};
        default:
            return x;
    }
}

ComplexBall exp(const ComplexBall &z, long prec)
{
    if (z.is_real()) {
        return {exp(z.re(), prec)};
    }
    const RealBall m = exp(z.re(), prec);
    return {mul(m, cos(z.im(), prec), prec), mul(m, sin(z.im(), prec), prec)};
}

RealBall arg(const ComplexBall &z, long prec)
{
    if (z.re().is_positive()) {
        if (z.is_real()) {
            return RealBall(0);
        }
        return atan(div(z.im(), z.re(), prec), prec);
    }
    if (z.im().is_positive()) {
        const RealBall half_pi = mul_2exp(const_pi(prec), -1);
        return sub(half_pi, atan(div(z.re(), z.im(), prec), prec), prec);
    }
    if (z.im().is_negative()) {
        const RealBall half_pi = mul_2exp(const_pi(prec), -1);
        return sub(-half_pi, atan(div(z.re(), z.im(), prec), prec), prec);
    }
    if (z.is_real() && z.re().is_negative()) {
        return const_pi(prec);
    }
    return RealBall::full();
}

RealBall abs(const ComplexBall &z, long prec)
{
    if (z.is_real()) {
        return abs(z.re());
    }
    return sqrt(add(sqr(z.re(), prec), sqr(z.im(), prec), prec), prec);
}

ComplexBall log(const ComplexBall &z, long prec)
{
    if (z.is_real()) {
        if (z.re().is_positive()) {
            return {log(z.re(), prec)};
        }
        if (z.re().is_negative()) {
            return {log(-z.re(), prec), const_pi(prec)};
        }
        return ComplexBall::full();
    }
    RealBall im = arg(z, prec);
    if (!im.is_finite()) {
        return ComplexBall::full();
    }
    const RealBall norm = add(sqr(z.re(), prec), sqr(z.im(), prec), prec);
    return {mul_2exp(log(norm, prec), -1), std::move(im)};
}

ComplexBall pow(const ComplexBall &z, const ComplexBall &w, long prec)
{
    if (w.is_zero()) {
        return ComplexBall(1);
    }
    const ComplexBall l = log(z, prec);
    if (!l.is_finite()) {
        return ComplexBall::full();
    }
    return exp(mul(w, l, prec), prec);
}

namespace
{

ComplexBall rising_range(const ComplexBall &s, unsigned long lo, unsigned long hi, long prec)
{
    if (hi - lo <= 4) {
        ComplexBall r = add_si(s, static_cast<long>(lo), prec);
        for (unsigned long j = lo + 1; j < hi; ++j) {
            r = mul(r, add_si(s, static_cast<long>(j), prec), prec);
        }
        return r;
    }
    const unsigned long m = lo + (hi - lo) / 2;
    return mul(rising_range(s, lo, m, prec), rising_range(s, m, hi, prec), prec);
}

} // namespace

ComplexBall rising_factorial(const ComplexBall &s, unsigned long n, long prec)
{
    if (n == 0) {
        return ComplexBall(1);
    }
    return rising_range(s, 0, n, prec);
}

} // namespace emz
