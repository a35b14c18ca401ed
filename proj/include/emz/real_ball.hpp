#ifndef EMZ_REAL_BALL_HPP
#define EMZ_REAL_BALL_HPP

#include <emz/big_float.hpp>
#include <emz/mag.hpp>

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace emz
{

// Midpoint-radius enclosure [mid - rad, mid + rad] of a real number.
// rad = +inf encodes "no information". Invalid operations never throw:
// they return a ball with infinite radius.
class RealBall
{
public:
    RealBall() : mid_(2) {}
    RealBall(long value);
    RealBall(BigFloat mid, Mag rad = Mag());

    static RealBall full();
    static RealBall from_mpz(const mpz_class &z);
    static RealBall from_mpq(const mpq_class &q, long prec);
    static RealBall from_ratio(long p, long q, long prec);
    // Enclosure of a decimal literal such as "14.1347" or "-2.5e-3".
    static RealBall from_decimal(std::string_view text, long prec);
    // Smallest ball containing both endpoints.
    static RealBall from_endpoints(const BigFloat &lo, const BigFloat &hi, long prec);

    const BigFloat &mid() const { return mid_; }
    BigFloat &mid() { return mid_; }
    const Mag &rad() const { return rad_; }
    Mag &rad() { return rad_; }

    bool is_exact() const { return rad_.is_zero() && mid_.is_finite(); }
    bool is_zero() const { return rad_.is_zero() && mid_.is_zero(); }
    bool is_finite() const { return rad_.is_finite() && mid_.is_finite(); }
    bool contains_zero() const;
    bool is_positive() const;
    bool is_negative() const;
    bool is_nonnegative() const;
    // True when the ball is exactly the integer n.
    bool equals(long n) const;

    // Does this ball contain the value / the whole other ball?
    bool contains(const BigFloat &x) const;
    bool contains(const RealBall &other) const;
    bool contains(long n) const { return contains(BigFloat::from_long(n)); }
    bool overlaps(const RealBall &other) const;

    // Bounds of |x| over the ball.
    Mag mag_upper() const;
    Mag mag_lower() const;
    // Outward-rounded endpoints at the given precision.
    BigFloat lower(long prec = 64) const;
    BigFloat upper(long prec = 64) const;

    void add_error(const Mag &err) { rad_ += err; }
    RealBall rounded(long prec) const;

    double to_double() const { return mid_.to_double(); }
    // Accurate bits relative to the midpoint magnitude (can be negative).
    double rel_accuracy_bits() const;
    std::string to_string(int digits = 20) const;

private:
    BigFloat mid_;
    Mag rad_;
};

RealBall operator-(const RealBall &x);
RealBall add(const RealBall &x, const RealBall &y, long prec);
RealBall sub(const RealBall &x, const RealBall &y, long prec);
RealBall mul(const RealBall &x, const RealBall &y, long prec);
RealBall div(const RealBall &x, const RealBall &y, long prec);
RealBall sqr(const RealBall &x, long prec);
RealBall inv(const RealBall &x, long prec);
RealBall mul_si(const RealBall &x, long n, long prec);
RealBall div_si(const RealBall &x, long n, long prec);
RealBall add_si(const RealBall &x, long n, long prec);
RealBall mul_2exp(const RealBall &x, long k);
RealBall abs(const RealBall &x);
// Ball containing both inputs.
RealBall hull(const RealBall &x, const RealBall &y, long prec);

// Elementary functions. Domain violations give an infinite radius.
RealBall exp(const RealBall &x, long prec);
RealBall log(const RealBall &x, long prec);
RealBall sqrt(const RealBall &x, long prec);
RealBall atan(const RealBall &x, long prec);
RealBall atanh(const RealBall &x, long prec);
RealBall sin(const RealBall &x, long prec);
RealBall cos(const RealBall &x, long prec);
RealBall pow_ui(const RealBall &x, unsigned long n, long prec);

RealBall const_pi(long prec);
RealBall const_log2(long prec);
RealBall log_ui(unsigned long n, long prec);

} // namespace emz

#endif
