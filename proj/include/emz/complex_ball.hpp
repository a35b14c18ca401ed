#ifndef EMZ_COMPLEX_BALL_HPP
#define EMZ_COMPLEX_BALL_HPP

#include <emz/real_ball.hpp>

#include <string>
#include <utility>

namespace emz
{

// Rectangular enclosure: the true value z has Re z in re and Im z in im.
class ComplexBall
{
public:
    ComplexBall() = default;
    ComplexBall(long value) : re_(value) {}
    ComplexBall(RealBall re) : re_(std::move(re)) {}
    ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexBall full() { return {RealBall::full(), RealBall::full()}; }
    static ComplexBall i() { return {RealBall(0), RealBall(1)}; }

    const RealBall &re() const { return re_; }
    const RealBall &im() const { return im_; }
    RealBall &re() { return re_; }
    RealBall &im() { return im_; }

    // Imaginary part is exactly zero.
    bool is_real() const { return im_.is_zero(); }
    bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    bool equals(long n) const { return re_.equals(n) && im_.is_zero(); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool contains(const ComplexBall &z) const { return re_.contains(z.re_) && im_.contains(z.im_); }
    bool overlaps(const ComplexBall &z) const { return re_.overlaps(z.re_) && im_.overlaps(z.im_); }

    // Upper bound of |z| over the rectangle.
    Mag mag_upper() const;
    // Lower bound of |z| over the rectangle.
    Mag mag_lower() const;
    // Largest component radius.
    Mag rad_max() const { return max(re_.rad(), im_.rad()); }

    // Adds err to both component radii (|error| <= err).
    void add_error(const Mag &err)
    {
        re_.add_error(err);
        im_.add_error(err);
    }

    ComplexBall rounded(long prec) const { return {re_.rounded(prec), im_.rounded(prec)}; }
    std::string to_string(int digits = 20) const;

private:
    RealBall re_;
    RealBall im_;
};

ComplexBall operator-(const ComplexBall &z);
ComplexBall conj(const ComplexBall &z);
ComplexBall add(const ComplexBall &x, const ComplexBall &y, long prec);
ComplexBall sub(const ComplexBall &x, const ComplexBall &y, long prec);
ComplexBall mul(const ComplexBall &x, const ComplexBall &y, long prec);
ComplexBall mul(const ComplexBall &x, const RealBall &y, long prec);
ComplexBall div(const ComplexBall &x, const ComplexBall &y, long prec);
ComplexBall div(const ComplexBall &x, const RealBall &y, long prec);
ComplexBall inv(const ComplexBall &x, long prec);
ComplexBall sqr(const ComplexBall &x, long prec);
ComplexBall mul_si(const ComplexBall &x, long n, long prec);
ComplexBall div_si(const ComplexBall &x, long n, long prec);
ComplexBall add_si(const ComplexBall &x, long n, long prec);
ComplexBall mul_2exp(const ComplexBall &x, long k);
// Multiplication by i^k (exact).
ComplexBall mul_i_pow(const ComplexBall &x, int k);

ComplexBall exp(const ComplexBall &z, long prec);
// Principal logarithm, Im in (-pi, pi]. Inputs straddling the cut
// (-inf, 0] or containing 0 give an infinite radius; exact points on the
// negative real axis get Im = pi.
ComplexBall log(const ComplexBall &z, long prec);
// exp(w log z); z^0 = 1 exactly.
ComplexBall pow(const ComplexBall &z, const ComplexBall &w, long prec);
// Argument of z (no cut handling beyond log's).
RealBall arg(const ComplexBall &z, long prec);
RealBall abs(const ComplexBall &z, long prec);

// s (s+1) ... (s+n-1) by balanced product splitting.
ComplexBall rising_factorial(const ComplexBall &s, unsigned long n, long prec);

} // namespace emz

#endif
