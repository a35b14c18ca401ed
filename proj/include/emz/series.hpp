#ifndef EMZ_SERIES_HPP
#define EMZ_SERIES_HPP

#include <emz/complex_ball.hpp>
#include <emz/real_ball.hpp>

#include <cstddef>
#include <vector>

namespace emz
{

// Truncated power series sum_k c_k x^k mod x^order with ComplexBall
// coefficients. Storage may be shorter than the order; missing high
// coefficients are exact zeros. Arithmetic only touches stored
// coefficients, so products of short polynomials stay cheap.
class BallSeries
{
public:
    BallSeries() = default;
    explicit BallSeries(int order);
    BallSeries(std::vector<ComplexBall> coeffs, int order);

    static BallSeries constant(ComplexBall c, int order);
    // c0 + x
    static BallSeries variable(ComplexBall c0, int order);

    int order() const { return order_; }
    std::size_t length() const { return c_.size(); }

    const ComplexBall &operator[](std::size_t k) const;
    // Grows the stored length when needed; k must be < order.
    ComplexBall &at(std::size_t k);
    const std::vector<ComplexBall> &coeffs() const { return c_; }
    // Coefficients padded with exact zeros to length order.
    std::vector<ComplexBall> normalized() const;

    bool is_real() const;
    BallSeries truncated(int order) const;
    // Drops trailing exact-zero coefficients from storage.
    void trim();

    void add_error(std::size_t k, const Mag &err);
    bool contains(const BallSeries &other) const;
    bool overlaps(const BallSeries &other) const;

private:
    std::vector<ComplexBall> c_;
    int order_ = 1;
};

// Series with real coefficients; the majorant operator produces these.
class RealSeries
{
public:
    RealSeries() = default;
    explicit RealSeries(int order) : c_(static_cast<std::size_t>(order)), order_(order) {}
    RealSeries(std::vector<RealBall> coeffs, int order);

    int order() const { return order_; }
    std::size_t length() const { return c_.size(); }
    const RealBall &operator[](std::size_t k) const { return c_[k]; }
    RealBall &operator[](std::size_t k) { return c_[k]; }
    const std::vector<RealBall> &coeffs() const { return c_; }

    // Upper bound of |c_k|.
    Mag bound(std::size_t k) const { return k < c_.size() ? c_[k].mag_upper() : Mag(); }

private:
    std::vector<RealBall> c_;
    int order_ = 1;
};

BallSeries operator-(const BallSeries &f);
BallSeries add(const BallSeries &f, const BallSeries &g, int order, long prec);
BallSeries sub(const BallSeries &f, const BallSeries &g, int order, long prec);
BallSeries add(const BallSeries &f, const BallSeries &g, long prec);
BallSeries sub(const BallSeries &f, const BallSeries &g, long prec);
BallSeries scale(const BallSeries &f, const ComplexBall &c, long prec);
BallSeries scale(const BallSeries &f, const RealBall &c, long prec);
// Full O(len f * len g) Cauchy product truncated at order.
BallSeries mul(const BallSeries &f, const BallSeries &g, int order, long prec);
BallSeries mul(const BallSeries &f, const BallSeries &g, long prec);
// f / g; a g[0] containing zero gives infinite radii everywhere.
BallSeries div(const BallSeries &f, const BallSeries &g, int order, long prec);
BallSeries inv(const BallSeries &g, int order, long prec);

BallSeries derivative(const BallSeries &f);
// Antiderivative with zero constant term.
BallSeries integral(const BallSeries &f, int order, long prec);
// log f(0) + integral(f'/f).
BallSeries log(const BallSeries &f, int order, long prec);
// From (exp f)' = f' exp f.
BallSeries exp(const BallSeries &f, int order, long prec);
// f(c x): coefficient k multiplied by c^k.
BallSeries scale_variable(const BallSeries &f, const ComplexBall &c, long prec);
// f(i x): exact rotation of each coefficient.
BallSeries scale_variable_i(const BallSeries &f);

// |F| = sum |f_k| x^k with upward-rounded upper bounds as point balls.
RealSeries majorant(const BallSeries &f);
RealSeries add(const RealSeries &f, const RealSeries &g, long prec);
RealSeries mul(const RealSeries &f, const RealSeries &g, int order, long prec);

// Coefficient k divided by k! (forward) or multiplied by k! (inverse).
BallSeries borel(const BallSeries &f, long prec);
BallSeries borel_inverse(const BallSeries &f, long prec);
// T[f]_n = sum_{k<=n} (-1)^k C(n,k) a_k, computed as B^-1[e^x B[f(-x)]].
BallSeries binomial_transform(const BallSeries &f, int order, long prec);
// f(x/(x-1)) = a_0 + x T[(a_0 - f)/x].
BallSeries compose_mobius(const BallSeries &f, int order, long prec);

} // namespace emz

#endif
