#ifndef EMZ_ZERO_REFINE_HPP
#define EMZ_ZERO_REFINE_HPP

#include <emz/complex_ball.hpp>
#include <emz/series.hpp>

#include <stdexcept>
#include <vector>

namespace emz
{

// Principal log-gamma. Re z must be positive over the whole ball,
// otherwise the result is an infinite ball.
ComplexBall log_gamma(const ComplexBall &z, long prec);

// Jet of log Gamma(z + x) mod x^order. The argument is shifted by the
// recurrence until Re >= max(12, prec/4) and the Stirling series is
// applied there; its remainder is bounded over a disk around the shifted
// point so every jet coefficient gets a rigorous radius.
BallSeries log_gamma_series(const ComplexBall &z, int order, long prec);

// Jet of the Riemann-Siegel theta function at t, real coefficients.
BallSeries theta(const RealBall &t, int order, long prec);

// Jet of Z(t) = exp(i theta(t)) zeta(1/2 + i t), real coefficients.
// Throws std::logic_error if an imaginary part does not contain 0.
BallSeries hardy_z(const RealBall &t, int order, long prec, int workers = 1);

// [m - eps, m + eps]
struct IsolatingInterval
{
    BigFloat m;
    BigFloat eps;

    RealBall ball() const;
    static IsolatingInterval from_endpoints(double lo, double hi);
};

class RefinementError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// max |Z''| / (2 min |Z'|) over the interval, at low precision.
RealBall newton_constant(const IsolatingInterval &b0);

struct NewtonStep
{
    long prec = 0;
    double log2_eps = 0;
};

struct RefineResult
{
    IsolatingInterval interval;
    std::vector<NewtonStep> steps;
    int full_precision_evals = 0;
};

// Certified Newton iteration on a simple zero of Z isolated by b0 until
// the radius is at most 2^-target_prec. Each step evaluates (Z, Z') as one
// jet; a step is kept only if the new interval lies inside the old one.
RefineResult refine_zero_ex(const IsolatingInterval &b0, long target_prec, int workers = 1);
IsolatingInterval refine_zero(const IsolatingInterval &b0, long target_prec, int workers = 1);

// Z over the whole interval as a single ball.
RealBall certify_zero(const IsolatingInterval &z, long prec, int workers = 1);

} // namespace emz

#endif
