#ifndef EMZ_CONSTANTS_HPP
#define EMZ_CONSTANTS_HPP

#include <emz/complex_ball.hpp>

#include <optional>
#include <string>
#include <vector>

namespace emz
{

// zeta(k) for k_min <= k <= k_max (k_min >= 2). Large k use the first three
// terms plus a tail bound, the rest go through hurwitz_value.
std::vector<RealBall> zeta_int_values(unsigned long k_min, unsigned long k_max, long prec, int workers = 1);

struct CoefficientTable
{
    enum class Kind
    {
        keiper_li,
        stieltjes
    };
    Kind kind = Kind::keiper_li;
    ComplexBall a{1};
    std::vector<ComplexBall> values;
    long working_prec = 0;
    // Keiper-Li indices k >= 1 whose sign the enclosure does not settle.
    std::vector<unsigned long> undetermined;
    // Constant term of the composed series; should contain -log 2.
    ComplexBall constant_term;
    // Parameters chosen for the zeta jet.
    unsigned long N = 0;
    unsigned long M = 0;
};

// Working precision ceil(1.1 n) + 50 unless overridden.
long keiper_li_precision(unsigned long n);

// lambda_0 .. lambda_n (lambda_0 = 0) from log xi(x/(x-1)).
CoefficientTable keiper_li(unsigned long n, std::optional<long> prec_override = std::nullopt, int workers = 1);

// (log n - log 2pi + gamma - 1) / 2
RealBall li_reference(unsigned long n, long prec = 64);

// gamma_0(a) .. gamma_n(a) at working precision n + prec_target + guard.
CoefficientTable stieltjes(unsigned long n, const ComplexBall &a, long prec_target, int workers = 1);
long stieltjes_precision(unsigned long n, long prec_target);

// "index,midpoint,radius" rows; complex tables get separate real and
// imaginary columns.
std::string table_csv(const CoefficientTable &t, int digits);
std::string table_json(const CoefficientTable &t, int digits);

// "n,value" rows of n (lambda_n - li_reference(n)).
std::string li_plot_csv(const CoefficientTable &t);
// "n,value" rows of |gamma_n - ref_n| / |gamma_n| against a reference table,
// or the certified relative radius when no reference is given.
std::string stieltjes_plot_csv(const CoefficientTable &t, const CoefficientTable *reference = nullptr);

} // namespace emz

#endif
