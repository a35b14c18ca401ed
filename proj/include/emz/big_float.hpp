#ifndef EMZ_BIG_FLOAT_HPP
#define EMZ_BIG_FLOAT_HPP

#include <emz/mag.hpp>

#include <mpfr.h>

#include <string>
#include <string_view>

namespace emz
{

enum class Round { down, up, nearest, toward_zero, away };

mpfr_rnd_t to_mpfr(Round r);

// Arbitrary-precision binary floating-point number backed by an mpfr_t.
// Each value carries its own precision; arithmetic takes the output
// precision and an explicit rounding direction.
class BigFloat
{
public:
    explicit BigFloat(long prec = 64);
    BigFloat(long value, long prec);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    // Exact: the precision is widened to hold the value.
    static BigFloat from_long(long value);
    static BigFloat from_double(double value);
    static BigFloat from_mag(const Mag &m);
    static BigFloat inf(int sign = 1);
    static BigFloat nan();
    // Parses a decimal or hex literal understood by mpfr_set_str.
    static BigFloat parse(std::string_view text, long prec, Round rnd);

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    // Changes precision, rounding the value to nearest.
    void round_to(long prec);

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent e with |x| in [2^(e-1), 2^e); meaningless for zero.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

    Mag mag_upper() const;
    Mag mag_lower() const;
    // One unit in the last place at precision prec (upper bound of the
    // round-to-nearest error when the result is this value).
    Mag ulp(long prec) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

    friend int compare(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator==(const BigFloat &a, const BigFloat &b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat &a, const BigFloat &b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat &a, const BigFloat &b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat &a, const BigFloat &b) { return b < a; }
    friend bool operator>=(const BigFloat &a, const BigFloat &b) { return b <= a; }

private:
    mpfr_t v_;
};

BigFloat add(const BigFloat &a, const BigFloat &b, long prec, Round rnd);
BigFloat sub(const BigFloat &a, const BigFloat &b, long prec, Round rnd);
BigFloat mul(const BigFloat &a, const BigFloat &b, long prec, Round rnd);
BigFloat div(const BigFloat &a, const BigFloat &b, long prec, Round rnd);
BigFloat sqrt(const BigFloat &a, long prec, Round rnd);
BigFloat neg(const BigFloat &a);
BigFloat abs(const BigFloat &a);
BigFloat mul_2exp(const BigFloat &a, long k);

} // namespace emz

#endif
