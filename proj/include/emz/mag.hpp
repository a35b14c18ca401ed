#ifndef EMZ_MAG_HPP
#define EMZ_MAG_HPP

#include <cstdint>
#include <string>

namespace emz
{

// Nonnegative magnitude m * 2^e with a double mantissa m in [0.5, 1) and a
// 64-bit exponent. Used for ball radii and for cheap upper/lower bounds.
//
// Unless a function name says otherwise, every operation returns an upper
// bound of the exact result. Underflow of an upper bound never yields zero.
class Mag
{
public:
    static constexpr std::int64_t max_exp = std::int64_t(1) << 50;
    static constexpr std::int64_t min_exp = -(std::int64_t(1) << 50);

    Mag() = default;

    // Upper bound of |d|.
    static Mag from_double(double d);
    static Mag lower_from_double(double d);
    static Mag pow2(std::int64_t e);
    static Mag inf();

    bool is_zero() const { return m_ == 0.0; }
    bool is_inf() const;
    bool is_finite() const { return !is_inf(); }

    double mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }

    // Approximate log2 of the value; -inf for zero, +inf for infinity.
    double log2() const;
    // Nearest double, saturating to 0 / +inf outside the double range.
    double to_double() const;

    Mag mul_2exp(std::int64_t k) const;

    friend Mag operator+(const Mag &a, const Mag &b);
    friend Mag operator*(const Mag &a, const Mag &b);
    Mag &operator+=(const Mag &b) { return *this = *this + b; }
    Mag &operator*=(const Mag &b) { return *this = *this * b; }

    // Upper bound of a / b, where b should itself be a lower bound.
    static Mag div(const Mag &a, const Mag &b);

    // Lower-bound variants.
    static Mag add_lower(const Mag &a, const Mag &b);
    static Mag mul_lower(const Mag &a, const Mag &b);
    static Mag div_lower(const Mag &a, const Mag &b);
    // max(0, a - b) rounded down.
    static Mag sub_lower(const Mag &a, const Mag &b);
    // a - b rounded up; zero when b >= a.
    static Mag sub_upper(const Mag &a, const Mag &b);
    static Mag sqrt_upper(const Mag &a);
    static Mag sqrt_lower(const Mag &a);

    friend bool operator==(const Mag &a, const Mag &b) { return a.m_ == b.m_ && a.e_ == b.e_; }
    friend bool operator<(const Mag &a, const Mag &b);
    friend bool operator<=(const Mag &a, const Mag &b) { return !(b < a); }
    friend bool operator>(const Mag &a, const Mag &b) { return b < a; }
    friend bool operator>=(const Mag &a, const Mag &b) { return !(a < b); }

    friend Mag max(const Mag &a, const Mag &b) { return a < b ? b : a; }
    friend Mag min(const Mag &a, const Mag &b) { return a < b ? a : b; }

    std::string to_string() const;

private:
    Mag(double m, std::int64_t e) : m_(m), e_(e) {}
    static Mag normalize_up(double m, std::int64_t e);
    static Mag normalize_down(double m, std::int64_t e);

    double m_ = 0.0;
    std::int64_t e_ = 0;
};

} // namespace emz

#endif
