#include <emz/mag.hpp>

#include <cmath>
#include <cstdio>
#include <limits>

namespace emz
{

namespace
{

constexpr double infinity = std::numeric_limits<double>::infinity();

double up(double x)
{
    return std::nextafter(x, infinity);
}

double down(double x)
{
    return x <= 0.0 ? 0.0 : std::nextafter(x, 0.0);
}

// Below this shift the smaller operand is less than one ulp of the larger.
constexpr std::int64_t negligible_shift = -1100;
// Above this shift ldexp of a mantissa in [0.5, 1) stays a normal double.
constexpr std::int64_t exact_shift = -1000;

} // namespace

Mag Mag::normalize_up(double m, std::int64_t e)
{
    if (m == 0.0) {
        return Mag();
    }
    if (!std::isfinite(m)) {
        return inf();
    }
    int ex = 0;
    const double f = std::frexp(m, &ex);
    e += ex;
    if (e > max_exp) {
        return inf();
    }
    if (e < min_exp) {
        return Mag(0.5, min_exp);
    }
    return Mag(f, e);
}

Mag Mag::normalize_down(double m, std::int64_t e)
{
    if (m <= 0.0) {
        return Mag();
    }
    if (!std::isfinite(m)) {
        return Mag(0.5, max_exp);
    }
    int ex = 0;
    const double f = std::frexp(m, &ex);
    e += ex;
    if (e > max_exp) {
        return Mag(0.5, max_exp);
    }
    if (e < min_exp) {
        return Mag();
    }
    return Mag(f, e);
}

Mag Mag::from_double(double d)
{
    d = std::fabs(d);
    if (std::isnan(d)) {
        return inf();
    }
    return normalize_up(d, 0);
}

Mag Mag::lower_from_double(double d)
{
    d = std::fabs(d);
    if (std::isnan(d)) {
        return Mag();
    }
    return normalize_down(d, 0);
}

Mag Mag::pow2(std::int64_t e)
{
    return normalize_up(0.5, e + 1);
}

Mag Mag::inf()
{
    return Mag(infinity, 0);
}

bool Mag::is_inf() const
{
    return m_ == infinity;
}

double Mag::log2() const
{
    if (is_zero()) {
        return -infinity;
    }
    if (is_inf()) {
        return infinity;
    }
    return std::log2(m_) + static_cast<double>(e_);
}

double Mag::to_double() const
{
    if (is_zero() || is_inf()) {
        return m_;
    }
    if (e_ > 1100) {
        return infinity;
    }
    if (e_ < -1100) {
        return 0.0;
    }
    return std::ldexp(m_, static_cast<int>(e_));
}

Mag Mag::mul_2exp(std::int64_t k) const
{
    if (is_zero() || is_inf()) {
        return *this;
    }
    return normalize_up(m_, e_ + k);
}

Mag operator+(const Mag &a, const Mag &b)
{
    if (a.is_inf() || b.is_inf()) {
        return Mag::inf();
    }
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const Mag &big = a.e_ >= b.e_ ? a : b;
    const Mag &small = a.e_ >= b.e_ ? b : a;
    const std::int64_t shift = small.e_ - big.e_;
    double m = big.m_;
    if (shift >= negligible_shift) {
        m += std::ldexp(small.m_, static_cast<int>(shift));
    }
    return Mag::normalize_up(up(m), big.e_);
}

Mag Mag::add_lower(const Mag &a, const Mag &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.is_inf() || b.is_inf()) {
        return Mag::inf();
    }
    const Mag &big = a.e_ >= b.e_ ? a : b;
    const Mag &small = a.e_ >= b.e_ ? b : a;
    const std::int64_t shift = small.e_ - big.e_;
    if (shift < exact_shift) {
        return big;
    }
    return normalize_down(down(big.m_ + std::ldexp(small.m_, static_cast<int>(shift))), big.e_);
}

Mag operator*(const Mag &a, const Mag &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Mag();
    }
    if (a.is_inf() || b.is_inf()) {
        return Mag::inf();
    }
    return Mag::normalize_up(up(a.m_ * b.m_), a.e_ + b.e_);
}

Mag Mag::mul_lower(const Mag &a, const Mag &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Mag();
    }
    if (a.is_inf() || b.is_inf()) {
        return Mag(0.5, max_exp);
    }
    return normalize_down(down(a.m_ * b.m_), a.e_ + b.e_);
}

Mag Mag::div(const Mag &a, const Mag &b)
{
    if (a.is_zero()) {
        return Mag();
    }
    if (b.is_zero() || a.is_inf()) {
        return inf();
    }
    if (b.is_inf()) {
        return Mag();
    }
    return normalize_up(up(a.m_ / b.m_), a.e_ - b.e_);
}

Mag Mag::div_lower(const Mag &a, const Mag &b)
{
    if (a.is_zero() || b.is_inf()) {
        return Mag();
    }
    if (b.is_zero() || a.is_inf()) {
        return Mag(0.5, max_exp);
    }
    return normalize_down(down(a.m_ / b.m_), a.e_ - b.e_);
}

Mag Mag::sub_lower(const Mag &a, const Mag &b)
{
    if (b >= a) {
        return Mag();
    }
    if (a.is_inf()) {
        return Mag(0.5, max_exp);
    }
    if (b.is_zero()) {
        return a;
    }
    const std::int64_t shift = b.e_ - a.e_;
    if (shift < exact_shift) {
        return normalize_down(down(a.m_), a.e_);
    }
    return normalize_down(down(a.m_ - std::ldexp(b.m_, static_cast<int>(shift))), a.e_);
}

Mag Mag::sub_upper(const Mag &a, const Mag &b)
{
    if (b >= a) {
        return Mag();
    }
    if (a.is_inf()) {
        return inf();
    }
    if (b.is_zero()) {
        return a;
    }
    const std::int64_t shift = b.e_ - a.e_;
    if (shift < negligible_shift) {
        return a;
    }
    return normalize_up(up(a.m_ - std::ldexp(b.m_, static_cast<int>(shift))), a.e_);
}

Mag Mag::sqrt_upper(const Mag &a)
{
    if (a.is_zero() || a.is_inf()) {
        return a;
    }
    // m 2^e = (m 2^(e mod 2)) 2^(e - e mod 2)
    const std::int64_t odd = a.e_ & 1;
    return normalize_up(up(std::sqrt(odd ? 2.0 * a.m_ : a.m_)), (a.e_ - odd) / 2);
}

Mag Mag::sqrt_lower(const Mag &a)
{
    if (a.is_zero()) {
        return a;
    }
    if (a.is_inf()) {
        return Mag(0.5, max_exp);
    }
    const std::int64_t odd = a.e_ & 1;
    return normalize_down(down(std::sqrt(odd ? 2.0 * a.m_ : a.m_)), (a.e_ - odd) / 2);
}

bool operator<(const Mag &a, const Mag &b)
{
    if (a.is_zero()) {
        return !b.is_zero();
    }
    if (b.is_zero() || a.is_inf()) {
        return false;
    }
    if (b.is_inf()) {
        return true;
    }
    if (a.e_ != b.e_) {
        return a.e_ < b.e_;
    }
    return a.m_ < b.m_;
}

std::string Mag::to_string() const
{
    if (is_inf()) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g*2^%lld", m_, static_cast<long long>(e_));
    return buf;
}

} // namespace emz
