#include <emz/format.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace emz
{

namespace
{

std::string exponent_suffix(long e)
{
    return (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
}

// Scientific notation from mpfr_get_str output "[-]ddd" with value 0.ddd * 10^e10.
std::string scientific(const std::string &raw, long e10)
{
    std::string out;
    std::size_t i = 0;
    if (!raw.empty() && raw[0] == '-') {
        out += '-';
        i = 1;
    }
    out += raw[i];
    if (raw.size() > i + 1) {
        out += '.';
        out.append(raw, i + 1, std::string::npos);
    }
    return out + exponent_suffix(e10 - 1);
}

std::string get_str(mpfr_srcptr x, int digits, mpfr_rnd_t rnd, long &e10)
{
    mpfr_exp_t e = 0;
    char *s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x, rnd);
    std::string out(s);
    mpfr_free_str(s);
    e10 = static_cast<long>(e);
    return out;
}

std::string hex_number(mpz_class z, long e)
{
    if (z == 0) {
        return "0";
    }
    const bool negative = z < 0;
    z = abs(z);
    const auto shift = mpz_scan1(z.get_mpz_t(), 0);
    z >>= shift;
    e += static_cast<long>(shift);
    return (negative ? "-0x" : "0x") + z.get_str(16) + "p" + std::to_string(e);
}

// Parses "[-]0x<hex>p<exp>" into mantissa and exponent.
void parse_hex_number(std::string_view text, mpz_class &z, long &e)
{
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    if (text.size() < 4 || text.substr(0, 2) != "0x") {
        throw std::invalid_argument("malformed binary number");
    }
    text.remove_prefix(2);
    const auto p = text.find('p');
    if (p == std::string_view::npos) {
        throw std::invalid_argument("malformed binary number");
    }
    if (z.set_str(std::string(text.substr(0, p)), 16) != 0) {
        throw std::invalid_argument("malformed hex mantissa");
    }
    std::size_t used = 0;
    const std::string exps(text.substr(p + 1));
    e = std::stol(exps, &used);
    if (used != exps.size()) {
        throw std::invalid_argument("malformed exponent");
    }
    if (negative) {
        z = -z;
    }
}

} // namespace

std::string to_decimal(const RealBall &x, int digits)
{
    digits = std::max(digits, 1);
    std::string mid;
    Mag total = x.rad();
    if (x.mid().is_zero()) {
        mid = "0";
    } else {
        long e10 = 0;
        const std::string raw = get_str(x.mid().get(), digits, MPFR_RNDZ, e10);
        mid = scientific(raw, e10);
        BigFloat back(x.mid().precision() + 4 * digits + 64);
        const std::string text = raw + "e" + std::to_string(e10 - static_cast<long>(digits));
        const bool exact = mpfr_strtofr(back.get(), text.c_str(), nullptr, 10, MPFR_RNDN) == 0 &&
                           mpfr_equal_p(back.get(), x.mid().get()) != 0;
        if (!exact) {
            BigFloat unit(32);
            mpfr_set_ui(unit.get(), 10, MPFR_RNDN);
            mpfr_pow_si(unit.get(), unit.get(), e10 - digits, MPFR_RNDU);
            total += unit.mag_upper();
        }
    }
    if (total.is_zero()) {
        return mid + " +/- 0";
    }
    if (total.is_inf()) {
        return mid + " +/- inf";
    }
    long re10 = 0;
    const BigFloat r = BigFloat::from_mag(total);
    const std::string rraw = get_str(r.get(), 2, MPFR_RNDU, re10);
    return mid + " +/- " + scientific(rraw, re10);
}

std::string to_decimal(const ComplexBall &z, int digits)
{
    if (z.is_real()) {
        return to_decimal(z.re(), digits);
    }
    return "(" + to_decimal(z.re(), digits) + ") + (" + to_decimal(z.im(), digits) + ")i";
}

std::string to_binary(const RealBall &x)
{
    std::string mid = "0";
    if (!x.mid().is_zero()) {
        mpz_class z;
        const long e = static_cast<long>(mpfr_get_z_2exp(z.get_mpz_t(), x.mid().get()));
        mid = hex_number(z, e);
    }
    std::string rad = "0";
    if (x.rad().is_inf()) {
        rad = "inf";
    } else if (!x.rad().is_zero()) {
        const auto mant = static_cast<std::uint64_t>(std::ldexp(x.rad().mantissa(), 53));
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(mant), 0, 0, &mant);
        rad = hex_number(z, static_cast<long>(x.rad().exponent()) - 53);
    }
    return mid + " +/- " + rad;
}

RealBall from_binary(std::string_view text)
{
    const auto sep = text.find(" +/- ");
    if (sep == std::string_view::npos) {
        throw std::invalid_argument("missing radius separator");
    }
    const std::string_view mid_text = text.substr(0, sep);
    const std::string_view rad_text = text.substr(sep + 5);

    BigFloat mid(2);
    if (mid_text != "0") {
        mpz_class z;
        long e = 0;
        parse_hex_number(mid_text, z, e);
        const long bits = std::max<long>(2, static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)));
        mid = BigFloat(bits);
        mpfr_set_z_2exp(mid.get(), z.get_mpz_t(), e, MPFR_RNDN);
    }
    Mag rad;
    if (rad_text == "inf") {
        rad = Mag::inf();
    } else if (rad_text != "0") {
        mpz_class z;
        long e = 0;
        parse_hex_number(rad_text, z, e);
        if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 53) {
            throw std::invalid_argument("radius mantissa out of range");
        }
        rad = Mag::from_double(z.get_d()).mul_2exp(e);
    }
    return RealBall(std::move(mid), rad);
}

int certified_digits(const RealBall &x)
{
    if (x.rad().is_zero()) {
        return INT_MAX;
    }
    const double bits = x.rel_accuracy_bits();
    if (!(bits > 0)) {
        return 0;
    }
    return static_cast<int>(std::floor(bits * std::log10(2.0)));
}

} // namespace emz
