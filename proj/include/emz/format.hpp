#ifndef EMZ_FORMAT_HPP
#define EMZ_FORMAT_HPP

#include <emz/complex_ball.hpp>
#include <emz/real_ball.hpp>

#include <string>
#include <string_view>

namespace emz
{

// "m.mmm...e±X +/- r.re±Y": the midpoint is truncated to `digits`
// significant digits and the truncation error is folded into the printed
// radius, which is rounded up, so the printed interval contains the ball.
std::string to_decimal(const RealBall &x, int digits);

// Complex counterpart; a ball with an exactly-zero imaginary part is
// printed as a real ball, otherwise as "(re) + (im)i".
std::string to_decimal(const ComplexBall &z, int digits);

// Exact binary form "[-]0x<hex>p<exp> +/- 0x<hex>p<exp>" with integer hex
// mantissas. from_binary(to_binary(x)) reproduces x exactly.
std::string to_binary(const RealBall &x);
RealBall from_binary(std::string_view text);

// Largest number of significant decimal digits certified by the ball
// (0 when the radius swamps the midpoint).
int certified_digits(const RealBall &x);

} // namespace emz

#endif
