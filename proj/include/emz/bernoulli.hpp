#ifndef EMZ_BERNOULLI_HPP
#define EMZ_BERNOULLI_HPP

#include <emz/real_ball.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace emz
{

// gmpxx rationals are kept canonical: lowest terms, positive denominator.
using BigRational = mpq_class;

// Exact B_0 ... B_{n_max}. Even-index values come from a process-wide
// cache that only grows.
std::vector<BigRational> bernoulli_table(unsigned long n_max);

// Exact B_n.
BigRational bernoulli(unsigned long n);

// Ball containing B_n with rad <= 2^(1-prec) |B_n|; odd n >= 3 give an
// exact zero.
RealBall bernoulli_ball(unsigned long n, long prec);

// Number of even-index entries currently cached (B_0, B_2, ...).
std::size_t bernoulli_cache_size();

// Entries beyond this many even indices are computed but not retained.
// Defaults to EMZ_BERNOULLI_CACHE_MAX from the environment, else 1 << 20.
void set_bernoulli_cache_limit(std::size_t entries);

} // namespace emz

#endif
