#ifndef EMZ_SIEVED_SUM_HPP
#define EMZ_SIEVED_SUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace emz
{

// sum_{k=1}^{N} f(k) for a completely multiplicative f. f is evaluated
// directly only at 1, 2 and odd primes (in ascending order after 2);
// odd composites cost one multiplication of cached values, and powers of
// two are folded in by Horner's rule over f(2).
//
//   eval(k) -> T, mul(T, T) -> T, add(T, T) -> T, zero: additive identity
template <class T, class Eval, class Mul, class Add>
T sieved_multiplicative_sum(unsigned long N, Eval &&eval, Mul &&mul, Add &&add, const T &zero)
{
    if (N == 0) {
        return zero;
    }
    if (N == 1) {
        return eval(1UL);
    }
    // div[k] for odd k: 0 for 1 and primes, otherwise an odd prime factor.
    std::vector<std::uint32_t> div(N / 2 + 1, 0);
    auto d = [&](unsigned long k) -> std::uint32_t & { return div[k / 2]; };
    for (unsigned long k = 3; k * k <= N; k += 2) {
        if (d(k) == 0) {
            for (unsigned long j = k * k; j <= N; j += 2 * k) {
                d(j) = static_cast<std::uint32_t>(k);
            }
        }
    }

    unsigned long p = 1;
    while (p <= N / 2) {
        p *= 2;
    }
    unsigned long h = 1;
    T z = zero;
    T u = zero;
    // Cache of f at odd k with 3k <= N.
    std::vector<T> cache(N / 3 / 2 + 1, zero);
    auto cached = [&](unsigned long k) -> T & { return cache[k / 2]; };
    const T f2 = eval(2UL);

    for (unsigned long k = 1; k <= N; k += 2) {
        T t = d(k) == 0 ? eval(k) : mul(cached(d(k)), cached(k / d(k)));
        if (3 * k <= N) {
            cached(k) = t;
        }
        u = add(u, t);
        while (k == h && p != 1) {
            z = add(u, mul(f2, z));
            p /= 2;
            h = N / p;
            if (h % 2 == 0) {
                h -= 1;
            }
        }
    }
    return add(u, mul(f2, z));
}

} // namespace emz

#endif
