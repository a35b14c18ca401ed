#include <emz/bernoulli.hpp>

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace emz
{

namespace
{

std::size_t limit_from_env()
{
    if (const char *v = std::getenv("EMZ_BERNOULLI_CACHE_MAX")) {
        try {
            return static_cast<std::size_t>(std::stoull(v));
        } catch (...) {
        }
    }
    return std::size_t(1) << 20;
}

struct Cache
{
    std::shared_mutex lock;
    // even[k] = B_{2k}
    std::vector<BigRational> even;
    std::size_t limit = limit_from_env();
};

Cache &cache()
{
    static Cache c;
    return c;
}

// B_0, B_2, ..., B_{2(count-1)} from the tangent numbers
// T_k = (2k-1)-th derivative of tan at 0, computed by the integer
// recurrence T[j] = (j-k) T[j-1] + (j-k+2) T[j], and
// B_{2k} = (-1)^(k-1) 2k T_k / (2^(2k) (2^(2k) - 1)).
std::vector<BigRational> even_bernoulli(std::size_t count)
{
    std::vector<BigRational> out;
    out.reserve(count);
    out.emplace_back(1);
    const std::size_t n = count > 0 ? count - 1 : 0;
    if (n == 0) {
        return out;
    }
    std::vector<mpz_class> t(n + 1);
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
    }
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t j = k; j <= n; ++j) {
            mpz_mul_ui(t[j].get_mpz_t(), t[j].get_mpz_t(), static_cast<unsigned long>(j - k + 2));
            mpz_addmul_ui(t[j].get_mpz_t(), t[j - 1].get_mpz_t(), static_cast<unsigned long>(j - k));
        }
    }
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class four_k = 1;
        four_k <<= static_cast<mp_bitcnt_t>(2 * k);
        mpz_class num = t[k] * static_cast<unsigned long>(2 * k);
        if (k % 2 == 0) {
            num = -num;
        }
        BigRational b(num, four_k * (four_k - 1));
        b.canonicalize();
        out.push_back(std::move(b));
        t[k] = 0;
    }
    return out;
}

// Makes sure B_{2(count-1)} is available; returns a copy when the cache
// limit prevents storing it.
void ensure(std::size_t count, std::vector<BigRational> *overflow)
{
    Cache &c = cache();
    {
        std::shared_lock read(c.lock);
        if (c.even.size() >= count) {
            return;
        }
    }
    std::unique_lock write(c.lock);
    if (c.even.size() >= count) {
        return;
    }
    // Grow geometrically so repeated small extensions stay cheap.
    const std::size_t target = std::max(count, c.even.size() + c.even.size() / 2);
    std::vector<BigRational> fresh = even_bernoulli(target);
    if (target <= c.limit) {
        c.even = std::move(fresh);
    } else if (overflow != nullptr) {
        *overflow = std::move(fresh);
    }
}

BigRational even_entry(std::size_t k)
{
    std::vector<BigRational> overflow;
    ensure(k + 1, &overflow);
    if (!overflow.empty()) {
        return overflow[k];
    }
    Cache &c = cache();
    std::shared_lock read(c.lock);
    if (k < c.even.size()) {
        return c.even[k];
    }
    read.unlock();
    return even_bernoulli(k + 1)[k];
}

} // namespace

std::vector<BigRational> bernoulli_table(unsigned long n_max)
{
    std::vector<BigRational> out(n_max + 1);
    const std::size_t evens = n_max / 2 + 1;
    std::vector<BigRational> overflow;
    ensure(evens, &overflow);
    Cache &c = cache();
    std::shared_lock read(c.lock);
    const std::vector<BigRational> &src = overflow.empty() ? c.even : overflow;
    for (unsigned long n = 0; n <= n_max; ++n) {
        if (n == 1) {
            out[n] = BigRational(-1, 2);
        } else if (n % 2 == 0) {
            out[n] = src[n / 2];
        }
    }
    return out;
}

BigRational bernoulli(unsigned long n)
{
    if (n == 1) {
        return BigRational(-1, 2);
    }
    if (n % 2 == 1) {
        return BigRational(0);
    }
    return even_entry(n / 2);
}

RealBall bernoulli_ball(unsigned long n, long prec)
{
    if (n != 1 && n % 2 == 1) {
        return RealBall(0);
    }
    if (n == 1) {
        return RealBall::from_ratio(-1, 2, prec);
    }
    Cache &c = cache();
    {
        std::shared_lock read(c.lock);
        if (n / 2 < c.even.size()) {
            return RealBall::from_mpq(c.even[n / 2], prec);
        }
    }
    return RealBall::from_mpq(even_entry(n / 2), prec);
}

std::size_t bernoulli_cache_size()
{
    Cache &c = cache();
    std::shared_lock read(c.lock);
    return c.even.size();
}

void set_bernoulli_cache_limit(std::size_t entries)
{
    Cache &c = cache();
    std::unique_lock write(c.lock);
    c.limit = entries;
    if (c.even.size() > entries) {
        c.even.resize(entries);
    }
}

} // namespace emz
