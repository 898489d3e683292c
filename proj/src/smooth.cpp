#include "waring/smooth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace waring {

void validate(const SmoothContext& ctx) {
    if (ctx.k < 2) throw UsageError("SmoothContext: k must be >= 2");
    if (ctx.P < 1) throw UsageError("SmoothContext: P must be >= 1");
    if (ctx.R < 2) throw UsageError("SmoothContext: R must be >= 2");
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (std::int64_t m = p * p; m <= n; m += p)
            composite[static_cast<std::size_t>(m)] = true;
    }
    return primes;
}

bool is_smooth(std::int64_t n, std::int64_t R) {
    if (n < 1) throw UsageError("is_smooth: n must be >= 1");
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            if (p > R) return false;
            n /= p;
        }
    }
    return n == 1 || n <= R;
}

namespace {

// Appends every product `cur * (powers of primes[i..])` that stays <= limit.
// The prime list is small (primes <= R) and products shrink fast, so plain
// recursion is fine up to limit ~ 1e7.
void extend_products(const std::vector<std::int64_t>& primes, std::size_t i,
                     std::int64_t limit, std::int64_t cur,
                     std::vector<std::int64_t>& out) {
    out.push_back(cur);
    for (std::size_t j = i; j < primes.size(); ++j) {
        if (primes[j] > limit / cur) break;
        std::int64_t next = cur * primes[j];
        while (true) {
            extend_products(primes, j + 1, limit, next, out);
            if (primes[j] > limit / next) break;
            next *= primes[j];
        }
    }
}

std::vector<std::int64_t> products_up_to(const std::vector<std::int64_t>& primes,
                                         std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 1) return out;
    extend_products(primes, 0, limit, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> primes_of_q_up_to(std::int64_t q, std::int64_t R) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p : primes_up_to(R))
        if (q % p == 0) ps.push_back(p);
    return ps;
}

} // namespace

std::vector<std::int64_t> enumerate_smooth(std::int64_t P, std::int64_t R) {
    if (R < 2) throw UsageError("enumerate_smooth: R must be >= 2");
    if (P < 0) throw UsageError("enumerate_smooth: P must be >= 0");
    return products_up_to(primes_up_to(R), P);
}

std::vector<std::int64_t> enumerate_kernel_divisors(std::int64_t P, std::int64_t R,
                                                    std::int64_t q) {
    if (R < 2) throw UsageError("enumerate_kernel_divisors: R must be >= 2");
    if (q < 1) throw UsageError("enumerate_kernel_divisors: q must be >= 1");
    return products_up_to(primes_of_q_up_to(q, R), P);
}

std::vector<std::int64_t> enumerate_kernel_divisors_above(std::int64_t P,
                                                          std::int64_t R,
                                                          std::int64_t q,
                                                          std::int64_t pi) {
    if (R < 2) throw UsageError("enumerate_kernel_divisors_above: R must be >= 2");
    if (q < 1) throw UsageError("enumerate_kernel_divisors_above: q must be >= 1");
    if (pi < 1) throw UsageError("enumerate_kernel_divisors_above: pi must be >= 1");
    std::vector<std::int64_t> ps;
    for (std::int64_t p : primes_of_q_up_to(q, R))
        if (p > pi) ps.push_back(p);
    return products_up_to(ps, P);
}

std::vector<std::int64_t> enumerate_vaughan_block(std::int64_t M, std::int64_t pi,
                                                  std::int64_t R) {
    if (M < 1) throw UsageError("enumerate_vaughan_block: M must be >= 1");
    if (pi > R)
        throw UsageError("enumerate_vaughan_block: pi = " + std::to_string(pi) +
                         " exceeds the smoothness bound R = " + std::to_string(R));
    auto primes = primes_up_to(R);
    if (!std::binary_search(primes.begin(), primes.end(), pi))
        throw UsageError("enumerate_vaughan_block: pi = " + std::to_string(pi) +
                         " is not prime");
    // Products of primes in [pi, R], forced divisible by pi, in (M, M*pi].
    std::vector<std::int64_t> band(
        std::lower_bound(primes.begin(), primes.end(), pi), primes.end());
    std::vector<std::int64_t> out;
    for (std::int64_t v : products_up_to(band, M * pi))
        if (v > M && v % pi == 0) out.push_back(v);
    return out;
}

KernelSplit kernel_split(std::int64_t x, std::int64_t q) {
    if (x < 1) throw UsageError("kernel_split: x must be >= 1");
    if (q < 1) throw UsageError("kernel_split: q must be >= 1");
    KernelSplit split;
    split.cofactor = x;
    // Each pass strips gcd(cofactor, q); repeating until coprime moves the
    // full q-supported part of x into the kernel.
    while (true) {
        std::int64_t g = std::gcd(split.cofactor, q);
        if (g == 1) break;
        split.kernel *= g;
        split.cofactor /= g;
    }
    return split;
}

VaughanTriple vaughan_factorize(std::int64_t v, std::int64_t M, std::int64_t R) {
    if (M < R) throw UsageError("vaughan_factorize: requires M >= R");
    if (v <= M)
        throw UsageError("vaughan_factorize: v = " + std::to_string(v) +
                         " must exceed M = " + std::to_string(M));
    if (!is_smooth(v, R))
        throw UsageError("vaughan_factorize: v = " + std::to_string(v) +
                         " is not " + std::to_string(R) + "-smooth");

    std::vector<std::int64_t> factors; // with multiplicity, descending
    std::int64_t rest = v;
    for (std::int64_t p = 2; p <= R && rest > 1; ++p)
        while (rest % p == 0) {
            factors.push_back(p);
            rest /= p;
        }
    std::sort(factors.rbegin(), factors.rend());

    VaughanTriple triple;
    triple.m = 1;
    for (std::int64_t p : factors) {
        triple.m *= p;
        triple.pi = p;
        if (triple.m > M) break;
    }
    triple.w = v / triple.m;
    return triple;
}

} // namespace waring
