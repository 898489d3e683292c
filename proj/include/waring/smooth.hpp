#pragma once

#include <cstdint>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

// Shared parameter bundle for a smooth-number instance: exponent k >= 2,
// height P >= 1, smoothness bound R >= 2.  The smooth set A(P,R) is the set
// of integers in [1, P] all of whose prime factors are <= R (so 1 is always
// a member).
struct SmoothContext {
    int k = 2;
    std::int64_t P = 1;
    std::int64_t R = 2;
};

// Throws UsageError unless k >= 2, P >= 1, R >= 2.
void validate(const SmoothContext& ctx);

// Primes <= n in increasing order (empty for n < 2).
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// True when every prime factor of n is <= R (n >= 1).
bool is_smooth(std::int64_t n, std::int64_t R);

// A(P,R), sorted ascending.  P <= 0 yields the empty set so that callers may
// pass floor(P/v) bounds directly; R < 2 is an error.
std::vector<std::int64_t> enumerate_smooth(std::int64_t P, std::int64_t R);

// C_q(P,R) = { n in A(P,R) : n | q^inf }, i.e. R-smooth n <= P whose prime
// factors all divide q.  Sorted ascending; always contains 1 when P >= 1.
std::vector<std::int64_t> enumerate_kernel_divisors(std::int64_t P, std::int64_t R,
                                                    std::int64_t q);

// C_{q,pi}(P,R) = { n in C_q(P,R) : p | n => p > pi }: kernel divisors whose
// least prime factor exceeds pi.  pi = 1 is accepted as the vacuous bound.
std::vector<std::int64_t> enumerate_kernel_divisors_above(std::int64_t P,
                                                          std::int64_t R,
                                                          std::int64_t q,
                                                          std::int64_t pi);

// B(M,pi,R) = { v in A(M*pi, R) : v > M, pi | v, p | v => p >= pi }: the
// block of R-smooth numbers in (M, M*pi] divisible by pi with least prime
// factor >= pi.  Requires pi prime and pi <= R.
std::vector<std::int64_t> enumerate_vaughan_block(std::int64_t M, std::int64_t pi,
                                                  std::int64_t R);

// x = kernel * cofactor with kernel | q^inf and gcd(cofactor, q) = 1; the
// kernel is the largest divisor of x supported on the primes of q.
struct KernelSplit {
    std::int64_t kernel = 1;
    std::int64_t cofactor = 1;
};
KernelSplit kernel_split(std::int64_t x, std::int64_t q);

// The unique factorisation v = m * w with m in B(M,pi,R) and w a pi-smooth
// number (equivalently: multiply the prime factors of v from the largest
// down until the product first exceeds M; pi is the last prime multiplied).
// Requires v R-smooth and v > M >= R.
struct VaughanTriple {
    std::int64_t pi = 2;
    std::int64_t m = 1;
    std::int64_t w = 1;
};
VaughanTriple vaughan_factorize(std::int64_t v, std::int64_t M, std::int64_t R);

} // namespace waring
