#pragma once

// Arbitrary-precision signed integers used for every coefficient in the
// library.  All arithmetic is exact; nothing in here ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace supschur {

using Int = boost::multiprecision::cpp_int;

/* i^n for n >= 0. */
inline Int int_pow(const Int& base, unsigned exp) {
    Int result{1};
    Int b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/* Binomial coefficient with the out-of-range convention used throughout:
   choose(n, k) = 0 whenever k < 0, n < 0 or n < k. */
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || n < k) return Int{0};
    if (k > n - k) k = n - k;
    Int result{1};
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

/* a / b asserting that b divides a exactly. */
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a) throw std::domain_error("exact_div: inexact integer division");
    return q;
}

}  // namespace supschur
