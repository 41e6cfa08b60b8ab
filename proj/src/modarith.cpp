#include "massey/modarith.hpp"

#include <stdexcept>

namespace massey {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long long normalize_mod(long long x, long long p) {
    long long r = x % p;
    return r < 0 ? r + p : r;
}

long long mod_inverse(long long a, long long p) {
    a = normalize_mod(a, p);
    if (a == 0) throw std::domain_error("mod_inverse: zero has no inverse");
    long long r0 = a, r1 = p;
    long long s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return normalize_mod(s0, p);
}

}
