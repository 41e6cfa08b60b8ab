#pragma once

namespace massey {

// Primality by trial division; intended for moduli below 2^31.
bool is_prime(long long n);

// Reduces x into [0, p). Requires p >= 1.
long long normalize_mod(long long x, long long p);

// Multiplicative inverse in [0, p). Requires p prime.
// Throws std::domain_error when a is divisible by p.
long long mod_inverse(long long a, long long p);

}
