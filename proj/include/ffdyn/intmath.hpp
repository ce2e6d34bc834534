/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFDYN_INTMATH_HPP
#define FFDYN_INTMATH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "errors.hpp"

// Integer number theory: primality, factorization with a bounded effort,
// multiplicative orders and primitive roots.

namespace ffdyn {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace num {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace detail {

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

inline bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, int s) {
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

inline constexpr u64 kSmallPrimeBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// The first 13 prime bases decide primality for every n below this bound.
inline const BigInt& deterministic_mr_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

}  // namespace detail

/// Deterministic for the full 64-bit range.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : detail::kSmallPrimeBases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : detail::kSmallPrimeBases) {
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

/// Primality of a big integer. Returns false/true when the answer is
/// proven; throws ResourceError above the deterministic Miller-Rabin range
/// unless a witness proves compositeness.
inline bool is_prime(const BigInt& n) {
    if (n <= std::numeric_limits<u64>::max()) return is_prime(static_cast<u64>(n));
    for (u64 p : detail::kSmallPrimeBases) {
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : detail::kSmallPrimeBases) {
        if (detail::miller_rabin_witness(n, BigInt(a), d, s)) return false;
    }
    if (n < detail::deterministic_mr_bound()) return true;
    // Strong probable prime beyond the certified range.
    std::mt19937_64 rng(0x5eedULL);
    for (int round = 0; round < 32; ++round) {
        BigInt a = 2 + BigInt(rng()) % (n - 3);
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    throw ResourceError("cannot certify primality of " + n.str() + " (beyond deterministic Miller-Rabin range)");
}

/// Limits on how hard `factor` works before giving up with ResourceError.
struct FactorEffort {
    u64 trial_bound = 1'000'000;
    u64 rho_iterations = 1u << 22;
};

/// Prime factorization as (prime, exponent) pairs with ascending primes.
using IntFactorization = std::vector<std::pair<BigInt, unsigned>>;

namespace detail {

inline const std::vector<u64>& primes_up_to(u64 bound) {
    static u64 cached_bound = 0;
    static std::vector<u64> primes;
    if (cached_bound < bound) {
        std::vector<bool> composite(bound + 1, false);
        primes.clear();
        for (u64 i = 2; i <= bound; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
        }
        cached_bound = bound;
    }
    return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 when the
// iteration budget runs out.
inline u64 pollard_brent(u64 n, u64 budget) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1; c < 64; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1, used = 0;
        const u64 m = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < m && i < r - k; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
                used += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1 && used < budget);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
        if (used >= budget) return 0;
    }
    return 0;
}

inline BigInt pollard_brent(const BigInt& n, u64 budget) {
    if ((n & 1) == 0) return 2;
    for (unsigned c = 1; c < 64; ++c) {
        BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1, used = 0;
        const u64 m = 128;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < m && i < r - k; ++i) {
                    y = f(y);
                    q = q * (x > y ? BigInt(x - y) : BigInt(y - x)) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
                used += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1 && used < budget);
        if (g == n) {
            do {
                ys = f(ys);
                g = boost::multiprecision::gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
        if (used >= budget) return 0;
    }
    return 0;
}

inline void split_cofactor(const BigInt& n, const FactorEffort& effort, std::vector<BigInt>& primes) {
    if (n == 1) return;
    const BigInt tb = effort.trial_bound;
    if (n < tb * tb || is_prime(n)) {
        primes.push_back(n);
        return;
    }
    BigInt d;
    if (n <= std::numeric_limits<u64>::max()) {
        d = pollard_brent(static_cast<u64>(n), effort.rho_iterations);
    } else {
        d = pollard_brent(n, effort.rho_iterations);
    }
    if (d == 0) throw ResourceError("factoring " + n.str() + " exceeded the Pollard rho budget");
    split_cofactor(d, effort, primes);
    split_cofactor(n / d, effort, primes);
}

}  // namespace detail

/// Factors n > 0: trial division up to effort.trial_bound, then Pollard-Brent
/// on the cofactor. Throws ResourceError when the budget is exhausted or a
/// large cofactor cannot be certified prime.
inline IntFactorization factor(BigInt n, const FactorEffort& effort = {}) {
    if (n <= 0) throw DomainError("factor: argument must be positive");
    IntFactorization out;
    for (u64 p : detail::primes_up_to(effort.trial_bound)) {
        if (BigInt(p) * p > n) break;
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) out.emplace_back(p, k);
    }
    std::vector<BigInt> rest;
    detail::split_cofactor(n, effort, rest);
    std::sort(rest.begin(), rest.end());
    for (const BigInt& p : rest) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline BigInt ipow(const BigInt& base, u64 exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

/// Order of an element in a group of order `group_order` whose factorization
/// is `fac`. `is_identity(e)` must report whether element^e is the identity.
template <typename IsIdentity>
BigInt order_in_group(const BigInt& group_order, const IntFactorization& fac, IsIdentity&& is_identity) {
    BigInt order = group_order;
    for (const auto& [prime, exponent] : fac) {
        for (unsigned k = 0; k < exponent; ++k) {
            BigInt candidate = order / prime;
            if (!is_identity(candidate)) break;
            order = candidate;
        }
    }
    return order;
}

/// Smallest d >= 1 with q^d = 1 mod n, for prime n not dividing q.
inline u64 mult_order_int(u64 q, u64 n) {
    if (!is_prime(n)) throw DomainError("mult_order_int: modulus " + std::to_string(n) + " is not prime");
    if (q % n == 0) throw DomainError("mult_order_int: " + std::to_string(q) + " is 0 mod " + std::to_string(n));
    const BigInt order = order_in_group(n - 1, factor(n - 1), [&](const BigInt& e) {
        return powmod(q, static_cast<u64>(e), n) == 1;
    });
    return static_cast<u64>(order);
}

/// Smallest primitive root modulo the prime n.
inline u64 primitive_root(u64 n) {
    if (!is_prime(n)) throw DomainError("primitive_root: " + std::to_string(n) + " is not prime");
    if (n == 2) return 1;
    const auto fac = factor(n - 1);
    for (u64 g = 2; g < n; ++g) {
        bool generator = true;
        for (const auto& [prime, exponent] : fac) {
            if (powmod(g, (n - 1) / static_cast<u64>(prime), n) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw DomainError("primitive_root: none found");  // unreachable for prime n
}

}  // namespace num
}  // namespace ffdyn

#endif  // FFDYN_INTMATH_HPP
