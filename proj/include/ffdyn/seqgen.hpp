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

#ifndef FFDYN_SEQGEN_HPP
#define FFDYN_SEQGEN_HPP

#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ffield.hpp"
#include "groupalg.hpp"
#include "intmath.hpp"

namespace ffdyn {

/// Legendre symbol (i/n) for an odd prime n, by Euler's criterion.
inline int legendre_symbol(long long i, u64 n) {
    if (n == 2 || !num::is_prime(n)) throw DomainError("legendre_symbol: " + std::to_string(n) + " is not an odd prime");
    long long r = i % static_cast<long long>(n);
    if (r < 0) r += static_cast<long long>(n);
    if (r == 0) return 0;
    return num::powmod(static_cast<u64>(r), (n - 1) / 2, n) == 1 ? 1 : -1;
}

/// f(i) = 0 for quadratic residues mod r = n + 1 and 1 otherwise, i = 1..n.
inline CyclicSeq arnold_log_seq(std::size_t n, const Field& field) {
    const u64 r = n + 1;
    if (n == 0 || !num::is_prime(r)) throw DomainError("arnold_log_seq: n + 1 = " + std::to_string(r) + " is not prime");
    std::vector<u64> codes(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const bool residue = r == 2 || legendre_symbol(static_cast<long long>(i), r) == 1;
        codes[i - 1] = residue ? 0 : 1;
    }
    return {field, std::move(codes)};
}

/// The same 0/1 residue indicator modulo n itself for i < n, and f(n) = 0.
inline CyclicSeq legendre_seq(std::size_t n, const Field& field) {
    if (n == 2 || !num::is_prime(n)) throw DomainError("legendre_seq: n = " + std::to_string(n) + " is not an odd prime");
    std::vector<u64> codes(n, 0);
    for (std::size_t i = 1; i < n; ++i) codes[i - 1] = legendre_symbol(static_cast<long long>(i), n) == 1 ? 0 : 1;
    return {field, std::move(codes)};
}

/// Every multiplicative f: {1..n-1} -> F_q^*, extended by f(n) = 0. With g
/// the smallest primitive root mod n, each a in F_q^* with a^{n-1} = 1
/// gives f(g^k mod n) = a^k. Ordered by the code of a.
inline std::vector<CyclicSeq> multiplicative_family(std::size_t n, const Field& field) {
    if (!num::is_prime(n)) throw DomainError("multiplicative_family: n = " + std::to_string(n) + " is not prime");
    const u64 g = num::primitive_root(n);
    const FieldSpec& F = *field;
    std::vector<CyclicSeq> out;
    for (u64 a = 1; a < F.q(); ++a) {
        if (F.pow(a, n - 1) != 1) continue;
        std::vector<u64> codes(n, 0);
        u64 x = 1, value = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            codes[x - 1] = value;
            x = x * g % n;
            value = F.mul(value, a);
        }
        out.emplace_back(field, std::move(codes));
    }
    return out;
}

/// (1, ..., 1)
inline CyclicSeq constant_seq(std::size_t n, const Field& field, u64 value = 1) {
    return {field, std::vector<u64>(n, value)};
}

/// (1, 0, ..., 1, 0); n must be even.
inline CyclicSeq alternating_seq(std::size_t n, const Field& field) {
    if (n == 0 || n % 2 != 0) throw DomainError("alternating sequence needs even n");
    std::vector<u64> codes(n, 0);
    for (std::size_t i = 0; i < n; i += 2) codes[i] = 1;
    return {field, std::move(codes)};
}

/// The two regular examples: constant ones and, for even n, alternating.
inline std::vector<CyclicSeq> regular_seqs(std::size_t n, const Field& field) {
    std::vector<CyclicSeq> out{constant_seq(n, field)};
    if (n % 2 == 0) out.push_back(alternating_seq(n, field));
    return out;
}

/// Uniform sequence from a seeded mt19937_64 (reproducible per seed).
inline CyclicSeq random_seq(std::size_t n, const Field& field, u64 seed) {
    if (n == 0) throw DomainError("random_seq: n must be positive");
    std::mt19937_64 rng(seed);
    std::vector<u64> codes(n);
    for (u64& c : codes) c = rng() % field->q();
    return {field, std::move(codes)};
}

enum class GeneratorKind { ArnoldLog, Legendre, MultiplicativeCharacter, Constant, Alternating, Random };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Legendre;
    u64 character = 0;  ///< multiplicative: index into multiplicative_family
    u64 value = 1;      ///< constant: value code
    u64 seed = 0;       ///< random
};

inline CyclicSeq generate(const GeneratorSpec& g, std::size_t n, const Field& field) {
    switch (g.kind) {
        case GeneratorKind::ArnoldLog: return arnold_log_seq(n, field);
        case GeneratorKind::Legendre: return legendre_seq(n, field);
        case GeneratorKind::MultiplicativeCharacter: {
            auto fam = multiplicative_family(n, field);
            if (g.character >= fam.size()) {
                throw DomainError("character index " + std::to_string(g.character) + " out of range (family size " + std::to_string(fam.size()) + ")");
            }
            return fam[g.character];
        }
        case GeneratorKind::Constant:
            if (g.value >= field->q()) throw DomainError("constant value out of range");
            return constant_seq(n, field, g.value);
        case GeneratorKind::Alternating: return alternating_seq(n, field);
        case GeneratorKind::Random: return random_seq(n, field, g.seed);
    }
    throw DomainError("unknown generator");
}

}  // namespace ffdyn

#endif  // FFDYN_SEQGEN_HPP
