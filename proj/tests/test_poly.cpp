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

#include <gtest/gtest.h>

#include <random>

#include "ffdyn/poly.hpp"
#include "oracles.hpp"

using namespace ffdyn;

namespace {

Poly P(const Field& F, const char* text) { return Poly::parse(F, text); }

Poly sum_t(const Field& F, std::size_t n) { return Poly(F, std::vector<u64>(n, 1)); }

}  // namespace

TEST(Poly, CanonicalForm) {
    const Field F = FieldSpec::prime(3);
    const Poly z(F, {0, 0, 0});
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.degree().has_value());
    EXPECT_THROW((void)z.deg(), DomainError);
    const Poly a(F, {1, 2, 0, 0});
    EXPECT_EQ(a.deg(), 1u);
    EXPECT_EQ(a.codes().size(), 2u);
    EXPECT_EQ(a.to_string(), "1,2");
    EXPECT_EQ(P(F, "1,0,2").pretty(), "2*t^2 + 1");
    EXPECT_THROW(Poly(F, std::vector<u64>{3}), DomainError);
    EXPECT_THROW(P(F, "1,x"), DomainError);
}

TEST(Poly, DivremExamples) {
    const Field F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3);
    {
        auto [q, r] = poly_divrem(P(F2, "1,0,0,1"), P(F2, "1,1"));
        EXPECT_EQ(q, P(F2, "1,1,1"));
        EXPECT_TRUE(r.is_zero());
    }
    {
        auto [q, r] = poly_divrem(P(F3, "0,0,1"), P(F3, "2,1"));  // t^2 / (t - 1)
        EXPECT_EQ(q, P(F3, "1,1"));
        EXPECT_EQ(r, Poly::one(F3));
    }
    {
        const Poly a = P(F3, "2,0,1,1");
        auto [q, r] = poly_divrem(a, a);
        EXPECT_EQ(q, Poly::one(F3));
        EXPECT_TRUE(r.is_zero());
    }
    EXPECT_THROW(poly_divrem(P(F3, "1,1"), Poly(F3)), DivisionByZeroError);
    EXPECT_THROW(poly_divrem(P(F3, "1,1"), P(F2, "1,1")), DomainError);
}

TEST(Poly, GcdExamples) {
    const Field F2 = FieldSpec::prime(2);
    EXPECT_EQ(poly_gcd(P(F2, "0,0,1,1"), sum_t(F2, 5)), Poly::one(F2));
    const Field F5 = FieldSpec::prime(5);
    const Poly a = P(F5, "1,3,2");
    EXPECT_EQ(poly_gcd(a, Poly(F5)), a.monic());
    EXPECT_EQ(poly_gcd(Poly(F5), a), a.monic());
    EXPECT_EQ(poly_gcd(P(F2, "1,1,1"), P(F2, "1,0,1,0,1")), P(F2, "1,1,1"));
    EXPECT_THROW(poly_gcd(Poly(F5), Poly(F5)), DomainError);
}

TEST(Poly, PowmodExamples) {
    const Field F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3);
    EXPECT_EQ(poly_powmod(P(F2, "1,1"), u64{3}, P(F2, "1,1,1")), Poly::one(F2));
    EXPECT_EQ(poly_powmod(P(F2, "1,1"), u64{2}, P(F2, "1,1,1")), Poly::t(F2));
    const Poly m = P(F3, "2,0,0,0,0,1");  // t^5 - 1
    EXPECT_EQ(poly_powmod(Poly::t(F3), u64{5}, m), Poly::one(F3));
    EXPECT_EQ(poly_powmod(P(F3, "1,2,1"), u64{0}, m), Poly::one(F3));
    EXPECT_TRUE(poly_powmod(P(F3, "1,2"), u64{0}, Poly::one(F3)).is_zero());  // 1 mod 1 = 0
    EXPECT_THROW(poly_powmod(Poly::t(F3), u64{2}, Poly(F3)), DivisionByZeroError);
}

TEST(Poly, FactorizeExamples) {
    const Field F2 = FieldSpec::prime(2);
    {
        const auto f = factorize(sum_t(F2, 5));
        ASSERT_EQ(f.factors.size(), 1u);
        EXPECT_EQ(f.factors[0].first.deg(), 4u);
        EXPECT_TRUE(oracle::brute_irreducible(f.factors[0].first));
    }
    {
        const auto f = factorize(sum_t(F2, 7));
        ASSERT_EQ(f.factors.size(), 2u);
        EXPECT_EQ(f.factors[0].first, P(F2, "1,1,0,1"));
        EXPECT_EQ(f.factors[1].first, P(F2, "1,0,1,1"));
        EXPECT_EQ(f.factors[0].first * f.factors[1].first, sum_t(F2, 7));
    }
    {
        const auto f = factorize(P(F2, "1,0,0,0,0,0,1"));  // t^6 - 1
        ASSERT_EQ(f.factors.size(), 2u);
        EXPECT_EQ(f.factors[0], std::make_pair(P(F2, "1,1"), 2u));
        EXPECT_EQ(f.factors[1], std::make_pair(P(F2, "1,1,1"), 2u));
        EXPECT_EQ(P(F2, "1,1").pow(2) * P(F2, "1,1,1").pow(2), P(F2, "1,0,0,0,0,0,1"));
    }
    EXPECT_THROW(factorize(Poly(F2)), DomainError);
}

TEST(Poly, ResultantExamples) {
    const Field F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3);
    EXPECT_EQ(resultant(P(F3, "2,1"), P(F3, "1,1")), FieldElem(F3, 2));  // Res(t - 1, t - 2)
    const Poly a = sum_t(F2, 5), b = P(F2, "0,0,1,1");
    EXPECT_EQ(resultant(a, b), FieldElem::one(F2));
    EXPECT_EQ(oracle::sylvester_resultant(a, b), FieldElem::one(F2));
    EXPECT_EQ(resultant(P(F3, "1,2,2,1"), Poly::one(F3)), FieldElem::one(F3));
    EXPECT_THROW(resultant(Poly(F3), Poly::one(F3)), DomainError);
}

TEST(Poly, MultOrderExamples) {
    const Field F2 = FieldSpec::prime(2);
    const Poly m = P(F2, "1,1,1");
    EXPECT_EQ(mult_order_mod(P(F2, "1,1"), m), 3);
    EXPECT_EQ(mult_order_mod(Poly::one(F2), m), 1);
    EXPECT_EQ(mult_order_mod(Poly::one(F2), P(F2, "1,0,1,1,0,1")), 1);
    EXPECT_EQ(mult_order_mod(Poly::t(F2), m), 3);
    EXPECT_THROW(mult_order_mod(P(F2, "1,1"), P(F2, "1,0,1")), NotAUnitError);
    EXPECT_THROW(mult_order_mod(Poly(F2), m), NotAUnitError);
    EXPECT_THROW(mult_order_mod(Poly::t(F2), Poly(F2)), DivisionByZeroError);
}

TEST(Poly, MultOrderResourceError) {
    // Unit group of F_2[t]/(pi) with deg pi = 67 has order 2^67 - 1, whose
    // factors exceed a tiny factoring budget.
    const Field F2 = FieldSpec::prime(2);
    std::vector<u64> c(68, 0);
    c[0] = c[1] = c[2] = c[5] = c[67] = 1;  // t^67 + t^5 + t^2 + t + 1
    const Poly pi(F2, c);
    ASSERT_TRUE(is_irreducible(pi));
    EXPECT_THROW(mult_order_mod(Poly::t(F2), pi, {1000, 1}), ResourceError);
}

class PolyProperties : public ::testing::TestWithParam<u64> {};

TEST_P(PolyProperties, DivremGcdBezout) {
    const Field F = FieldSpec::of_order(GetParam());
    std::mt19937_64 rng(GetParam());
    for (int i = 0; i < 200; ++i) {
        const Poly a = oracle::random_poly(F, 9, rng);
        const Poly b = oracle::random_nonzero_poly(F, 6, rng);
        auto [q, r] = poly_divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.deg() < b.deg());
        const Poly g = poly_gcd(a, b);
        EXPECT_EQ(g, poly_gcd(b, a));
        EXPECT_TRUE(g.lead().is_one());
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        EXPECT_EQ(poly_gcd(b, b), b.monic());
        const Bezout z = poly_xgcd(a, b);
        EXPECT_EQ(z.g, g);
        EXPECT_EQ(z.s * a + z.u * b, g);
    }
}

TEST_P(PolyProperties, FactorizationReconstructs) {
    const Field F = FieldSpec::of_order(GetParam());
    std::mt19937_64 rng(GetParam() + 100);
    for (int i = 0; i < 60; ++i) {
        Poly a = oracle::random_nonzero_poly(F, 8, rng);
        if (i % 3 == 0) a = a * a;  // repeated factors
        if (i % 5 == 0) a = a * oracle::random_nonzero_poly(F, 3, rng).pow(F->p());  // p-th powers
        const Factorization f = factorize(a);
        EXPECT_EQ(f.expand(F), a) << a.to_string();
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            const Poly& pi = f.factors[k].first;
            EXPECT_TRUE(pi.lead().is_one());
            if (pi.deg() <= 4) {
                EXPECT_TRUE(oracle::brute_irreducible(pi)) << pi.to_string();
            }
            EXPECT_TRUE(is_irreducible(pi));
            if (k) EXPECT_FALSE(f.factors[k - 1].first == pi);
        }
    }
}

TEST_P(PolyProperties, FactorizeIsSeedIndependent) {
    const Field F = FieldSpec::of_order(GetParam());
    std::mt19937_64 rng(GetParam() + 200);
    for (int i = 0; i < 20; ++i) {
        const Poly a = oracle::random_nonzero_poly(F, 10, rng);
        const auto x = factorize(a, 1), y = factorize(a, 99);
        EXPECT_EQ(x.factors, y.factors);
    }
}

TEST_P(PolyProperties, ResultantSylvesterAndMultiplicativity) {
    const Field F = FieldSpec::of_order(GetParam());
    std::mt19937_64 rng(GetParam() + 300);
    for (int i = 0; i < 150; ++i) {
        const Poly a = oracle::random_nonzero_poly(F, 4, rng);
        const Poly b = oracle::random_nonzero_poly(F, 3, rng);
        const Poly c = oracle::random_nonzero_poly(F, 5, rng);
        if (a.deg() + c.deg() <= 6 && a.deg() + c.deg() > 0) {
            EXPECT_EQ(resultant(a, c), oracle::sylvester_resultant(a, c)) << a.to_string() << " | " << c.to_string();
        }
        if (b.deg() + c.deg() > 0) {
            EXPECT_EQ(resultant(b, c), oracle::sylvester_resultant(b, c));
        }
        EXPECT_EQ(resultant(a * b, c), resultant(a, c) * resultant(b, c));
        // Res(a, c) = 0 exactly when they share a factor.
        EXPECT_EQ(resultant(a, c).is_zero(), !poly_gcd(a, c).is_constant());
    }
}

TEST_P(PolyProperties, IrreducibleCountsMatchNecklaceFormula) {
    const Field F = FieldSpec::of_order(GetParam());
    const u64 q = F->q();
    for (std::size_t d = 1; d <= 4; ++d) {
        if (num::ipow(BigInt(q), d) > 5000) break;
        u64 fast = 0, brute = 0;
        for (const Poly& f : oracle::monic_polys(F, d)) {
            const bool x = is_irreducible(f);
            fast += x;
            if (d <= 3) brute += oracle::brute_irreducible(f);
            if (d <= 3) EXPECT_EQ(x, oracle::brute_irreducible(f)) << f.to_string();
        }
        EXPECT_EQ(BigInt(fast), oracle::count_irreducible(q, d)) << "d=" << d;
        if (d <= 3) EXPECT_EQ(fast, brute);
    }
}

TEST_P(PolyProperties, OrderDividesGroupOrder) {
    const Field F = FieldSpec::of_order(GetParam());
    const u64 q = F->q();
    std::mt19937_64 rng(GetParam() + 400);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (const Poly& m : oracle::monic_polys(F, d)) {
            if (!is_irreducible(m)) continue;
            for (int i = 0; i < 3; ++i) {
                const Poly a = oracle::random_nonzero_poly(F, d - 1, rng);
                const BigInt k = mult_order_mod(a, m);
                EXPECT_EQ((num::ipow(BigInt(q), d) - 1) % k, 0);
                EXPECT_EQ(BigInt(oracle::brute_order(a, m)), k);
            }
        }
    }
    // Composite moduli, including repeated factors.
    for (int i = 0; i < 40; ++i) {
        Poly m = oracle::random_nonzero_poly(F, 2, rng);
        if (m.deg() == 0) continue;
        m = (m * m).monic();
        const Poly a = oracle::random_nonzero_poly(F, 5, rng);
        if (!poly_gcd(a, m).is_one()) {
            EXPECT_THROW(mult_order_mod(a, m), NotAUnitError);
            continue;
        }
        EXPECT_EQ(BigInt(oracle::brute_order(a, m)), mult_order_mod(a, m)) << a.to_string() << " mod " << m.to_string();
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, PolyProperties, ::testing::Values(2, 3, 4, 5, 7, 8, 9));

TEST(Poly, IrreducibilityRejectsProductOfSmallDegrees) {
    // (t + 1)(t^2 + t + 1)(t^3 + t + 1) over F_2 has degree 6; t^{2^6} = t
    // modulo it, so a test that only looks at the top Frobenius power fails.
    const Field F2 = FieldSpec::prime(2);
    const Poly f = P(F2, "1,1") * P(F2, "1,1,1") * P(F2, "1,1,0,1");
    EXPECT_EQ(poly_powmod(Poly::t(F2), u64{64}, f), Poly::t(F2));
    EXPECT_FALSE(is_irreducible(f));
    EXPECT_FALSE(oracle::brute_irreducible(f));
}
