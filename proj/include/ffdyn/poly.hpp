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

#ifndef FFDYN_POLY_HPP
#define FFDYN_POLY_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ffield.hpp"
#include "intmath.hpp"

namespace ffdyn {

/// Dense univariate polynomial over F_q, low degree first. The stored
/// coefficient vector never ends in zero; the zero polynomial is empty.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}

    Poly(Field field, std::vector<u64> codes) : field_(std::move(field)), c_(std::move(codes)) {
        for (u64 c : c_) {
            if (c >= field_->q()) throw DomainError("polynomial coefficient out of range");
        }
        trim();
    }

    Poly(Field field, const std::vector<FieldElem>& coeffs) : field_(std::move(field)) {
        c_.reserve(coeffs.size());
        for (const FieldElem& c : coeffs) {
            if (!(c.spec() == *field_)) throw DomainError("coefficient from a different field");
            c_.push_back(c.code());
        }
        trim();
    }

    static Poly constant(const FieldElem& c, Field field) { return Poly(std::move(field), std::vector<u64>{c.code()}); }
    static Poly one(Field field) { return Poly(std::move(field), std::vector<u64>{1}); }
    /// c * t^k
    static Poly monomial(Field field, u64 code, std::size_t k) {
        std::vector<u64> c(k + 1, 0);
        c[k] = code;
        return Poly(std::move(field), std::move(c));
    }
    static Poly t(Field field) { return monomial(std::move(field), 1, 1); }

    /// Parses "1,1,1" (coefficient codes, low degree first).
    static Poly parse(Field field, std::string_view text) {
        std::vector<u64> codes;
        std::stringstream ss{std::string(text)};
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                codes.push_back(std::stoull(item));
            } catch (const std::logic_error&) {
                throw DomainError("polynomial text: bad coefficient '" + item + "'");
            }
        }
        return Poly(std::move(field), std::move(codes));
    }

    const Field& field() const { return field_; }
    const FieldSpec& spec() const { return *field_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const {
        if (c_.empty()) throw DomainError("degree of the zero polynomial");
        return c_.size() - 1;
    }
    std::size_t size() const { return c_.size(); }

    const std::vector<u64>& codes() const { return c_; }
    FieldElem coeff(std::size_t i) const { return {field_, i < c_.size() ? c_[i] : 0}; }
    std::vector<FieldElem> coeffs() const {
        std::vector<FieldElem> out;
        out.reserve(c_.size());
        for (u64 c : c_) out.emplace_back(field_, c);
        return out;
    }
    FieldElem lead() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return {field_, c_.back()};
    }

    FieldElem eval(const FieldElem& x) const {
        check(x);
        u64 acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x.code()), c_[i]);
        return {field_, acc};
    }

    Poly monic() const {
        if (c_.empty() || c_.back() == 1) return *this;
        return scaled(field_->inv(c_.back()));
    }

    Poly scaled(u64 code) const {
        if (code == 0) return Poly(field_);
        std::vector<u64> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], code);
        return Poly(field_, std::move(out));
    }
    Poly operator*(const FieldElem& s) const { return scaled(check(s).code()); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<u64> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i % field_->p())));
        return Poly(field_, std::move(out));
    }

    /// Multiplication by t^k.
    Poly shifted(std::size_t k) const {
        if (c_.empty()) return *this;
        std::vector<u64> out(k, 0);
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(field_, std::move(out));
    }

    Poly operator+(const Poly& o) const {
        check(o);
        std::vector<u64> out(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = field_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
        }
        return Poly(field_, std::move(out));
    }
    Poly operator-(const Poly& o) const {
        check(o);
        std::vector<u64> out(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = field_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
        }
        return Poly(field_, std::move(out));
    }
    Poly operator-() const { return Poly(field_) - *this; }
    Poly operator*(const Poly& o) const {
        check(o);
        if (c_.empty() || o.c_.empty()) return Poly(field_);
        std::vector<u64> out(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                out[i + j] = field_->add(out[i + j], field_->mul(c_[i], o.c_[j]));
            }
        }
        return Poly(field_, std::move(out));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(u64 k) const {
        Poly result = one(field_);
        Poly base = *this;
        while (k) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_ && *field_ == *o.field_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Total order used to sort factor lists: by degree, then coefficients
    /// from the top down.
    bool operator<(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
    }

    /// "1,1,1" form (codes, low degree first); "0" for the zero polynomial.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

    /// Human-readable "t^2 + t + 1".
    std::string pretty() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            const bool show_coeff = c_[i] != 1 || i == 0;
            if (show_coeff) s += std::to_string(c_[i]);
            if (i >= 1) {
                if (show_coeff) s += '*';
                s += 't';
                if (i > 1) s += '^' + std::to_string(i);
            }
        }
        return s;
    }

    friend std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Poly& check(const Poly& o) const {
        if (!(*field_ == *o.field_)) throw DomainError("polynomials over different fields");
        return o;
    }
    const FieldElem& check(const FieldElem& x) const {
        if (!(x.spec() == *field_)) throw DomainError("scalar from a different field");
        return x;
    }

    Field field_;
    std::vector<u64> c_;
};

/// Returns (quotient, remainder) with a = quotient*b + remainder and
/// deg remainder < deg b.
inline std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (!(a.spec() == b.spec())) throw DomainError("polynomials over different fields");
    const FieldSpec& F = a.spec();
    std::vector<u64> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) return {Poly(a.field_), a};
    std::vector<u64> q(r.size() - db, 0);
    const u64 inv_lead = F.inv(b.c_.back());
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        const u64 c = F.mul(r[k], inv_lead);
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, b.c_[i]));
    }
    r.resize(db);
    return {Poly(a.field_, std::move(q)), Poly(a.field_, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return poly_divrem(a, b).first; }

/// Monic gcd. gcd(a, 0) = monic(a).
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: g = s*a + u*b with g monic.
struct Bezout {
    Poly g, s, u;
};

inline Bezout poly_xgcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1(F);
    Poly u0(F), u1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    const FieldElem scale = r0.lead().inv();
    return {r0 * scale, s0 * scale, u0 * scale};
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

/// base^k mod m by square-and-multiply.
inline Poly poly_powmod(const Poly& base, const BigInt& k, const Poly& m) {
    if (m.is_zero()) throw DivisionByZeroError("powmod with zero modulus");
    if (k < 0) throw DomainError("powmod with negative exponent");
    Poly result = Poly::one(m.field()) % m;
    if (k == 0) return result;
    Poly b = base % m;
    const std::size_t bits = boost::multiprecision::msb(k) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mulmod(result, result, m);
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i))) result = poly_mulmod(result, b, m);
    }
    return result;
}

inline Poly poly_powmod(const Poly& base, u64 k, const Poly& m) { return poly_powmod(base, BigInt(k), m); }

/// Rabin's test: f of degree d is irreducible iff t^{q^d} = t mod f and
/// gcd(t^{q^{d/r}} - t, f) = 1 for every prime r | d.
inline bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.deg() == 0) return false;
    const std::size_t d = f.deg();
    if (d == 1) return true;
    const Field& F = f.field();
    const Poly t = Poly::t(F) % f;
    const u64 q = F->q();
    auto frobenius_power = [&](std::size_t k) {
        Poly x = t;
        for (std::size_t i = 0; i < k; ++i) x = poly_powmod(x, q, f);
        return x;
    };
    if (frobenius_power(d) != t) return false;
    for (const auto& [r, e] : num::factor(d)) {
        const Poly x = frobenius_power(d / static_cast<std::size_t>(r));
        const Poly diff = x - t;
        if (diff.is_zero() || !poly_gcd(diff, f).is_one()) return false;
    }
    return true;
}

/// unit * prod factor^multiplicity, factors monic irreducible, sorted.
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, unsigned>> factors;

    Poly expand(const Field& field) const {
        Poly acc = Poly::constant(unit, field);
        for (const auto& [f, m] : factors) acc *= f.pow(m);
        return acc;
    }
};

namespace detail {

// p-th root of a polynomial whose derivative vanishes: coefficients live at
// multiples of p, and x -> x^{q/p} inverts Frobenius on F_q.
inline Poly pth_root(const Poly& f) {
    const FieldSpec& F = f.spec();
    const u64 p = F.p();
    const u64 root_exp = F.q() / p;
    std::vector<u64> out(f.deg() / p + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.pow(f.codes()[i * p], root_exp);
    return Poly(f.field(), std::move(out));
}

// Squarefree decomposition of a monic polynomial, multiplicities scaled.
inline void squarefree(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.deg() == 0) return;
    Poly c = poly_gcd(f, f.derivative());
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree(pth_root(c.monic()).monic(), scale * static_cast<unsigned>(f.spec().p()), out);
}

// Distinct-degree split of a monic squarefree polynomial.
inline std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly g) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const Field& F = g.field();
    const Poly t = Poly::t(F);
    Poly h = t % g;
    for (std::size_t d = 1; g.deg() >= 2 * d; ++d) {
        h = poly_powmod(h, F->q(), g);
        Poly fac = poly_gcd(g, h - t);
        if (!fac.is_one()) {
            out.emplace_back(fac, d);
            g = g / fac;
            h = h % g;
        }
    }
    if (g.deg() > 0) out.emplace_back(g, g.deg());
    return out;
}

// Cantor-Zassenhaus equal-degree split of a monic squarefree product of
// irreducibles of degree d. Characteristic 2 uses the absolute trace map.
inline void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    const Field& F = g.field();
    const u64 q = F->q();
    const BigInt half_exp = (num::ipow(BigInt(q), d) - 1) / 2;
    const std::size_t trace_terms = static_cast<std::size_t>(F->e()) * d;
    for (;;) {
        std::vector<u64> coeffs(g.deg());
        for (u64& c : coeffs) c = rng() % q;
        Poly a(F, std::move(coeffs));
        if (a.is_constant()) continue;
        Poly b(F);
        if (F->p() == 2) {
            Poly term = a;
            b = a;
            for (std::size_t i = 1; i < trace_terms; ++i) {
                term = poly_mulmod(term, term, g);
                b += term;
            }
        } else {
            b = poly_powmod(a, half_exp, g) - Poly::one(F);
        }
        if (b.is_zero()) continue;
        Poly h = poly_gcd(b, g);
        if (h.is_one() || h.deg() == g.deg()) continue;
        equal_degree(h, d, rng, out);
        equal_degree(g / h, d, rng, out);
        return;
    }
}

}  // namespace detail

inline constexpr u64 kDefaultFactorSeed = 0x0ffd1a5eedULL;

/// Complete factorization: squarefree, distinct-degree, then equal-degree
/// splitting. Deterministic for a given seed.
inline Factorization factorize(const Poly& a, u64 seed = kDefaultFactorSeed) {
    if (a.is_zero()) throw DomainError("factorize: zero polynomial");
    Factorization out{a.lead(), {}};
    if (a.deg() == 0) return out;
    std::vector<std::pair<Poly, unsigned>> sqf;
    detail::squarefree(a.monic(), 1, sqf);
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [chunk, d] : detail::distinct_degree(part)) {
            std::vector<Poly> irreducibles;
            detail::equal_degree(chunk, d, rng, irreducibles);
            for (Poly& f : irreducibles) out.factors.emplace_back(std::move(f), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    // Merge equal factors coming from different squarefree layers.
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& [f, m] : out.factors) {
        if (!merged.empty() && merged.back().first == f) {
            merged.back().second += m;
        } else {
            merged.emplace_back(std::move(f), m);
        }
    }
    out.factors = std::move(merged);
    return out;
}

/// Resultant in the Sylvester-determinant convention,
/// Res(a, b) = lc(a)^{deg b} * prod_{a(x)=0} b(x), via the Euclidean
/// recurrence.
inline FieldElem resultant(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant with a zero polynomial");
    if (!(a.spec() == b.spec())) throw DomainError("polynomials over different fields");
    const Field F = a.field();
    FieldElem acc = FieldElem::one(F);
    const FieldElem minus_one = -FieldElem::one(F);
    for (;;) {
        const std::size_t da = a.deg(), db = b.deg();
        if (db == 0) return acc * b.lead().pow(da);
        if (da == 0) return acc * a.lead().pow(db);
        if (da < db) {
            if ((da * db) % 2 == 1) acc *= minus_one;
            std::swap(a, b);
            continue;
        }
        Poly r = a % b;
        if (r.is_zero()) return FieldElem::zero(F);
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if ((da * db) % 2 == 1) acc *= minus_one;
        acc *= b.lead().pow(da - r.deg());
        a = std::move(b);
        b = std::move(r);
    }
}

/// Order of the unit group of F_q[t]/(pi^e) for irreducible pi, factored:
/// q^{d(e-1)} (q^d - 1) with d = deg pi.
inline std::pair<BigInt, num::IntFactorization> unit_group_order(const Poly& pi, unsigned e, const num::FactorEffort& effort = {}) {
    const FieldSpec& F = pi.spec();
    const std::size_t d = pi.deg();
    const BigInt qd = num::ipow(BigInt(F.q()), d);
    num::IntFactorization fac = num::factor(qd - 1, effort);
    const u64 p_exp = static_cast<u64>(F.e()) * d * (e - 1);
    if (p_exp > 0) {
        fac.emplace_back(F.p(), static_cast<unsigned>(p_exp));
        std::sort(fac.begin(), fac.end());
    }
    return {num::ipow(qd, e - 1) * (qd - 1), std::move(fac)};
}

/// Multiplicative order of a modulo pi^e, pi irreducible. a must be a unit.
inline BigInt unit_order_prime_power(const Poly& a, const Poly& pi, unsigned e, const num::FactorEffort& effort = {}) {
    const Poly m = pi.pow(e);
    const Poly r = a % m;
    if (r.is_zero() || !poly_gcd(r, pi).is_one()) throw NotAUnitError("element is not a unit modulo " + m.pretty());
    if (m.deg() == 0) return 1;
    const auto [order, fac] = unit_group_order(pi, e, effort);
    return num::order_in_group(order, fac, [&](const BigInt& k) { return poly_powmod(r, k, m).is_one(); });
}

/// Smallest k >= 1 with a^k = 1 mod m. Throws NotAUnitError when
/// gcd(a, m) != 1 and ResourceError when a group order cannot be factored
/// within `effort`.
inline BigInt mult_order_mod(const Poly& a, const Poly& m, const num::FactorEffort& effort = {}) {
    if (m.is_zero()) throw DivisionByZeroError("order modulo the zero polynomial");
    if (m.deg() == 0) return 1;
    if (!poly_gcd(a % m, m).is_one()) throw NotAUnitError("element is not a unit modulo " + m.pretty());
    BigInt order = 1;
    for (const auto& [pi, e] : factorize(m).factors) {
        const BigInt k = unit_order_prime_power(a, pi, e, effort);
        order = order / boost::multiprecision::gcd(order, k) * k;
    }
    return order;
}

}  // namespace ffdyn

#endif  // FFDYN_POLY_HPP
