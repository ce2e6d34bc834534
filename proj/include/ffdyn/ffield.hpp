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

#ifndef FFDYN_FFIELD_HPP
#define FFDYN_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "intmath.hpp"

namespace ffdyn {

namespace detail {

// Dense polynomials over the prime field F_p as plain residue vectors, low
// degree first. Only used to vet and pick extension moduli.
using FpPoly = std::vector<u64>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 inv_lead = num::powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const u64 c = num::mulmod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - num::mulmod(c, m[i], p)) % p;
        }
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + num::mulmod(a[i], b[j], p)) % p;
        }
    }
    return fp_mod(std::move(prod), m, p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree e is irreducible iff gcd(t^{p^i} - t, f) = 1 for
// every i <= e/2.
inline bool fp_is_irreducible(const FpPoly& f, u64 p) {
    const std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    FpPoly t = fp_mod({0, 1}, f, p);
    FpPoly power = t;
    for (std::size_t i = 1; i <= e / 2; ++i) {
        // power <- power^p mod f
        FpPoly acc = {1};
        FpPoly base = power;
        for (u64 k = p; k; k >>= 1) {
            if (k & 1) acc = fp_mulmod(acc, base, f, p);
            base = fp_mulmod(base, base, f, p);
        }
        power = acc;
        FpPoly diff = power;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        if (diff.empty()) return false;
        if (fp_gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// The finite field F_q, q = p^e. Elements are packed as integer codes
/// c = sum r_i p^i of their residue vectors (r_0 .. r_{e-1}); for prime
/// fields the code is the residue itself.
class FieldSpec {
public:
    /// Prime field F_p.
    static std::shared_ptr<const FieldSpec> prime(u64 p) { return extension(p, 1, {}); }

    /// F_{p^e}; an empty modulus selects the lowest irreducible monic
    /// polynomial of degree e (constant term least significant).
    static std::shared_ptr<const FieldSpec> extension(u64 p, unsigned e, std::vector<u64> modulus) {
        return std::shared_ptr<const FieldSpec>(new FieldSpec(p, e, std::move(modulus)));
    }

    /// F_q for a prime power q with the default modulus.
    static std::shared_ptr<const FieldSpec> of_order(u64 q) {
        if (q < 2) throw DomainError("field order must be a prime power >= 2");
        for (u64 p = 2; p * p <= q; ++p) {
            if (q % p != 0) continue;
            unsigned e = 0;
            u64 rest = q;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (rest != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
            return extension(p, e, {});
        }
        return prime(q);
    }

    /// Parses "q=4;p=2;e=2;mod=1,1,1" or "q=3".
    static std::shared_ptr<const FieldSpec> parse(std::string_view text) {
        std::optional<u64> q, p, e;
        std::vector<u64> modulus;
        std::string s(text);
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("field spec: malformed item '" + item + "'");
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            try {
                if (key == "q") {
                    q = std::stoull(value);
                } else if (key == "p") {
                    p = std::stoull(value);
                } else if (key == "e") {
                    e = std::stoull(value);
                } else if (key == "mod") {
                    std::stringstream vs(value);
                    std::string c;
                    while (std::getline(vs, c, ',')) modulus.push_back(std::stoull(c));
                } else {
                    throw DomainError("field spec: unknown key '" + key + "'");
                }
            } catch (const std::logic_error&) {
                throw DomainError("field spec: bad value for '" + key + "'");
            }
        }
        if (!p && !e && modulus.empty()) {
            if (!q) throw DomainError("field spec: q is required");
            return of_order(*q);
        }
        if (!p) throw DomainError("field spec: p is required with e/mod");
        const unsigned deg = e ? static_cast<unsigned>(*e) : (modulus.empty() ? 1u : static_cast<unsigned>(modulus.size() - 1));
        auto spec = extension(*p, deg, deg == 1 ? std::vector<u64>{} : modulus);
        if (q && *q != spec->q()) throw DomainError("field spec: q does not equal p^e");
        return spec;
    }

    u64 p() const { return p_; }
    unsigned e() const { return e_; }
    u64 q() const { return q_; }
    bool is_prime_field() const { return e_ == 1; }
    /// Monic modulus, low degree first; empty for prime fields.
    const std::vector<u64>& modulus() const { return modulus_; }

    std::string to_string() const {
        std::string s = "q=" + std::to_string(q_);
        if (e_ == 1) return s;
        s += ";p=" + std::to_string(p_) + ";e=" + std::to_string(e_) + ";mod=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(modulus_[i]);
        }
        return s;
    }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }

    std::vector<u64> residues(u64 code) const {
        std::vector<u64> r(e_);
        for (unsigned i = 0; i < e_; ++i) {
            r[i] = code % p_;
            code /= p_;
        }
        return r;
    }

    u64 encode(const std::vector<u64>& r) const {
        u64 code = 0;
        for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i] % p_;
        return code;
    }

    // Code-level arithmetic. Callers guarantee codes lie in [0, q).
    u64 add(u64 a, u64 b) const {
        if (e_ == 1) {
            const u64 s = a + b;
            return (s >= p_ || s < a) ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }

    u64 neg(u64 a) const {
        if (e_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        u64 code = 0, scale = 1;
        for (unsigned i = 0; i < e_; ++i) {
            const u64 r = a % p_;
            a /= p_;
            code += (r == 0 ? 0 : p_ - r) * scale;
            scale *= p_;
        }
        return code;
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        if (e_ == 1) return num::mulmod(a, b, p_);
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) {
            u64 k = log_[a] + log_[b];
            if (k >= q_ - 1) k -= q_ - 1;
            return exp_[k];
        }
        return mul_generic(a, b);
    }

    u64 pow(u64 a, u64 k) const {
        u64 result = 1;
        while (k) {
            if (k & 1) result = mul(result, a);
            a = mul(a, a);
            k >>= 1;
        }
        return result;
    }

    u64 inv(u64 a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(q_));
        if (e_ == 1) return num::powmod(a, p_ - 2, p_);
        if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow(a, q_ - 2);
    }

    /// Image of the integer v under Z -> F_p -> F_q.
    u64 from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<u64>(r);
    }

private:
    FieldSpec(u64 p, unsigned e, std::vector<u64> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (!num::is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
        if (e == 0) throw DomainError("extension degree must be positive");
        u128 q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
            if (q > std::numeric_limits<u64>::max() / 2) throw DomainError("field order exceeds 63 bits");
        }
        q_ = static_cast<u64>(q);
        if (e == 1) {
            if (!modulus_.empty() && !(modulus_.size() == 2 && modulus_[1] == 1)) {
                throw DomainError("prime field takes no modulus");
            }
            modulus_.clear();
            return;
        }
        if (modulus_.empty()) {
            modulus_ = lowest_irreducible(p, e);
        } else {
            for (u64 c : modulus_) {
                if (c >= p) throw DomainError("modulus coefficient out of range");
            }
            if (modulus_.size() != e + 1 || modulus_.back() != 1) {
                throw DomainError("modulus must be monic of degree " + std::to_string(e));
            }
            if (!detail::fp_is_irreducible(modulus_, p)) throw DomainError("modulus is reducible over F_" + std::to_string(p));
        }
        if (p_ != 2 && q_ <= 256) {
            add_table_.resize(q_ * q_);
            for (u64 a = 0; a < q_; ++a) {
                for (u64 b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
            }
        }
        if (q_ <= (u64{1} << 20)) build_log_tables();
    }

    static std::vector<u64> lowest_irreducible(u64 p, unsigned e) {
        u64 count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (u64 low = 0; low < count; ++low) {
            std::vector<u64> f(e + 1);
            u64 c = low;
            for (unsigned i = 0; i < e; ++i) {
                f[i] = c % p;
                c /= p;
            }
            f[e] = 1;
            if (detail::fp_is_irreducible(f, p)) return f;
        }
        throw DomainError("no irreducible polynomial found");  // unreachable
    }

    u64 add_digits(u64 a, u64 b) const {
        u64 code = 0, scale = 1;
        for (unsigned i = 0; i < e_; ++i) {
            code += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return code;
    }

    u64 mul_generic(u64 a, u64 b) const {
        return encode(detail::fp_mulmod(residues(a), residues(b), modulus_, p_));
    }

    void build_log_tables() {
        std::vector<u64> exp(q_ - 1);
        for (u64 g = 2; g < q_; ++g) {
            u64 x = 1;
            bool primitive = true;
            for (u64 k = 0; k + 1 < q_; ++k) {
                exp[k] = x;
                x = mul_generic(x, g);
                if (x == 1 && k + 2 < q_) {
                    primitive = false;
                    break;
                }
            }
            if (!primitive) continue;
            log_.assign(q_, 0);
            for (u64 i = 0; i + 1 < q_; ++i) log_[exp[i]] = i;
            exp_ = std::move(exp);
            return;
        }
        throw DomainError("no primitive element found");  // unreachable
    }

    u64 p_;
    unsigned e_;
    u64 q_ = 0;
    std::vector<u64> modulus_;
    std::vector<u64> add_table_;
    std::vector<u64> log_;
    std::vector<u64> exp_;
};

using Field = std::shared_ptr<const FieldSpec>;

/// An element of F_q. Holds a non-owning pointer to its field; the Field
/// handle that created it must outlive it.
class FieldElem {
public:
    FieldElem(const Field& field, u64 code) : FieldElem(field.get(), code) {}
    FieldElem(const FieldSpec* spec, u64 code) : spec_(spec), code_(code) {
        if (code >= spec->q()) throw DomainError("element code " + std::to_string(code) + " out of range for F_" + std::to_string(spec->q()));
    }

    static FieldElem zero(const Field& f) { return {f, 0}; }
    static FieldElem one(const Field& f) { return {f, 1}; }
    static FieldElem from_int(const Field& f, long long v) { return {f, f->from_int(v)}; }
    static FieldElem from_residues(const Field& f, const std::vector<u64>& r) {
        if (r.size() != f->e()) throw DomainError("residue vector length must equal e");
        for (u64 c : r) {
            if (c >= f->p()) throw DomainError("residue out of range");
        }
        return {f, f->encode(r)};
    }

    const FieldSpec& spec() const { return *spec_; }
    const FieldSpec* spec_ptr() const { return spec_; }
    u64 code() const { return code_; }
    std::vector<u64> residues() const { return spec_->residues(code_); }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    FieldElem operator+(const FieldElem& o) const { return {spec_, spec_->add(code_, check(o).code_)}; }
    FieldElem operator-(const FieldElem& o) const { return {spec_, spec_->sub(code_, check(o).code_)}; }
    FieldElem operator*(const FieldElem& o) const { return {spec_, spec_->mul(code_, check(o).code_)}; }
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem operator-() const { return {spec_, spec_->neg(code_)}; }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inv() const { return {spec_, spec_->inv(code_)}; }
    FieldElem pow(u64 k) const { return {spec_, spec_->pow(code_, k)}; }

    /// Equality of values; elements of different fields never compare equal.
    bool operator==(const FieldElem& o) const { return code_ == o.code_ && same_field(o); }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    bool same_field(const FieldElem& o) const { return spec_ == o.spec_ || *spec_ == *o.spec_; }

private:
    const FieldElem& check(const FieldElem& o) const {
        if (!same_field(o)) throw DomainError("operands belong to different fields");
        return o;
    }

    const FieldSpec* spec_;
    u64 code_;
};

inline FieldElem fe_add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem fe_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline FieldElem fe_inv(const FieldElem& a) { return a.inv(); }

inline std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.code(); }

}  // namespace ffdyn

#endif  // FFDYN_FFIELD_HPP
