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

#ifndef FFDYN_GROUPALG_HPP
#define FFDYN_GROUPALG_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ffield.hpp"
#include "poly.hpp"

// The group algebra F_q C_n = F_q[t]/(t^n - 1): closed sequences, the
// finite-difference operator and general differential operators.

namespace ffdyn {

/// A closed sequence f(1..n) over F_q; index arithmetic is cyclic and
/// f(0) = f(n).
class CyclicSeq {
public:
    CyclicSeq(Field field, std::vector<u64> codes) : field_(std::move(field)), v_(std::move(codes)) {
        if (v_.empty()) throw DomainError("sequence length must be at least 1");
        for (u64 c : v_) {
            if (c >= field_->q()) throw DomainError("sequence value out of range for F_" + std::to_string(field_->q()));
        }
    }

    CyclicSeq(Field field, const std::vector<FieldElem>& values) : field_(std::move(field)) {
        if (values.empty()) throw DomainError("sequence length must be at least 1");
        for (const FieldElem& x : values) {
            if (!(x.spec() == *field_)) throw DomainError("sequence value from a different field");
            v_.push_back(x.code());
        }
    }

    static CyclicSeq zero(Field field, std::size_t n) { return {std::move(field), std::vector<u64>(n, 0)}; }

    /// The state with base-q rank `index` (f(1) least significant).
    static CyclicSeq from_index(Field field, std::size_t n, u64 index) {
        std::vector<u64> codes(n);
        const u64 q = field->q();
        for (std::size_t i = 0; i < n; ++i) {
            codes[i] = index % q;
            index /= q;
        }
        return {std::move(field), std::move(codes)};
    }

    /// Parses "q=2 n=5 0,1,1,0,0".
    static CyclicSeq parse(std::string_view text) {
        std::stringstream ss{std::string(text)};
        std::string field_part, n_part, values_part;
        if (!(ss >> field_part >> n_part >> values_part)) throw DomainError("sequence text: expected '<field> n=<n> <values>'");
        Field field = FieldSpec::parse(field_part);
        if (n_part.rfind("n=", 0) != 0) throw DomainError("sequence text: expected n=<n>");
        std::size_t n = 0;
        try {
            n = std::stoull(n_part.substr(2));
        } catch (const std::logic_error&) {
            throw DomainError("sequence text: bad n");
        }
        CyclicSeq s = parse_values(field, values_part);
        if (s.n() != n) throw DomainError("sequence text: n does not match the number of values");
        return s;
    }

    /// Parses comma-separated value codes "0,1,1,0,0".
    static CyclicSeq parse_values(Field field, std::string_view values) {
        std::vector<u64> codes;
        std::stringstream vs{std::string(values)};
        std::string item;
        while (std::getline(vs, item, ',')) {
            try {
                codes.push_back(std::stoull(item));
            } catch (const std::logic_error&) {
                throw DomainError("sequence text: bad value '" + item + "'");
            }
        }
        return {std::move(field), std::move(codes)};
    }

    const Field& field() const { return field_; }
    const FieldSpec& spec() const { return *field_; }
    std::size_t n() const { return v_.size(); }
    const std::vector<u64>& codes() const { return v_; }

    /// f(i) for any integer i, reduced cyclically into 1..n.
    FieldElem at(long long i) const {
        const long long n = static_cast<long long>(v_.size());
        long long k = ((i - 1) % n + n) % n;
        return {field_, v_[static_cast<std::size_t>(k)]};
    }

    std::vector<FieldElem> values() const {
        std::vector<FieldElem> out;
        out.reserve(v_.size());
        for (u64 c : v_) out.emplace_back(field_, c);
        return out;
    }

    bool is_zero() const {
        for (u64 c : v_) {
            if (c) return false;
        }
        return true;
    }

    u64 index() const {
        u64 idx = 0;
        for (std::size_t i = v_.size(); i-- > 0;) idx = idx * field_->q() + v_[i];
        return idx;
    }

    bool operator==(const CyclicSeq& o) const { return v_ == o.v_ && *field_ == *o.field_; }
    bool operator!=(const CyclicSeq& o) const { return !(*this == o); }

    /// "0,1,1,0,0"
    std::string values_text() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v_[i]);
        }
        return s;
    }

    /// "q=2 n=5 0,1,1,0,0"
    std::string to_text() const { return field_->to_string() + " n=" + std::to_string(v_.size()) + " " + values_text(); }

    /// Compact label "01100"; falls back to the comma form when q > 10.
    std::string label() const {
        if (field_->q() > 10) return values_text();
        std::string s;
        for (u64 c : v_) s += static_cast<char>('0' + c);
        return s;
    }

private:
    Field field_;
    std::vector<u64> v_;
};

/// t^n - 1 over the given field.
inline Poly cyclic_modulus(const Field& field, std::size_t n) {
    std::vector<u64> c(n + 1, 0);
    c[0] = field->neg(1);
    c[n] = field->add(c[n], 1);
    return Poly(field, std::move(c));
}

/// Reduction modulo t^n - 1 by folding exponents.
inline Poly reduce_cyclic(const Poly& a, std::size_t n) {
    if (a.size() <= n) return a;
    const FieldSpec& F = a.spec();
    std::vector<u64> out(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i % n] = F.add(out[i % n], a.codes()[i]);
    return Poly(a.field(), std::move(out));
}

/// f~(t) = sum_{i=0}^{n-1} f(i) t^i with f(0) = f(n).
inline Poly seq_to_poly(const CyclicSeq& f) {
    const std::size_t n = f.n();
    std::vector<u64> c(n);
    c[0] = f.codes()[n - 1];
    for (std::size_t i = 1; i < n; ++i) c[i] = f.codes()[i - 1];
    return Poly(f.field(), std::move(c));
}

/// Inverse of seq_to_poly; reduces modulo t^n - 1 first.
inline CyclicSeq poly_to_seq(const Poly& a, std::size_t n) {
    const Poly r = reduce_cyclic(a, n);
    std::vector<u64> codes(n, 0);
    for (std::size_t i = 0; i < r.size(); ++i) codes[(i + n - 1) % n] = r.codes()[i];
    return {a.field(), std::move(codes)};
}

/// x'_i = x_{i+1} - x_i with x_{n+1} = x_1.
inline CyclicSeq delta(const CyclicSeq& f) {
    const FieldSpec& F = f.spec();
    const auto& v = f.codes();
    const std::size_t n = v.size();
    std::vector<u64> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = F.sub(v[(i + 1) % n], v[i]);
    return {f.field(), std::move(out)};
}

/// A differential operator sum d_i Delta^i, stored as the algebra element
/// it multiplies by, reduced modulo t^n - 1. The element always vanishes
/// at t = 1; it can be zero when a power of Delta is nilpotent (p | n).
class DiffOperator {
public:
    /// Delta itself: x'_i = x_{i+1} - x_i is multiplication by t^{n-1} - 1.
    static DiffOperator delta(Field field, std::size_t n) {
        if (n == 0) throw DomainError("operator length must be at least 1");
        Poly op = Poly::monomial(field, 1, n - 1) - Poly::one(field);
        return DiffOperator(std::move(field), n, std::move(op));
    }

    /// sum_{i=1}^m d_i Delta^i for d = (d_1, ..., d_m).
    static DiffOperator build(const std::vector<FieldElem>& d, std::size_t n, Field field) {
        if (n == 0) throw DomainError("operator length must be at least 1");
        bool any = false;
        for (const FieldElem& c : d) {
            if (!(c.spec() == *field)) throw DomainError("operator coefficient from a different field");
            any = any || !c.is_zero();
        }
        if (!any) throw DegenerateOperatorError("all operator coefficients are zero");
        const Poly base = delta(field, n).poly();
        Poly power = Poly::one(field);
        Poly acc(field);
        for (const FieldElem& c : d) {
            power = reduce_cyclic(power * base, n);
            acc += power * c;
        }
        return DiffOperator(std::move(field), n, reduce_cyclic(acc, n));
    }

    /// Wraps an algebra element; it must vanish at t = 1.
    static DiffOperator from_poly(const Poly& op, std::size_t n) {
        if (n == 0) throw DomainError("operator length must be at least 1");
        Poly r = reduce_cyclic(op, n);
        if (!r.eval(FieldElem::one(r.field())).is_zero()) throw DomainError("operator polynomial must vanish at t = 1");
        Field field = r.field();
        return DiffOperator(std::move(field), n, std::move(r));
    }

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    const Poly& poly() const { return op_; }

    bool operator==(const DiffOperator& o) const { return n_ == o.n_ && op_ == o.op_; }

private:
    DiffOperator(Field field, std::size_t n, Poly op) : field_(std::move(field)), n_(n), op_(std::move(op)) {}

    Field field_;
    std::size_t n_;
    Poly op_;
};

/// Applies an operator to raw value codes in place of CyclicSeq objects;
/// the hot loop of orbit and graph enumeration.
class OperatorStepper {
public:
    explicit OperatorStepper(const DiffOperator& D) : spec_(D.field().get()), n_(D.n()) {
        const auto& c = D.poly().codes();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i]) terms_.emplace_back(i, c[i]);
        }
    }

    // Works on f~ coefficient order: out_j = sum_i op_i * in_{(j - i) mod n}.
    // The 1-based sequence layout is a fixed rotation of f~, and
    // multiplication commutes with rotation, so sequence codes can be fed
    // directly.
    void step(const u64* in, u64* out) const {
        for (std::size_t j = 0; j < n_; ++j) out[j] = 0;
        for (const auto& [shift, coeff] : terms_) {
            for (std::size_t j = 0; j < n_; ++j) {
                const std::size_t src = (j + n_ - shift % n_) % n_;
                if (in[src]) out[j] = spec_->add(out[j], spec_->mul(coeff, in[src]));
            }
        }
    }

    std::size_t n() const { return n_; }

private:
    const FieldSpec* spec_;
    std::size_t n_;
    std::vector<std::pair<std::size_t, u64>> terms_;
};

/// The sequence of opPoly * f~ mod (t^n - 1).
inline CyclicSeq apply_op(const DiffOperator& D, const CyclicSeq& f) {
    if (D.n() != f.n()) throw DomainError("operator and sequence lengths differ");
    if (!(D.field()->operator==(f.spec()))) throw DomainError("operator and sequence fields differ");
    std::vector<u64> out(f.n());
    OperatorStepper(D).step(f.codes().data(), out.data());
    return {f.field(), std::move(out)};
}

/// Factorization of t^n - 1 into (monic irreducible, multiplicity) pairs;
/// the decomposition of the algebra into local components.
inline std::vector<std::pair<Poly, unsigned>> crt_split(std::size_t n, const Field& field) {
    if (n == 0) throw DomainError("crt_split: n must be at least 1");
    return factorize(cyclic_modulus(field, n)).factors;
}

}  // namespace ffdyn

#endif  // FFDYN_GROUPALG_HPP
