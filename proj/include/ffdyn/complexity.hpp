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

#ifndef FFDYN_COMPLEXITY_HPP
#define FFDYN_COMPLEXITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynamics.hpp"
#include "errors.hpp"
#include "ffield.hpp"
#include "groupalg.hpp"
#include "intmath.hpp"
#include "poly.hpp"
#include "seqgen.hpp"

namespace ffdyn {

struct ProjectionEntry {
    Poly factor;
    unsigned multiplicity = 1;
    bool is_ideal_I = false;  ///< the factor t - 1 (constant sequences)
    bool projection_nonzero = false;
};

/// Projections of f~ onto the local components of t^n - 1.
struct ProjectionProfile {
    std::vector<ProjectionEntry> entries;

    /// Every projection away from t - 1 is nonzero.
    bool invertible_on_zero_sum() const {
        for (const auto& e : entries) {
            if (!e.is_ideal_I && !e.projection_nonzero) return false;
        }
        return true;
    }
};

enum class Method { Lemma1Gcd, BruteForceOracle };

inline const char* method_name(Method m) { return m == Method::Lemma1Gcd ? "lemma1-gcd" : "brute-force-oracle"; }

struct ComplexityVerdict {
    bool is_delta1 = false;
    bool is_delta2 = false;
    bool is_d_complicated = false;
    Method method = Method::Lemma1Gcd;
    /// A factor f~ shares with (t^n-1)/(t-1), or an operator that fails.
    std::optional<std::string> witness;
};

struct Caps {
    u64 states = kDefaultStateCap;
    u64 operators = u64{1} << 16;
    num::FactorEffort effort{};
};

/// Cached structure for one (F_q, n): the split of t^n - 1, the cofactor
/// Phi = (t^n - 1)/(t - 1) and the orbit analysis of Delta.
class CyclicContext {
public:
    CyclicContext(Field field, std::size_t n, const num::FactorEffort& effort = {})
        : field_(std::move(field)),
          n_(n),
          split_(crt_split(n, field_)),
          phi_(cyclic_modulus(field_, n) / (Poly::t(field_) - Poly::one(field_))),
          effort_(effort) {}

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    const std::vector<std::pair<Poly, unsigned>>& split() const { return split_; }
    const Poly& cofactor() const { return phi_; }
    /// Built on first use: it needs unit orders, hence integer factoring.
    const OrbitAnalyzer& delta_analyzer() const {
        if (!delta_) {
            delta_.emplace(DiffOperator::delta(field_, n_), split_, effort_);
            delta_max_period_ = delta_->max_period();
            delta_max_pre_ = delta_->max_preperiod();
        }
        return *delta_;
    }
    /// p | n: the characteristic divides the length, t^n - 1 is not squarefree.
    bool p_divides_n() const { return n_ % field_->p() == 0; }

    ProjectionProfile projection_profile(const CyclicSeq& f) const {
        check(f);
        const Poly ft = seq_to_poly(f);
        const Poly t_minus_1 = Poly::t(field_) - Poly::one(field_);
        ProjectionProfile out;
        for (const auto& [pi, e] : split_) {
            out.entries.push_back({pi, e, pi == t_minus_1, !(ft % pi).is_zero()});
        }
        return out;
    }

    /// gcd(f~, Phi) = 1. When it fails and `witness` is given, stores the
    /// common factor.
    bool lemma1(const Poly& ft, std::string* witness = nullptr) const {
        if (ft.is_zero()) {
            if (phi_.is_one()) return true;
            if (witness) *witness = phi_.pretty();
            return false;
        }
        const Poly g = poly_gcd(ft, phi_);
        if (!g.is_one() && witness) *witness = g.pretty();
        return g.is_one();
    }

    bool is_delta2(const CyclicSeq& f) const {
        check(f);
        return delta_analyzer().orbit_shape(seq_to_poly(f)).second == delta_max_period_;
    }

    bool is_delta1(const CyclicSeq& f) const {
        check(f);
        const auto [pre, period] = delta_analyzer().orbit_shape(seq_to_poly(f));
        return period == delta_max_period_ && pre + 1 >= delta_max_pre_;
    }

    /// prod_{m=1}^{n-1} lambda_m = Res(Phi, f~), the product of the
    /// circulant eigenvalues f~(zeta^m) over the nontrivial n-th roots.
    FieldElem eigen_product(const CyclicSeq& f) const {
        check(f);
        if (n_ < 2) throw DomainError("eigen_product needs n >= 2");
        const Poly ft = seq_to_poly(f);
        if (ft.is_zero()) return FieldElem::zero(field_);
        return resultant(phi_, ft);
    }

    void check(const CyclicSeq& f) const {
        if (f.n() != n_ || !(f.spec() == *field_)) throw DomainError("sequence does not match the context (field or length)");
    }

private:
    Field field_;
    std::size_t n_;
    std::vector<std::pair<Poly, unsigned>> split_;
    Poly phi_;
    num::FactorEffort effort_;
    mutable std::optional<OrbitAnalyzer> delta_;
    mutable BigInt delta_max_period_;
    mutable u64 delta_max_pre_ = 0;
};

/// Literal check of the definition: f is almost most complicated for every
/// differential operator. The operators are the nonzero residues mod
/// t^n - 1 vanishing at 1, i.e. (t - 1) g with g != 0, deg g < n - 1.
class DComplexityOracle {
public:
    DComplexityOracle(const CyclicContext& ctx, const Caps& caps = {}) : ctx_(&ctx) {
        const Field& F = ctx.field();
        const std::size_t n = ctx.n();
        const u64 q = F->q();
        u64 count = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (count > caps.operators / q + 1) throw ResourceError("d_complicated_oracle: operator count exceeds cap");
            count *= q;
        }
        if (count - 1 > caps.operators) throw ResourceError("d_complicated_oracle: operator count exceeds cap");
        const Poly t_minus_1 = Poly::t(F) - Poly::one(F);
        for (u64 idx = 1; idx < count; ++idx) {
            std::vector<u64> g(n > 1 ? n - 1 : 0);
            u64 x = idx;
            for (u64& c : g) {
                c = x % q;
                x /= q;
            }
            const DiffOperator D = DiffOperator::from_poly(t_minus_1 * Poly(F, std::move(g)), n);
            OrbitAnalyzer a(D, ctx.split(), caps.effort);
            const BigInt mp = a.max_period();
            const u64 mpre = a.max_preperiod();
            ops_.push_back({std::move(a), mp, mpre});
        }
    }

    std::size_t operator_count() const { return ops_.size(); }

    bool check(const CyclicSeq& f, std::string* witness = nullptr) const {
        ctx_->check(f);
        const Poly ft = seq_to_poly(f);
        for (const auto& op : ops_) {
            const auto [pre, period] = op.analyzer.orbit_shape(ft);
            if (period != op.max_period || pre + 1 < op.max_preperiod) {
                if (witness) *witness = op.analyzer.op().poly().pretty();
                return false;
            }
        }
        return true;
    }

private:
    struct Entry {
        OrbitAnalyzer analyzer;
        BigInt max_period;
        u64 max_preperiod;
    };
    const CyclicContext* ctx_;
    std::vector<Entry> ops_;
};

inline bool d_complicated_oracle(const CyclicSeq& f, const Caps& caps = {}) {
    const CyclicContext ctx(f.field(), f.n(), caps.effort);
    return DComplexityOracle(ctx, caps).check(f);
}

inline ProjectionProfile projection_profile(const CyclicSeq& f) { return CyclicContext(f.field(), f.n()).projection_profile(f); }

/// Classifies f. For p not dividing n the gcd criterion decides
/// D-complexity; otherwise the oracle runs within `caps`.
inline ComplexityVerdict classify(const CyclicContext& ctx, const CyclicSeq& f, const Caps& caps = {}) {
    ctx.check(f);
    ComplexityVerdict v;
    v.is_delta1 = ctx.is_delta1(f);
    v.is_delta2 = ctx.is_delta2(f);
    std::string witness;
    if (!ctx.p_divides_n()) {
        v.method = Method::Lemma1Gcd;
        v.is_d_complicated = ctx.lemma1(seq_to_poly(f), &witness);
    } else {
        u64 states = 1;
        for (std::size_t i = 0; i < ctx.n(); ++i) {
            if (states > caps.states / ctx.field()->q()) throw ResourceError("p | n and q^n exceeds the state cap; verdict withheld");
            states *= ctx.field()->q();
        }
        v.method = Method::BruteForceOracle;
        v.is_d_complicated = DComplexityOracle(ctx, caps).check(f, &witness);
    }
    if (!v.is_d_complicated) v.witness = witness;
    return v;
}

inline ComplexityVerdict is_d_complicated(const CyclicSeq& f, const Caps& caps = {}) {
    const CyclicContext ctx(f.field(), f.n(), caps.effort);
    return classify(ctx, f, caps);
}

inline bool is_delta1(const CyclicSeq& f) { return CyclicContext(f.field(), f.n()).is_delta1(f); }
inline bool is_delta2(const CyclicSeq& f) { return CyclicContext(f.field(), f.n()).is_delta2(f); }
inline FieldElem eigen_product(const CyclicSeq& f) { return CyclicContext(f.field(), f.n()).eigen_product(f); }

struct QuotaReport {
    u64 n = 0;
    u64 q = 0;
    u64 d = 0;  ///< order of q mod n
    BigRational quota_formula;
    std::optional<BigInt> census_count;
    std::optional<BigInt> state_count;
    std::optional<BigRational> census_quota;

    bool census_matches() const { return census_quota && *census_quota == quota_formula; }
};

/// (1 - q^{-d})^{(n-1)/d} with d the order of q mod the prime n.
inline QuotaReport quota(u64 n, u64 q) {
    if (!num::is_prime(n)) throw DomainError("quota: n = " + std::to_string(n) + " is not prime");
    const Field F = FieldSpec::of_order(q);
    if (F->p() == n) throw DomainError("quota: n equals the characteristic");
    QuotaReport r;
    r.n = n;
    r.q = q;
    r.d = num::mult_order_int(q % n, n);
    const BigInt qd = num::ipow(BigInt(q), r.d);
    const u64 k = (n - 1) / r.d;
    r.quota_formula = BigRational(num::ipow(qd - 1, k), num::ipow(qd, k));
    return r;
}

/// Counts gcd-criterion D-complicated sequences among all q^n.
inline QuotaReport census(u64 n, u64 q, u64 cap = kDefaultStateCap * 4) {
    QuotaReport r = quota(n, q);
    const Field F = FieldSpec::of_order(q);
    u64 count = 1;
    for (u64 i = 0; i < n; ++i) {
        if (count > cap / q) throw ResourceError("census: q^n exceeds the state cap");
        count *= q;
    }
    const Poly phi = cyclic_modulus(F, n) / (Poly::t(F) - Poly::one(F));
    // Phi is squarefree (p != n): coprime to Phi iff no irreducible factor
    // of Phi divides f~.
    std::vector<Poly> factors;
    for (const auto& [pi, e] : factorize(phi).factors) factors.push_back(pi);
    const FieldSpec& spec = *F;
    std::vector<u64> codes(n, 0);
    u64 good = 0;
    for (u64 s = 0; s < count; ++s) {
        bool coprime = true;
        for (const Poly& pi : factors) {
            // Horner reduction of f~ modulo pi on raw codes.
            const auto& m = pi.codes();
            const std::size_t dm = m.size() - 1;
            std::vector<u64> r(dm, 0);
            for (std::size_t i = n; i-- > 0;) {
                // r <- r * t + c_i  (mod pi), pi monic
                const u64 top = dm ? r[dm - 1] : 0;
                for (std::size_t k = dm; k-- > 1;) r[k] = spec.sub(r[k - 1], spec.mul(top, m[k]));
                if (dm) r[0] = spec.sub(0, spec.mul(top, m[0]));
                const u64 ci = codes[(i + n - 1) % n];
                if (dm) r[0] = spec.add(r[0], ci);
            }
            bool zero = true;
            for (u64 c : r) zero = zero && c == 0;
            if (zero) {
                coprime = false;
                break;
            }
        }
        if (coprime) ++good;
        for (std::size_t i = 0; i < n; ++i) {
            if (++codes[i] < q) break;
            codes[i] = 0;
        }
    }
    r.census_count = good;
    r.state_count = count;
    r.census_quota = BigRational(BigInt(good), BigInt(count));
    return r;
}

struct Thm2Case {
    u64 n = 0;
    u64 closest = 0;            ///< integer nearest n/4
    u64 expected_product = 0;   ///< closed form reduced into F_q (code)
    u64 product = 0;            ///< eigen_product (code)
    bool gcd_verdict = false;
    bool aliquant_predicts = false;
    std::optional<bool> mod8_predicts;  ///< q = 2 only
    bool pass = false;
};

/// Checks the Legendre sequence against the eigenvalue-product closed form
/// k^{(n-1)/2} (n = 4k+1) or (k+1)^{(n-1)/2} (n = 4k+3), the aliquant
/// prediction, and for q = 2 the 8k+3 / 8k+5 characterization.
inline std::vector<Thm2Case> verify_thm2(const std::vector<u64>& primes, const Field& field) {
    std::vector<Thm2Case> out;
    const u64 p = field->p();
    for (u64 n : primes) {
        if (n == 2 || !num::is_prime(n)) throw DomainError("verify_thm2: n = " + std::to_string(n) + " is not an odd prime");
        if (n == p) throw DomainError("verify_thm2: n equals the characteristic");
        const CyclicContext ctx(field, n);
        const CyclicSeq f = legendre_seq(n, field);
        Thm2Case c;
        c.n = n;
        const u64 k = n / 4;
        c.closest = n % 4 == 1 ? k : k + 1;
        c.expected_product = FieldElem::from_int(field, static_cast<long long>(c.closest % p)).pow((n - 1) / 2).code();
        c.product = ctx.eigen_product(f).code();
        c.gcd_verdict = ctx.lemma1(seq_to_poly(f));
        c.aliquant_predicts = c.closest % p != 0;
        bool ok = c.product == c.expected_product && c.gcd_verdict == c.aliquant_predicts && (c.product != 0) == c.gcd_verdict;
        if (field->q() == 2) {
            c.mod8_predicts = n % 8 == 3 || n % 8 == 5;
            ok = ok && *c.mod8_predicts == c.gcd_verdict;
        }
        c.pass = ok;
        out.push_back(c);
    }
    return out;
}

struct Thm3Report {
    u64 n = 0;
    u64 q = 0;
    u64 family_size = 0;
    u64 expected_size = 0;  ///< gcd(n - 1, q - 1)
    std::vector<std::pair<CyclicSeq, bool>> members;
    bool pass = false;
};

/// Every multiplicative function mod n is D-complicated.
inline Thm3Report verify_thm3(u64 n, const Field& field) {
    if (!num::is_prime(n)) throw DomainError("verify_thm3: n = " + std::to_string(n) + " is not prime");
    if (n == field->p()) throw DomainError("verify_thm3: n equals the characteristic");
    const CyclicContext ctx(field, n);
    Thm3Report r;
    r.n = n;
    r.q = field->q();
    r.expected_size = std::gcd(n - 1, r.q - 1);
    bool all = true;
    for (CyclicSeq& f : multiplicative_family(n, field)) {
        const bool ok = ctx.lemma1(seq_to_poly(f));
        all = all && ok;
        r.members.emplace_back(std::move(f), ok);
    }
    r.family_size = r.members.size();
    r.pass = all && r.family_size == r.expected_size;
    return r;
}

}  // namespace ffdyn

#endif  // FFDYN_COMPLEXITY_HPP
