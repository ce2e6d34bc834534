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

#ifndef FFDYN_VERIFY_HPP
#define FFDYN_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "seqgen.hpp"

// Verification sweeps over ranges of (n, q). Every sweep returns one row per
// case so failures localize.

namespace ffdyn {

inline std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n) {
        if (num::is_prime(n)) out.push_back(n);
    }
    return out;
}

struct CensusRow {
    QuotaReport report;
    BigInt expected_count;  ///< quota_formula * q^n
    bool pass = false;
};

/// Exhaustive census against the quota formula for every prime n in `ns`
/// and q in `qs` with n != p and q^n <= cap.
inline std::vector<CensusRow> sweep_census(const std::vector<u64>& ns, const std::vector<u64>& qs, u64 cap) {
    std::vector<CensusRow> rows;
    for (u64 q : qs) {
        const u64 p = FieldSpec::of_order(q)->p();
        for (u64 n : ns) {
            if (n == p) continue;
            if (num::ipow(BigInt(q), n) > cap) continue;
            CensusRow row{census(n, q, cap), 0, false};
            const BigRational expected = row.report.quota_formula * BigRational(*row.report.state_count);
            row.pass = denominator(expected) == 1 && numerator(expected) == *row.report.census_count;
            row.expected_count = numerator(expected);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

struct TrendRow {
    u64 n = 0;
    u64 q = 0;
    u64 d = 0;
    BigRational quota;
    bool bound_holds = false;          ///< quota >= (1 - 1/(n+1))^{n-1}
    std::optional<bool> above_floor;   ///< quota > floor, where the floor applies
    bool pass = false;
};

/// The lower bound implied by q^d >= n + 1 for all primes n <= max_n, and a
/// fixed floor on the quota for primes in [floor_from, max_n] when q equals
/// floor_q.
inline std::vector<TrendRow> sweep_quota_trend(u64 max_n, const std::vector<u64>& qs, u64 floor_from, u64 floor_q,
                                               const BigRational& floor) {
    std::vector<TrendRow> rows;
    for (u64 q : qs) {
        const u64 p = FieldSpec::of_order(q)->p();
        for (u64 n : primes_in(2, max_n)) {
            if (n == p) continue;
            const QuotaReport r = quota(n, q);
            TrendRow row;
            row.n = n;
            row.q = q;
            row.d = r.d;
            row.quota = r.quota_formula;
            const BigRational bound(num::ipow(BigInt(n), n - 1), num::ipow(BigInt(n + 1), n - 1));
            row.bound_holds = row.quota >= bound;
            if (q == floor_q && n >= floor_from) row.above_floor = row.quota > floor;
            row.pass = row.bound_holds && row.above_floor.value_or(true);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

struct Thm2Sweep {
    u64 q = 0;
    std::vector<Thm2Case> cases;
};

/// Legendre sequences: q = 2 for odd primes up to `q2_max`, and every q in
/// `qs` for odd primes up to `max_n` (n != p).
inline std::vector<Thm2Sweep> sweep_thm2(u64 q2_max, const std::vector<u64>& qs, u64 max_n) {
    std::vector<Thm2Sweep> out;
    {
        const Field F = FieldSpec::of_order(2);
        out.push_back({2, verify_thm2(primes_in(3, q2_max), F)});
    }
    for (u64 q : qs) {
        const Field F = FieldSpec::of_order(q);
        std::vector<u64> ns;
        for (u64 n : primes_in(3, max_n)) {
            if (n != F->p()) ns.push_back(n);
        }
        out.push_back({q, verify_thm2(ns, F)});
    }
    return out;
}

inline std::vector<Thm3Report> sweep_thm3(u64 max_n, const std::vector<u64>& qs) {
    std::vector<Thm3Report> out;
    for (u64 q : qs) {
        const Field F = FieldSpec::of_order(q);
        for (u64 n : primes_in(2, max_n)) {
            if (n == F->p()) continue;
            out.push_back(verify_thm3(n, F));
        }
    }
    return out;
}

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "?";
}

struct ArnoldRow {
    u64 n = 0;
    Status status = Status::Skip;
    BigInt period = 0;
    BigInt max_period = 0;
    u64 preperiod = 0;
    u64 max_preperiod = 0;
    std::string note;
};

/// Arnold's logarithmic sequence is Delta_2-complicated for every n < bound
/// with n + 1 prime. Resource errors are reported as SKIP.
inline std::vector<ArnoldRow> sweep_arnold_delta2(u64 q, u64 bound, const num::FactorEffort& effort = {}) {
    const Field F = FieldSpec::of_order(q);
    std::vector<ArnoldRow> rows;
    for (u64 n = 1; n < bound; ++n) {
        if (!num::is_prime(n + 1)) continue;
        ArnoldRow row;
        row.n = n;
        try {
            const CyclicContext ctx(F, n, effort);
            const CyclicSeq f = arnold_log_seq(n, F);
            const auto [pre, period] = ctx.delta_analyzer().orbit_shape(seq_to_poly(f));
            row.period = period;
            row.preperiod = pre;
            row.max_period = ctx.delta_analyzer().max_period();
            row.max_preperiod = ctx.delta_analyzer().max_preperiod();
            row.status = ctx.is_delta2(f) ? Status::Pass : Status::Fail;
        } catch (const ResourceError& e) {
            row.status = Status::Skip;
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ffdyn

#endif  // FFDYN_VERIFY_HPP
