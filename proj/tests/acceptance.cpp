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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffdyn/ffdyn.hpp"

#ifndef FFDYN_CLI_PATH
#error "FFDYN_CLI_PATH must name the ffdyn executable"
#endif

using namespace ffdyn;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

std::vector<std::pair<u64, std::size_t>> small_cases(const std::vector<u64>& qs, u64 max_states) {
    std::vector<std::pair<u64, std::size_t>> out;
    for (u64 q : qs) {
        u64 states = q;
        for (std::size_t n = 1; states <= max_states; ++n, states *= q) out.emplace_back(q, n);
    }
    return out;
}

const std::vector<u64> kFieldOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

Outcome ac1() {
    Outcome o;
    const auto rows = sweep_census({3, 5, 7, 11, 13}, {2, 3, 4, 5}, u64{1} << 21);
    for (const auto& r : rows) {
        if (!r.pass) {
            o.fail("n=" + std::to_string(r.report.n) + " q=" + std::to_string(r.report.q) + " census " +
                   r.report.census_count->str() + " expected " + r.expected_count.str());
        }
    }
    o.detail = std::to_string(rows.size()) + " (n,q) censuses";
    return o;
}

Outcome ac2() {
    Outcome o;
    const auto rows = sweep_quota_trend(2000, {2, 3}, 100, 2, BigRational(9, 10));
    for (const auto& r : rows) {
        if (r.pass) continue;
        std::ostringstream os;
        os << "n=" << r.n << " q=" << r.q << " d=" << r.d << " quota=" << r.quota.convert_to<double>()
           << (r.bound_holds ? "" : " below (1-1/(n+1))^(n-1)") << (r.above_floor.value_or(true) ? "" : " not above 0.9");
        o.fail(os.str());
    }
    o.detail = std::to_string(rows.size()) + " (n,q) quotas";
    return o;
}

// Definition-level verdict for every state at once: for each operator
// (t - 1) g, enumerate the functional graph and read period and tail length
// of every state directly from it.
std::vector<bool> enumerated_verdicts(const Field& F, std::size_t n) {
    const u64 q = F->q();
    const u64 states = static_cast<u64>(num::ipow(BigInt(q), n));
    const u64 op_count = static_cast<u64>(num::ipow(BigInt(q), n - 1));
    std::vector<bool> ok(states, true);
    const Poly t_minus_1 = Poly::t(F) - Poly::one(F);
    for (u64 idx = 1; idx < op_count; ++idx) {
        const CyclicSeq g = CyclicSeq::from_index(F, n - 1, idx);
        const DiffOperator D = DiffOperator::from_poly(t_minus_1 * Poly(F, g.codes()), n);
        const FunctionalGraph graph = build_graph(D, states);
        const auto& succ = graph.successors();
        std::vector<u64> period(states, 0);
        for (u64 v = 0; v < states; ++v) {
            if (!graph.on_cycle(v) || period[v]) continue;
            u64 len = 1;
            for (u64 w = succ[v]; w != v; w = succ[w]) ++len;
            period[v] = len;
            for (u64 w = succ[v]; w != v; w = succ[w]) period[w] = len;
        }
        u64 max_period = 0, max_depth = 0;
        for (u64 v = 0; v < states; ++v) {
            u64 w = v;
            while (!graph.on_cycle(w)) w = succ[w];
            period[v] = period[w];
            max_period = std::max(max_period, period[v]);
            max_depth = std::max<u64>(max_depth, graph.depths()[v]);
        }
        for (u64 v = 0; v < states; ++v) {
            if (period[v] != max_period || graph.depths()[v] + 1 < max_depth) ok[v] = false;
        }
    }
    return ok;
}

Outcome ac3() {
    Outcome o;
    u64 checked = 0;
    for (const auto& [q, n] : std::vector<std::pair<u64, std::size_t>>{{2, 3}, {2, 5}, {3, 2}, {3, 4}, {5, 2}}) {
        const Field F = FieldSpec::of_order(q);
        const CyclicContext ctx(F, n);
        const DComplexityOracle oracle(ctx);
        const std::vector<bool> enumerated = enumerated_verdicts(F, n);
        const u64 states = static_cast<u64>(num::ipow(BigInt(q), n));
        for (u64 s = 0; s < states; ++s) {
            const CyclicSeq f = CyclicSeq::from_index(F, n, s);
            const bool gcd = ctx.lemma1(seq_to_poly(f));
            const bool brute = oracle.check(f);
            ++checked;
            if (gcd != brute) {
                o.fail(f.to_text() + (gcd ? " gcd true / oracle false" : " gcd false / oracle true"));
            }
            if (brute != enumerated[s]) o.fail(f.to_text() + " oracle disagrees with graph enumeration");
        }
    }
    o.detail = std::to_string(checked) + " sequences, every operator";
    return o;
}

Outcome ac4() {
    Outcome o;
    u64 cases = 0;
    for (const Thm2Sweep& s : sweep_thm2(200, {2, 3, 5, 7}, 50)) {
        for (const Thm2Case& c : s.cases) {
            ++cases;
            if (!c.pass) {
                o.fail("q=" + std::to_string(s.q) + " n=" + std::to_string(c.n) + " product=" + std::to_string(c.product) +
                       " expected=" + std::to_string(c.expected_product) + " gcd=" + (c.gcd_verdict ? "1" : "0"));
            }
        }
    }
    o.detail = std::to_string(cases) + " Legendre sequences";
    return o;
}

Outcome ac5() {
    Outcome o;
    u64 members = 0;
    const auto reports = sweep_thm3(31, {2, 3, 4, 5, 7, 8, 9});
    for (const Thm3Report& r : reports) {
        members += r.family_size;
        if (!r.pass) {
            o.fail("n=" + std::to_string(r.n) + " q=" + std::to_string(r.q) + " size " + std::to_string(r.family_size) +
                   " expected " + std::to_string(r.expected_size));
        }
    }
    o.detail = std::to_string(reports.size()) + " (n,q) families, " + std::to_string(members) + " functions";
    return o;
}

Outcome ac6() {
    Outcome o;
    u64 states_checked = 0, spectra = 0;
    for (const auto& [q, n] : small_cases(kFieldOrders, u64{1} << 16)) {
        const Field F = FieldSpec::of_order(q);
        const DiffOperator D = DiffOperator::delta(F, n);
        const OrbitAnalyzer A(D);
        const u64 states = static_cast<u64>(num::ipow(BigInt(q), n));
        u64 bad = 0;
        for (u64 s = 0; s < states; ++s) {
            const CyclicSeq f = CyclicSeq::from_index(F, n, s);
            const OrbitSummary a = A.orbit(f);
            const OrbitSummary b = orbit_brute(D, f, states);
            if (a.preperiod != b.preperiod || a.period != b.period || a.attractor_entry != b.attractor_entry) ++bad;
        }
        states_checked += states;
        if (bad) o.fail("orbit q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + std::to_string(bad) + " states differ");
        if (states > (u64{1} << 12)) continue;
        const std::vector<DiffOperator> ops{D, DiffOperator::build({FieldElem::zero(F), FieldElem::one(F)}, n, F)};
        for (const DiffOperator& op : ops) {
            ++spectra;
            if (cycle_spectrum(op) != build_graph(op).summary().cycle_spectrum) {
                o.fail("spectrum q=" + std::to_string(q) + " n=" + std::to_string(n) + " op " + op.poly().to_string());
            }
        }
    }
    o.detail = std::to_string(states_checked) + " orbits, " + std::to_string(spectra) + " spectra";
    return o;
}

Outcome ac7() {
    Outcome o;
    u64 cases = 0;
    for (const auto& [q, n] : small_cases(kFieldOrders, u64{1} << 12)) {
        const GraphSummary s = build_graph(DiffOperator::delta(FieldSpec::of_order(q), n)).summary();
        ++cases;
        if (!s.trees_isomorphic || !s.out_degree_one) {
            o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + (s.trees_isomorphic ? "" : " trees differ") +
                   (s.out_degree_one ? "" : " out-degree"));
        }
    }
    o.detail = std::to_string(cases) + " graphs";
    return o;
}

Outcome ac8() {
    Outcome o;
    u64 checked = 0;
    for (const auto& [q, n] : small_cases(kFieldOrders, u64{1} << 12)) {
        const Field F = FieldSpec::of_order(q);
        if (n % F->p() == 0) continue;
        const CyclicContext ctx(F, n);
        const u64 states = static_cast<u64>(num::ipow(BigInt(q), n));
        for (u64 s = 0; s < states; ++s) {
            const CyclicSeq f = CyclicSeq::from_index(F, n, s);
            ++checked;
            if (ctx.is_delta1(f) != ctx.is_delta2(f)) o.fail(f.to_text());
        }
    }
    o.detail = std::to_string(checked) + " sequences";
    return o;
}

Outcome ac9() {
    Outcome o;
    u64 passed = 0, skipped = 0;
    for (const ArnoldRow& r : sweep_arnold_delta2(2, 64)) {
        if (r.status == Status::Pass) ++passed;
        if (r.status == Status::Skip) ++skipped;
        if (r.status == Status::Fail) {
            o.fail("n=" + std::to_string(r.n) + " period " + r.period.str() + " max " + r.max_period.str());
        }
    }
    o.detail = std::to_string(passed) + " pass, " + std::to_string(skipped) + " skipped on resource limits";
    return o;
}

std::string capture(const std::string& args, int& status) {
    const std::string cmd = std::string(FFDYN_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Outcome ac10() {
    Outcome o;
    const std::vector<std::string> commands{"verify thm1", "verify thm2", "verify thm3", "verify arnold-delta2",
                                            "verify thm2 --format csv", "gen --q 7 --n 40 --gen random --seed 12345"};
    for (const std::string& c : commands) {
        int s1 = 0, s2 = 0;
        const std::string a = capture(c, s1), b = capture(c, s2);
        if (a.empty() || s1 != s2 || a != b) o.fail("'" + c + "' output differs between runs");
    }
    o.detail = std::to_string(commands.size()) + " commands run twice";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 quota identity (exhaustive census)", ac1},
        {"AC2 quota trend (bound, and > 0.9 for q=2, 100 <= n <= 2000)", ac2},
        {"AC3 gcd criterion vs brute-force operator oracle", ac3},
        {"AC4 Legendre sequences: 8k+3/8k+5 and eigenvalue product", ac4},
        {"AC5 multiplicative functions are D-complicated", ac5},
        {"AC6 algebraic orbits and spectra vs brute force", ac6},
        {"AC7 isomorphic attractor trees, out-degree one", ac7},
        {"AC8 Delta1 <=> Delta2 when p does not divide n", ac8},
        {"AC9 logarithmic sequence is Delta2-complicated, q=2, n<64", ac9},
        {"AC10 CLI output is byte-identical across runs", ac10},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << o.detail << "; " << secs << " s)";
        std::cout << line.str() << "\n";
        const std::size_t shown = std::min<std::size_t>(o.failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) std::cout << "       " << o.failures[i] << "\n";
        if (o.failures.size() > shown) std::cout << "       ... " << o.failures.size() - shown << " more\n";
        std::cout.flush();
        failed += !o.pass;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " of 10 criteria failed" : std::string("acceptance: all criteria passed"))
              << "\n";
    return failed ? 1 : 0;
}
