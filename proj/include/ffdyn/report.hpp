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

#ifndef FFDYN_REPORT_HPP
#define FFDYN_REPORT_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "complexity.hpp"
#include "dynamics.hpp"
#include "groupalg.hpp"
#include "verify.hpp"

// JSON and CSV encodings of analysis results. JSON is the stable surface,
// versioned by kReportSchema.

namespace ffdyn::report {

using nlohmann::json;

inline constexpr const char* kReportSchema = "ffdyn-report/1";

/// Integers up to 2^53 as JSON numbers, larger ones as decimal strings.
inline json big(const BigInt& v) {
    if (v >= 0 && v <= (BigInt(1) << 53)) return static_cast<u64>(v);
    return v.str();
}

inline std::string rational(const BigRational& r) {
    std::ostringstream os;
    os << numerator(r) << '/' << denominator(r);
    return os.str();
}

inline json envelope(const std::string& command) { return json{{"schema", kReportSchema}, {"command", command}}; }

inline json seq_json(const CyclicSeq& f) {
    json j{{"q", f.spec().q()}, {"n", f.n()}, {"values", f.codes()}};
    if (!f.spec().is_prime_field()) j["field"] = f.spec().to_string();
    return j;
}

/// Reads {"q":..,"n":..,"values":[..]}, with an optional "field" spec text
/// for extension fields.
inline CyclicSeq seq_from_json(const json& j) {
    const Field F = j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>())
                                        : FieldSpec::of_order(j.at("q").get<u64>());
    CyclicSeq f(F, j.at("values").get<std::vector<u64>>());
    if (f.n() != j.at("n").get<std::size_t>()) throw DomainError("sequence JSON: n does not match values");
    return f;
}

inline json spectrum_json(const CycleSpectrum& s) {
    json j = json::object();
    for (const auto& [len, count] : s) j[len.str()] = big(count);
    return j;
}

inline std::string spectrum_csv(const CycleSpectrum& s) {
    std::string out = "length,count\n";
    for (const auto& [len, count] : s) out += len.str() + "," + count.str() + "\n";
    return out;
}

inline json orbit_json(const OrbitSummary& o) {
    return json{{"preperiod", o.preperiod}, {"period", big(o.period)}, {"attractorEntry", o.attractor_entry.codes()}};
}

inline json profile_json(const ProjectionProfile& p) {
    json arr = json::array();
    for (const auto& e : p.entries) {
        arr.push_back({{"factor", e.factor.to_string()},
                       {"pretty", e.factor.pretty()},
                       {"multiplicity", e.multiplicity},
                       {"idealI", e.is_ideal_I},
                       {"projectionNonzero", e.projection_nonzero}});
    }
    return arr;
}

inline json verdict_json(const ComplexityVerdict& v) {
    json j{{"isDelta1", v.is_delta1}, {"isDelta2", v.is_delta2}, {"isDComplicated", v.is_d_complicated}, {"method", method_name(v.method)}};
    j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    return j;
}

inline json quota_json(const QuotaReport& r) {
    json j{{"n", r.n}, {"q", r.q}, {"d", r.d}, {"quotaFormula", rational(r.quota_formula)}};
    if (r.census_count) {
        j["censusCount"] = big(*r.census_count);
        j["stateCount"] = big(*r.state_count);
        j["censusQuota"] = rational(*r.census_quota);
        j["matchesFormula"] = r.census_matches();
    }
    return j;
}

inline std::string quota_csv(const std::vector<QuotaReport>& rows) {
    std::string out = "n,q,d,quota_formula,census_count,state_count,matches\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.q) + "," + std::to_string(r.d) + "," + rational(r.quota_formula) + ",";
        out += (r.census_count ? r.census_count->str() : "") + "," + (r.state_count ? r.state_count->str() : "") + ",";
        out += r.census_count ? (r.census_matches() ? "true" : "false") : "";
        out += "\n";
    }
    return out;
}

inline json graph_json(const GraphSummary& g) {
    json j{{"stateCount", g.state_count},
           {"cycleSpectrum", spectrum_json(g.cycle_spectrum)},
           {"attractorStates", g.attractor_states},
           {"treeDepth", g.tree_depth},
           {"treeShapeHash", g.tree_shape_hash},
           {"treesIsomorphic", g.trees_isomorphic},
           {"outDegreeOne", g.out_degree_one}};
    j["perNodeIndegree"] = g.uniform_indegree ? json(*g.uniform_indegree) : json(nullptr);
    return j;
}

inline json census_rows_json(const std::vector<CensusRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j = quota_json(r.report);
        j["expectedCount"] = big(r.expected_count);
        j["pass"] = r.pass;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline json trend_rows_json(const std::vector<TrendRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j{{"n", r.n}, {"q", r.q}, {"d", r.d}, {"quota", rational(r.quota)},
               {"quotaApprox", static_cast<double>(r.quota)}, {"boundHolds", r.bound_holds}, {"pass", r.pass}};
        j["aboveFloor"] = r.above_floor ? json(*r.above_floor) : json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr;
}

inline json thm2_json(const std::vector<Thm2Sweep>& sweeps) {
    json arr = json::array();
    for (const auto& s : sweeps) {
        for (const auto& c : s.cases) {
            json j{{"q", s.q}, {"n", c.n}, {"closest", c.closest}, {"expected", c.expected_product}, {"got", c.product},
                   {"gcdVerdict", c.gcd_verdict}, {"aliquantPredicts", c.aliquant_predicts}, {"pass", c.pass}};
            j["mod8Predicts"] = c.mod8_predicts ? json(*c.mod8_predicts) : json(nullptr);
            arr.push_back(std::move(j));
        }
    }
    return arr;
}

inline json thm3_json(const std::vector<Thm3Report>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json members = json::array();
        for (const auto& [f, ok] : r.members) members.push_back({{"values", f.codes()}, {"dComplicated", ok}});
        arr.push_back({{"n", r.n}, {"q", r.q}, {"expected", r.expected_size}, {"got", r.family_size}, {"members", members}, {"pass", r.pass}});
    }
    return arr;
}

inline json arnold_json(const std::vector<ArnoldRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n}, {"status", status_name(r.status)}, {"period", big(r.period)}, {"expected", big(r.max_period)},
                       {"preperiod", r.preperiod}, {"maxPreperiod", r.max_preperiod}, {"note", r.note}});
    }
    return arr;
}

}  // namespace ffdyn::report

#endif  // FFDYN_REPORT_HPP
