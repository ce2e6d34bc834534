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

// ffdyn command-line entry point.
//
//   ffdyn classify --q 2 --n 5 --gen legendre
//   ffdyn orbit --q 2 --n 3 --seq 1,0,0
//   ffdyn graph --q 2 --n 3 --format dot
//   ffdyn spectrum --q 2 --n 7
//   ffdyn census --q 2 --n 7
//   ffdyn gen --q 3 --n 5 --gen mult
//   ffdyn verify thm1|thm2|thm3|arnold-delta2|all
//
// Exit status: 0 success, 1 verification failure, 2 usage or domain error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffdyn/ffdyn.hpp"

namespace {

using namespace ffdyn;
using report::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string command;
    std::string target;  // verify only
    std::optional<u64> q, p, e;
    std::string modulus;
    std::optional<std::size_t> n;
    std::string seq;
    std::string gen;
    std::optional<u64> character;
    u64 value = 1;
    std::string op;
    std::string format = "json";
    std::optional<u64> cap_states;
    u64 cap_ops = u64{1} << 16;
    u64 rho_iterations = u64{1} << 22;
    std::optional<u64> seed;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Field make_field(const RunConfig& c) {
    if (c.p) {
        std::string text = "p=" + std::to_string(*c.p) + ";e=" + std::to_string(c.e.value_or(1));
        if (!c.modulus.empty()) text += ";mod=" + c.modulus;
        if (c.q) text += ";q=" + std::to_string(*c.q);
        return FieldSpec::parse(text);
    }
    if (!c.q) throw UsageError("a field is required: --q Q or --p P [--e E --mod ...]");
    if (c.e || !c.modulus.empty()) throw UsageError("--e/--mod need --p");
    return FieldSpec::of_order(*c.q);
}

std::size_t require_n(const RunConfig& c) {
    if (!c.n || *c.n == 0) throw UsageError("--n N (N >= 1) is required");
    return *c.n;
}

GeneratorSpec generator_spec(const RunConfig& c) {
    GeneratorSpec g;
    if (c.gen == "legendre") {
        g.kind = GeneratorKind::Legendre;
    } else if (c.gen == "arnold") {
        g.kind = GeneratorKind::ArnoldLog;
    } else if (c.gen == "mult") {
        g.kind = GeneratorKind::MultiplicativeCharacter;
        g.character = c.character.value_or(0);
    } else if (c.gen == "const") {
        g.kind = GeneratorKind::Constant;
        g.value = c.value;
    } else if (c.gen == "alt") {
        g.kind = GeneratorKind::Alternating;
    } else if (c.gen == "random") {
        if (!c.seed) throw UsageError("--gen random requires --seed");
        g.kind = GeneratorKind::Random;
        g.seed = *c.seed;
    } else {
        throw UsageError("unknown generator '" + c.gen + "'");
    }
    return g;
}

CyclicSeq sequence(const RunConfig& c, const Field& F, std::size_t n) {
    if (c.seq.empty() == c.gen.empty()) throw UsageError("exactly one of --seq or --gen is required");
    if (!c.seq.empty()) {
        CyclicSeq f = CyclicSeq::parse_values(F, c.seq);
        if (f.n() != n) throw UsageError("--seq has " + std::to_string(f.n()) + " values but --n is " + std::to_string(n));
        return f;
    }
    return generate(generator_spec(c), n, F);
}

DiffOperator op(const RunConfig& c, const Field& F, std::size_t n) {
    if (c.op.empty()) return DiffOperator::delta(F, n);
    std::vector<FieldElem> d;
    const Poly coeffs = Poly::parse(F, c.op);
    for (u64 code : coeffs.codes()) d.emplace_back(F, code);
    // Poly::parse trims trailing zeros; an all-zero list leaves d empty.
    return DiffOperator::build(d, n, F);
}

std::string op_text(const RunConfig& c) { return c.op.empty() ? "delta" : c.op; }

Caps caps(const RunConfig& c) {
    Caps k;
    k.states = c.cap_states.value_or(kDefaultStateCap);
    k.operators = c.cap_ops;
    k.effort.rho_iterations = c.rho_iterations;
    return k;
}

// Quotes a cell when it holds a separator, quote or newline.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string esc = "\"";
    for (char ch : s) esc += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return esc + "\"";
}

// Flat CSV from an array of JSON objects. Columns are the sorted union of
// keys over all rows; nested values are emitted as compact JSON in a quoted
// cell.
std::string rows_csv(const json& rows) {
    if (rows.empty()) return "";
    std::set<std::string> key_set;
    for (const auto& row : rows) {
        for (const auto& [k, v] : row.items()) key_set.insert(k);
    }
    const std::vector<std::string> keys(key_set.begin(), key_set.end());
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i) out += ",";
            const json& v = row.contains(keys[i]) ? row.at(keys[i]) : json(nullptr);
            if (v.is_string()) {
                out += csv_cell(v.get<std::string>());
            } else if (v.is_null()) {
            } else if (v.is_structured()) {
                out += csv_cell(v.dump());
            } else {
                out += v.dump();
            }
        }
        out += "\n";
    }
    return out;
}

std::string emit(const RunConfig& c, const json& doc, const json& rows) {
    if (c.format == "json") return doc.dump(2) + "\n";
    if (c.format == "csv") return rows_csv(rows.is_array() ? rows : json::array({rows}));
    if (c.format == "text") {
        std::string out;
        const json& arr = rows.is_array() ? rows : json::array({rows});
        for (const auto& row : arr) {
            std::string line;
            for (const auto& [k, v] : row.items()) {
                if (v.is_structured()) continue;
                line += (line.empty() ? "" : "  ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out += line + "\n";
        }
        return out;
    }
    throw UsageError("format '" + c.format + "' is not supported by '" + c.command + "'");
}

int cmd_classify(const RunConfig& c, std::string& out) {
    const Field F = make_field(c);
    const std::size_t n = require_n(c);
    const CyclicSeq f = sequence(c, F, n);
    const Caps k = caps(c);
    const CyclicContext ctx(F, n, k.effort);
    const ComplexityVerdict v = classify(ctx, f, k);
    json doc = report::envelope("classify");
    doc["field"] = F->to_string();
    doc["sequence"] = report::seq_json(f);
    json row = report::verdict_json(v);
    row["n"] = n;
    row["q"] = F->q();
    for (const auto& [key, value] : row.items()) doc[key] = value;
    doc["projection"] = report::profile_json(ctx.projection_profile(f));
    if (n >= 2) {
        doc["eigenProduct"] = ctx.eigen_product(f).code();
        row["eigenProduct"] = ctx.eigen_product(f).code();
    }
    out = emit(c, doc, row);
    return kExitOk;
}

int cmd_orbit(const RunConfig& c, std::string& out) {
    const Field F = make_field(c);
    const std::size_t n = require_n(c);
    const CyclicSeq f = sequence(c, F, n);
    const DiffOperator D = op(c, F, n);
    const Caps k = caps(c);
    const OrbitAnalyzer a(D, k.effort);
    const OrbitSummary o = a.orbit(f);
    json doc = report::envelope("orbit");
    doc["field"] = F->to_string();
    doc["operator"] = op_text(c);
    doc["sequence"] = report::seq_json(f);
    json row = report::orbit_json(o);
    row["maxPeriod"] = report::big(a.max_period());
    row["maxPreperiod"] = a.max_preperiod();
    const BigInt states = num::ipow(BigInt(F->q()), n);
    if (states <= k.states) {
        const OrbitSummary b = orbit_brute(D, f, static_cast<u64>(states) + 1);
        row["bruteAgrees"] = b.preperiod == o.preperiod && b.period == o.period;
    }
    for (const auto& [key, value] : row.items()) doc[key] = value;
    row.erase("attractorEntry");
    out = emit(c, doc, row);
    return kExitOk;
}

int cmd_graph(const RunConfig& c, std::string& out) {
    const Field F = make_field(c);
    const std::size_t n = require_n(c);
    const DiffOperator D = op(c, F, n);
    const FunctionalGraph g = build_graph(D, caps(c).states);
    if (c.format == "dot") {
        out = g.to_dot();
        return kExitOk;
    }
    json doc = report::envelope("graph");
    doc["field"] = F->to_string();
    doc["n"] = n;
    doc["operator"] = op_text(c);
    doc["summary"] = report::graph_json(g.summary());
    if (c.format == "csv") {
        std::string s = "state,successor,on_cycle,depth\n";
        for (u64 i = 0; i < g.successors().size(); ++i) {
            s += csv_cell(g.state(i).label()) + "," + csv_cell(g.state(g.successors()[i]).label()) + "," + (g.on_cycle(i) ? "1" : "0") + "," +
                 std::to_string(g.depths()[i]) + "\n";
        }
        out = s;
        return kExitOk;
    }
    out = emit(c, doc, report::graph_json(g.summary()));
    return kExitOk;
}

int cmd_spectrum(const RunConfig& c, std::string& out) {
    const Field F = make_field(c);
    const std::size_t n = require_n(c);
    const DiffOperator D = op(c, F, n);
    const OrbitAnalyzer a(D, caps(c).effort);
    const CycleSpectrum s = a.cycle_spectrum();
    if (c.format == "csv") {
        out = report::spectrum_csv(s);
        return kExitOk;
    }
    json doc = report::envelope("spectrum");
    doc["field"] = F->to_string();
    doc["n"] = n;
    doc["operator"] = op_text(c);
    doc["spectrum"] = report::spectrum_json(s);
    doc["maxPeriod"] = report::big(a.max_period());
    doc["maxPreperiod"] = a.max_preperiod();
    json rows = json::array();
    for (const auto& [len, count] : s) rows.push_back({{"length", report::big(len)}, {"count", report::big(count)}});
    out = emit(c, doc, rows);
    return kExitOk;
}

int cmd_census(const RunConfig& c, std::string& out) {
    if (!c.q) throw UsageError("census needs --q");
    const std::size_t n = require_n(c);
    const QuotaReport r = census(n, *c.q, c.cap_states.value_or(u64{1} << 22));
    json doc = report::envelope("census");
    const json row = report::quota_json(r);
    for (const auto& [key, value] : row.items()) doc[key] = value;
    if (c.format == "csv") {
        out = report::quota_csv({r});
        return kExitOk;
    }
    out = emit(c, doc, row);
    return r.census_matches() ? kExitOk : kExitVerifyFailed;
}

int cmd_gen(const RunConfig& c, std::string& out) {
    const Field F = make_field(c);
    const std::size_t n = require_n(c);
    std::vector<CyclicSeq> seqs;
    if (c.gen == "mult" && !c.character) {
        seqs = multiplicative_family(n, F);
    } else {
        seqs.push_back(sequence(c, F, n));
    }
    if (c.format == "text") {
        for (const auto& f : seqs) out += f.to_text() + "\n";
        return kExitOk;
    }
    json doc = report::envelope("gen");
    doc["generator"] = c.gen.empty() ? "literal" : c.gen;
    json arr = json::array();
    for (const auto& f : seqs) arr.push_back(report::seq_json(f));
    doc["sequences"] = arr;
    json rows = json::array();
    for (const auto& f : seqs) rows.push_back({{"q", F->q()}, {"n", n}, {"values", f.values_text()}});
    out = emit(c, doc, rows);
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::string& out) {
    const std::vector<std::string> all = {"thm1", "thm2", "thm3", "arnold-delta2"};
    std::vector<std::string> targets;
    if (c.target == "all") {
        targets = all;
    } else if (std::find(all.begin(), all.end(), c.target) != all.end()) {
        targets = {c.target};
    } else {
        throw UsageError("verify target must be one of thm1, thm2, thm3, arnold-delta2, all");
    }
    json doc = report::envelope("verify");
    json rows = json::array();
    bool pass = true;
    std::string text;
    auto add = [&](const std::string& target, const json& cases) {
        bool ok = true;
        for (const auto& row : cases) {
            const bool row_ok = row.contains("pass") ? row.at("pass").get<bool>() : row.at("status") != "FAIL";
            ok = ok && row_ok;
            json r = row;
            r["target"] = target;
            rows.push_back(r);
        }
        doc["targets"][target] = {{"cases", cases}, {"pass", ok}};
        pass = pass && ok;
    };
    for (const auto& t : targets) {
        if (t == "thm1") {
            add("thm1-census", report::census_rows_json(sweep_census({3, 5, 7, 11, 13}, {2, 3, 4, 5}, c.cap_states.value_or(u64{1} << 21))));
            add("thm1-trend", report::trend_rows_json(sweep_quota_trend(c.n.value_or(2000), {2, 3}, 100, 2, BigRational(9, 10))));
        } else if (t == "thm2") {
            add("thm2", report::thm2_json(sweep_thm2(c.n.value_or(200), {2, 3, 5, 7}, 50)));
        } else if (t == "thm3") {
            add("thm3", report::thm3_json(sweep_thm3(c.n.value_or(31), {2, 3, 4, 5, 7, 8, 9})));
        } else {
            num::FactorEffort effort;
            effort.rho_iterations = c.rho_iterations;
            add("arnold-delta2", report::arnold_json(sweep_arnold_delta2(c.q.value_or(2), c.n.value_or(64), effort)));
        }
    }
    doc["pass"] = pass;
    if (c.format == "text") {
        for (const auto& row : rows) {
            std::string line;
            for (const auto& [k, v] : row.items()) {
                if (v.is_structured()) continue;
                line += (line.empty() ? "" : "  ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out += line + "\n";
        }
        out += std::string("overall=") + (pass ? "PASS" : "FAIL") + "\n";
    } else {
        out = emit(c, doc, rows);
    }
    return pass ? kExitOk : kExitVerifyFailed;
}

int run(const RunConfig& c, std::string& out) {
    if (c.command == "classify") return cmd_classify(c, out);
    if (c.command == "orbit") return cmd_orbit(c, out);
    if (c.command == "graph") return cmd_graph(c, out);
    if (c.command == "spectrum") return cmd_spectrum(c, out);
    if (c.command == "census") return cmd_census(c, out);
    if (c.command == "gen") return cmd_gen(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    throw UsageError("unknown command");
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--q", c.q, "field order (prime power)");
    sub->add_option("--p", c.p, "field characteristic");
    sub->add_option("--e", c.e, "extension degree");
    sub->add_option("--mod", c.modulus, "extension modulus coefficients, low to high (e.g. 1,1,1)");
    sub->add_option("--n", c.n, "sequence length");
    sub->add_option("--format", c.format, "json | csv | text | dot")->check(CLI::IsMember({"json", "csv", "text", "dot"}));
    sub->add_option("--cap-states", c.cap_states, "state-count cap for exhaustive work")->check(CLI::PositiveNumber);
    sub->add_option("--cap-ops", c.cap_ops, "operator-count cap for the brute-force oracle")->check(CLI::PositiveNumber);
    sub->add_option("--cap-rho", c.rho_iterations, "Pollard rho iteration budget")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for --gen random");
    sub->add_option("--out", c.out, "write the report to FILE");
}

void add_sequence(CLI::App* sub, RunConfig& c) {
    sub->add_option("--seq", c.seq, "literal values f(1..n), comma separated");
    sub->add_option("--gen", c.gen, "generator")->check(CLI::IsMember({"legendre", "arnold", "mult", "const", "alt", "random"}));
    sub->add_option("--char", c.character, "multiplicative family member index (--gen mult)");
    sub->add_option("--value", c.value, "value code for --gen const");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-difference dynamics on cyclic sequences over finite fields"};
    app.require_subcommand(1);
    RunConfig c;

    auto* classify = app.add_subcommand("classify", "Delta1 / Delta2 / D-complexity verdict for a sequence");
    add_common(classify, c);
    add_sequence(classify, c);

    auto* orbit = app.add_subcommand("orbit", "preperiod and period of f, Df, D^2 f, ...");
    add_common(orbit, c);
    add_sequence(orbit, c);
    orbit->add_option("--op", c.op, "operator coefficients d_1,...,d_m (default: Delta)");

    auto* graph = app.add_subcommand("graph", "full functional graph (DOT or JSON summary)");
    add_common(graph, c);
    graph->add_option("--op", c.op, "operator coefficients d_1,...,d_m (default: Delta)");

    auto* spectrum = app.add_subcommand("spectrum", "algebraic cycle spectrum");
    add_common(spectrum, c);
    spectrum->add_option("--op", c.op, "operator coefficients d_1,...,d_m (default: Delta)");

    auto* census_cmd = app.add_subcommand("census", "exhaustive count of D-complicated sequences vs the quota formula");
    add_common(census_cmd, c);

    auto* gen = app.add_subcommand("gen", "emit generated sequences");
    add_common(gen, c);
    add_sequence(gen, c);

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    add_common(verify, c);
    verify->add_option("target", c.target, "thm1 | thm2 | thm3 | arnold-delta2 | all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    c.command = app.get_subcommands().front()->get_name();

    std::string out;
    int rc = kExitOk;
    try {
        rc = run(c, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (c.out.empty()) {
        std::cout << out;
    } else {
        std::ofstream file(c.out);
        if (!file) {
            std::cerr << "error: cannot write " << c.out << "\n";
            return kExitUsage;
        }
        file << out;
    }
    return rc;
}
