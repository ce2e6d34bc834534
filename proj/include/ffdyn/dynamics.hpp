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

#ifndef FFDYN_DYNAMICS_HPP
#define FFDYN_DYNAMICS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groupalg.hpp"
#include "intmath.hpp"
#include "poly.hpp"

namespace ffdyn {

/// Tail and cycle of the orbit f, Df, D^2 f, ...
struct OrbitSummary {
    u64 preperiod = 0;  ///< least N with D^N f on the cycle
    BigInt period = 1;  ///< least P >= 1 with D^{N+P} f = D^N f
    CyclicSeq attractor_entry;
};

/// Cycle length -> number of cycles of that length.
using CycleSpectrum = std::map<BigInt, BigInt>;

/// Direct iteration with Brent's cycle finder. `max_steps` bounds the
/// number of distinct states on the orbit (preperiod + period); q^n is
/// always enough. Throws ResourceError when the bound is exceeded.
inline OrbitSummary orbit_brute(const DiffOperator& D, const CyclicSeq& f, u64 max_steps) {
    if (D.n() != f.n() || !(*D.field() == f.spec())) throw DomainError("operator and sequence do not match");
    const OperatorStepper step(D);
    const std::size_t n = f.n();
    // Brent plus the tail walk apply D fewer than 4 (mu + lambda) + 4 times.
    const u64 budget = max_steps > (std::numeric_limits<u64>::max() - 4) / 4 ? std::numeric_limits<u64>::max() : 4 * max_steps + 4;
    u64 steps = 0;
    auto advance = [&](std::vector<u64>& x, std::vector<u64>& scratch) {
        if (++steps > budget) throw ResourceError("orbit_brute: step cap " + std::to_string(max_steps) + " exceeded");
        step.step(x.data(), scratch.data());
        x.swap(scratch);
    };
    std::vector<u64> scratch(n);

    std::vector<u64> tortoise = f.codes();
    std::vector<u64> hare = f.codes();
    advance(hare, scratch);
    u64 power = 1, lambda = 1;
    while (tortoise != hare) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        advance(hare, scratch);
        ++lambda;
    }

    tortoise = f.codes();
    hare = f.codes();
    for (u64 i = 0; i < lambda; ++i) advance(hare, scratch);
    u64 mu = 0;
    while (tortoise != hare) {
        advance(tortoise, scratch);
        advance(hare, scratch);
        ++mu;
    }
    return {mu, lambda, CyclicSeq(f.field(), std::move(tortoise))};
}

/// Algebraic orbit structure of one operator, precomputed over the local
/// components F_q[t]/(pi^e) of t^n - 1. On a component where pi divides
/// the operator, D is nilpotent and only delays; elsewhere D is a unit and
/// a state with pi-adic valuation j cycles with the order of D modulo
/// pi^{e-j}.
class OrbitAnalyzer {
public:
    struct Component {
        Poly pi;
        unsigned e = 1;
        Poly modulus;       ///< pi^e
        Poly op;            ///< operator reduced modulo pi^e
        bool dead = false;  ///< pi divides the operator
        unsigned op_valuation = 0;         ///< dead only: pi-adic valuation of op, capped at e
        std::vector<BigInt> unit_orders;   ///< unit only: [j] = order of op mod pi^{e-j}
    };

    explicit OrbitAnalyzer(const DiffOperator& D, const num::FactorEffort& effort = {})
        : OrbitAnalyzer(D, crt_split(D.n(), D.field()), effort) {}

    /// Reuses a precomputed factorization of t^n - 1.
    OrbitAnalyzer(const DiffOperator& D, const std::vector<std::pair<Poly, unsigned>>& split,
                  const num::FactorEffort& effort = {})
        : D_(D) {
        for (const auto& [pi, e] : split) {
            Component c{pi, e, pi.pow(e), Poly(pi.field()), false, 0, {}};
            c.op = D.poly() % c.modulus;
            const unsigned v = valuation(c.op, c);
            if (v > 0) {
                c.dead = true;
                c.op_valuation = v;
            } else {
                for (unsigned j = 0; j < e; ++j) c.unit_orders.push_back(unit_order_prime_power(c.op, pi, e - j, effort));
            }
            components_.push_back(std::move(c));
        }
    }

    const DiffOperator& op() const { return D_; }
    const std::vector<Component>& components() const { return components_; }

    /// (preperiod, period) of the orbit of the algebra element ft.
    std::pair<u64, BigInt> orbit_shape(const Poly& ft) const {
        u64 pre = 0;
        BigInt period = 1;
        for (const Component& c : components_) {
            const Poly r = ft % c.modulus;
            const unsigned j = valuation(r, c);
            if (j == c.e) continue;
            if (c.dead) {
                const u64 k = (c.e - j + c.op_valuation - 1) / c.op_valuation;
                pre = std::max(pre, k);
            } else {
                period = lcm(period, c.unit_orders[j]);
            }
        }
        return {pre, period};
    }

    OrbitSummary orbit(const CyclicSeq& f) const {
        if (f.n() != D_.n() || !(f.spec() == *D_.field())) throw DomainError("operator and sequence do not match");
        auto [pre, period] = orbit_shape(seq_to_poly(f));
        const OperatorStepper step(D_);
        std::vector<u64> scratch(f.n());
        std::vector<u64> cur = f.codes();
        for (u64 i = 0; i < pre; ++i) {
            step.step(cur.data(), scratch.data());
            cur.swap(scratch);
        }
        return {pre, period, CyclicSeq(f.field(), std::move(cur))};
    }

    /// Largest orbit period over all states.
    BigInt max_period() const {
        BigInt m = 1;
        for (const Component& c : components_) {
            if (!c.dead) m = lcm(m, c.unit_orders[0]);
        }
        return m;
    }

    /// Largest preperiod over all states.
    u64 max_preperiod() const {
        u64 m = 0;
        for (const Component& c : components_) {
            if (c.dead) m = std::max<u64>(m, (c.e + c.op_valuation - 1) / c.op_valuation);
        }
        return m;
    }

    /// Exact cycle counts for the map f -> Df on all q^n states. The
    /// attractor is the product of the unit components; per component the
    /// states of valuation j number q^{d(e-j)} - q^{d(e-j-1)} and share one
    /// period, and periods combine across components by lcm.
    CycleSpectrum cycle_spectrum() const {
        std::map<BigInt, BigInt> states{{1, 1}};
        for (const Component& c : components_) {
            if (c.dead) continue;
            const BigInt qd = num::ipow(BigInt(c.pi.spec().q()), c.pi.deg());
            std::map<BigInt, BigInt> local{{1, 1}};
            for (unsigned j = 0; j < c.e; ++j) {
                const BigInt count = num::ipow(qd, c.e - j) - num::ipow(qd, c.e - j - 1);
                local[c.unit_orders[j]] += count;
            }
            std::map<BigInt, BigInt> next;
            for (const auto& [p1, n1] : states) {
                for (const auto& [p2, n2] : local) next[lcm(p1, p2)] += n1 * n2;
            }
            states = std::move(next);
        }
        CycleSpectrum out;
        for (const auto& [period, count] : states) out[period] = count / period;
        return out;
    }

private:
    static BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

    // pi-adic valuation of r modulo pi^e, in [0, e].
    static unsigned valuation(Poly r, const Component& c) {
        unsigned j = 0;
        while (j < c.e && !r.is_zero()) {
            auto [quot, rem] = poly_divrem(r, c.pi);
            if (!rem.is_zero()) break;
            r = std::move(quot);
            ++j;
        }
        return r.is_zero() ? c.e : j;
    }

    DiffOperator D_;
    std::vector<Component> components_;
};

inline OrbitSummary orbit_algebraic(const DiffOperator& D, const CyclicSeq& f) { return OrbitAnalyzer(D).orbit(f); }
inline BigInt max_period(const DiffOperator& D) { return OrbitAnalyzer(D).max_period(); }
inline u64 max_preperiod(const DiffOperator& D) { return OrbitAnalyzer(D).max_preperiod(); }
inline CycleSpectrum cycle_spectrum(const DiffOperator& D) { return OrbitAnalyzer(D).cycle_spectrum(); }

inline constexpr u64 kDefaultStateCap = u64{1} << 20;

struct GraphSummary {
    u64 state_count = 0;
    CycleSpectrum cycle_spectrum;
    u64 attractor_states = 0;
    u64 tree_depth = 0;  ///< max preperiod over all states
    /// Structural hash of the in-tree hanging off the first attractor
    /// vertex (by state rank).
    u64 tree_shape_hash = 0;
    bool trees_isomorphic = true;
    /// Common in-degree of every state with a preimage, if uniform.
    std::optional<u64> uniform_indegree;
    bool out_degree_one = true;
};

/// The full functional graph of f -> Df over all q^n states. States are
/// identified by base-q rank (see CyclicSeq::index).
class FunctionalGraph {
public:
    const GraphSummary& summary() const { return summary_; }
    const std::vector<u64>& successors() const { return succ_; }
    const std::vector<std::uint32_t>& depths() const { return depth_; }
    bool on_cycle(u64 state) const { return on_cycle_[state] != 0; }
    std::size_t n() const { return n_; }
    const Field& field() const { return field_; }

    CyclicSeq state(u64 index) const { return CyclicSeq::from_index(field_, n_, index); }

    /// Graphviz digraph, one edge per state; nodes labelled by value string.
    std::string to_dot() const {
        std::string out = "digraph ffdyn {\n";
        for (u64 s = 0; s < succ_.size(); ++s) {
            out += "  \"" + state(s).label() + "\" -> \"" + state(succ_[s]).label() + "\"";
            if (on_cycle_[s]) out += " [color=red]";
            out += ";\n";
        }
        out += "}\n";
        return out;
    }

    friend FunctionalGraph build_graph(const DiffOperator& D, u64 cap);

private:
    Field field_;
    std::size_t n_ = 0;
    std::vector<u64> succ_;
    std::vector<std::uint8_t> on_cycle_;
    std::vector<std::uint32_t> depth_;
    GraphSummary summary_;
};

namespace detail {

inline u64 mix_hash(u64 h, u64 v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 29);
}

}  // namespace detail

/// Enumerates every state. Throws ResourceError when q^n exceeds `cap`.
inline FunctionalGraph build_graph(const DiffOperator& D, u64 cap = kDefaultStateCap) {
    const u64 q = D.field()->q();
    const std::size_t n = D.n();
    u64 count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > cap / q) throw ResourceError("build_graph: q^n exceeds the state cap; use cycle_spectrum instead");
        count *= q;
    }
    FunctionalGraph g;
    g.field_ = D.field();
    g.n_ = n;
    g.succ_.resize(count);

    const OperatorStepper step(D);
    std::vector<u64> in(n), out(n);
    for (u64 s = 0; s < count; ++s) {
        u64 x = s;
        for (std::size_t i = 0; i < n; ++i) {
            in[i] = x % q;
            x /= q;
        }
        step.step(in.data(), out.data());
        u64 idx = 0;
        for (std::size_t i = n; i-- > 0;) idx = idx * q + out[i];
        g.succ_[s] = idx;
    }

    GraphSummary& sum = g.summary_;
    sum.state_count = count;

    // Cycle detection: walk unvisited paths, a walk that re-enters its own
    // path closes a new cycle.
    g.on_cycle_.assign(count, 0);
    std::vector<std::uint8_t> color(count, 0);
    std::vector<u64> path;
    std::map<u64, u64> spectrum;
    for (u64 s = 0; s < count; ++s) {
        if (color[s]) continue;
        path.clear();
        u64 x = s;
        while (color[x] == 0) {
            color[x] = 1;
            path.push_back(x);
            x = g.succ_[x];
        }
        if (color[x] == 1) {
            u64 len = 0;
            u64 y = x;
            do {
                g.on_cycle_[y] = 1;
                y = g.succ_[y];
                ++len;
            } while (y != x);
            ++spectrum[len];
            sum.attractor_states += len;
        }
        for (u64 v : path) color[v] = 2;
    }
    for (const auto& [len, cnt] : spectrum) sum.cycle_spectrum[len] = cnt;

    // Reverse adjacency (CSR).
    std::vector<u64> offset(count + 1, 0);
    for (u64 s = 0; s < count; ++s) ++offset[g.succ_[s] + 1];
    for (u64 s = 0; s < count; ++s) offset[s + 1] += offset[s];
    std::vector<u64> preds(count);
    {
        std::vector<u64> fill(offset.begin(), offset.end() - 1);
        for (u64 s = 0; s < count; ++s) preds[fill[g.succ_[s]]++] = s;
    }

    std::optional<u64> indeg;
    bool uniform = true;
    for (u64 s = 0; s < count; ++s) {
        const u64 d = offset[s + 1] - offset[s];
        if (d == 0) continue;
        if (!indeg) indeg = d;
        if (*indeg != d) uniform = false;
    }
    if (uniform) sum.uniform_indegree = indeg;

    // Depth by BFS from the cycles over non-cycle preimages.
    g.depth_.assign(count, 0);
    std::vector<u64> order;
    order.reserve(count);
    for (u64 s = 0; s < count; ++s) {
        if (g.on_cycle_[s]) order.push_back(s);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        const u64 v = order[head];
        for (u64 k = offset[v]; k < offset[v + 1]; ++k) {
            const u64 u = preds[k];
            if (g.on_cycle_[u]) continue;
            g.depth_[u] = g.depth_[v] + 1;
            sum.tree_depth = std::max<u64>(sum.tree_depth, g.depth_[u]);
            order.push_back(u);
        }
    }

    // AHU canonical ids, deepest vertices first; tree children exclude
    // the cycle predecessor.
    std::vector<u64> canon(count, 0), hash(count, 0);
    std::map<std::vector<u64>, u64> ids;
    std::vector<u64> kids, kid_hashes;
    for (std::size_t i = order.size(); i-- > 0;) {
        const u64 v = order[i];
        kids.clear();
        kid_hashes.clear();
        for (u64 k = offset[v]; k < offset[v + 1]; ++k) {
            const u64 u = preds[k];
            if (g.on_cycle_[u]) continue;
            kids.push_back(canon[u]);
            kid_hashes.push_back(hash[u]);
        }
        std::sort(kids.begin(), kids.end());
        std::sort(kid_hashes.begin(), kid_hashes.end());
        auto [it, inserted] = ids.try_emplace(kids, ids.size());
        canon[v] = it->second;
        u64 h = 0x51ed270b27c3a1f5ULL;
        for (u64 kh : kid_hashes) h = detail::mix_hash(h, kh);
        hash[v] = detail::mix_hash(h, kid_hashes.size());
    }
    std::optional<u64> root_id;
    for (u64 s = 0; s < count; ++s) {
        if (!g.on_cycle_[s]) continue;
        if (!root_id) {
            root_id = canon[s];
            sum.tree_shape_hash = hash[s];
        } else if (canon[s] != *root_id) {
            sum.trees_isomorphic = false;
        }
    }
    return g;
}

}  // namespace ffdyn

#endif  // FFDYN_DYNAMICS_HPP
