#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tdp/canonical.hpp"
#include "tdp/count.hpp"
#include "tdp/graph.hpp"
#include "tdp/graph6.hpp"
#include "tdp/predicates.hpp"

namespace tdp {

enum class StepKind {
    empty_base,      // 0 vertices: D_t = 1
    isolated_base,   // isolated vertex: D_t = 0
    brute_force_base,
    memo_base,       // value served from the memo
    component_split, // product over children
    irrelevant_edge, // equals child (G \ e)
    support_odot,    // equals child (G (.) v)
    twin,            // child0 + x^2 child1   (G \ e, G \ N[u])
    vertex_recurrence // child0 + child1 - child2   (G \ v, G (.) v, G (*) v)
};

inline const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::empty_base: return "empty-base";
        case StepKind::isolated_base: return "isolated-base";
        case StepKind::brute_force_base: return "base-case";
        case StepKind::memo_base: return "memo";
        case StepKind::component_split: return "component-split";
        case StepKind::irrelevant_edge: return "irrelevant-edge";
        case StepKind::support_odot: return "support-odot";
        case StepKind::twin: return "twin";
        case StepKind::vertex_recurrence: return "vertex-recurrence";
    }
    return "?";
}

/// One node of the reduction: how this graph's polynomial is assembled
/// from its children. Steps are recorded in post-order, so replaying the
/// list front to back always finds child values first.
struct ReductionStep {
    StepKind kind;
    std::string key; // canonical form of the graph at this node
    std::vector<std::string> children;
    IntPoly base_value; // for base kinds only
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::string root_key;
};

/// Recomputes the final polynomial from a recorded trace alone.
inline IntPoly replay(const ReductionTrace& trace) {
    std::map<std::string, IntPoly> value;
    const IntPoly xsq = IntPoly::monomial(2);
    for (const ReductionStep& s : trace.steps) {
        auto child = [&](std::size_t i) -> const IntPoly& {
            auto it = value.find(s.children.at(i));
            if (it == value.end())
                throw internal_consistency_error("trace replay: child value missing");
            return it->second;
        };
        switch (s.kind) {
            case StepKind::empty_base:
            case StepKind::isolated_base:
            case StepKind::brute_force_base:
            case StepKind::memo_base:
                value[s.key] = s.base_value;
                break;
            case StepKind::component_split: {
                IntPoly prod = IntPoly::one();
                for (std::size_t i = 0; i < s.children.size(); ++i) prod *= child(i);
                value[s.key] = prod;
                break;
            }
            case StepKind::irrelevant_edge:
            case StepKind::support_odot:
                value[s.key] = child(0);
                break;
            case StepKind::twin:
                value[s.key] = child(0) + xsq * child(1);
                break;
            case StepKind::vertex_recurrence:
                value[s.key] = child(0) + child(1) - child(2);
                break;
        }
    }
    auto it = value.find(trace.root_key);
    if (it == value.end()) throw internal_consistency_error("trace replay: root missing");
    return it->second;
}

struct RecurrenceOptions {
    int base_threshold = 5; // n <= this is brute forced
    EnumerationOptions enumeration{};
    std::size_t memo_cap = std::size_t{1} << 20;
};

/// Reduction pipeline for D_t. Priority at every node: empty graph,
/// isolated vertex, memo, component split, small base case, sufficient
/// irrelevant edge, support-vertex odot shortcut, adjacent true twins,
/// vertex recurrence on a pivot whose neighborhood still contains an edge.
/// Triangle-free graphs admit no odot progress, so they fall back to
/// enumeration (and are rejected above the enumeration limit).
///
/// The memo is keyed by canonical form and shared across calls; a mutex
/// makes concurrent insert-or-get of equal keys safe.
class RecurrenceEngine {
public:
    explicit RecurrenceEngine(RecurrenceOptions opt = {}) : opt_(opt) {}

    std::pair<IntPoly, ReductionTrace> compute(const Graph& g) {
        ReductionTrace trace;
        IntPoly p = go(g, trace);
        trace.root_key = key_of(g);
        return {std::move(p), std::move(trace)};
    }

    IntPoly polynomial(const Graph& g) {
        ReductionTrace ignored;
        return go(g, ignored);
    }

    std::size_t memo_size() const {
        std::lock_guard lock(mutex_);
        return memo_.size();
    }

private:
    static std::string key_of(const Graph& g) {
        return g.order() <= 64 ? canonical_form(g) : graph6_encode(g);
    }

    IntPoly record_base(ReductionTrace& t, StepKind kind, std::string key, IntPoly value) {
        t.steps.push_back({kind, std::move(key), {}, value});
        return value;
    }

    IntPoly go(const Graph& g, ReductionTrace& trace) {
        const int n = g.order();
        std::string key = key_of(g);

        if (n == 0) return record_base(trace, StepKind::empty_base, key, IntPoly::one());
        if (g.has_isolated_vertex())
            return record_base(trace, StepKind::isolated_base, key, IntPoly{});

        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end())
                return record_base(trace, StepKind::memo_base, key, it->second);
        }

        IntPoly result;
        auto comps = g.components();
        if (comps.size() > 1) {
            ReductionStep step{StepKind::component_split, key, {}, {}};
            result = IntPoly::one();
            VertexSet all = VertexSet::full(n);
            for (const VertexSet& comp : comps) {
                Graph sub = g.delete_vertices(all - comp);
                step.children.push_back(key_of(sub));
                result *= go(sub, trace);
            }
            trace.steps.push_back(std::move(step));
        } else if (n <= opt_.base_threshold) {
            result = count_all(g, opt_.enumeration).polynomial();
            trace.steps.push_back({StepKind::brute_force_base, key, {}, result});
        } else if (auto e = find_sufficient_irrelevant_edge(g)) {
            Graph sub = g.delete_edge(*e);
            result = go(sub, trace);
            trace.steps.push_back({StepKind::irrelevant_edge, key, {key_of(sub)}, {}});
        } else if (int v = find_support_with_odot_edges(g); v >= 0) {
            Graph sub = g.odot(v);
            result = go(sub, trace);
            trace.steps.push_back({StepKind::support_odot, key, {key_of(sub)}, {}});
        } else if (auto twins = find_adjacent_true_twins(g)) {
            Graph no_edge = g.delete_edge(*twins);
            Graph shrunk = g.delete_vertices(g.closed_neighborhood(twins->u));
            ReductionStep step{StepKind::twin, key, {key_of(no_edge), key_of(shrunk)}, {}};
            IntPoly a = go(no_edge, trace);
            IntPoly b = go(shrunk, trace);
            result = a + IntPoly::monomial(2) * b;
            trace.steps.push_back(std::move(step));
        } else if (int v = pick_vertex_pivot(g); v >= 0) {
            Graph minus = g.delete_vertex(v);
            Graph dot = g.odot(v);
            Graph star = g.odot(v, /*drop_v=*/true);
            ReductionStep step{StepKind::vertex_recurrence,
                               key,
                               {key_of(minus), key_of(dot), key_of(star)},
                               {}};
            IntPoly a = go(minus, trace);
            IntPoly b = go(dot, trace);
            IntPoly c = go(star, trace);
            result = a + b - c;
            trace.steps.push_back(std::move(step));
        } else {
            // triangle-free: no rule reduces, enumerate instead
            result = count_all(g, opt_.enumeration).polynomial();
            trace.steps.push_back({StepKind::brute_force_base, key, {}, result});
        }

        std::lock_guard lock(mutex_);
        if (memo_.size() >= opt_.memo_cap) memo_.clear();
        memo_.emplace(std::move(key), result);
        return result;
    }

    static std::optional<Edge> find_sufficient_irrelevant_edge(const Graph& g) {
        for (Edge e : g.edges())
            if (is_irrelevant_edge(g, e, CheckMode::sufficient)) return e;
        return std::nullopt;
    }

    /// Support vertex whose open neighborhood still contains an edge,
    /// so the odot shortcut strictly shrinks the graph.
    static int find_support_with_odot_edges(const Graph& g) {
        VertexSet supports = g.supports_and_leaves().second;
        for (int v : supports.to_vector())
            if (neighborhood_has_edge(g, v)) return v;
        return -1;
    }

    static std::optional<Edge> find_adjacent_true_twins(const Graph& g) {
        for (Edge e : g.edges())
            if (g.closed_neighborhood(e.u) == g.closed_neighborhood(e.v)) return e;
        return std::nullopt;
    }

    static bool neighborhood_has_edge(const Graph& g, int v) {
        auto nv = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < nv.size(); ++i)
            for (std::size_t j = i + 1; j < nv.size(); ++j)
                if (g.has_edge(nv[i], nv[j])) return true;
        return false;
    }

    /// Max-degree vertex whose neighborhood contains an edge; ties to the
    /// smallest index. -1 when the graph is triangle-free.
    static int pick_vertex_pivot(const Graph& g) {
        int best = -1;
        for (int v = 0; v < g.order(); ++v)
            if (neighborhood_has_edge(g, v) && (best == -1 || g.degree(v) > g.degree(best)))
                best = v;
        return best;
    }

    RecurrenceOptions opt_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, IntPoly> memo_;
};

/// One-shot convenience over a fresh engine.
inline std::pair<IntPoly, ReductionTrace> compute_via_recurrence(const Graph& g,
                                                                 RecurrenceOptions opt = {}) {
    RecurrenceEngine engine(opt);
    return engine.compute(g);
}

} // namespace tdp
