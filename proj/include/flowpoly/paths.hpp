#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <vector>

#include "flowpoly/network.hpp"
#include "flowpoly/rational.hpp"

namespace flowpoly {

/// An s-t path as an ordered arc-id sequence. In an acyclic graph the arc set
/// determines the sequence, so equality is set equality.
struct Path {
    std::vector<int> arcs;

    bool operator==(const Path& other) const {
        std::vector<int> a = arcs, b = other.arcs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }
};

/// Node sequence s = n0, n1, ..., nk = t visited by the path.
inline std::vector<int> path_nodes(const Digraph& g, const Path& p) {
    std::vector<int> nodes;
    if (p.arcs.empty()) return nodes;
    nodes.push_back(g.arc(p.arcs.front()).tail);
    for (int a : p.arcs) nodes.push_back(g.arc(a).head);
    return nodes;
}

/// Throws NotAPath unless p chains head-to-tail from source to sink.
inline void validate_st_path(const Network& net, const Path& p) {
    if (p.arcs.empty()) throw NotAPath("a path has at least one arc");
    const Digraph& g = net.graph;
    int at = net.source;
    for (int a : p.arcs) {
        if (a < 0 || a >= g.arc_count()) throw NotAPath("arc id out of range");
        if (g.arc(a).tail != at) throw NotAPath("arcs do not chain from the source");
        at = g.arc(a).head;
    }
    if (at != net.sink) throw NotAPath("path does not end at the sink");
}

/// Visits every s-t path once, in lexicographic order of arc-id sequences.
/// Memory is O(path length); path counts grow factorially, so prefer this over
/// enumerate_paths when only a scan is needed.
template <typename Visit>
void for_each_path(const Network& net, Visit&& visit) {
    const Digraph& g = net.graph;
    std::vector<int> stack;
    std::function<void(int)> dfs = [&](int v) {
        if (v == net.sink) {
            visit(Path{stack});
            return;
        }
        for (int a : g.out_arcs(v)) {
            stack.push_back(a);
            dfs(g.arc(a).head);
            stack.pop_back();
        }
    };
    dfs(net.source);
}

/// All s-t paths (the polytope's vertices), lexicographic by arc-id sequence.
inline std::vector<Path> enumerate_paths(const Network& net) {
    std::vector<Path> paths;
    for_each_path(net, [&](const Path& p) { paths.push_back(p); });
    return paths;
}

/// Characteristic vector of the path's arc set in R^A.
inline RationalVector char_vector(const Path& p, std::size_t arc_count) {
    if (p.arcs.empty()) throw NotAPath("a path has at least one arc");
    RationalVector x(arc_count, Rational(0));
    for (int a : p.arcs) {
        if (a < 0 || static_cast<std::size_t>(a) >= arc_count)
            throw IndexError("arc id outside vector range");
        x[a] = 1;
    }
    return x;
}

/// Exact membership in the canonical description: nonnegativity, conservation
/// at every internal node, net outflow 1 at the source.
inline bool is_flow(const Network& net, const RationalVector& x) {
    const Digraph& g = net.graph;
    if (x.size() != static_cast<std::size_t>(g.arc_count()))
        throw DimensionMismatch("flow vector length must equal the arc count");
    for (const Rational& v : x)
        if (v < 0) return false;
    for (int v = 0; v < g.node_count(); ++v) {
        Rational net_out(0);
        for (int a : g.out_arcs(v)) net_out += x[a];
        for (int a : g.in_arcs(v)) net_out -= x[a];
        if (v == net.source) {
            if (net_out != 1) return false;
        } else if (v != net.sink) {
            if (net_out != 0) return false;
        }
    }
    // Net inflow at the sink is forced to 1 by the conservation rows.
    Rational at_sink(0);
    for (int a : g.in_arcs(net.sink)) at_sink += x[a];
    for (int a : g.out_arcs(net.sink)) at_sink -= x[a];
    assert(at_sink == 1);
    return true;
}

struct FlowDecomposition {
    std::vector<std::pair<Rational, Path>> terms;  // positive coefficients summing to 1
};

/// Greedy path decomposition: repeatedly walk from s to t along arcs with
/// positive residual (smallest arc id first), peel off the bottleneck value.
/// The decomposition is not unique; the tie-break pins this one down.
inline FlowDecomposition decompose_flow(const Network& net, const RationalVector& x) {
    if (!is_flow(net, x)) throw NotAFlow("input fails the canonical description");
    const Digraph& g = net.graph;
    RationalVector residual = x;
    FlowDecomposition result;
    Rational total(0);
    while (total < 1) {
        std::vector<int> arcs;
        int v = net.source;
        while (v != net.sink) {
            int chosen = -1;
            for (int a : g.out_arcs(v))
                if (residual[a] > 0) {
                    chosen = a;
                    break;
                }
            assert(chosen >= 0);  // conservation guarantees an outgoing positive arc
            arcs.push_back(chosen);
            v = g.arc(chosen).head;
        }
        Rational coeff = residual[arcs[0]];
        for (int a : arcs) coeff = std::min(coeff, residual[a]);
        for (int a : arcs) residual[a] -= coeff;
        result.terms.emplace_back(coeff, Path{std::move(arcs)});
        total += coeff;
    }
    for (const Rational& r : residual) assert(r == 0);
    return result;
}

}  // namespace flowpoly
