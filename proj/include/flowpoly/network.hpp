#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "flowpoly/errors.hpp"

namespace flowpoly {

struct Arc {
    int id;
    int tail;
    int head;
};

/// Loop-free, parallel-free directed graph over dense node indices 0..n-1.
/// Arc ids are 0..|A|-1 in construction order and stable under every derived view.
/// Labels are metadata only; all indexing is by integer id.
class Digraph {
  public:
    Digraph(int node_count, const std::vector<std::pair<int, int>>& arc_list,
            std::vector<std::string> labels = {})
        : node_count_(node_count), labels_(std::move(labels)) {
        if (node_count < 0) throw InvalidGraph("negative node count");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != node_count)
            throw InvalidGraph("label count does not match node count");
        out_.resize(node_count);
        in_.resize(node_count);
        arcs_.reserve(arc_list.size());
        for (const auto& [tail, head] : arc_list) {
            if (tail < 0 || tail >= node_count || head < 0 || head >= node_count)
                throw InvalidGraph("arc endpoint out of range");
            if (tail == head)
                throw InvalidGraph("loop at node " + std::to_string(tail));
            for (int a : out_[tail])
                if (arcs_[a].head == head)
                    throw InvalidGraph("parallel arc (" + std::to_string(tail) + "," +
                                       std::to_string(head) + ")");
            int id = static_cast<int>(arcs_.size());
            arcs_.push_back({id, tail, head});
            out_[tail].push_back(id);
            in_[head].push_back(id);
        }
    }

    int node_count() const { return node_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const { return arcs_.at(id); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    /// Out-arcs of v, ascending by arc id.
    const std::vector<int>& out_arcs(int v) const { return out_.at(v); }
    const std::vector<int>& in_arcs(int v) const { return in_.at(v); }
    int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }
    std::string label(int v) const {
        return labels_.empty() ? std::to_string(v) : labels_.at(v);
    }
    bool has_labels() const { return !labels_.empty(); }
    /// Arc id of (tail, head), or -1.
    int find_arc(int tail, int head) const {
        for (int a : out_.at(tail))
            if (arcs_[a].head == head) return a;
        return -1;
    }

  private:
    int node_count_;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_, in_;
};

/// Topological sort: every arc (u,v) has u before v in the returned ordering.
/// Ties go to the smaller node index (Kahn's algorithm with a min-heap).
/// On a cyclic input throws CycleError carrying one explicit cycle.
inline std::vector<int> topological_sort(const Digraph& g) {
    std::vector<int> indeg(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) indeg[v] = g.in_degree(v);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < g.node_count(); ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(g.node_count());
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int a : g.out_arcs(v))
            if (--indeg[g.arc(a).head] == 0) ready.push(g.arc(a).head);
    }
    if (static_cast<int>(order.size()) == g.node_count()) return order;

    // A cycle exists; recover one by walking back through unprocessed nodes.
    int start = -1;
    for (int v = 0; v < g.node_count() && start < 0; ++v)
        if (indeg[v] > 0) start = v;
    std::vector<int> back_arc(g.node_count(), -1);
    int v = start;
    std::vector<char> seen(g.node_count(), 0);
    while (!seen[v]) {
        seen[v] = 1;
        for (int a : g.in_arcs(v)) {
            if (indeg[g.arc(a).tail] > 0) {
                back_arc[v] = a;
                v = g.arc(a).tail;
                break;
            }
        }
    }
    // v is on a cycle; collect arcs forward from it.
    std::vector<int> cycle;
    int w = v;
    do {
        int a = back_arc[w];
        cycle.push_back(a);
        w = g.arc(a).tail;
    } while (w != v);
    std::reverse(cycle.begin(), cycle.end());
    throw CycleError(cycle);
}

/// Acyclic directed graph with a designated source and sink.
struct Network {
    Digraph graph;
    int source;
    int sink;

    Network(Digraph g, int s, int t) : graph(std::move(g)), source(s), sink(t) {
        if (s < 0 || s >= graph.node_count() || t < 0 || t >= graph.node_count())
            throw InvalidGraph("source or sink out of range");
        if (s == t) throw InvalidGraph("source equals sink");
        topological_sort(graph);  // throws CycleError on cyclic input
    }
};

/// Restriction of a network to the arcs lying on at least one s-t path.
struct ReducedNetwork {
    Network base;
    std::vector<int> kept_arcs;           // ascending arc ids
    std::vector<int> kept_nodes;          // ascending node ids
    std::vector<char> arc_kept;           // size |A|
    std::vector<std::vector<int>> r_out;  // reduced out-arc lists, ascending
    std::vector<std::vector<int>> r_in;

    int r_out_degree(int v) const { return static_cast<int>(r_out[v].size()); }
    int r_in_degree(int v) const { return static_cast<int>(r_in[v].size()); }
    bool has_path() const { return !kept_arcs.empty(); }
};

inline ReducedNetwork reduce(const Network& net) {
    const Digraph& g = net.graph;
    std::vector<char> from_s(g.node_count(), 0), to_t(g.node_count(), 0);
    std::vector<int> stack{net.source};
    from_s[net.source] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.out_arcs(v))
            if (!from_s[g.arc(a).head]) {
                from_s[g.arc(a).head] = 1;
                stack.push_back(g.arc(a).head);
            }
    }
    stack.push_back(net.sink);
    to_t[net.sink] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.in_arcs(v))
            if (!to_t[g.arc(a).tail]) {
                to_t[g.arc(a).tail] = 1;
                stack.push_back(g.arc(a).tail);
            }
    }
    ReducedNetwork red{net, {}, {}, std::vector<char>(g.arc_count(), 0),
                       std::vector<std::vector<int>>(g.node_count()),
                       std::vector<std::vector<int>>(g.node_count())};
    std::vector<char> node_kept(g.node_count(), 0);
    for (const Arc& a : g.arcs()) {
        if (from_s[a.tail] && to_t[a.head]) {
            red.arc_kept[a.id] = 1;
            red.kept_arcs.push_back(a.id);
            red.r_out[a.tail].push_back(a.id);
            red.r_in[a.head].push_back(a.id);
            node_kept[a.tail] = node_kept[a.head] = 1;
        }
    }
    for (int v = 0; v < g.node_count(); ++v)
        if (node_kept[v]) red.kept_nodes.push_back(v);
    return red;
}

/// Maximal chain of arcs through nodes of reduced in- and out-degree 1.
/// All arcs of a corridor carry equal flow; a good corridor is exactly a facet.
struct Corridor {
    std::vector<int> arcs;  // chained head-to-tail, in path order
    int initial_node;
    int terminal_node;
    bool good;

    int representative_arc() const { return *std::min_element(arcs.begin(), arcs.end()); }
};

/// Corridor partition of the kept arcs, ordered by smallest contained arc id.
inline std::vector<Corridor> corridors(const ReducedNetwork& red) {
    const Digraph& g = red.base.graph;
    auto internal = [&](int v) { return red.r_in_degree(v) == 1 && red.r_out_degree(v) == 1; };
    std::vector<char> done(g.arc_count(), 0);
    std::vector<Corridor> result;
    for (int a : red.kept_arcs) {
        if (done[a]) continue;
        std::vector<int> chain{a};
        int u = g.arc(a).tail;
        while (internal(u)) {
            int b = red.r_in[u][0];
            chain.insert(chain.begin(), b);
            u = g.arc(b).tail;
        }
        int v = g.arc(chain.back()).head;
        while (internal(v)) {
            int b = red.r_out[v][0];
            chain.push_back(b);
            v = g.arc(b).head;
        }
        for (int b : chain) done[b] = 1;
        bool good = red.r_out_degree(u) >= 2 && red.r_in_degree(v) >= 2;
        result.push_back({std::move(chain), u, v, good});
    }
    return result;
}

/// Corridor index per arc id; -1 for arcs outside the reduction.
inline std::vector<int> corridor_of_arc(const std::vector<Corridor>& cors, int arc_count) {
    std::vector<int> map(arc_count, -1);
    for (std::size_t c = 0; c < cors.size(); ++c)
        for (int a : cors[c].arcs) map[a] = static_cast<int>(c);
    return map;
}

/// Number of s-t paths, saturating at uint64 max (path counts grow factorially).
inline std::uint64_t st_path_count(const Network& net) {
    const Digraph& g = net.graph;
    std::vector<int> order = topological_sort(g);
    std::vector<std::uint64_t> count(g.node_count(), 0);
    count[net.source] = 1;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    for (int v : order) {
        if (count[v] == 0) continue;
        for (int a : g.out_arcs(v)) {
            std::uint64_t& c = count[g.arc(a).head];
            c = (kMax - c < count[v]) ? kMax : c + count[v];
        }
    }
    return count[net.sink];
}

}  // namespace flowpoly
