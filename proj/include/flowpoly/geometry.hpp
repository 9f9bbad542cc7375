#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "flowpoly/network.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/rational.hpp"

// The flow-polytope characterizations: smallest faces, vertex adjacency and
// the midpoint witness, dimension, facet recognition/identity/adjacency,
// minimum affine descriptions, and the skeleton diameter.

namespace flowpoly {

/// Vertices of the smallest face containing the generators: exactly the s-t
/// paths R with R inside the union of the generators' arc sets.
inline std::vector<Path> smallest_face(const Network& net, const std::vector<Path>& generators) {
    if (generators.empty()) throw EmptyInput("smallest_face of no generators");
    std::vector<char> allowed(net.graph.arc_count(), 0);
    for (const Path& p : generators) {
        validate_st_path(net, p);
        for (int a : p.arcs) allowed[a] = 1;
    }
    std::vector<Path> face;
    for_each_path(net, [&](const Path& p) {
        for (int a : p.arcs)
            if (!allowed[a]) return;
        face.push_back(p);
    });
    return face;
}

namespace detail {

/// Positions of each node along a path's node sequence, or -1.
inline std::vector<int> node_positions(const Digraph& g, const Path& p) {
    std::vector<int> pos(g.node_count(), -1);
    std::vector<int> nodes = path_nodes(g, p);
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);
    return pos;
}

inline bool prefixes_equal(const Path& p, int plen, const Path& q, int qlen) {
    if (plen != qlen) return false;
    return std::equal(p.arcs.begin(), p.arcs.begin() + plen, q.arcs.begin());
}

inline bool suffixes_equal(const Path& p, int pfrom, const Path& q, int qfrom) {
    if (static_cast<int>(p.arcs.size()) - pfrom != static_cast<int>(q.arcs.size()) - qfrom)
        return false;
    return std::equal(p.arcs.begin() + pfrom, p.arcs.end(), q.arcs.begin() + qfrom);
}

/// First common internal node (in P's traversal order) where P and Q coincide
/// neither before nor after; nullopt when condition (*) holds.
inline std::optional<std::pair<int, int>> first_splice_point(const Network& net, const Path& P,
                                                            const Path& Q) {
    const Digraph& g = net.graph;
    std::vector<int> qpos = node_positions(g, Q);
    std::vector<int> pnodes = path_nodes(g, P);
    for (std::size_t i = 1; i + 1 < pnodes.size(); ++i) {
        int v = pnodes[i];
        int qv = qpos[v];
        if (qv < 0 || v == net.source || v == net.sink) continue;
        if (qv == 0 || qv == static_cast<int>(Q.arcs.size())) continue;
        int pi = static_cast<int>(i);
        if (!prefixes_equal(P, pi, Q, qv) && !suffixes_equal(P, pi, Q, qv))
            return std::make_pair(pi, qv);
    }
    return std::nullopt;
}

}  // namespace detail

/// Condition (*): at every common internal node the two paths coincide on one
/// side. Exactly the adjacency of the two vertices.
inline bool vertices_adjacent(const Network& net, const Path& P, const Path& Q) {
    validate_st_path(net, P);
    validate_st_path(net, Q);
    if (P == Q) throw SamePath("the two paths are equal");
    return !detail::first_splice_point(net, P, Q).has_value();
}

/// For a nonadjacent pair, the spliced pair (R,S) with
/// chi^P + chi^Q = chi^R + chi^S exactly and {R,S} disjoint from {P,Q}.
/// R follows P then Q across the first violating node; S the reverse.
inline std::pair<Path, Path> nonadjacent_witness(const Network& net, const Path& P,
                                                 const Path& Q) {
    validate_st_path(net, P);
    validate_st_path(net, Q);
    if (P == Q) throw SamePath("the two paths are equal");
    auto splice = detail::first_splice_point(net, P, Q);
    if (!splice) throw VerticesAreAdjacent("no splice point: the vertices are adjacent");
    auto [pi, qi] = *splice;
    Path R, S;
    R.arcs.assign(P.arcs.begin(), P.arcs.begin() + pi);
    R.arcs.insert(R.arcs.end(), Q.arcs.begin() + qi, Q.arcs.end());
    S.arcs.assign(Q.arcs.begin(), Q.arcs.begin() + qi);
    S.arcs.insert(S.arcs.end(), P.arcs.begin() + pi, P.arcs.end());
    return {R, S};
}

/// |A~| - |N~| + 1, and -1 for the empty polytope.
inline int dimension(const Network& net) {
    ReducedNetwork red = reduce(net);
    if (!red.has_path()) return -1;
    return static_cast<int>(red.kept_arcs.size()) - static_cast<int>(red.kept_nodes.size()) + 1;
}

/// A facet, canonicalized on its corridor's smallest arc id: two handles name
/// the same facet iff they carry the same representative arc.
struct FacetHandle {
    Corridor corridor;
    int representative_arc;
};

/// All facets, one per good corridor. A single-path network has only the empty
/// facet, which has no useful handle: it is reported via the flag instead.
struct FacetList {
    std::vector<FacetHandle> facets;
    bool single_path = false;
};

inline FacetList facets(const Network& net) {
    ReducedNetwork red = reduce(net);
    if (!red.has_path()) return {};
    if (st_path_count(net) == 1) return {{}, true};
    FacetList list;
    for (Corridor& c : corridors(red))
        if (c.good) {
            int rep = c.representative_arc();
            list.facets.push_back({std::move(c), rep});
        }
    return list;
}

/// Facet identity: x(a)>=0 and x(b)>=0 define the same facet iff a and b share
/// a corridor. Both arcs must be facet-defining (good).
inline bool facet_equal(int a, int b, const std::vector<Corridor>& cors) {
    int ca = -1, cb = -1;
    for (std::size_t i = 0; i < cors.size(); ++i) {
        for (int arc : cors[i].arcs) {
            if (arc == a) ca = static_cast<int>(i);
            if (arc == b) cb = static_cast<int>(i);
        }
    }
    if (ca < 0 || !cors[ca].good)
        throw NotFacetDefining("arc " + std::to_string(a) + " is not facet-defining");
    if (cb < 0 || !cors[cb].good)
        throw NotFacetDefining("arc " + std::to_string(b) + " is not facet-defining");
    return ca == cb;
}

namespace detail {

/// Facet non-adjacency test on corridors A and B of a reduced network:
/// nonadjacent iff they share an endpoint of reduced degree exactly 2 on the
/// shared side, with the secondary degree condition.
inline bool corridors_nonadjacent(const ReducedNetwork& red, const std::vector<Corridor>& cors,
                                  const std::vector<int>& cor_of, const Corridor& A,
                                  const Corridor& B) {
    // Shared initial node.
    if (A.initial_node == B.initial_node) {
        int v = A.initial_node;
        if (red.r_out_degree(v) == 2) {
            if (red.r_in_degree(v) >= 2) return true;
            if (red.r_in_degree(v) == 1) {
                int in_arc = red.r_in[v][0];
                const Corridor& c = cors[cor_of[in_arc]];
                if (red.r_in_degree(c.initial_node) >= 2) return true;
            }
        }
    }
    // Shared terminal node.
    if (A.terminal_node == B.terminal_node) {
        int u = A.terminal_node;
        if (red.r_in_degree(u) == 2) {
            if (red.r_out_degree(u) >= 2) return true;
            if (red.r_out_degree(u) == 1) {
                int out_arc = red.r_out[u][0];
                const Corridor& c = cors[cor_of[out_arc]];
                if (red.r_out_degree(c.terminal_node) >= 2) return true;
            }
        }
    }
    return false;
}

}  // namespace detail

inline bool facets_adjacent(const Network& net, const FacetHandle& a, const FacetHandle& b) {
    if (a.representative_arc == b.representative_arc)
        throw SameFacet("the two handles name the same facet");
    if (dimension(net) < 2) throw DimensionTooSmall("facet adjacency needs dimension >= 2");
    ReducedNetwork red = reduce(net);
    std::vector<Corridor> cors = corridors(red);
    std::vector<int> cor_of = corridor_of_arc(cors, net.graph.arc_count());
    int ia = cor_of.at(a.representative_arc);
    int ib = cor_of.at(b.representative_arc);
    if (ia < 0 || !cors[ia].good || ib < 0 || !cors[ib].good)
        throw NotFacetDefining("handle does not name a good corridor");
    if (ia == ib) throw SameFacet("the two handles name the same facet");
    return !detail::corridors_nonadjacent(red, cors, cor_of, cors[ia], cors[ib]);
}

/// Affine description: equalities row . x = rhs, inequalities row . x >= rhs.
struct AffineSystem {
    std::vector<std::pair<RationalVector, Rational>> equalities;
    std::vector<std::pair<RationalVector, Rational>> inequalities;
};

inline bool satisfies(const AffineSystem& sys, const RationalVector& x) {
    auto dot = [&](const RationalVector& row) {
        Rational s(0);
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
        return s;
    };
    for (const auto& [row, rhs] : sys.equalities)
        if (dot(row) != rhs) return false;
    for (const auto& [row, rhs] : sys.inequalities)
        if (dot(row) < rhs) return false;
    return true;
}

enum class DescriptionVariant {
    AllCorridors,  // one inequality per corridor, good and bad
    FacetsOnly,    // good corridors only
};

/// Minimum-size affine description: zero rows for arcs off the reduction,
/// conservation rows, the source row, and one inequality per (good) corridor
/// using its smallest arc id. Both variants describe the same solution set.
inline AffineSystem min_description(const Network& net, DescriptionVariant variant) {
    const Digraph& g = net.graph;
    ReducedNetwork red = reduce(net);
    const std::size_t n = g.arc_count();
    AffineSystem sys;
    for (int a = 0; a < g.arc_count(); ++a) {
        if (red.arc_kept[a]) continue;
        RationalVector row(n, Rational(0));
        row[a] = 1;
        sys.equalities.emplace_back(std::move(row), Rational(0));
    }
    for (int v : red.kept_nodes) {
        if (v == net.source || v == net.sink) continue;
        RationalVector row(n, Rational(0));
        for (int a : red.r_out[v]) row[a] = 1;
        for (int a : red.r_in[v]) row[a] = -1;
        sys.equalities.emplace_back(std::move(row), Rational(0));
    }
    {
        RationalVector row(n, Rational(0));
        for (int a : red.r_out[net.source]) row[a] = 1;
        for (int a : red.r_in[net.source]) row[a] = -1;
        sys.equalities.emplace_back(std::move(row), Rational(1));
    }
    for (const Corridor& c : corridors(red)) {
        if (variant == DescriptionVariant::FacetsOnly && !c.good) continue;
        RationalVector row(n, Rational(0));
        row[c.representative_arc()] = 1;
        sys.inequalities.emplace_back(std::move(row), Rational(0));
    }
    return sys;
}

/// BFS diameter of the skeleton (the vertex-adjacency graph); 0 for a point.
inline int skeleton_diameter(const Network& net) {
    std::vector<Path> verts = enumerate_paths(net);
    const int n = static_cast<int>(verts.size());
    if (n <= 1) return 0;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vertices_adjacent(net, verts[i], verts[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    int diameter = 0;
    std::vector<int> dist(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            diameter = std::max(diameter, dist[v]);
            for (int w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
    }
    return diameter;
}

}  // namespace flowpoly
