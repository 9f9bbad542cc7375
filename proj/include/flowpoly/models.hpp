#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "flowpoly/geometry.hpp"
#include "flowpoly/network.hpp"
#include "flowpoly/oracle.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/rational.hpp"

// The four model networks over an alternative set C = {1..n}, the order/path
// codecs, the choice-probability machinery (predict, Mobius, rho/sigma), the
// MCP-specific closed forms, identifiability, and the closed-form bad-arc and
// facet-adjacency classifiers for the interval-order and semiorder networks.

namespace flowpoly {

using Mask = std::uint32_t;

enum class Family { lo, wo, io, so };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::lo: return "lo";
        case Family::wo: return "wo";
        case Family::io: return "io";
        case Family::so: return "so";
    }
    return "?";
}

namespace detail {

inline int bit_count(Mask m) { return std::popcount(m); }

inline std::string set_label(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; m >> i; ++i)
        if (m & (Mask(1) << i)) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

inline std::string seq_label(const std::vector<int>& seq) {
    std::string out = "[";
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(seq[k]);
    }
    return out + "]";
}

/// Proper submasks of m, ascending.
inline std::vector<Mask> proper_submasks(Mask m) {
    std::vector<Mask> subs;
    if (m == 0) return subs;
    for (Mask s = (m - 1) & m;; s = (s - 1) & m) {
        subs.push_back(s);
        if (s == 0) break;
    }
    std::reverse(subs.begin(), subs.end());
    return subs;
}

}  // namespace detail

/// One of the four model networks, with per-node identity metadata:
/// subsets X (and Y for io/so) as bitmasks over alternatives 1..n
/// (bit i-1 stands for alternative i), and for so the queue L over X\Y.
struct ModelNetwork {
    Family family;
    int n;
    Network net;
    std::vector<Mask> node_X;
    std::vector<Mask> node_Y;                // lo/wo: equal to node_X
    std::vector<std::vector<int>> node_L;    // so only; empty otherwise

    Mask full() const { return (Mask(1) << n) - 1; }

    /// Node id of (X,Y,L); -1 when absent.
    int find_node(Mask X, Mask Y, const std::vector<int>& L = {}) const {
        for (int v = 0; v < net.graph.node_count(); ++v)
            if (node_X[v] == X && node_Y[v] == Y && node_L[v] == L) return v;
        return -1;
    }
};

inline int io_node_count(int n) {
    int c = 1;
    for (int k = 0; k < n; ++k) c *= 3;
    return c;
}

inline int io_arc_count(int n) { return n >= 1 ? 2 * n * io_node_count(n - 1) : 0; }

inline ModelNetwork build_model(Family family, int n) {
    if (n < 1) throw SizeGuard("need at least one alternative");
    int cap = (family == Family::lo || family == Family::wo) ? 6
              : family == Family::io                         ? 5
                                                             : 4;
    if (n > cap)
        throw SizeGuard("family " + family_name(family) + " is capped at n = " +
                        std::to_string(cap));
    const Mask full = (Mask(1) << n) - 1;

    if (family == Family::lo || family == Family::wo) {
        int count = 1 << n;
        std::vector<std::string> labels(count);
        for (int m = 0; m < count; ++m) labels[m] = detail::set_label(Mask(m));
        std::vector<std::pair<int, int>> arcs;
        for (Mask T = 1; T <= full; ++T) {
            if (family == Family::lo) {
                for (int i = 0; i < n; ++i)
                    if (T & (Mask(1) << i)) arcs.emplace_back(int(T ^ (Mask(1) << i)), int(T));
            } else {
                for (Mask S : detail::proper_submasks(T)) arcs.emplace_back(int(S), int(T));
            }
        }
        ModelNetwork m{family, n, Network(Digraph(count, arcs, std::move(labels)), 0, int(full)),
                       {}, {}, {}};
        m.node_X.resize(count);
        m.node_Y.resize(count);
        m.node_L.resize(count);
        for (int v = 0; v < count; ++v) m.node_X[v] = m.node_Y[v] = Mask(v);
        return m;
    }

    if (family == Family::io) {
        std::vector<Mask> X, Y;
        std::map<std::pair<Mask, Mask>, int> index;
        for (Mask x = 0; x <= full; ++x) {
            std::vector<Mask> subs = detail::proper_submasks(x);
            subs.push_back(x);
            for (Mask y : subs) {
                index[{x, y}] = int(X.size());
                X.push_back(x);
                Y.push_back(y);
            }
        }
        std::vector<std::string> labels(X.size());
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t v = 0; v < X.size(); ++v) {
            labels[v] = "(" + detail::set_label(X[v]) + "," + detail::set_label(Y[v]) + ")";
            for (int i = 0; i < n; ++i)
                if (!(X[v] & (Mask(1) << i)))
                    arcs.emplace_back(int(v), index.at({X[v] | (Mask(1) << i), Y[v]}));
            for (int j = 0; j < n; ++j)
                if ((X[v] & (Mask(1) << j)) && !(Y[v] & (Mask(1) << j)))
                    arcs.emplace_back(int(v), index.at({X[v], Y[v] | (Mask(1) << j)}));
        }
        ModelNetwork m{family, n,
                       Network(Digraph(int(X.size()), arcs, std::move(labels)), index.at({0, 0}),
                               index.at({full, full})),
                       std::move(X), std::move(Y), {}};
        m.node_L.resize(m.node_X.size());
        return m;
    }

    // so: nodes (X, Y, L) with L a queue over X\Y (append last, remove first).
    std::vector<Mask> X, Y;
    std::vector<std::vector<int>> L;
    std::map<std::tuple<Mask, Mask, std::vector<int>>, int> index;
    for (Mask x = 0; x <= full; ++x) {
        std::vector<Mask> subs = detail::proper_submasks(x);
        subs.push_back(x);
        for (Mask y : subs) {
            std::vector<int> ground;
            for (int i = 0; i < n; ++i)
                if ((x & (Mask(1) << i)) && !(y & (Mask(1) << i))) ground.push_back(i + 1);
            std::vector<int> perm = ground;
            do {
                index[{x, y, perm}] = int(X.size());
                X.push_back(x);
                Y.push_back(y);
                L.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    std::vector<std::string> labels(X.size());
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t v = 0; v < X.size(); ++v) {
        labels[v] = "(" + detail::set_label(X[v]) + "," + detail::set_label(Y[v]) + "," +
                    detail::seq_label(L[v]) + ")";
        for (int i = 1; i <= n; ++i)
            if (!(X[v] & (Mask(1) << (i - 1)))) {
                std::vector<int> m2 = L[v];
                m2.push_back(i);
                arcs.emplace_back(int(v), index.at({X[v] | (Mask(1) << (i - 1)), Y[v], m2}));
            }
        if (!L[v].empty()) {
            int j = L[v].front();
            std::vector<int> m2(L[v].begin() + 1, L[v].end());
            arcs.emplace_back(int(v), index.at({X[v], Y[v] | (Mask(1) << (j - 1)), m2}));
        }
    }
    return ModelNetwork{Family::so, n,
                        Network(Digraph(int(X.size()), arcs, std::move(labels)),
                                index.at({0, 0, {}}), index.at({full, full, {}})),
                        std::move(X), std::move(Y), std::move(L)};
}

// ---------------------------------------------------------------------------
// Orders and the order <-> path codecs.

/// A linear order as a permutation of 1..n, best alternative first.
using Order = std::vector<int>;

inline void validate_order(int n, const Order& order) {
    if (int(order.size()) != n) throw InvalidGraph("order must rank all " + std::to_string(n) +
                                                   " alternatives");
    std::vector<char> seen(n + 1, 0);
    for (int i : order) {
        if (i < 1 || i > n || seen[i]) throw InvalidGraph("order is not a permutation of 1.." +
                                                          std::to_string(n));
        seen[i] = 1;
    }
}

/// All orders of 1..n, lexicographic.
inline std::vector<Order> all_orders(int n) {
    Order base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<Order> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

/// Image of the order's prediction vertex on the lo network: the path visits
/// the ending sets of the order, so node sets grow from the worst alternative
/// up to the best.
inline Path order_to_path(const ModelNetwork& m, const Order& order) {
    if (m.family != Family::lo) throw InvalidGraph("order_to_path expects the lo family");
    validate_order(m.n, order);
    Path p;
    Mask cur = 0;
    for (int k = m.n - 1; k >= 0; --k) {
        Mask next = cur | (Mask(1) << (order[k] - 1));
        p.arcs.push_back(m.net.graph.find_arc(int(cur), int(next)));
        cur = next;
    }
    return p;
}

inline Order path_to_order(const ModelNetwork& m, const Path& p) {
    if (m.family != Family::lo) throw InvalidGraph("path_to_order expects the lo family");
    validate_st_path(m.net, p);
    if (int(p.arcs.size()) != m.n) throw NotAPath("path length must equal n");
    Order order(m.n);
    for (int k = 0; k < m.n; ++k) {
        const Arc& a = m.net.graph.arc(p.arcs[k]);
        Mask added = Mask(a.head) ^ Mask(a.tail);
        if (detail::bit_count(added) != 1) throw NotAPath("path step adds more than one element");
        order[m.n - 1 - k] = std::countr_zero(added) + 1;
    }
    return order;
}

/// A weak order as its ordered equivalence classes, best class first.
using WeakOrder = std::vector<Mask>;

inline void validate_weak_order(int n, const WeakOrder& w) {
    Mask seen = 0;
    for (Mask cls : w) {
        if (cls == 0) throw InvalidGraph("weak order has an empty class");
        if (cls & seen) throw InvalidGraph("weak order classes overlap");
        seen |= cls;
    }
    if (seen != (Mask(1) << n) - 1) throw InvalidGraph("weak order does not cover 1..n");
}

/// Path whose successive nodes are the beginning sets of the weak order:
/// classes are accumulated from the best class down.
inline Path weak_order_to_path(const ModelNetwork& m, const WeakOrder& w) {
    if (m.family != Family::wo) throw InvalidGraph("weak_order_to_path expects the wo family");
    validate_weak_order(m.n, w);
    Path p;
    Mask cur = 0;
    for (Mask cls : w) {
        Mask next = cur | cls;
        p.arcs.push_back(m.net.graph.find_arc(int(cur), int(next)));
        cur = next;
    }
    return p;
}

inline WeakOrder path_to_weak_order(const ModelNetwork& m, const Path& p) {
    if (m.family != Family::wo) throw InvalidGraph("path_to_weak_order expects the wo family");
    validate_st_path(m.net, p);
    WeakOrder w;
    for (int a : p.arcs) {
        const Arc& arc = m.net.graph.arc(a);
        w.push_back(Mask(arc.head) ^ Mask(arc.tail));
    }
    return w;
}

/// All weak orders of 1..n (ordered set partitions), depth-first by best class.
inline std::vector<WeakOrder> all_weak_orders(int n) {
    const Mask full = (Mask(1) << n) - 1;
    std::vector<WeakOrder> out;
    WeakOrder stack;
    auto rec = [&](auto&& self, Mask remaining) -> void {
        if (remaining == 0) {
            out.push_back(stack);
            return;
        }
        std::vector<Mask> subs = detail::proper_submasks(remaining);
        subs.push_back(remaining);
        for (Mask cls : subs) {
            if (cls == 0) continue;
            stack.push_back(cls);
            self(self, remaining & ~cls);
            stack.pop_back();
        }
    };
    rec(rec, full);
    return out;
}

// ---------------------------------------------------------------------------
// Choice probabilities and the MCM.

/// The choice probabilities p(i,S), i in S, S nonempty, densely indexed by
/// ascending subset mask then ascending i.
struct ChoiceProbabilities {
    int n;
    RationalVector values;

    static int size_for(int n) {
        // sum over nonempty S of |S| = n * 2^(n-1)
        return n << (n - 1);
    }

    static ChoiceProbabilities zero(int n) { return {n, RationalVector(size_for(n), Rational(0))}; }

    int index(Mask S, int i) const {
        if (i < 1 || i > n || !(S & (Mask(1) << (i - 1))))
            throw IndexError("p(i,S) needs i in S");
        int idx = 0;
        for (Mask T = 1; T < S; ++T) idx += detail::bit_count(T);
        for (int j = 1; j < i; ++j)
            if (S & (Mask(1) << (j - 1))) ++idx;
        return idx;
    }

    const Rational& at(Mask S, int i) const { return values[index(S, i)]; }
    Rational& at(Mask S, int i) { return values[index(S, i)]; }
};

/// A probability distribution on linear orders: positive masses summing to 1.
struct OrderDistribution {
    int n;
    std::vector<std::pair<Order, Rational>> support;
};

inline void validate_distribution(const OrderDistribution& d) {
    Rational total(0);
    std::vector<Order> seen;
    for (const auto& [order, mass] : d.support) {
        validate_order(d.n, order);
        if (mass <= 0) throw InvalidGraph("distribution mass must be positive");
        if (std::find(seen.begin(), seen.end(), order) != seen.end())
            throw InvalidGraph("duplicate order in distribution support");
        seen.push_back(order);
        total += mass;
    }
    if (total != 1) throw InvalidGraph("distribution masses must sum to 1");
}

/// p(i,S) = total mass of orders ranking i best within S.
inline ChoiceProbabilities predict(const OrderDistribution& d) {
    validate_distribution(d);
    ChoiceProbabilities p = ChoiceProbabilities::zero(d.n);
    const Mask full = (Mask(1) << d.n) - 1;
    for (const auto& [order, mass] : d.support)
        for (Mask S = 1; S <= full; ++S)
            for (int i : order)
                if (S & (Mask(1) << (i - 1))) {
                    p.at(S, i) += mass;  // the first order element in S is its best
                    break;
                }
    return p;
}

/// Signed Mobius sum q(i,T) over supersets of T.
inline Rational block_marschak(const ChoiceProbabilities& p, int i, Mask T) {
    if (i < 1 || i > p.n || !(T & (Mask(1) << (i - 1))))
        throw IndexError("block_marschak needs i in T");
    const Mask full = (Mask(1) << p.n) - 1;
    Rational q(0);
    for (Mask S = T;; S = (S + 1) | T) {
        if (detail::bit_count(Mask(S & ~T)) % 2 == 0)
            q += p.at(S, i);
        else
            q -= p.at(S, i);
        if (S == full) break;
    }
    return q;
}

/// The signed-Mobius characterization: every q(i,T) nonnegative and every choice set
/// normalized.
inline bool in_mcp(const ChoiceProbabilities& p) {
    const Mask full = (Mask(1) << p.n) - 1;
    for (Mask S = 1; S <= full; ++S) {
        Rational total(0);
        for (int i = 1; i <= p.n; ++i)
            if (S & (Mask(1) << (i - 1))) total += p.at(S, i);
        if (total != 1) return false;
    }
    for (Mask T = 1; T <= full; ++T)
        for (int i = 1; i <= p.n; ++i)
            if (T & (Mask(1) << (i - 1)))
                if (block_marschak(p, i, T) < 0) return false;
    return true;
}

/// The arc (T\{i}, T) of the lo network.
inline int lo_arc(const ModelNetwork& m, int i, Mask T) {
    if (m.family != Family::lo) throw InvalidGraph("lo_arc expects the lo family");
    if (i < 1 || i > m.n || !(T & (Mask(1) << (i - 1)))) throw IndexError("lo_arc needs i in T");
    return m.net.graph.find_arc(int(T ^ (Mask(1) << (i - 1))), int(T));
}

/// rho: choice probabilities to arc values on the lo network,
/// r(T\{i},T) = q(i,T).
inline RationalVector rho(const ModelNetwork& m, const ChoiceProbabilities& p) {
    if (m.family != Family::lo) throw InvalidGraph("rho expects the lo family");
    if (p.n != m.n) throw DimensionMismatch("alternative counts differ");
    RationalVector r(m.net.graph.arc_count(), Rational(0));
    const Mask full = m.full();
    for (Mask T = 1; T <= full; ++T)
        for (int i = 1; i <= m.n; ++i)
            if (T & (Mask(1) << (i - 1))) r[lo_arc(m, i, T)] = block_marschak(p, i, T);
    return r;
}

/// sigma, the inverse of rho: p(i,S) = sum over T >= S of r(T\{i},T).
inline ChoiceProbabilities sigma(const ModelNetwork& m, const RationalVector& r) {
    if (m.family != Family::lo) throw InvalidGraph("sigma expects the lo family");
    if (r.size() != std::size_t(m.net.graph.arc_count()))
        throw DimensionMismatch("arc vector length mismatch");
    ChoiceProbabilities p = ChoiceProbabilities::zero(m.n);
    const Mask full = m.full();
    for (Mask S = 1; S <= full; ++S)
        for (int i = 1; i <= m.n; ++i) {
            if (!(S & (Mask(1) << (i - 1)))) continue;
            Rational sum(0);
            for (Mask T = S;; T = (T + 1) | S) {
                sum += r[lo_arc(m, i, T)];
                if (T == full) break;
            }
            p.at(S, i) = sum;
        }
    return p;
}

// ---------------------------------------------------------------------------
// MCP vertex adjacency and identifiability.

namespace detail {

inline Mask prefix_mask(const Order& order, int k) {
    Mask m = 0;
    for (int idx = 0; idx < k; ++idx) m |= Mask(1) << (order[idx] - 1);
    return m;
}

inline Order restrict_order(const Order& order, Mask set) {
    Order out;
    for (int i : order)
        if (set & (Mask(1) << (i - 1))) out.push_back(i);
    return out;
}

}  // namespace detail

/// Adjacency of the prediction vertices: at every common nontrivial beginning
/// set the two orders coincide either on it or on its complement.
inline bool mcp_vertices_adjacent(int n, const Order& a, const Order& b) {
    validate_order(n, a);
    validate_order(n, b);
    if (a == b) throw SameOrder("the two orders are equal");
    const Mask full = (Mask(1) << n) - 1;
    for (int k = 1; k < n; ++k) {
        Mask U = detail::prefix_mask(a, k);
        if (U != detail::prefix_mask(b, k)) continue;
        if (detail::restrict_order(a, U) != detail::restrict_order(b, U) &&
            detail::restrict_order(a, Mask(full & ~U)) !=
                detail::restrict_order(b, Mask(full & ~U)))
            return false;
    }
    return true;
}

/// The common-beginning-set form of the non-identifiability condition on a
/// pair of distinct orders (the negation of vertex adjacency).
inline bool nonadjacency_condition_sets(int n, const Order& a, const Order& b) {
    return !mcp_vertices_adjacent(n, a, b);
}

/// The alternative-triple form: alternatives i != j and k with k below both i
/// and j in both orders, k's beginning sets differing, and i's beginning set
/// under the first order equal to j's under the second.
inline bool nonadjacency_condition_triples(int n, const Order& a, const Order& b) {
    validate_order(n, a);
    validate_order(n, b);
    std::vector<int> pos_a(n + 1), pos_b(n + 1);
    for (int idx = 0; idx < n; ++idx) {
        pos_a[a[idx]] = idx;
        pos_b[b[idx]] = idx;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (detail::prefix_mask(a, pos_a[i] + 1) != detail::prefix_mask(b, pos_b[j] + 1))
                continue;
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                if (pos_a[i] < pos_a[k] && pos_a[j] < pos_a[k] && pos_b[i] < pos_b[k] &&
                    pos_b[j] < pos_b[k] &&
                    detail::prefix_mask(a, pos_a[k] + 1) != detail::prefix_mask(b, pos_b[k] + 1))
                    return true;
            }
        }
    return false;
}

struct IdentifyResult {
    bool identified;
    // Populated only when not identified:
    Order first, second;        // the offending support pair
    Mask U = 0;                 // minimal common beginning set violating adjacency
    int i = 0, j = 0, k = 0;    // the alternative triple derived from U
};

/// A distribution is identified exactly when all its support vertices are
/// pairwise adjacent. The witness follows the minimal-U construction: i and j
/// are the worst elements of U under each order, k the first alternative on
/// which the two orders' restrictions outside U disagree.
inline IdentifyResult is_identified(const OrderDistribution& d) {
    validate_distribution(d);
    const Mask full = (Mask(1) << d.n) - 1;
    for (std::size_t x = 0; x < d.support.size(); ++x)
        for (std::size_t y = x + 1; y < d.support.size(); ++y) {
            const Order& a = d.support[x].first;
            const Order& b = d.support[y].first;
            if (mcp_vertices_adjacent(d.n, a, b)) continue;
            IdentifyResult res{false, a, b, 0, 0, 0, 0};
            for (int k = 1; k < d.n; ++k) {
                Mask U = detail::prefix_mask(a, k);
                if (U != detail::prefix_mask(b, k)) continue;
                Mask co = full & ~U;
                Order ra = detail::restrict_order(a, co), rb = detail::restrict_order(b, co);
                if (detail::restrict_order(a, U) == detail::restrict_order(b, U) || ra == rb)
                    continue;
                res.U = U;
                res.i = a[k - 1];
                res.j = b[k - 1];
                for (std::size_t idx = 0; idx < ra.size(); ++idx)
                    if (ra[idx] != rb[idx]) {
                        res.k = ra[idx];
                        break;
                    }
                break;  // beginning sets are nested, so the first hit is minimal
            }
            return res;
        }
    return {true, {}, {}, 0, 0, 0, 0};
}

// ---------------------------------------------------------------------------
// MCP facets.

/// The Block-Marschak inequality of (i,T) is facet-defining iff 2 <= |T| <= n-1.
inline bool mcp_facet_status(int n, int i, Mask T) {
    if (i < 1 || i > n || !(T & (Mask(1) << (i - 1))))
        throw IndexError("mcp_facet_status needs i in T");
    int size = detail::bit_count(T);
    return 2 <= size && size <= n - 1;
}

/// Facet adjacency on the MCP, n >= 4: nonadjacent exactly in the two
/// complement/pair coincidence cases.
inline bool mcp_facets_adjacent(int n, int i, Mask T, int i2, Mask T2) {
    if (n < 4) throw DimensionTooSmall("MCP facet adjacency needs n >= 4");
    if (!mcp_facet_status(n, i, T)) throw NotFacetDefining("first pair is not facet-defining");
    if (!mcp_facet_status(n, i2, T2)) throw NotFacetDefining("second pair is not facet-defining");
    if (i == i2 && T == T2) throw SameFacet("the two pairs are equal");
    const Mask full = (Mask(1) << n) - 1;
    Mask bi = Mask(1) << (i - 1), bi2 = Mask(1) << (i2 - 1);
    if (T == (full & ~bi2) && T2 == (full & ~bi)) return false;
    if (T == T2 && T == (bi | bi2)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Closed forms for the io and so families.

namespace detail {

inline void require_family(const ModelNetwork& m, Family f, const char* what) {
    if (m.family != f) throw InvalidGraph(std::string(what) + " expects the " +
                                          family_name(f) + " family");
    if (m.n < 3) throw SizeGuard(std::string(what) + " needs n >= 3");
}

}  // namespace detail

/// Bad-arc test on the io network by the four displayed forms.
inline bool io_bad_arc(const ModelNetwork& m, int arc_id) {
    detail::require_family(m, Family::io, "io_bad_arc");
    const Arc& a = m.net.graph.arc(arc_id);
    Mask X = m.node_X[a.tail], Y = m.node_Y[a.tail];
    Mask Z = m.node_X[a.head];
    const Mask full = m.full();
    if (X == 0 && Y == 0) return true;                                    // ((0,0),({i},0))
    if (detail::bit_count(X) == 1 && Y == 0 && Z == X) return true;       // (({i},0),({i},{i}))
    if (X == Y && detail::bit_count(X) == m.n - 1) return true;           // into (C, C\{i})
    if (X == full && detail::bit_count(Y) == m.n - 1) return true;        // into (C, C)
    return false;
}

enum class SoArcType { good, alpha, beta, gamma, delta };

/// Bad-arc classification on the so network. The corridor structure makes the
/// first arc into a queue node (C,0,L) and the arc leaving it both good, which
/// trims the alpha and delta shapes accordingly; the gamma shape collapses to
/// the singleton tails.
inline SoArcType so_arc_type(const ModelNetwork& m, int arc_id) {
    detail::require_family(m, Family::so, "so_arc_type");
    const Arc& a = m.net.graph.arc(arc_id);
    Mask X = m.node_X[a.tail], Y = m.node_Y[a.tail];
    Mask Z = m.node_X[a.head];
    const Mask full = m.full();
    if (Z != X) {  // insertion arc
        if (Y == 0 && Z != full) return SoArcType::alpha;
        if (X == Y && detail::bit_count(X) == m.n - 1) return SoArcType::beta;
    } else {  // removal arc
        if (detail::bit_count(X) == 1) return SoArcType::gamma;
        if (X == full && Y != 0) return SoArcType::delta;
    }
    return SoArcType::good;
}

inline bool so_bad_arc(const ModelNetwork& m, int arc_id) {
    return so_arc_type(m, arc_id) != SoArcType::good;
}

/// Closed-form facet non-adjacency for the wo, io and so families.
/// wo: all facets are adjacent. io: the shared-endpoint patterns on (X,Y)
/// shapes, where the two all-equal shapes need n >= 4. so: the corridor
/// tail/head shape conditions, likewise trimmed at small n.
inline bool closed_form_facets_nonadjacent(const ModelNetwork& m, int arc_a, int arc_b) {
    if (m.family == Family::lo) throw InvalidGraph("no closed form for the lo family here");
    if (m.n < 3) throw SizeGuard("closed_form_facets_nonadjacent needs n >= 3");
    const Mask full = m.full();

    if (m.family == Family::wo) {
        for (int arc_id : {arc_a, arc_b}) {
            const Arc& a = m.net.graph.arc(arc_id);
            // the network is fully reduced, so plain degrees decide goodness
            if (m.net.graph.out_degree(a.tail) < 2 || m.net.graph.in_degree(a.head) < 2)
                throw NotFacetDefining("wo arc is not facet-defining");
        }
        if (arc_a == arc_b) throw SameFacet("the two arcs name the same facet");
        return false;
    }

    if (m.family == Family::io) {
        if (io_bad_arc(m, arc_a) || io_bad_arc(m, arc_b))
            throw NotFacetDefining("io arc is not facet-defining");
        if (arc_a == arc_b) throw SameFacet("the two arcs name the same facet");
        const Arc& a = m.net.graph.arc(arc_a);
        const Arc& b = m.net.graph.arc(arc_b);
        if (a.tail == b.tail) {
            Mask X = m.node_X[a.tail], Y = m.node_Y[a.tail];
            if (detail::bit_count(Y) == m.n - 2 && (X != Y || m.n >= 4)) return true;
        }
        if (a.head == b.head) {
            Mask X = m.node_X[a.head], Y = m.node_Y[a.head];
            if (detail::bit_count(X) == 2 && (X != Y || m.n >= 4)) return true;
        }
        return false;
    }

    // so: reason on corridors.
    ReducedNetwork red = reduce(m.net);
    std::vector<Corridor> cors = corridors(red);
    std::vector<int> cor_of = corridor_of_arc(cors, m.net.graph.arc_count());
    int ca = cor_of.at(arc_a), cb = cor_of.at(arc_b);
    if (!cors[ca].good || !cors[cb].good)
        throw NotFacetDefining("so arc is not facet-defining");
    if (ca == cb) throw SameFacet("the two arcs name the same facet");
    const Corridor& A = cors[ca];
    const Corridor& B = cors[cb];
    if (A.initial_node == B.initial_node) {
        int u = A.initial_node;
        Mask X = m.node_X[u], Y = m.node_Y[u];
        if (X == Y && detail::bit_count(X) == m.n - 2 && detail::bit_count(X) >= 2) return true;
        if (X != Y && detail::bit_count(X) == m.n - 1 && Y != 0) return true;
    }
    if (A.terminal_node == B.terminal_node) {
        int v = A.terminal_node;
        Mask X = m.node_X[v], Y = m.node_Y[v];
        if (X == Y && detail::bit_count(X) == 2 && m.n >= 4) return true;
        if (X != Y && detail::bit_count(Y) == 1 && X != full) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Seeded random distributions for property testing.

/// Deterministic random distribution on orders of 1..n: each order joins the
/// support with probability 1/2 (at least one always does), masses are small
/// random integers normalized to total 1.
inline OrderDistribution gen_distribution(std::uint64_t seed, int n) {
    if (n < 1 || n > 5) throw SizeGuard("gen_distribution supports 1 <= n <= 5");
    std::vector<Order> orders = all_orders(n);
    std::uint64_t state = seed;
    OrderDistribution d{n, {}};
    std::vector<std::uint64_t> weights;
    for (const Order& o : orders) {
        std::uint64_t draw = splitmix64(state);
        if (draw & 1) {
            d.support.emplace_back(o, Rational(0));
            weights.push_back(1 + (draw >> 32) % 16);
        }
    }
    if (d.support.empty()) {
        std::uint64_t draw = splitmix64(state);
        d.support.emplace_back(orders[draw % orders.size()], Rational(0));
        weights.push_back(1);
    }
    std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t(0));
    for (std::size_t idx = 0; idx < weights.size(); ++idx)
        d.support[idx].second = Rational(weights[idx], total);
    return d;
}

}  // namespace flowpoly
