#pragma once

#include <cstdint>
#include <vector>

#include "flowpoly/network.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/rational.hpp"

// Independent exact-rational geometric ground truth. Everything here argues
// straight from definitions (rank, convex-hull feasibility); none of it reuses
// the combinatorial characterizations it is meant to check.

namespace flowpoly {

using RationalMatrix = std::vector<RationalVector>;

/// Maximum number of affinely independent points (affine dimension + 1),
/// by exact Gaussian elimination on the translated point set.
inline int affine_rank(const RationalMatrix& points) {
    if (points.empty()) throw EmptyInput("affine_rank of no points");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw DimensionMismatch("points of unequal length");
    RationalMatrix rows;
    rows.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector r(dim);
        for (std::size_t j = 0; j < dim; ++j) r[j] = points[i][j] - points[0][j];
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (std::size_t col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < dim; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank + 1;
}

namespace detail {

/// Phase-1 simplex with Bland's rule on  A y = b, y >= 0  (b >= 0 after sign
/// normalization). Returns true iff the system is feasible. Bland's rule makes
/// termination unconditional; speed is secondary to exactness here.
inline bool phase1_feasible(RationalMatrix A, RationalVector b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    if (m == 0) return true;
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }
    // Columns 0..n-1 structural, n..n+m-1 artificial.
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = n + i;
        A[i].resize(n + m, Rational(0));
        A[i][n + i] = 1;
    }
    // Reduced costs for min (sum of artificials); artificials start basic.
    RationalVector cost(n + m, Rational(0));
    Rational objective(0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[j] -= A[i][j];
        objective -= b[i];
    }
    while (true) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (A[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            Rational diff = b[i] * A[leave][enter] - b[leave] * A[i][enter];
            if (diff < 0 || (diff == 0 && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) break;  // unbounded; cannot happen with artificials present
        Rational piv = A[leave][enter];
        for (auto& v : A[leave]) v /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || A[i][enter] == 0) continue;
            Rational f = A[i][enter];
            for (std::size_t j = 0; j < n + m; ++j) A[i][j] -= f * A[leave][j];
            b[i] -= f * b[leave];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < n + m; ++j) cost[j] -= f * A[leave][j];
            objective -= f * b[leave];
        }
        basis[leave] = enter;
    }
    return objective == 0;
}

}  // namespace detail

/// Exact feasibility of  sum lambda_v v = x, lambda >= 0, sum lambda = 1  over
/// the points whose indices are not excluded.
inline bool in_convex_hull(const RationalVector& x, const RationalMatrix& points,
                           const std::vector<std::size_t>& excluded = {}) {
    std::vector<char> skip(points.size(), 0);
    for (std::size_t i : excluded) {
        if (i >= points.size()) throw IndexError("excluded index out of range");
        skip[i] = 1;
    }
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!skip[i]) cols.push_back(i);
    if (cols.empty()) return false;
    const std::size_t dim = x.size();
    for (std::size_t i : cols)
        if (points[i].size() != dim) throw DimensionMismatch("point/target length mismatch");

    // Build [A | b] with the convexity row, then eliminate dependent rows so
    // the simplex works on an independent system.
    RationalMatrix sys;
    RationalVector rhs;
    for (std::size_t r = 0; r < dim; ++r) {
        RationalVector row(cols.size());
        bool all_zero = true;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            row[j] = points[cols[j]][r];
            if (row[j] != 0) all_zero = false;
        }
        if (all_zero) {
            if (x[r] != 0) return false;
            continue;
        }
        sys.push_back(std::move(row));
        rhs.push_back(x[r]);
    }
    sys.emplace_back(cols.size(), Rational(1));
    rhs.emplace_back(1);

    // Row echelon on the augmented matrix; a 0 = nonzero row means infeasible.
    std::size_t rank = 0;
    const std::size_t ncols = cols.size();
    for (std::size_t col = 0; col < ncols && rank < sys.size(); ++col) {
        std::size_t pivot = sys.size();
        for (std::size_t i = rank; i < sys.size(); ++i)
            if (sys[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == sys.size()) continue;
        std::swap(sys[rank], sys[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (std::size_t i = rank + 1; i < sys.size(); ++i) {
            if (sys[i][col] == 0) continue;
            Rational f = sys[i][col] / sys[rank][col];
            for (std::size_t j = col; j < ncols; ++j) sys[i][j] -= f * sys[rank][j];
            rhs[i] -= f * rhs[rank];
        }
        ++rank;
    }
    for (std::size_t i = rank; i < sys.size(); ++i)
        if (rhs[i] != 0) return false;
    sys.resize(rank);
    rhs.resize(rank);
    return detail::phase1_feasible(std::move(sys), std::move(rhs));
}

/// Standard edge criterion: chi^P and chi^Q are adjacent iff their midpoint is
/// outside the hull of the remaining vertices.
inline bool oracle_vertices_adjacent(const Network& net, const Path& P, const Path& Q,
                                     const RationalMatrix* vertices = nullptr) {
    validate_st_path(net, P);
    validate_st_path(net, Q);
    if (P == Q) throw SamePath("the two paths are equal");
    RationalMatrix owned;
    if (!vertices) {
        for (const Path& r : enumerate_paths(net))
            owned.push_back(char_vector(r, net.graph.arc_count()));
        vertices = &owned;
    }
    const std::size_t arc_count = net.graph.arc_count();
    RationalVector mid(arc_count, Rational(0));
    for (int a : P.arcs) mid[a] += Rational(1, 2);
    for (int a : Q.arcs) mid[a] += Rational(1, 2);
    std::vector<std::size_t> excluded;
    RationalVector cp = char_vector(P, arc_count), cq = char_vector(Q, arc_count);
    for (std::size_t i = 0; i < vertices->size(); ++i) {
        if ((*vertices)[i] == cp || (*vertices)[i] == cq) {
            excluded.push_back(i);
            continue;
        }
        // All vertices are nonnegative, so any vertex with support outside the
        // midpoint's support is forced to weight zero and can be dropped.
        for (std::size_t a = 0; a < arc_count; ++a)
            if (mid[a] == 0 && (*vertices)[i][a] != 0) {
                excluded.push_back(i);
                break;
            }
    }
    return !in_convex_hull(mid, *vertices, excluded);
}

/// Independent s-t path counter: memoized depth-first search, saturating.
/// Deliberately a different algorithm from the topological-order counter.
inline std::uint64_t oracle_path_count(const Network& net) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> memo(net.graph.node_count(), kMax);
    std::vector<char> known(net.graph.node_count(), 0);
    auto rec = [&](auto&& self, int v) -> std::uint64_t {
        if (v == net.sink) return 1;
        if (known[v]) return memo[v];
        std::uint64_t total = 0;
        for (int a : net.graph.out_arcs(v)) {
            std::uint64_t sub = self(self, net.graph.arc(a).head);
            total = (kMax - total < sub) ? kMax : total + sub;
        }
        known[v] = 1;
        memo[v] = total;
        return total;
    };
    return rec(rec, net.source);
}

/// Dimension of the face {x : x(a) = 0 for a in tight_arcs}: affine rank of the
/// vertices avoiding every tight arc, minus one. -1 for the empty face.
inline int oracle_face_dimension(const Network& net, const std::vector<int>& tight_arcs) {
    std::vector<char> tight(net.graph.arc_count(), 0);
    for (int a : tight_arcs) {
        if (a < 0 || a >= net.graph.arc_count()) throw IndexError("tight arc out of range");
        tight[a] = 1;
    }
    RationalMatrix kept;
    for_each_path(net, [&](const Path& p) {
        for (int a : p.arcs)
            if (tight[a]) return;
        kept.push_back(char_vector(p, net.graph.arc_count()));
    });
    if (kept.empty()) return -1;
    return affine_rank(kept) - 1;
}

/// SplitMix64 step (Steele, Lea & Flood 2014); fixed bit-exactly so generated
/// corpora are reproducible across implementations.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4B9B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct NetworkGenSpec {
    std::uint64_t seed;
    int node_count;          // >= 2
    Rational arc_probability;  // in (0, 1]
};

/// Seed-deterministic random acyclic network: nodes 0..k-1 in topological
/// order, each forward arc (i,j), i<j, kept iff the next SplitMix64 draw falls
/// below floor(p * 2^64). s = 0, t = k-1.
inline Network gen_network(const NetworkGenSpec& spec) {
    if (spec.node_count < 2) throw InvalidGraph("need at least two nodes");
    if (spec.arc_probability <= 0 || spec.arc_probability > 1)
        throw InvalidGraph("arc probability must be in (0,1]");
    bool always = spec.arc_probability == 1;
    boost::multiprecision::mpz_int threshold =
        boost::multiprecision::mpz_int(boost::multiprecision::numerator(spec.arc_probability))
            << 64;
    threshold /= boost::multiprecision::mpz_int(
        boost::multiprecision::denominator(spec.arc_probability));
    std::uint64_t state = spec.seed;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < spec.node_count; ++i)
        for (int j = i + 1; j < spec.node_count; ++j) {
            std::uint64_t draw = splitmix64(state);
            if (always || boost::multiprecision::mpz_int(draw) < threshold)
                arcs.emplace_back(i, j);
        }
    return Network(Digraph(spec.node_count, arcs), 0, spec.node_count - 1);
}

}  // namespace flowpoly
