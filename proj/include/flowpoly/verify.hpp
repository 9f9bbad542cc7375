#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "flowpoly/geometry.hpp"
#include "flowpoly/models.hpp"
#include "flowpoly/network.hpp"
#include "flowpoly/oracle.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/rational.hpp"

// The verification corpus (fixture networks plus seeded random networks) and
// every closed-form-vs-oracle cross-check, shared by the CLI's `verify corpus`
// and by the acceptance suite.

namespace flowpoly {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// --- fixtures ---------------------------------------------------------------

/// The seven-node example network; its reduction is the triangle network.
/// Nodes s,u,v,w,v1,v2,t; arcs in id order:
/// (s,t),(s,u),(u,v),(u,w),(v,w),(w,t),(v1,u),(v1,v),(v,v2),(w,v2).
inline Network triangle_network() {
    std::vector<std::string> labels = {"s", "u", "v", "w", "v1", "v2", "t"};
    std::vector<std::pair<int, int>> arcs = {{0, 6}, {0, 1}, {1, 2}, {1, 3}, {2, 3},
                                             {3, 6}, {4, 1}, {4, 2}, {2, 5}, {3, 5}};
    return Network(Digraph(7, arcs, std::move(labels)), 0, 6);
}

/// Chain of d diamonds; its flow polytope is the d-dimensional 0/1 cube.
inline Network cube_network(int d) {
    if (d < 1) throw InvalidGraph("cube dimension must be >= 1");
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::string> labels(3 * d + 1);
    for (int i = 0; i <= d; ++i) labels[i] = "c" + std::to_string(i);
    for (int i = 0; i < d; ++i) {
        int top = d + 1 + 2 * i, bot = d + 2 + 2 * i;
        labels[top] = "top" + std::to_string(i + 1);
        labels[bot] = "bot" + std::to_string(i + 1);
        arcs.emplace_back(i, top);
        arcs.emplace_back(top, i + 1);
        arcs.emplace_back(i, bot);
        arcs.emplace_back(bot, i + 1);
    }
    return Network(Digraph(3 * d + 1, arcs, std::move(labels)), 0, d);
}

inline std::vector<std::pair<std::string, Network>> fixture_networks() {
    std::vector<std::pair<std::string, Network>> out;
    out.emplace_back("triangle", triangle_network());
    for (int d = 1; d <= 4; ++d)
        out.emplace_back("cube" + std::to_string(d), cube_network(d));
    for (int n = 2; n <= 4; ++n)
        out.emplace_back("lo" + std::to_string(n), build_model(Family::lo, n).net);
    for (int n = 2; n <= 4; ++n)
        out.emplace_back("wo" + std::to_string(n), build_model(Family::wo, n).net);
    for (int n = 2; n <= 3; ++n)
        out.emplace_back("io" + std::to_string(n), build_model(Family::io, n).net);
    for (int n = 2; n <= 3; ++n)
        out.emplace_back("so" + std::to_string(n), build_model(Family::so, n).net);
    return out;
}

/// Corpus random network for a seed: k cycles through 4..8, p through 1/4, 1/2, 3/4.
inline Network corpus_random_network(std::uint64_t seed) {
    int k = 4 + int((seed - 1) % 5);
    static const Rational probs[3] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    return gen_network({seed, k, probs[(seed - 1) % 3]});
}

// --- per-network cross-checks ----------------------------------------------

namespace verify_detail {

/// Random convex combination of the vertices, deterministic in the seed state.
inline RationalVector random_combination(const RationalMatrix& vmat, std::uint64_t& state) {
    std::size_t count = 1 + splitmix64(state) % std::min<std::size_t>(vmat.size(), 6);
    std::vector<std::size_t> picks;
    std::vector<std::uint64_t> weights;
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < count; ++j) {
        picks.push_back(splitmix64(state) % vmat.size());
        weights.push_back(1 + splitmix64(state) % 9);
        total += weights.back();
    }
    RationalVector x(vmat[0].size(), Rational(0));
    for (std::size_t j = 0; j < count; ++j) {
        Rational w(weights[j], total);
        for (std::size_t a = 0; a < x.size(); ++a) x[a] += w * vmat[picks[j]][a];
    }
    return x;
}

}  // namespace verify_detail

/// Runs every network/paths/geometry/oracle invariant on one network, one
/// CheckResult per named check.
inline void check_network(const std::string& name, const Network& net,
                          std::vector<CheckResult>& out) {
    auto add = [&](const std::string& check, bool pass, std::string detail = "") {
        out.push_back({name + "/" + check, pass, std::move(detail)});
    };
    const int A = net.graph.arc_count();
    std::vector<Path> verts = enumerate_paths(net);
    const std::size_t V = verts.size();

    // Path counts: enumeration vs two independent counters.
    add("path_count",
        V == oracle_path_count(net) && V == st_path_count(net),
        std::to_string(V) + " vertices");

    // Reduction: kept arcs are exactly the arcs on at least one path, and the
    // kept nodes are exactly their endpoints.
    ReducedNetwork red = reduce(net);
    std::vector<char> on_path(A, 0);
    std::vector<std::vector<char>> has_arc(V, std::vector<char>(A, 0));
    for (std::size_t i = 0; i < V; ++i)
        for (int a : verts[i].arcs) on_path[a] = has_arc[i][a] = 1;
    bool red_ok = true;
    for (int a = 0; a < A; ++a) red_ok = red_ok && bool(red.arc_kept[a]) == bool(on_path[a]);
    std::set<int> endpoints;
    for (int a : red.kept_arcs) {
        endpoints.insert(net.graph.arc(a).tail);
        endpoints.insert(net.graph.arc(a).head);
    }
    red_ok = red_ok && std::vector<int>(endpoints.begin(), endpoints.end()) == red.kept_nodes;
    add("reduction", red_ok);

    // Corridors: partition of the kept arcs; a path through any corridor arc
    // contains the whole corridor.
    std::vector<Corridor> cors = corridors(red);
    std::vector<int> cor_of = corridor_of_arc(cors, A);
    bool cor_ok = true;
    std::size_t covered = 0;
    for (const Corridor& c : cors) covered += c.arcs.size();
    cor_ok = covered == red.kept_arcs.size();
    for (int a : red.kept_arcs) cor_ok = cor_ok && cor_of[a] >= 0;
    for (std::size_t i = 0; i < V && cor_ok; ++i)
        for (int a : verts[i].arcs)
            for (int b : cors[cor_of[a]].arcs) cor_ok = cor_ok && has_arc[i][b];
    add("corridor_partition", cor_ok);

    if (verts.empty()) {
        add("empty_polytope", dimension(net) == -1 && facets(net).facets.empty());
        return;
    }

    RationalMatrix vmat;
    vmat.reserve(V);
    for (const Path& p : verts) vmat.push_back(char_vector(p, A));
    const int dim = dimension(net);

    // Dimension formula vs the rank oracle.
    add("dimension_formula", affine_rank(vmat) - 1 == dim, "dim " + std::to_string(dim));

    // Vertex adjacency vs the midpoint oracle; witness identity when nonadjacent.
    bool p2 = true, r1 = true;
    for (std::size_t i = 0; i < V && p2 && r1; ++i)
        for (std::size_t j = i + 1; j < V; ++j) {
            bool closed = vertices_adjacent(net, verts[i], verts[j]);
            if (closed != oracle_vertices_adjacent(net, verts[i], verts[j], &vmat)) {
                p2 = false;
                break;
            }
            if (closed) continue;
            auto [R, S] = nonadjacent_witness(net, verts[i], verts[j]);
            validate_st_path(net, R);
            validate_st_path(net, S);
            RationalVector lhs = vmat[i], rhs = char_vector(R, A);
            const RationalVector cs = char_vector(S, A);
            for (int a = 0; a < A; ++a) {
                lhs[a] += vmat[j][a];
                rhs[a] += cs[a];
            }
            bool ok = lhs == rhs && !(R == verts[i]) && !(R == verts[j]) && !(S == verts[i]) &&
                      !(S == verts[j]);
            if (!ok) {
                r1 = false;
                break;
            }
        }
    add("vertex_adjacency", p2);
    add("nonadjacency_witness", r1);

    // Facet recognition vs the face-dimension oracle, plus the facet count.
    FacetList flist = facets(net);
    bool p4 = true;
    std::vector<int> facet_arcs;  // oracle-confirmed facet-defining arcs
    if (V == 1) {
        p4 = flist.single_path && flist.facets.empty();
    } else {
        std::size_t good_count = 0;
        for (const Corridor& c : cors)
            if (c.good) ++good_count;
        for (int a : red.kept_arcs) {
            bool oracle_facet = oracle_face_dimension(net, {a}) == dim - 1;
            if (oracle_facet) facet_arcs.push_back(a);
            if (cors[cor_of[a]].good != oracle_facet) p4 = false;
        }
        p4 = p4 && flist.facets.size() == good_count && !flist.single_path;
    }
    add("facet_criterion", p4, std::to_string(flist.facets.size()) + " facets");

    // Facet identity (same corridor) vs vertex-set equality.
    bool l3 = true;
    for (std::size_t x = 0; x < facet_arcs.size() && l3; ++x)
        for (std::size_t y = x; y < facet_arcs.size(); ++y) {
            int a = facet_arcs[x], b = facet_arcs[y];
            bool same_set = true;
            for (std::size_t i = 0; i < V; ++i)
                if (!has_arc[i][a] != !has_arc[i][b]) {
                    same_set = false;
                    break;
                }
            if (facet_equal(a, b, cors) != same_set) {
                l3 = false;
                break;
            }
        }
    add("facet_identity", l3);

    // Facet adjacency vs the face-dimension oracle (needs dimension >= 2).
    if (dim >= 2 && flist.facets.size() >= 2) {
        bool p5 = true;
        for (std::size_t x = 0; x < flist.facets.size() && p5; ++x)
            for (std::size_t y = x + 1; y < flist.facets.size(); ++y) {
                int a = flist.facets[x].representative_arc;
                int b = flist.facets[y].representative_arc;
                bool closed = facets_adjacent(net, flist.facets[x], flist.facets[y]);
                if (closed != (oracle_face_dimension(net, {a, b}) == dim - 2)) {
                    p5 = false;
                    break;
                }
            }
        add("facet_adjacency", p5);
    }

    // Smallest face vs the intersection of the oracle-confirmed facets.
    bool l1 = true;
    for (std::size_t i = 0; i < V && l1; ++i)
        for (std::size_t j = i + 1; j < V; ++j) {
            std::vector<Path> face = smallest_face(net, {verts[i], verts[j]});
            std::set<std::size_t> expect;
            for (std::size_t v = 0; v < V; ++v) {
                bool in_all = true;
                for (int a : facet_arcs)
                    if (!has_arc[i][a] && !has_arc[j][a] && has_arc[v][a]) {
                        in_all = false;  // facet contains both generators but not v
                        break;
                    }
                if (in_all) expect.insert(v);
            }
            std::set<std::size_t> got;
            for (const Path& p : face)
                for (std::size_t v = 0; v < V; ++v)
                    if (p == verts[v]) got.insert(v);
            if (got != expect || got.size() != face.size()) {
                l1 = false;
                break;
            }
        }
    add("smallest_face_identity", l1);

    // Both affine-description variants agree with each other and with the
    // polytope, on vertices, random convex combinations, and perturbed points.
    AffineSystem all_cors = min_description(net, DescriptionVariant::AllCorridors);
    AffineSystem facets_only = min_description(net, DescriptionVariant::FacetsOnly);
    bool desc = true, flows = true;
    for (const RationalVector& x : vmat)
        desc = desc && satisfies(all_cors, x) && satisfies(facets_only, x);
    std::uint64_t state = 0x5EED0000u + std::uint64_t(A);
    for (int trial = 0; trial < 100; ++trial) {
        RationalVector x = verify_detail::random_combination(vmat, state);
        desc = desc && satisfies(all_cors, x) && satisfies(facets_only, x) && is_flow(net, x);
        // Round trip through the greedy decomposition.
        FlowDecomposition dec = decompose_flow(net, x);
        RationalVector back(A, Rational(0));
        Rational total(0);
        for (const auto& [coeff, path] : dec.terms) {
            flows = flows && coeff > 0;
            total += coeff;
            for (int a : path.arcs) back[a] += coeff;
        }
        flows = flows && total == 1 && back == x;
        for (int a = 0; a < A; ++a)
            flows = flows && x[a] >= 0 && x[a] <= 1 && (red.arc_kept[a] || x[a] == 0);
        // Perturbed point: both descriptions must agree (violate both or neither).
        RationalVector y = x;
        std::uint64_t sign = splitmix64(state);
        Rational eps(1, 3 + int(splitmix64(state) % 5));
        y[splitmix64(state) % A] += (sign & 1) ? eps : -eps;
        desc = desc && satisfies(all_cors, y) == satisfies(facets_only, y);
    }
    add("descriptions_equal", desc);
    add("flow_roundtrip", flows);
}

// --- model cross-checks -----------------------------------------------------

namespace verify_detail {

inline ChoiceProbabilities vertex_prediction(int n, const Order& L) {
    return predict(OrderDistribution{n, {{L, Rational(1)}}});
}

}  // namespace verify_detail

/// Runs every models-module invariant (codecs, transforms, signed-Mobius
/// consistency, closed forms vs generic geometry, identifiability).
inline void check_models(std::vector<CheckResult>& out) {
    auto add = [&](const std::string& check, bool pass, std::string detail = "") {
        out.push_back({"models/" + check, pass, std::move(detail)});
    };

    // Linear-order codec: round trip, path/order bijection, rho(p^L) = chi^path.
    bool codec_lo = true, rho_vertex = true;
    for (int n = 1; n <= 5 && codec_lo && rho_vertex; ++n) {
        ModelNetwork lo = build_model(Family::lo, n);
        std::vector<Order> orders = all_orders(n);
        codec_lo = codec_lo && enumerate_paths(lo.net).size() == orders.size();
        for (const Order& L : orders) {
            Path P = order_to_path(lo, L);
            validate_st_path(lo.net, P);
            codec_lo = codec_lo && path_to_order(lo, P) == L;
            ChoiceProbabilities p = verify_detail::vertex_prediction(n, L);
            RationalVector r = rho(lo, p);
            rho_vertex = rho_vertex && r == char_vector(P, lo.net.graph.arc_count());
            rho_vertex = rho_vertex && sigma(lo, r).values == p.values;
        }
    }
    add("lo_codec_roundtrip", codec_lo);
    add("rho_of_vertex_is_path", rho_vertex);

    // Weak-order codec: round trip over all ordered set partitions; 13 at n=3.
    bool codec_wo = true;
    for (int n = 1; n <= 4 && codec_wo; ++n) {
        ModelNetwork wo = build_model(Family::wo, n);
        std::vector<WeakOrder> wos = all_weak_orders(n);
        if (n == 3) codec_wo = codec_wo && wos.size() == 13;
        codec_wo = codec_wo && enumerate_paths(wo.net).size() == wos.size();
        for (const WeakOrder& W : wos)
            codec_wo = codec_wo && path_to_weak_order(wo, weak_order_to_path(wo, W)) == W;
    }
    add("wo_codec_roundtrip", codec_wo);

    // sigma/rho are mutually inverse on arbitrary rational vectors.
    bool inverse = true;
    for (int n = 3; n <= 4; ++n) {
        ModelNetwork lo = build_model(Family::lo, n);
        std::uint64_t state = 0xABCD + n;
        for (int trial = 0; trial < 20; ++trial) {
            RationalVector r(lo.net.graph.arc_count());
            for (Rational& v : r)
                v = Rational(int(splitmix64(state) % 19) - 9, 1 + int(splitmix64(state) % 7));
            inverse = inverse && rho(lo, sigma(lo, r)) == r;
            ChoiceProbabilities p = ChoiceProbabilities::zero(n);
            for (Rational& v : p.values)
                v = Rational(int(splitmix64(state) % 19) - 9, 1 + int(splitmix64(state) % 7));
            inverse = inverse && sigma(lo, rho(lo, p)).values == p.values;
        }
    }
    add("sigma_rho_inverse", inverse);

    // Pipeline consistency on seeded random distributions.
    bool pipeline_ok = true, identify_ok = true;
    for (int n = 2; n <= 4 && pipeline_ok; ++n) {
        ModelNetwork lo = build_model(Family::lo, n);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            OrderDistribution d = gen_distribution(seed * 100 + n, n);
            ChoiceProbabilities p = predict(d);
            pipeline_ok = pipeline_ok && in_mcp(p);
            RationalVector r = rho(lo, p);
            pipeline_ok = pipeline_ok && is_flow(lo.net, r);
            pipeline_ok = pipeline_ok && sigma(lo, r).values == p.values;
            // Decompose the flow back into a distribution with equal predictions.
            OrderDistribution back{n, {}};
            for (const auto& [coeff, path] : decompose_flow(lo.net, r).terms)
                back.support.emplace_back(path_to_order(lo, path), coeff);
            pipeline_ok = pipeline_ok && predict(back).values == p.values;
            // Identified verdicts on small supports: the prediction vertices of
            // the support must be affinely independent (injectivity oracle).
            IdentifyResult res = is_identified(d);
            if (res.identified && d.support.size() <= 3) {
                RationalMatrix pts;
                for (const auto& [L, mass] : d.support)
                    pts.push_back(verify_detail::vertex_prediction(n, L).values);
                identify_ok = identify_ok && affine_rank(pts) == int(pts.size());
            }
        }
    }
    add("distribution_pipeline", pipeline_ok);
    add("identified_injectivity", identify_ok);

    // MCP vertex adjacency: closed form == generic geometry == both
    // non-identifiability condition forms, over all order pairs, n <= 4.
    bool mcp_adj = true, witness_ok = true;
    for (int n = 2; n <= 4 && mcp_adj; ++n) {
        ModelNetwork lo = build_model(Family::lo, n);
        std::vector<Order> orders = all_orders(n);
        for (std::size_t x = 0; x < orders.size() && mcp_adj; ++x)
            for (std::size_t y = x + 1; y < orders.size(); ++y) {
                const Order &L1 = orders[x], &L2 = orders[y];
                Path P = order_to_path(lo, L1), Q = order_to_path(lo, L2);
                bool closed = mcp_vertices_adjacent(n, L1, L2);
                mcp_adj = mcp_adj && closed == vertices_adjacent(lo.net, P, Q);
                mcp_adj = mcp_adj && nonadjacency_condition_sets(n, L1, L2) == !closed;
                mcp_adj = mcp_adj && nonadjacency_condition_triples(n, L1, L2) == !closed;
                if (closed) continue;
                // A nonadjacent support pair yields two distinct distributions
                // with identical predictions, via the spliced witness pair.
                auto [R, S] = nonadjacent_witness(lo.net, P, Q);
                OrderDistribution d1{n, {{L1, Rational(1, 2)}, {L2, Rational(1, 2)}}};
                OrderDistribution d2{n,
                                     {{path_to_order(lo, R), Rational(1, 2)},
                                      {path_to_order(lo, S), Rational(1, 2)}}};
                witness_ok = witness_ok && !is_identified(d1).identified;
                witness_ok = witness_ok && predict(d1).values == predict(d2).values;
            }
    }
    add("mcp_vertex_adjacency", mcp_adj);
    add("nonidentified_construction", witness_ok);

    // The documented identifiability witness on the fixed n = 4 example.
    {
        OrderDistribution d{4, {{{1, 2, 3, 4}, Rational(1, 2)}, {{2, 1, 4, 3}, Rational(1, 2)}}};
        IdentifyResult res = is_identified(d);
        add("identify_example",
            !res.identified && res.U == 0b0011u && res.i == 2 && res.j == 1 && res.k == 3);
    }

    // MCP facet closed forms vs generic geometry on the n = 4 network.
    {
        const int n = 4;
        ModelNetwork lo = build_model(Family::lo, n);
        ReducedNetwork red = reduce(lo.net);
        std::vector<Corridor> cors = corridors(red);
        std::vector<int> cor_of = corridor_of_arc(cors, lo.net.graph.arc_count());
        const Mask full = lo.full();
        bool status_ok = true;
        std::vector<std::pair<int, Mask>> facet_pairs;
        for (Mask T = 1; T <= full; ++T)
            for (int i = 1; i <= n; ++i) {
                if (!(T & (Mask(1) << (i - 1)))) continue;
                bool closed = mcp_facet_status(n, i, T);
                status_ok = status_ok && closed == cors[cor_of[lo_arc(lo, i, T)]].good;
                if (closed) facet_pairs.emplace_back(i, T);
            }
        add("mcp_facet_status", status_ok, std::to_string(facet_pairs.size()) + " facets");
        FacetList flist = facets(lo.net);
        auto handle_of = [&](int arc) -> const FacetHandle& {
            for (const FacetHandle& f : flist.facets)
                if (f.representative_arc == arc) return f;
            throw NotFacetDefining("no handle for arc");
        };
        bool adj_ok = true;
        for (std::size_t x = 0; x < facet_pairs.size() && adj_ok; ++x)
            for (std::size_t y = x + 1; y < facet_pairs.size(); ++y) {
                auto [i1, T1] = facet_pairs[x];
                auto [i2, T2] = facet_pairs[y];
                bool closed = mcp_facets_adjacent(n, i1, T1, i2, T2);
                bool generic = facets_adjacent(lo.net, handle_of(lo_arc(lo, i1, T1)),
                                               handle_of(lo_arc(lo, i2, T2)));
                if (closed != generic) {
                    adj_ok = false;
                    break;
                }
            }
        add("mcp_facet_adjacency", adj_ok);
    }

    // Interval-order network: counts, bad-arc forms, nonadjacent-pair patterns.
    bool io_counts = true;
    for (int n = 1; n <= 4; ++n) {
        ModelNetwork io = build_model(Family::io, n);
        io_counts = io_counts && io.net.graph.node_count() == io_node_count(n) &&
                    io.net.graph.arc_count() == io_arc_count(n);
    }
    add("io_counts", io_counts);
    for (int n = 3; n <= 3; ++n) {
        ModelNetwork io = build_model(Family::io, n);
        ReducedNetwork red = reduce(io.net);
        std::vector<Corridor> cors = corridors(red);
        std::vector<int> cor_of = corridor_of_arc(cors, io.net.graph.arc_count());
        bool bad_ok = true, cor_single = true;
        std::vector<int> good_arcs;
        for (int a = 0; a < io.net.graph.arc_count(); ++a) {
            cor_single = cor_single && cors[cor_of[a]].arcs.size() == 1;
            bool good = cors[cor_of[a]].good;
            bad_ok = bad_ok && io_bad_arc(io, a) == !good;
            if (good) good_arcs.push_back(a);
        }
        add("io_bad_arc_forms", bad_ok && cor_single);
        FacetList flist = facets(io.net);
        auto handle_of = [&](int arc) -> const FacetHandle& {
            for (const FacetHandle& f : flist.facets)
                if (f.representative_arc == arc) return f;
            throw NotFacetDefining("no handle for arc");
        };
        bool nonadj_ok = true;
        for (std::size_t x = 0; x < good_arcs.size() && nonadj_ok; ++x)
            for (std::size_t y = x + 1; y < good_arcs.size(); ++y) {
                bool closed = closed_form_facets_nonadjacent(io, good_arcs[x], good_arcs[y]);
                bool generic =
                    facets_adjacent(io.net, handle_of(good_arcs[x]), handle_of(good_arcs[y]));
                if (closed != !generic) {
                    nonadj_ok = false;
                    break;
                }
            }
        add("io_facet_nonadjacency", nonadj_ok);
    }

    // Semiorder network: degrees, corridor shapes, alpha-delta forms,
    // facet non-adjacency, path length 2n.
    for (int n = 3; n <= 3; ++n) {
        ModelNetwork so = build_model(Family::so, n);
        ReducedNetwork red = reduce(so.net);
        std::vector<Corridor> cors = corridors(red);
        std::vector<int> cor_of = corridor_of_arc(cors, so.net.graph.arc_count());
        const Mask full = so.full();
        bool paths_ok = true;
        for (const Path& p : enumerate_paths(so.net))
            paths_ok = paths_ok && int(p.arcs.size()) == 2 * n;
        add("so_path_length", paths_ok);
        bool shape_ok = true;
        for (const Corridor& c : cors) {
            if (c.arcs.size() == 1) continue;
            if (c.arcs.size() != 2) {
                shape_ok = false;
                continue;
            }
            // the center of a size-2 corridor is (C, {}, L), and both arcs good
            int mid = so.net.graph.arc(c.arcs[0]).head;
            shape_ok = shape_ok && so.node_X[mid] == full && so.node_Y[mid] == 0 && c.good;
        }
        add("so_corridor_shapes", shape_ok);
        bool bad_ok = true;
        std::vector<int> good_arcs;
        for (int a = 0; a < so.net.graph.arc_count(); ++a) {
            bool good = cors[cor_of[a]].good;
            bad_ok = bad_ok && so_bad_arc(so, a) == !good;
            if (good) good_arcs.push_back(a);
        }
        add("so_bad_arc_forms", bad_ok);
        FacetList flist = facets(so.net);
        auto handle_of = [&](int arc) -> const FacetHandle& {
            int target = cors[cor_of[arc]].representative_arc();
            for (const FacetHandle& f : flist.facets)
                if (f.representative_arc == target) return f;
            throw NotFacetDefining("no handle for arc");
        };
        bool nonadj_ok = true;
        for (std::size_t x = 0; x < good_arcs.size() && nonadj_ok; ++x)
            for (std::size_t y = x + 1; y < good_arcs.size(); ++y) {
                if (cor_of[good_arcs[x]] == cor_of[good_arcs[y]]) continue;
                bool closed = closed_form_facets_nonadjacent(so, good_arcs[x], good_arcs[y]);
                bool generic =
                    facets_adjacent(so.net, handle_of(good_arcs[x]), handle_of(good_arcs[y]));
                if (closed != !generic) {
                    nonadj_ok = false;
                    break;
                }
            }
        add("so_facet_nonadjacency", nonadj_ok);
    }

    // Weak-order network: every facet pair adjacent, n = 3 and 4.
    bool wo_ok = true;
    for (int n = 3; n <= 4 && wo_ok; ++n) {
        ModelNetwork wo = build_model(Family::wo, n);
        FacetList flist = facets(wo.net);
        for (std::size_t x = 0; x < flist.facets.size() && wo_ok; ++x)
            for (std::size_t y = x + 1; y < flist.facets.size(); ++y) {
                int a = flist.facets[x].representative_arc;
                int b = flist.facets[y].representative_arc;
                wo_ok = wo_ok && !closed_form_facets_nonadjacent(wo, a, b) &&
                        facets_adjacent(wo.net, flist.facets[x], flist.facets[y]);
                if (!wo_ok) break;
            }
    }
    add("wo_all_facets_adjacent", wo_ok);
}

// --- entry point ------------------------------------------------------------

inline VerifyReport verify_corpus(int seed_lo = 1, int seed_hi = 50) {
    VerifyReport report;
    for (const auto& [name, net] : fixture_networks()) check_network(name, net, report.checks);
    for (int seed = seed_lo; seed <= seed_hi; ++seed)
        check_network("random" + std::to_string(seed), corpus_random_network(seed),
                      report.checks);
    check_models(report.checks);
    return report;
}

}  // namespace flowpoly
