#include <catch2/catch_amalgamated.hpp>

#include "flowpoly/models.hpp"
#include "flowpoly/oracle.hpp"
#include "flowpoly/verify.hpp"

using namespace flowpoly;

namespace {
RationalMatrix vertex_matrix(const Network& net) {
    RationalMatrix m;
    for (const Path& p : enumerate_paths(net)) m.push_back(char_vector(p, net.graph.arc_count()));
    return m;
}
}  // namespace

TEST_CASE("affine rank") {
    SECTION("the three triangle vertices span a plane") {
        CHECK(affine_rank(vertex_matrix(triangle_network())) == 3);
    }
    SECTION("one point") { CHECK(affine_rank({{Rational(1), Rational(2)}}) == 1); }
    SECTION("four coplanar points") {
        RationalMatrix square = {{Rational(0), Rational(0), Rational(5)},
                                 {Rational(1), Rational(0), Rational(5)},
                                 {Rational(0), Rational(1), Rational(5)},
                                 {Rational(1), Rational(1), Rational(5)}};
        CHECK(affine_rank(square) == 3);
    }
    SECTION("invariance under translation and permutation") {
        RationalMatrix pts = vertex_matrix(cube_network(2));
        int base = affine_rank(pts);
        std::rotate(pts.begin(), pts.begin() + 1, pts.end());
        for (RationalVector& p : pts) p[0] += 7;
        CHECK(affine_rank(pts) == base);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(affine_rank({}), EmptyInput);
        CHECK_THROWS_AS(affine_rank({{Rational(1)}, {Rational(1), Rational(2)}}),
                        DimensionMismatch);
    }
}

TEST_CASE("convex hull membership") {
    Network net = triangle_network();
    RationalMatrix verts = vertex_matrix(net);
    SECTION("every vertex is in the hull of all vertices") {
        for (const RationalVector& v : verts) CHECK(in_convex_hull(v, verts));
    }
    SECTION("midpoints are in the hull") {
        RationalVector mid(10, Rational(0));
        for (std::size_t a = 0; a < 10; ++a) mid[a] = (verts[0][a] + verts[1][a]) / 2;
        CHECK(in_convex_hull(mid, verts));
    }
    SECTION("a vertex is outside the hull of the others") {
        CHECK_FALSE(in_convex_hull(verts[0], verts, {0}));
    }
    SECTION("the nonadjacent-pair midpoint stays inside without its endpoints") {
        ModelNetwork lo = build_model(Family::lo, 4);
        RationalMatrix lverts = vertex_matrix(lo.net);
        Path P = order_to_path(lo, {1, 2, 3, 4});
        Path Q = order_to_path(lo, {2, 1, 4, 3});
        RationalVector mid(lverts[0].size(), Rational(0));
        for (int a : P.arcs) mid[a] += Rational(1, 2);
        for (int a : Q.arcs) mid[a] += Rational(1, 2);
        std::vector<std::size_t> excluded;
        RationalVector cp = char_vector(P, lverts[0].size());
        RationalVector cq = char_vector(Q, lverts[0].size());
        for (std::size_t i = 0; i < lverts.size(); ++i)
            if (lverts[i] == cp || lverts[i] == cq) excluded.push_back(i);
        CHECK(in_convex_hull(mid, lverts, excluded));
    }
}

TEST_CASE("oracle vertex adjacency") {
    Network net = triangle_network();
    std::vector<Path> paths = enumerate_paths(net);
    SECTION("all triangle pairs are adjacent") {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                CHECK(oracle_vertices_adjacent(net, paths[i], paths[j]));
    }
    SECTION("square diagonal is not an edge") {
        Network cube = cube_network(2);
        std::vector<Path> cp = enumerate_paths(cube);
        // lexicographic enumeration: index 0 = (top,top), 3 = (bot,bot)
        CHECK_FALSE(oracle_vertices_adjacent(cube, cp[0], cp[3]));
        CHECK(oracle_vertices_adjacent(cube, cp[0], cp[1]));
    }
    SECTION("symmetry and the same-path error") {
        CHECK(oracle_vertices_adjacent(net, paths[1], paths[0]) ==
              oracle_vertices_adjacent(net, paths[0], paths[1]));
        CHECK_THROWS_AS(oracle_vertices_adjacent(net, paths[0], paths[0]), SamePath);
    }
    SECTION("adjacent order pair on the n = 4 network") {
        ModelNetwork lo = build_model(Family::lo, 4);
        CHECK(oracle_vertices_adjacent(lo.net, order_to_path(lo, {1, 2, 3, 4}),
                                       order_to_path(lo, {2, 1, 3, 4})));
    }
}

TEST_CASE("oracle face dimension") {
    Network net = triangle_network();
    SECTION("tight (s,t) leaves a 1-dimensional facet of the triangle") {
        CHECK(oracle_face_dimension(net, {0}) == 1);
    }
    SECTION("no tight arcs gives the polytope dimension") {
        CHECK(oracle_face_dimension(net, {}) == 2);
    }
    SECTION("tight (s,u) leaves a single vertex, not a facet") {
        CHECK(oracle_face_dimension(net, {1}) == 0);
    }
    SECTION("tightening everything empties the face") {
        CHECK(oracle_face_dimension(net, {0, 1}) == -1);
    }
    SECTION("arc ids are range-checked") {
        CHECK_THROWS_AS(oracle_face_dimension(net, {99}), IndexError);
    }
}

TEST_CASE("independent path counter") {
    CHECK(oracle_path_count(triangle_network()) == 3);
    CHECK(oracle_path_count(cube_network(4)) == 16);
    CHECK(oracle_path_count(build_model(Family::lo, 4).net) == 24);
}

TEST_CASE("seeded network generation") {
    SECTION("known first draw of the generator") {
        // cross-checked against an independent implementation of the same
        // mixer; pinning the value keeps generated corpora stable
        std::uint64_t s = 0;
        CHECK(splitmix64(s) == 0x1678BB3565DAAC59ULL);
        CHECK(s == 0x9E3779B97F4A7C15ULL);
    }
    SECTION("probability one keeps every forward arc") {
        Network net = gen_network({1, 2, Rational(1)});
        CHECK(net.graph.arc_count() == 1);
        CHECK(net.graph.find_arc(0, 1) == 0);
    }
    SECTION("the same spec builds the same network") {
        Network a = gen_network({7, 8, Rational(1, 2)});
        Network b = gen_network({7, 8, Rational(1, 2)});
        REQUIRE(a.graph.arc_count() == b.graph.arc_count());
        for (int i = 0; i < a.graph.arc_count(); ++i) {
            CHECK(a.graph.arc(i).tail == b.graph.arc(i).tail);
            CHECK(a.graph.arc(i).head == b.graph.arc(i).head);
        }
    }
    SECTION("spec validation") {
        CHECK_THROWS_AS(gen_network({1, 1, Rational(1)}), InvalidGraph);
        CHECK_THROWS_AS(gen_network({1, 3, Rational(0)}), InvalidGraph);
        CHECK_THROWS_AS(gen_network({1, 3, Rational(3, 2)}), InvalidGraph);
    }
}

TEST_CASE("rank identity with the equality system") {
    // face dimension of the whole polytope + rank of the equality system = |kept arcs|
    for (int seed = 1; seed <= 5; ++seed) {
        Network net = corpus_random_network(seed);
        ReducedNetwork red = reduce(net);
        if (!red.has_path()) continue;
        CHECK(oracle_face_dimension(net, {}) + int(red.kept_nodes.size()) - 1 ==
              int(red.kept_arcs.size()));
    }
}
