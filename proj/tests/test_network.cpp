#include <catch2/catch_amalgamated.hpp>

#include "flowpoly/network.hpp"
#include "flowpoly/verify.hpp"

using namespace flowpoly;

TEST_CASE("digraph construction rules") {
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), InvalidGraph);                 // loop
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), InvalidGraph);         // parallel
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), InvalidGraph);                 // out of range
    CHECK_THROWS_AS(Digraph(2, {{0, 1}}, {"only-one"}), InvalidGraph);   // label count
    Digraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(g.arc_count() == 3);
    CHECK(g.find_arc(0, 2) == 2);
    CHECK(g.find_arc(2, 0) == -1);
    CHECK(g.out_arcs(0) == std::vector<int>{0, 2});
}

TEST_CASE("topological sort") {
    SECTION("example network: source first, sink last") {
        Network net = triangle_network();
        std::vector<int> order = topological_sort(net.graph);
        REQUIRE(order.size() == 7);
        std::vector<int> pos(7);
        for (int i = 0; i < 7; ++i) pos[order[i]] = i;
        for (const Arc& a : net.graph.arcs()) CHECK(pos[a.tail] < pos[a.head]);
    }
    SECTION("two-node chain") {
        CHECK(topological_sort(Digraph(2, {{0, 1}})) == std::vector<int>{0, 1});
    }
    SECTION("triangle cycle is reported with its arcs") {
        Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
        try {
            topological_sort(g);
            FAIL("expected CycleError");
        } catch (const CycleError& e) {
            CHECK(e.kind() == "cycle");
            REQUIRE(e.cycle().size() == 3);
            // the reported arcs chain into a closed walk
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(g.arc(e.cycle()[i]).head == g.arc(e.cycle()[(i + 1) % 3]).tail);
        }
    }
    SECTION("ties go to the smaller node index") {
        CHECK(topological_sort(Digraph(3, {{0, 2}, {1, 2}})) == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("network validation") {
    CHECK_THROWS_AS(Network(Digraph(2, {{0, 1}}), 0, 0), InvalidGraph);
    CHECK_THROWS_AS(Network(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 0, 2), CycleError);
}

TEST_CASE("reduction") {
    SECTION("drops the two extra nodes and their four arcs") {
        ReducedNetwork red = reduce(triangle_network());
        CHECK(red.kept_arcs == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(red.kept_nodes == std::vector<int>{0, 1, 2, 3, 6});
        CHECK(red.has_path());
    }
    SECTION("idempotent on an already-reduced network") {
        Network cube = cube_network(2);
        ReducedNetwork red = reduce(cube);
        CHECK(int(red.kept_arcs.size()) == cube.graph.arc_count());
        CHECK(int(red.kept_nodes.size()) == cube.graph.node_count());
    }
    SECTION("no s-t path yields empty kept sets") {
        ReducedNetwork red = reduce(Network(Digraph(4, {{0, 1}, {2, 3}}), 0, 3));
        CHECK(red.kept_arcs.empty());
        CHECK(red.kept_nodes.empty());
        CHECK_FALSE(red.has_path());
    }
}

TEST_CASE("corridors") {
    SECTION("example network: three good and two bad") {
        std::vector<Corridor> cors = corridors(reduce(triangle_network()));
        REQUIRE(cors.size() == 5);
        CHECK(cors[0].arcs == std::vector<int>{0});  // (s,t)
        CHECK(cors[0].good);
        CHECK(cors[1].arcs == std::vector<int>{1});  // (s,u)
        CHECK_FALSE(cors[1].good);
        CHECK(cors[2].arcs == std::vector<int>{2, 4});  // (u,v),(v,w)
        CHECK(cors[2].good);
        CHECK(cors[2].representative_arc() == 2);
        CHECK(cors[3].arcs == std::vector<int>{3});  // (u,w)
        CHECK(cors[3].good);
        CHECK(cors[4].arcs == std::vector<int>{5});  // (w,t)
        CHECK_FALSE(cors[4].good);
    }
    SECTION("single-arc network has one bad corridor") {
        std::vector<Corridor> cors = corridors(reduce(Network(Digraph(2, {{0, 1}}), 0, 1)));
        REQUIRE(cors.size() == 1);
        CHECK_FALSE(cors[0].good);
    }
    SECTION("corridor index map") {
        std::vector<Corridor> cors = corridors(reduce(triangle_network()));
        std::vector<int> cor_of = corridor_of_arc(cors, 10);
        CHECK(cor_of[2] == cor_of[4]);
        CHECK(cor_of[0] != cor_of[3]);
        CHECK(cor_of[7] == -1);  // dropped by the reduction
    }
}

TEST_CASE("path counting") {
    CHECK(st_path_count(triangle_network()) == 3);
    CHECK(st_path_count(cube_network(4)) == 16);
    CHECK(st_path_count(Network(Digraph(4, {{0, 1}, {2, 3}}), 0, 3)) == 0);
}
