#include <catch2/catch_amalgamated.hpp>

#include "flowpoly/geometry.hpp"
#include "flowpoly/models.hpp"

using namespace flowpoly;

TEST_CASE("model construction") {
    SECTION("linear-order network sizes") {
        ModelNetwork lo = build_model(Family::lo, 3);
        CHECK(lo.net.graph.node_count() == 8);            // all subsets
        CHECK(lo.net.graph.arc_count() == 12);            // n * 2^(n-1)
        CHECK(lo.net.source == 0);
        CHECK(lo.net.sink == 7);
    }
    SECTION("weak-order network on two alternatives") {
        ModelNetwork wo = build_model(Family::wo, 2);
        CHECK(wo.net.graph.node_count() == 4);
        CHECK(wo.net.graph.arc_count() == 5);             // all proper inclusions
    }
    SECTION("interval-order network sizes") {
        ModelNetwork io = build_model(Family::io, 2);
        CHECK(io.net.graph.node_count() == 9);            // 3^n
        CHECK(io.net.graph.arc_count() == 12);            // 2n * 3^(n-1)
        CHECK(io_node_count(3) == 27);
        CHECK(io_arc_count(3) == 54);
    }
    SECTION("semiorder paths all have 2n arcs") {
        ModelNetwork so = build_model(Family::so, 3);
        for (const Path& p : enumerate_paths(so.net)) CHECK(p.arcs.size() == 6);
        CHECK(enumerate_paths(so.net).size() > 6);        // more paths than orders
    }
    SECTION("size guards") {
        CHECK_THROWS_AS(build_model(Family::lo, 0), SizeGuard);
        CHECK_THROWS_AS(build_model(Family::lo, 7), SizeGuard);
        CHECK_THROWS_AS(build_model(Family::io, 6), SizeGuard);
        CHECK_THROWS_AS(build_model(Family::so, 5), SizeGuard);
    }
}

TEST_CASE("order codec") {
    ModelNetwork lo = build_model(Family::lo, 3);
    SECTION("the path grows sets from the worst element up") {
        Path p = order_to_path(lo, {1, 2, 3});
        // node ids are subset bitmasks: {} -> {3} -> {2,3} -> {1,2,3}
        CHECK(path_nodes(lo.net.graph, p) == std::vector<int>{0, 4, 6, 7});
    }
    SECTION("round trips over all orders") {
        for (const Order& L : all_orders(3))
            CHECK(path_to_order(lo, order_to_path(lo, L)) == L);
        CHECK(all_orders(3).size() == 6);
    }
    SECTION("invalid orders are rejected") {
        CHECK_THROWS_AS(validate_order(3, {1, 2}), InvalidGraph);
        CHECK_THROWS_AS(validate_order(3, {1, 2, 2}), InvalidGraph);
        CHECK_THROWS_AS(validate_order(3, {1, 2, 4}), InvalidGraph);
    }
}

TEST_CASE("weak order codec") {
    ModelNetwork wo = build_model(Family::wo, 3);
    SECTION("round trips over all thirteen weak orders") {
        std::vector<WeakOrder> all = all_weak_orders(3);
        CHECK(all.size() == 13);
        for (const WeakOrder& w : all)
            CHECK(path_to_weak_order(wo, weak_order_to_path(wo, w)) == w);
    }
    SECTION("a single indifference class gives the direct arc") {
        Path p = weak_order_to_path(wo, {0b111});
        CHECK(path_nodes(wo.net.graph, p) == std::vector<int>{0, 7});
    }
    SECTION("validation") {
        CHECK_THROWS_AS(validate_weak_order(3, {0b011, 0b110}), InvalidGraph);  // overlap
        CHECK_THROWS_AS(validate_weak_order(3, {0b011}), InvalidGraph);         // missing 3
        CHECK_THROWS_AS(validate_weak_order(3, {0b011, 0, 0b100}), InvalidGraph);
    }
}

TEST_CASE("choice probabilities from a distribution") {
    SECTION("a single order chooses its best element with certainty") {
        ChoiceProbabilities p = predict({3, {{{1, 2, 3}, Rational(1)}}});
        CHECK(p.at(0b111, 1) == 1);
        CHECK(p.at(0b111, 2) == 0);
        CHECK(p.at(0b110, 2) == 1);  // within {2,3}, 2 wins
        CHECK(p.at(0b100, 3) == 1);
    }
    SECTION("the uniform distribution is unbiased") {
        OrderDistribution uniform{3, {}};
        for (const Order& L : all_orders(3)) uniform.support.push_back({L, Rational(1, 6)});
        ChoiceProbabilities p = predict(uniform);
        for (Mask S = 1; S <= 0b111; ++S)
            for (int i = 1; i <= 3; ++i)
                if (S & (Mask(1) << (i - 1)))
                    CHECK(p.at(S, i) == Rational(1, detail::bit_count(S)));
    }
    SECTION("distribution validation") {
        CHECK_THROWS_AS(validate_distribution({3, {{{1, 2, 3}, Rational(1, 2)}}}),
                        InvalidGraph);  // does not sum to 1
        CHECK_THROWS_AS(validate_distribution(
                            {3, {{{1, 2, 3}, Rational(1, 2)}, {{1, 2, 3}, Rational(1, 2)}}}),
                        InvalidGraph);  // duplicate order
    }
}

TEST_CASE("signed Mobius coefficients and membership") {
    ChoiceProbabilities p = predict({3, {{{1, 2, 3}, Rational(1)}}});
    SECTION("vertex coefficients mark the three path arcs") {
        CHECK(block_marschak(p, 1, 0b111) == 1);
        CHECK(block_marschak(p, 2, 0b110) == 1);
        CHECK(block_marschak(p, 3, 0b100) == 1);
        CHECK(block_marschak(p, 1, 0b011) == 0);
        CHECK(block_marschak(p, 2, 0b010) == 0);
    }
    SECTION("membership test") {
        CHECK(in_mcp(p));
        CHECK_FALSE(in_mcp(ChoiceProbabilities::zero(3)));  // normalization fails
        ChoiceProbabilities bad = p;
        bad.at(0b011, 1) = 0;
        bad.at(0b011, 2) = 1;
        CHECK_FALSE(in_mcp(bad));  // now q(1,{1,2}) = -1
    }
}

TEST_CASE("rho and sigma") {
    ModelNetwork lo = build_model(Family::lo, 3);
    SECTION("rho sends a vertex table to the matching path vector") {
        for (const Order& L : all_orders(3)) {
            RationalVector r = rho(lo, predict({3, {{L, Rational(1)}}}));
            CHECK(r == char_vector(order_to_path(lo, L), lo.net.graph.arc_count()));
        }
    }
    SECTION("sigma inverts rho on a mixture") {
        ChoiceProbabilities p =
            predict({3, {{{1, 2, 3}, Rational(1, 4)}, {{3, 1, 2}, Rational(3, 4)}}});
        CHECK(sigma(lo, rho(lo, p)).values == p.values);
    }
}

TEST_CASE("vertex adjacency in closed form") {
    SECTION("three alternatives: every pair of orders is adjacent") {
        std::vector<Order> all = all_orders(3);
        for (std::size_t x = 0; x < all.size(); ++x)
            for (std::size_t y = x + 1; y < all.size(); ++y)
                CHECK(mcp_vertices_adjacent(3, all[x], all[y]));
    }
    SECTION("four alternatives: the double swap breaks adjacency") {
        CHECK_FALSE(mcp_vertices_adjacent(4, {1, 2, 3, 4}, {2, 1, 4, 3}));
        CHECK(mcp_vertices_adjacent(4, {1, 2, 3, 4}, {2, 1, 3, 4}));
        CHECK(mcp_vertices_adjacent(4, {1, 2, 3, 4}, {4, 3, 2, 1}));
    }
    SECTION("the two nonadjacency formulations agree") {
        Order a{1, 2, 3, 4}, b{2, 1, 4, 3}, c{2, 1, 3, 4};
        CHECK(nonadjacency_condition_sets(4, a, b));
        CHECK(nonadjacency_condition_triples(4, a, b));
        CHECK_FALSE(nonadjacency_condition_sets(4, a, c));
        CHECK_FALSE(nonadjacency_condition_triples(4, a, c));
    }
    SECTION("identical orders are rejected") {
        CHECK_THROWS_AS(mcp_vertices_adjacent(3, {1, 2, 3}, {1, 2, 3}), SameOrder);
    }
}

TEST_CASE("identifiability") {
    SECTION("a point mass is identified") {
        CHECK(is_identified({4, {{{1, 2, 3, 4}, Rational(1)}}}).identified);
    }
    SECTION("three alternatives: everything is identified") {
        OrderDistribution uniform{3, {}};
        for (const Order& L : all_orders(3)) uniform.support.push_back({L, Rational(1, 6)});
        CHECK(is_identified(uniform).identified);
    }
    SECTION("the double-swap pair is not identified, with the exact witness") {
        IdentifyResult r = is_identified(
            {4, {{{1, 2, 3, 4}, Rational(1, 2)}, {{2, 1, 4, 3}, Rational(1, 2)}}});
        REQUIRE_FALSE(r.identified);
        CHECK(r.first == Order{1, 2, 3, 4});
        CHECK(r.second == Order{2, 1, 4, 3});
        CHECK(r.U == 0b0011);
        CHECK(r.i == 2);
        CHECK(r.j == 1);
        CHECK(r.k == 3);
    }
}

TEST_CASE("facet classification and adjacency in closed form") {
    SECTION("facet-defining pairs need 2 <= |T| <= n-1") {
        CHECK(mcp_facet_status(4, 1, 0b0011));
        CHECK(mcp_facet_status(4, 1, 0b0111));
        CHECK_FALSE(mcp_facet_status(4, 1, 0b0001));   // singleton
        CHECK_FALSE(mcp_facet_status(4, 1, 0b1111));   // full set
        int count = 0;
        for (Mask T = 1; T <= 0b1111; ++T)
            for (int i = 1; i <= 4; ++i)
                if ((T & (Mask(1) << (i - 1))) && mcp_facet_status(4, i, T)) ++count;
        CHECK(count == 24);  // 2n(2^(n-2) - 1)
    }
    SECTION("nonadjacent facet pairs") {
        // same two-element set, both elements
        CHECK_FALSE(mcp_facets_adjacent(4, 1, 0b0011, 2, 0b0011));
        // complementary near-full sets
        CHECK_FALSE(mcp_facets_adjacent(4, 1, 0b1101, 2, 0b1110));
        // anything else is adjacent
        CHECK(mcp_facets_adjacent(4, 1, 0b0011, 3, 0b1100));
        CHECK(mcp_facets_adjacent(4, 1, 0b0011, 1, 0b0101));
    }
    SECTION("errors") {
        CHECK_THROWS_AS(mcp_facets_adjacent(3, 1, 0b011, 2, 0b011), DimensionTooSmall);
        CHECK_THROWS_AS(mcp_facets_adjacent(4, 1, 0b0001, 2, 0b0011), NotFacetDefining);
        CHECK_THROWS_AS(mcp_facets_adjacent(4, 1, 0b0011, 1, 0b0011), SameFacet);
    }
}

TEST_CASE("interval-order arc classification") {
    ModelNetwork io = build_model(Family::io, 3);
    auto arc = [&](Mask X1, Mask Y1, Mask X2, Mask Y2) {
        int a = io.net.graph.find_arc(io.find_node(X1, Y1), io.find_node(X2, Y2));
        REQUIRE(a >= 0);
        return a;
    };
    SECTION("bad and good examples") {
        CHECK(io_bad_arc(io, arc(0, 0, 0b001, 0)));            // leaves the source
        CHECK(io_bad_arc(io, arc(0b001, 0, 0b001, 0b001)));    // ({1},{}) -> ({1},{1})
        CHECK_FALSE(io_bad_arc(io, arc(0b001, 0b001, 0b011, 0b001)));
        CHECK(io_bad_arc(io, arc(0b011, 0b011, 0b111, 0b011)));  // X = Y, |X| = n-1
        CHECK(io_bad_arc(io, arc(0b111, 0b011, 0b111, 0b111)));  // X = C, |Y| = n-1
    }
    SECTION("closed-form facet nonadjacency matches the generic test") {
        // shared tail (C, {3}) with |Y| = n-2: the two removals are nonadjacent
        int a = arc(0b111, 0b100, 0b111, 0b101);
        int b = arc(0b111, 0b100, 0b111, 0b110);
        CHECK(closed_form_facets_nonadjacent(io, a, b));
        FacetList list = facets(io.net);
        std::vector<int> cor_of = corridor_of_arc(corridors(reduce(io.net)),
                                                  io.net.graph.arc_count());
        const FacetHandle *fa = nullptr, *fb = nullptr;
        for (const FacetHandle& f : list.facets) {
            if (cor_of[f.representative_arc] == cor_of[a]) fa = &f;
            if (cor_of[f.representative_arc] == cor_of[b]) fb = &f;
        }
        REQUIRE((fa && fb));
        CHECK_FALSE(facets_adjacent(io.net, *fa, *fb));
        // a pair with unrelated endpoints is adjacent
        int c = arc(0b001, 0b001, 0b011, 0b001);
        CHECK_FALSE(closed_form_facets_nonadjacent(io, a, c));
    }
    SECTION("bad arcs are rejected by the classifier") {
        CHECK_THROWS_AS(closed_form_facets_nonadjacent(io, arc(0, 0, 0b001, 0),
                                                       arc(0b001, 0b001, 0b011, 0b001)),
                        NotFacetDefining);
    }
}

TEST_CASE("semiorder arc classification") {
    ModelNetwork so = build_model(Family::so, 3);
    auto arc = [&](Mask X1, Mask Y1, std::vector<int> L1, Mask X2, Mask Y2,
                   std::vector<int> L2) {
        int a = so.net.graph.find_arc(so.find_node(X1, Y1, L1), so.find_node(X2, Y2, L2));
        REQUIRE(a >= 0);
        return a;
    };
    SECTION("the four bad-arc forms") {
        CHECK(so_arc_type(so, arc(0, 0, {}, 0b001, 0, {1})) == SoArcType::alpha);
        CHECK(so_arc_type(so, arc(0b011, 0b011, {}, 0b111, 0b011, {3})) == SoArcType::beta);
        CHECK(so_arc_type(so, arc(0b001, 0, {1}, 0b001, 0b001, {})) == SoArcType::gamma);
        CHECK(so_arc_type(so, arc(0b111, 0b001, {2, 3}, 0b111, 0b011, {3})) ==
              SoArcType::delta);
        CHECK(so_arc_type(so, arc(0b001, 0b001, {}, 0b011, 0b001, {2})) == SoArcType::good);
        CHECK(so_bad_arc(so, arc(0, 0, {}, 0b001, 0, {1})));
        CHECK_FALSE(so_bad_arc(so, arc(0b001, 0b001, {}, 0b011, 0b001, {2})));
    }
    SECTION("closed-form facet nonadjacency on a shared terminal node") {
        // both corridors end at ({1,2},{1},[2]), which has |Y| = 1, X != Y, X != C
        int a = arc(0b001, 0b001, {}, 0b011, 0b001, {2});
        int b = arc(0b011, 0, {1, 2}, 0b011, 0b001, {2});
        CHECK(closed_form_facets_nonadjacent(so, a, b));
        // unrelated good arcs stay adjacent
        int c = arc(0b010, 0b010, {}, 0b110, 0b010, {3});
        CHECK_FALSE(closed_form_facets_nonadjacent(so, a, c));
    }
}

TEST_CASE("weak-order facets are pairwise adjacent in closed form") {
    ModelNetwork wo = build_model(Family::wo, 3);
    std::vector<int> good;
    std::vector<Corridor> cors = corridors(reduce(wo.net));
    for (const Corridor& c : cors)
        if (c.good) good.push_back(c.representative_arc());
    REQUIRE(good.size() == 13);
    for (std::size_t i = 0; i < good.size(); ++i)
        for (std::size_t j = i + 1; j < good.size(); ++j)
            CHECK_FALSE(closed_form_facets_nonadjacent(wo, good[i], good[j]));
}

TEST_CASE("seeded distributions") {
    OrderDistribution d = gen_distribution(11, 4);
    validate_distribution(d);
    OrderDistribution e = gen_distribution(11, 4);
    REQUIRE(d.support.size() == e.support.size());
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        CHECK(d.support[i].first == e.support[i].first);
        CHECK(d.support[i].second == e.support[i].second);
    }
    CHECK(gen_distribution(12, 4).support != d.support);
    CHECK_THROWS_AS(gen_distribution(1, 6), SizeGuard);
}
