#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schultz/graph.hpp"
#include "test_support.hpp"

using namespace schultz;
using schultz::testing::code_of;

TEST_CASE("build_graph validation") {
    const graph p2(2, {{0, 1}});
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edges().size() == 1);

    const graph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(c3.edges().size() == 3);

    CHECK(code_of([] { graph(4, {{0, 1}, {2, 3}}); }) == errc::disconnected);
    CHECK(code_of([] { graph(2, {{0, 2}}); }) == errc::out_of_range_vertex);
    CHECK(code_of([] { graph(2, {{1, 1}}); }) == errc::self_loop);
    CHECK(code_of([] { graph(0, {}); }) == errc::bad_params);

    // duplicates and reversed pairs collapse silently
    const graph dup(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("family generators") {
    const graph p4 = generate(family_spec::path(4));
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edges().size() == 3);

    const graph star = generate(family_spec::complete_bipartite(2, 1));
    CHECK(star.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    const graph c5 = generate(family_spec::cycle(5));
    CHECK(c5.edges().size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.neighbours(v).size() == 2);

    const graph k4 = generate(family_spec::complete(4));
    CHECK(k4.edges().size() == 6);

    CHECK(code_of([] { family_spec::cycle(2); }) == errc::bad_params);
    CHECK(code_of([] { family_spec::path(0); }) == errc::bad_params);
    CHECK(code_of([] { family_spec::complete_bipartite(0, 1); }) == errc::bad_params);

    // biclique parameters normalize to a >= b
    const auto swapped = family_spec::complete_bipartite(1, 2);
    CHECK(swapped.n == 2);
    CHECK(swapped.b == 1);
}

TEST_CASE("distances") {
    const auto dp3 = distances(generate(family_spec::path(3)));
    CHECK(dp3.at(0, 2) == 2);
    CHECK(dp3.at(0, 1) == 1);
    CHECK(dp3.at(1, 1) == 0);

    CHECK(distances(generate(family_spec::cycle(5))).diameter() == 2);

    const auto dk4 = distances(generate(family_spec::complete(4)));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(dk4.at(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("family distances agree with the textbook forms") {
    for (int n = 1; n <= 12; ++n) {
        const auto d = distances(generate(family_spec::path(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(d.at(i, j) == std::abs(i - j));
        CHECK(d.diameter() == n - 1);
    }
    for (int n = 3; n <= 12; ++n) {
        const auto d = distances(generate(family_spec::cycle(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(d.at(i, j) == std::min(std::abs(i - j), n - std::abs(i - j)));
        CHECK(d.diameter() == n / 2);
    }
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= a; ++b) {
            const auto spec = family_spec::complete_bipartite(a, b);
            const auto d = distances(generate(spec));
            const int n = a + b;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const bool cross = (i < a) != (j < a);
                    CHECK(d.at(i, j) == (cross ? 1 : 2));
                }
            if (b >= 2) CHECK(d.diameter() == 2);
        }
}

TEST_CASE("parse and serialize") {
    CHECK(parse_graph(R"({"n":2,"edges":[[0,1]]})") == graph(2, {{0, 1}}));
    CHECK(parse_graph(R"({"n":3,"edges":[[0,1],[1,2]]})") == generate(family_spec::path(3)));
    CHECK(parse_graph("3 2\n0 1\n1 2\n") == generate(family_spec::path(3)));

    CHECK(code_of([] { parse_graph(R"({"n":2,"edges":[[0,2]]})"); }) == errc::out_of_range_vertex);
    CHECK(code_of([] { parse_graph("{broken"); }) == errc::malformed_input);
    CHECK(code_of([] { parse_graph(R"({"edges":[[0,1]]})"); }) == errc::malformed_input);
    CHECK(code_of([] { parse_graph(R"({"n":2,"edges":[[0]]})"); }) == errc::malformed_input);
    CHECK(code_of([] { parse_graph("  "); }) == errc::malformed_input);
    CHECK(code_of([] { parse_graph("3 2\n0 1\n"); }) == errc::malformed_input);
    CHECK(code_of([] { parse_graph("3 1\nx y\n"); }) == errc::malformed_input);

    CHECK(serialize_graph(graph(2, {{0, 1}})) == R"({"n":2,"edges":[[0,1]]})");
}

TEST_CASE("serialize/parse round trip on random graphs") {
    std::mt19937_64 rng(schultz::testing::kDefaultSeed);
    for (int iter = 0; iter < 50; ++iter) {
        const graph g = schultz::testing::random_connected_graph(rng, 1, 10);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}
