#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "schultz/colouring.hpp"
#include "schultz/graph.hpp"
#include "test_support.hpp"

using namespace schultz;
using schultz::testing::code_of;

namespace {

// every proper colouring with colours 1..k that uses all of them; brute force
// by odometer, for cross-checking the search on tiny graphs
std::vector<std::vector<int>> all_proper_exact(const graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> zeta(static_cast<std::size_t>(n), 1);
    std::vector<std::vector<int>> out;
    while (true) {
        bool proper = true;
        for (const auto& [u, v] : g.edges())
            if (zeta[static_cast<std::size_t>(u)] == zeta[static_cast<std::size_t>(v)]) {
                proper = false;
                break;
            }
        if (proper) {
            std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
            for (int z : zeta) used[static_cast<std::size_t>(z)] = 1;
            bool all = true;
            for (int c = 1; c <= k; ++c) all = all && used[static_cast<std::size_t>(c)];
            if (all) out.push_back(zeta);
        }
        int i = n - 1;
        while (i >= 0 && zeta[static_cast<std::size_t>(i)] == k) zeta[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++zeta[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace

TEST_CASE("is_proper") {
    const graph p3 = generate(family_spec::path(3));
    CHECK(is_proper(p3, {{1, 2, 1}, 2}));
    CHECK_FALSE(is_proper(p3, {{1, 1, 2}, 2}));
    CHECK(is_proper(generate(family_spec::complete(3)), {{1, 2, 3}, 3}));
    CHECK(code_of([&] { is_proper(p3, {{1, 2}, 2}); }) == errc::length_mismatch);
    CHECK(code_of([&] { is_proper(p3, {{1, 2, 5}, 2}); }) == errc::bad_params);
}

TEST_CASE("colour_profile") {
    CHECK(colour_profile({{1, 2, 1, 2, 3}, 3}) == std::vector<int>{2, 2, 1});
    CHECK(colour_profile({{1, 2}, 2}) == std::vector<int>{1, 1});
    CHECK(colour_profile({{1, 1, 1, 2, 2}, 2}) == std::vector<int>{3, 2});
}

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(generate(family_spec::path(1))) == 1);
    CHECK(chromatic_number(generate(family_spec::path(5))) == 2);
    CHECK(chromatic_number(generate(family_spec::cycle(5))) == 3);
    CHECK(chromatic_number(generate(family_spec::cycle(6))) == 2);
    CHECK(chromatic_number(generate(family_spec::complete(4))) == 4);
    CHECK(chromatic_number(generate(family_spec::complete_bipartite(3, 3))) == 2);

    // wheel: odd cycle plus a hub
    graph wheel(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    CHECK(chromatic_number(wheel) == 4);
}

TEST_CASE("search size limits") {
    const graph p25 = generate(family_spec::path(25));
    CHECK(code_of([&] { chromatic_number(p25); }) == errc::too_large);
    CHECK(chromatic_number(p25, 30) == 2);
    CHECK(code_of([&] { chi_minus_colouring(p25); }) == errc::too_large);
    CHECK(code_of([&] { enumerate_optimal_colourings(generate(family_spec::path(13))); }) ==
          errc::too_large);

    // env override widens the default cap
    setenv("SCHULTZ_SEARCH_LIMIT", "30", 1);
    CHECK(search_limit() == 30);
    CHECK(chromatic_number(p25) == 2);
    unsetenv("SCHULTZ_SEARCH_LIMIT");
    CHECK(search_limit() == 24);
}

TEST_CASE("chi_minus_colouring") {
    const auto c5 = chi_minus_colouring(generate(family_spec::cycle(5)));
    CHECK(c5.zeta == std::vector<int>{1, 2, 1, 2, 3});
    CHECK(colour_profile(c5) == std::vector<int>{2, 2, 1});

    const auto k32 = chi_minus_colouring(generate(family_spec::complete_bipartite(3, 2)));
    CHECK(k32.zeta == std::vector<int>{1, 1, 1, 2, 2});
    CHECK(colour_profile(k32) == std::vector<int>{3, 2});

    CHECK(chi_minus_colouring(generate(family_spec::path(4))).zeta == std::vector<int>{1, 2, 1, 2});
}

TEST_CASE("chi_plus_colouring") {
    CHECK(chi_plus_colouring(generate(family_spec::path(3))).zeta == std::vector<int>{2, 1, 2});

    // among the colourings with the optimal plus profile (theta_3, theta_2,
    // theta_1) = (2,2,1), the zeta-lex tie-break picks this one
    const auto c5 = chi_plus_colouring(generate(family_spec::cycle(5)));
    CHECK(c5.zeta == std::vector<int>{1, 2, 3, 2, 3});
    CHECK(colour_profile(c5) == std::vector<int>{1, 2, 2});

    CHECK(colour_profile(chi_plus_colouring(generate(family_spec::complete(3)))) ==
          std::vector<int>{1, 1, 1});
}

TEST_CASE("canonical family colourings") {
    CHECK(canonical_family_colouring(family_spec::path(5), direction::minus).zeta ==
          std::vector<int>{1, 2, 1, 2, 1});
    CHECK(canonical_family_colouring(family_spec::cycle(6), direction::minus).zeta ==
          std::vector<int>{1, 2, 1, 2, 1, 2});
    CHECK(canonical_family_colouring(family_spec::cycle(5), direction::plus).zeta ==
          std::vector<int>{3, 2, 3, 2, 1});
    CHECK(canonical_family_colouring(family_spec::complete(4), direction::minus).zeta ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(canonical_family_colouring(family_spec::complete_bipartite(3, 2), direction::plus).zeta ==
          std::vector<int>{2, 2, 2, 1, 1});
    // one vertex admits only the trivial colouring, in both directions
    CHECK(canonical_family_colouring(family_spec::path(1), direction::plus).zeta ==
          std::vector<int>{1});

    for (const auto& spec : schultz::testing::family_instances(9)) {
        for (direction dir : {direction::minus, direction::plus}) {
            const auto c = canonical_family_colouring(spec, dir);
            CHECK(is_proper(generate(spec), c));
            for (int count : colour_profile(c)) CHECK(count > 0);
        }
    }
}

TEST_CASE("canonical and searched colourings agree in profile") {
    for (const auto& spec : schultz::testing::family_instances(10)) {
        const graph g = generate(spec);
        CHECK(colour_profile(canonical_family_colouring(spec, direction::minus)) ==
              colour_profile(chi_minus_colouring(g)));
        CHECK(colour_profile(canonical_family_colouring(spec, direction::plus)) ==
              colour_profile(chi_plus_colouring(g)));
    }
}

TEST_CASE("chi_minus puts colour 1 on the larger side of a bipartition") {
    for (int n = 2; n <= 10; ++n) {
        const auto c = chi_minus_colouring(generate(family_spec::path(n)));
        CHECK(colour_profile(c)[0] == (n + 1) / 2);
    }
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= a; ++b) {
            const auto c = chi_minus_colouring(generate(family_spec::complete_bipartite(a, b)));
            CHECK(colour_profile(c)[0] == a);
        }
}

TEST_CASE("enumerate_optimal_colourings") {
    const auto p3 = enumerate_optimal_colourings(generate(family_spec::path(3)));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].zeta == std::vector<int>{1, 2, 1});

    const auto c4 = enumerate_optimal_colourings(generate(family_spec::cycle(4)));
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].zeta == std::vector<int>{1, 2, 1, 2});
    CHECK(c4[1].zeta == std::vector<int>{2, 1, 2, 1});
    // the zeta-lex tie-break in the search picks the first of these
    CHECK(chi_minus_colouring(generate(family_spec::cycle(4))).zeta == c4[0].zeta);

    // the optimal colourings of C_5 are the dihedral images of the canonical
    // one: two per placement of the singleton colour-3 class
    const auto c5 = enumerate_optimal_colourings(generate(family_spec::cycle(5)));
    REQUIRE(c5.size() == 10);
    for (const auto& c : c5) CHECK(colour_profile(c) == std::vector<int>{2, 2, 1});
    CHECK(c5.front().zeta == std::vector<int>{1, 2, 1, 2, 3});
}

TEST_CASE("chi_minus profile dominates every proper chi-colouring") {
    std::mt19937_64 rng(schultz::testing::kDefaultSeed);
    std::vector<graph> graphs = {generate(family_spec::path(5)),
                                 generate(family_spec::cycle(5)),
                                 generate(family_spec::cycle(6)),
                                 generate(family_spec::complete(4)),
                                 generate(family_spec::complete_bipartite(3, 2))};
    for (int iter = 0; iter < 5; ++iter)
        graphs.push_back(schultz::testing::random_connected_graph(rng, 2, 6));

    for (const graph& g : graphs) {
        const int chi = chromatic_number(g);
        const auto best = colour_profile(chi_minus_colouring(g));
        const auto everything = all_proper_exact(g, chi);
        CHECK_FALSE(everything.empty());
        bool attained = false;
        for (const auto& zeta : everything) {
            const auto profile = colour_profile({zeta, chi});
            CHECK(best >= profile);
            attained = attained || profile == best;
        }
        CHECK(attained);
    }
}

TEST_CASE("colouring JSON round trip") {
    const colouring c{{1, 2, 1, 2, 3}, 3};
    CHECK(colouring_to_json(c) == R"({"zeta":[1,2,1,2,3],"k":3})");
    CHECK(colouring_from_json(colouring_to_json(c)) == c);
    CHECK(code_of([] { colouring_from_json("{}"); }) == errc::malformed_input);
}
