#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "clonelab/clones.hpp"
#include "clonelab/pqtree.hpp"
#include "fixtures.hpp"

using namespace clonelab;
using namespace clonelab::testing;

namespace {
SetFamily string_family(int m) {
    Profile p;
    p.m = m;
    LinearOrder r;
    for (CandidateId c = 0; c < m; ++c) r.ranking.push_back(c);
    p.orders.push_back(std::move(r));
    return all_clone_sets(p);
}
}  // namespace

TEST_CASE("decomposition picks the minimal irreducible supports") {
    // {b,c} embedded in a fat sausage over four slots.
    auto fam = SetFamily::of(4, {{0}, {1}, {2}, {3}, {1, 2}, {0, 1, 2, 3}});
    CHECK(decomposition(fam) == std::vector<CandidateSet>{{1, 2}});

    auto fat = all_clone_sets(cyclic_profile(5));
    CHECK(decomposition(fat) == std::vector<CandidateSet>{{0, 1, 2, 3, 4}});

    CHECK(decomposition(embedded_example_family()) == std::vector<CandidateSet>{{1, 2}});

    CHECK_THROWS_AS(decomposition(ring_of_sausages(4)), std::invalid_argument);
}

TEST_CASE("trees of the irreducible families") {
    PQTree q = build_tree(string_family(4));
    CHECK(q.nodes[q.root].kind == PQTree::Kind::Q);
    CHECK(q.nodes[q.root].children.size() == 4);
    CHECK(q.frontier() == std::vector<CandidateId>{0, 1, 2, 3});

    PQTree f = build_tree(all_clone_sets(cyclic_profile(4)));
    CHECK(f.nodes[f.root].kind == PQTree::Kind::P);
    CHECK(f.nodes[f.root].children.size() == 4);

    PQTree leaf = build_tree(SetFamily::of(1, {{0}}));
    CHECK(leaf.nodes[leaf.root].kind == PQTree::Kind::Leaf);
}

TEST_CASE("embedded example tree: Q root with a middle P child") {
    PQTree t = build_tree(embedded_example_family());
    const auto& root = t.nodes[t.root];
    REQUIRE(root.kind == PQTree::Kind::Q);
    REQUIRE(root.children.size() == 3);
    CHECK(t.nodes[root.children[0]].kind == PQTree::Kind::Leaf);
    CHECK(t.nodes[root.children[0]].candidate == 0);
    const auto& mid = t.nodes[root.children[1]];
    REQUIRE(mid.kind == PQTree::Kind::P);
    CHECK(t.leaf_set(root.children[1]) == CandidateSet{1, 2});
    CHECK(t.nodes[root.children[2]].candidate == 3);
}

TEST_CASE("tree_to_family inverts build_tree") {
    CHECK(tree_to_family(build_tree(embedded_example_family())) == embedded_example_family());

    std::mt19937_64 rng(51);
    for (int it = 0; it < 300; ++it) {
        int m = 1 + static_cast<int>(rng() % 8);
        Profile p = random_profile(m, 1 + rng() % 4, rng);
        auto fam = all_clone_sets(p);
        PQTree t = build_tree(fam);
        CHECK(tree_to_family(t) == fam);
        CHECK(t.leaf_count() == m);
        for (size_t u = 0; u < t.nodes.size(); ++u)
            if (t.nodes[u].kind != PQTree::Kind::Leaf) CHECK(fam.contains(t.leaf_set(u)));
    }
}

TEST_CASE("single leaf and small trees to family") {
    PQTree leaf;
    leaf.nodes.push_back({PQTree::Kind::Leaf, 0, {}});
    leaf.root = 0;
    CHECK(tree_to_family(leaf).sets == std::vector<CandidateSet>{{0}});

    PQTree p3;
    p3.nodes.push_back({PQTree::Kind::Leaf, 0, {}});
    p3.nodes.push_back({PQTree::Kind::Leaf, 1, {}});
    p3.nodes.push_back({PQTree::Kind::Leaf, 2, {}});
    p3.nodes.push_back({PQTree::Kind::P, -1, {0, 1, 2}});
    p3.root = 3;
    auto fam = tree_to_family(p3);
    CHECK(fam == SetFamily::of(3, {{0}, {1}, {2}, {0, 1, 2}}));
}

TEST_CASE("is_clone_in_tree matches the materialized family") {
    PQTree t = build_tree(embedded_example_family());
    CHECK(is_clone_in_tree(t, {0, 1, 2}));
    CHECK_FALSE(is_clone_in_tree(t, {0, 3}));
    CHECK(is_clone_in_tree(t, {0, 1, 2, 3}));

    std::mt19937_64 rng(53);
    for (int it = 0; it < 100; ++it) {
        int m = 1 + static_cast<int>(rng() % 8);
        Profile p = random_profile(m, 1 + rng() % 4, rng);
        PQTree t2 = build_tree(all_clone_sets(p));
        auto fam = tree_to_family(t2);
        for (uint32_t mask = 1; mask < (1u << m); ++mask) {
            CandidateSet s;
            for (int c = 0; c < m; ++c)
                if (mask & (1u << c)) s.push_back(c);
            CHECK(is_clone_in_tree(t2, s) == fam.contains(s));
        }
    }
}

TEST_CASE("decomposition members are pairwise disjoint") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 200; ++it) {
        Profile p = random_profile(2 + static_cast<int>(rng() % 7), 1 + rng() % 4, rng);
        auto dec = decomposition(all_clone_sets(p));
        for (size_t i = 0; i < dec.size(); ++i) {
            CHECK(dec[i].size() >= 2);
            for (size_t j = i + 1; j < dec.size(); ++j)
                CHECK_FALSE(intersects(dec[i], dec[j]));
        }
    }
}

TEST_CASE("canonical form is stable under q reversal and p permutation") {
    PQTree t = build_tree(embedded_example_family());
    PQTree mirrored = t;
    auto& root = mirrored.nodes[mirrored.root];
    std::reverse(root.children.begin(), root.children.end());
    for (auto& nd : mirrored.nodes)
        if (nd.kind == PQTree::Kind::P) std::reverse(nd.children.begin(), nd.children.end());
    mirrored.canonicalize();
    CHECK(mirrored == t);
}

TEST_CASE("tree json and dot") {
    PQTree t = build_tree(embedded_example_family());
    PQTree back = tree_from_json(tree_to_json(t));
    back.canonicalize();
    CHECK(back == t);
    auto dot = tree_to_dot(t);
    CHECK(dot.find("shape=box") != std::string::npos);     // Q node
    CHECK(dot.find("shape=circle") != std::string::npos);  // P node
    CHECK_THROWS_AS(tree_from_json(R"({"kind":"X"})"), std::invalid_argument);
}
