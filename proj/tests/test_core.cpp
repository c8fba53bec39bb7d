#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "json.hpp"

#include "clonelab/clones.hpp"
#include "clonelab/core.hpp"
#include "fixtures.hpp"

using namespace clonelab;
using clonelab::testing::example_profile;
using clonelab::testing::random_profile;

TEST_CASE("parse the four-candidate example file") {
    const std::string text =
        "# worked example\n"
        "4 3\n"
        "names: a,b,c,d\n"
        "a,b,c,d\n"
        "b,d,c,a\n"
        "a,b,d,c\n";
    Profile p = parse_profile(text);
    CHECK(p.m == 4);
    CHECK(p.voters() == 3);
    CHECK(p == example_profile());
}

TEST_CASE("smallest legal profile") {
    Profile p = parse_profile("1 1\n0\n");
    CHECK(p.m == 1);
    CHECK(p.voters() == 1);
    CHECK(p.orders[0].ranking == std::vector<CandidateId>{0});
}

TEST_CASE("parse errors carry locations") {
    CHECK_THROWS_WITH_AS(parse_profile("3 2\n0,1,2\n0,1,1\n"),
                         doctest::Contains("order 2"), parse_error);
    CHECK_THROWS_AS(parse_profile("3 1\n0,1\n"), parse_error);
    CHECK_THROWS_AS(parse_profile("x y\n"), parse_error);
    CHECK_THROWS_AS(parse_profile("2 1\n0,5\n"), parse_error);
    CHECK_THROWS_AS(parse_profile("2 2\n0,1\n"), parse_error);
}

TEST_CASE("indices accepted when names are declared") {
    Profile p = parse_profile("2 1\nnames: x,y\n1,x\n");
    CHECK(p.orders[0].ranking == std::vector<CandidateId>{1, 0});
}

TEST_CASE("reverse_order") {
    LinearOrder r{{0, 1, 2}};
    CHECK(reverse_order(r).ranking == std::vector<CandidateId>{2, 1, 0});
    LinearOrder one{{0}};
    CHECK(reverse_order(one) == one);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        Profile p = random_profile(7, 1, rng);
        CHECK(reverse_order(reverse_order(p.orders[0])) == p.orders[0]);
    }
}

TEST_CASE("declone the example profile at {c,d}") {
    auto res = declone(example_profile(), {{2, 3}});
    CHECK(res.profile.m == 3);
    CHECK(res.profile.orders[0].ranking == std::vector<CandidateId>{0, 1, 2});
    CHECK(res.profile.orders[1].ranking == std::vector<CandidateId>{1, 2, 0});
    CHECK(res.profile.orders[2].ranking == std::vector<CandidateId>{0, 1, 2});
    REQUIRE(res.mapping.size() == 1);
    CHECK(res.mapping[0].first == CandidateSet{2, 3});
    CHECK(res.mapping[0].second == 2);
    CHECK(res.survivors.at(0) == 0);
    CHECK(res.survivors.at(1) == 1);
    CHECK((*res.profile.names)[2] == "c+d");
}

TEST_CASE("declone with no sets is the identity") {
    auto res = declone(example_profile(), {});
    CHECK(res.profile == example_profile());
    CHECK(res.mapping.empty());
}

TEST_CASE("decloning the full candidate set leaves one candidate") {
    auto res = declone(example_profile(), {{0, 1, 2, 3}});
    CHECK(res.profile.m == 1);
    for (const auto& r : res.profile.orders) CHECK(r.ranking == std::vector<CandidateId>{0});
}

TEST_CASE("declone rejects non-contiguous and overlapping sets") {
    CHECK_THROWS_AS(declone(example_profile(), {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(declone(example_profile(), {{2, 3}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("declone candidate count formula") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Profile p = random_profile(3 + static_cast<int>(rng() % 6), 1 + rng() % 4, rng);
        auto fam = all_clone_sets(p);
        // collect a few disjoint clone sets greedily
        std::vector<CandidateSet> chosen;
        for (const auto& s : fam.sets) {
            if (s.size() < 2 || static_cast<int>(s.size()) == p.m) continue;
            bool ok = true;
            for (const auto& t : chosen)
                if (intersects(s, t)) ok = false;
            if (ok) chosen.push_back(s);
        }
        auto res = declone(p, chosen);
        int expect = p.m;
        for (const auto& s : chosen) expect -= static_cast<int>(s.size()) - 1;
        CHECK(res.profile.m == expect);

        // a fresh candidate never splits a surviving clone set
        auto fam2 = all_clone_sets(res.profile);
        for (const auto& s : fam.sets) {
            bool disjoint = true;
            for (const auto& t : chosen)
                if (intersects(s, t)) disjoint = false;
            if (!disjoint) continue;
            CandidateSet image;
            for (CandidateId c : s) image.push_back(res.survivors.at(c));
            std::sort(image.begin(), image.end());
            CHECK(fam2.contains(image));
        }
    }
}

TEST_CASE("peaks") {
    CHECK(peaks(example_profile()) == CandidateSet{0, 1});
    Profile single;
    single.m = 3;
    single.orders = {{{2, 0, 1}}};
    CHECK(peaks(single) == CandidateSet{2});
    Profile shared;
    shared.m = 3;
    shared.orders = {{{1, 0, 2}}, {{1, 2, 0}}};
    CHECK(peaks(shared) == CandidateSet{1});
}

TEST_CASE("text round trip is bit exact") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        Profile p = random_profile(2 + static_cast<int>(rng() % 7), 1 + rng() % 5, rng);
        std::string text = serialize_profile(p);
        CHECK(serialize_profile(parse_profile(text)) == text);
    }
    Profile named = example_profile();
    std::string text = serialize_profile(named);
    CHECK(text ==
          "4 3\n"
          "names: a,b,c,d\n"
          "a,b,c,d\n"
          "b,d,c,a\n"
          "a,b,d,c\n");
    CHECK(parse_profile(text) == named);
}

TEST_CASE("json round trip") {
    Profile p = example_profile();
    CHECK(profile_from_json(profile_to_json(p)) == p);
    Profile bare;
    bare.m = 2;
    bare.orders = {{{1, 0}}};
    CHECK(profile_from_json(profile_to_json(bare)) == bare);
}

TEST_CASE("declone result json re-parses") {
    auto res = declone(example_profile(), {{2, 3}});
    auto j = nlohmann::json::parse(declone_result_to_json(res));
    CHECK(profile_from_json(j.at("profile").dump()) == res.profile);
    CHECK(j.at("mapping")[0].at("set").get<CandidateSet>() == CandidateSet{2, 3});
    CHECK(j.at("mapping")[0].at("fresh").get<int>() == 2);
    CHECK(j.at("survivors").size() == 2);
}
