#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "clonelab/clones.hpp"
#include "clonelab/single_crossing.hpp"
#include "clonelab/synthesis.hpp"
#include "fixtures.hpp"

using namespace clonelab;
using namespace clonelab::testing;

namespace {

Profile condorcet_cycle() {
    Profile p;
    p.m = 3;
    p.orders = {{{0, 1, 2}}, {{1, 2, 0}}, {{2, 0, 1}}};
    return p;
}

VoterOrder identity_order(int n) {
    VoterOrder o;
    for (int i = 0; i < n; ++i) o.order.push_back(i);
    return o;
}

// Exhaustive optimum for fixed-order decloning, by the same state search
// as the single-peaked oracle.
int best_fixed_declone(const Profile& p, const VoterOrder& ord) {
    auto key_of = [](const Profile& q) { return serialize_profile(q); };
    std::set<std::string> seen{key_of(p)};
    std::deque<Profile> queue{p};
    int best = 0;
    while (!queue.empty()) {
        Profile st = std::move(queue.front());
        queue.pop_front();
        if (single_crossing_wrt(st, ord)) best = std::max(best, st.m);
        auto fam = all_clone_sets(st);
        for (const auto& x : fam.sets) {
            if (x.size() < 2) continue;
            bool minimal = true;
            for (const auto& y : fam.sets)
                if (y.size() >= 2 && y.size() < x.size() && is_subset(y, x)) minimal = false;
            if (!minimal) continue;
            auto dr = declone(st, {x});
            if (seen.insert(key_of(dr.profile)).second) queue.push_back(dr.profile);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("definition check") {
    CHECK(single_crossing_wrt(slide(4), identity_order(4)));
    VoterOrder bad{{0, 2, 1, 3}};
    CHECK_FALSE(single_crossing_wrt(slide(4), bad));
}

TEST_CASE("recognition on fixed instances") {
    auto w = is_single_crossing(slide(5));
    REQUIRE(w.has_value());
    bool forward = w->order == std::vector<int>{0, 1, 2, 3, 4};
    bool backward = w->order == std::vector<int>{4, 3, 2, 1, 0};
    CHECK((forward || backward));

    CHECK_FALSE(is_single_crossing(condorcet_cycle()).has_value());
    CHECK_FALSE(brute_force_sc(condorcet_cycle()).has_value());

    Profile single;
    single.m = 3;
    single.orders = {{{2, 1, 0}}};
    CHECK(is_single_crossing(single).has_value());
    CHECK(brute_force_sc(single).has_value());
}

TEST_CASE("two-candidate profiles are always single-crossing") {
    std::mt19937_64 rng(137);
    for (int it = 0; it < 25; ++it) {
        Profile p = random_profile(2, 1 + rng() % 6, rng);
        auto w = is_single_crossing(p);
        REQUIRE(w.has_value());
        CHECK(single_crossing_wrt(p, *w));
    }
}

TEST_CASE("recognizer agrees with the brute-force oracle") {
    std::mt19937_64 rng(139);
    for (int it = 0; it < 800; ++it) {
        int m = 1 + static_cast<int>(rng() % 6);
        int n = 1 + static_cast<int>(rng() % 6);
        Profile p = random_profile(m, n, rng);
        auto fast = is_single_crossing(p);
        auto slow = brute_force_sc(p);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(single_crossing_wrt(p, *fast));
    }
}

TEST_CASE("appending the reverse of the first voter preserves the property") {
    std::mt19937_64 rng(149);
    int hit = 0;
    for (int it = 0; it < 300 && hit < 80; ++it) {
        Profile p = random_profile(2 + static_cast<int>(rng() % 5), 1 + rng() % 4, rng);
        auto w = is_single_crossing(p);
        if (!w) continue;
        ++hit;
        Profile q;
        q.m = p.m;
        for (int t : w->order) q.orders.push_back(p.orders[t]);
        q.orders.push_back(reverse_order(q.orders.front()));
        CHECK(is_single_crossing(q).has_value());
    }
    CHECK(hit >= 50);
}

TEST_CASE("slides admit exactly two witnessing orders") {
    for (int m = 3; m <= 6; ++m) {
        Profile s = slide(m);
        int count = 0;
        VoterOrder ord = identity_order(m);
        std::sort(ord.order.begin(), ord.order.end());
        do {
            if (single_crossing_wrt(s, ord)) ++count;
        } while (std::next_permutation(ord.order.begin(), ord.order.end()));
        CHECK(count == 2);
    }
}

TEST_CASE("fixed-order decloning: identity when already single-crossing") {
    Profile s = slide(4);
    auto res = sc_declone_fixed(s, identity_order(4));
    CHECK(res.profile.m == 4);
    CHECK(res.mapping.empty());
}

TEST_CASE("fixed-order decloning collapses a planted violation") {
    Profile p;
    p.m = 4;
    p.orders = {{{0, 1, 2, 3}}, {{0, 1, 3, 2}}, {{0, 1, 2, 3}}};
    auto ord = identity_order(3);
    auto closures = sc_violation_closures(p, ord);
    CHECK(closures == std::vector<CandidateSet>{{2, 3}});
    auto res = sc_declone_fixed(p, ord);
    CHECK(res.profile.m == 3);
    REQUIRE(res.mapping.size() == 1);
    CHECK(res.mapping[0].first == CandidateSet{2, 3});
    CHECK(best_fixed_declone(p, ord) == 3);
}

TEST_CASE("maximal closures are disjoint and decloning is optimal") {
    std::mt19937_64 rng(151);
    for (int it = 0; it < 250; ++it) {
        int m = 2 + static_cast<int>(rng() % 5);
        int n = 2 + static_cast<int>(rng() % 5);
        Profile p = random_profile(m, n, rng);
        auto ord = identity_order(n);
        auto closures = sc_violation_closures(p, ord);
        for (size_t i = 0; i < closures.size(); ++i) {
            bool i_max = true;
            for (size_t j = 0; j < closures.size(); ++j)
                if (i != j && is_subset(closures[i], closures[j])) i_max = false;
            if (!i_max) continue;
            for (size_t j = i + 1; j < closures.size(); ++j) {
                bool j_max = true;
                for (size_t l = 0; l < closures.size(); ++l)
                    if (j != l && is_subset(closures[j], closures[l])) j_max = false;
                if (j_max) CHECK_FALSE(intersects(closures[i], closures[j]));
            }
        }
        auto res = sc_declone_fixed(p, ord);
        CHECK(single_crossing_wrt(res.profile, ord));
        CHECK(res.profile.m == best_fixed_declone(p, ord));
    }
}

TEST_CASE("non-maximal closures can cross each other") {
    // Witness that the closure family as a whole need not be laminar:
    // pairs (0,1), (0,2) and (1,2) all violate the identity order, with
    // closures {0,1}, {0,2} and {0,1,2}; the first two cross. Only the
    // maximal closure is collapsed, which the exhaustive search confirms
    // to be optimal.
    Profile p;
    p.m = 5;
    p.orders = {{{2, 0, 1, 3, 4}}, {{4, 1, 0, 2, 3}}, {{4, 3, 2, 0, 1}}};
    auto ord = identity_order(3);
    auto closures = sc_violation_closures(p, ord);
    CHECK(closures ==
          std::vector<CandidateSet>{{0, 1}, {0, 1, 2}, {0, 2}});
    CHECK(crosses(closures[0], closures[2]));
    auto res = sc_declone_fixed(p, ord);
    REQUIRE(res.mapping.size() == 1);
    CHECK(res.mapping[0].first == CandidateSet{0, 1, 2});
    CHECK(res.profile.m == 3);
    CHECK(res.profile.m == best_fixed_declone(p, ord));
}

TEST_CASE("exact decloning basics") {
    Profile s = slide(5);
    auto res = sc_declone_exact(s, 5);
    REQUIRE(res.has_value());
    CHECK(res->profile.m == 5);
    CHECK(res->mapping.empty());

    auto one = sc_declone_exact(condorcet_cycle(), 1);
    REQUIRE(one.has_value());
    CHECK(one->profile.m == 1);

    CHECK_FALSE(sc_declone_exact(condorcet_cycle(), 2).has_value());
    CHECK_FALSE(sc_declone_exact(condorcet_cycle(), 4).has_value());
    CHECK_THROWS_AS(sc_declone_exact(condorcet_cycle(), 0), std::invalid_argument);
}

TEST_CASE("exact decloning maximizes candidates among reachable states") {
    std::mt19937_64 rng(157);
    for (int it = 0; it < 120; ++it) {
        int m = 2 + static_cast<int>(rng() % 5);
        int n = 2 + static_cast<int>(rng() % 4);
        Profile p = random_profile(m, n, rng);
        // exhaustive best over all collapse states
        auto key_of = [](const Profile& q) { return serialize_profile(q); };
        std::set<std::string> seen{key_of(p)};
        std::deque<Profile> queue{p};
        int best = 0;
        while (!queue.empty()) {
            Profile st = std::move(queue.front());
            queue.pop_front();
            if (is_single_crossing(st)) best = std::max(best, st.m);
            auto fam = all_clone_sets(st);
            for (const auto& x : fam.sets) {
                if (x.size() < 2) continue;
                bool minimal = true;
                for (const auto& y : fam.sets)
                    if (y.size() >= 2 && y.size() < x.size() && is_subset(y, x)) minimal = false;
                if (!minimal) continue;
                auto dr = declone(st, {x});
                if (seen.insert(key_of(dr.profile)).second) queue.push_back(dr.profile);
            }
        }
        auto res = sc_declone_exact(p, 1);
        REQUIRE(res.has_value());
        CHECK(res->profile.m == best);
        CHECK(is_single_crossing(res->profile).has_value());
        CHECK_FALSE(sc_declone_exact(p, best + 1).has_value());
    }
}

TEST_CASE("x3c parsing") {
    std::istringstream in("0 1 2\n3 4 5\n# comment\n0 3 4\n");
    auto inst = parse_x3c(in);
    CHECK(inst.k == 2);
    CHECK(inst.sets.size() == 3);
    std::istringstream bad("0 1 1\n");
    CHECK_THROWS_AS(parse_x3c(bad), parse_error);
    std::istringstream word("0 1\n");
    CHECK_THROWS_AS(parse_x3c(word), parse_error);
}

TEST_CASE("reduction structure: the groups are the only nontrivial clones") {
    X3CInstance inst;
    inst.k = 1;
    inst.sets = {{0, 1, 2}};
    auto red = x3c_reduction(inst);
    const int s = 4;  // padded from one set to s = 3k + 1
    CHECK(red.profile.m == 6 * s * s);
    CHECK(red.profile.voters() == 2 * s * s);
    CHECK(red.groups.size() == s);
    auto fam = all_clone_sets(red.profile);
    CHECK(fam.size() == red.profile.m + s + 1);  // singletons, groups, full set
    for (const auto& g : red.groups) CHECK(fam.contains(g));
    CHECK_THROWS_AS(x3c_reduction(X3CInstance{}), std::invalid_argument);
}

TEST_CASE("reduction feasibility matches the x3c answer on a tiny yes instance") {
    X3CInstance inst;
    inst.k = 1;
    inst.sets = {{0, 1, 2}, {0, 1, 2}};
    auto red = x3c_reduction(inst);
    auto res = sc_declone_exact(red.profile, static_cast<int>(red.target));
    REQUIRE(res.has_value());
    CHECK(res->profile.m >= red.target);
    CHECK(is_single_crossing(res->profile).has_value());
}
