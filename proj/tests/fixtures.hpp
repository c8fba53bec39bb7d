#pragma once

#include <random>

#include "clonelab/clones.hpp"
#include "clonelab/core.hpp"
#include "clonelab/set_family.hpp"

namespace clonelab::testing {

// The four-candidate, three-voter profile used throughout: with names
// a,b,c,d mapped to 0..3 the orders are a>b>c>d, b>d>c>a, a>b>d>c.
inline Profile example_profile() {
    Profile p;
    p.m = 4;
    p.names = std::vector<std::string>{"a", "b", "c", "d"};
    p.orders = {{{0, 1, 2, 3}}, {{1, 3, 2, 0}}, {{0, 1, 3, 2}}};
    return p;
}

// Rotating orders i, i+1, ..., m, 1, ..., i-1: clone sets are the
// singletons plus the full set.
inline Profile cyclic_profile(int m) {
    Profile p;
    p.m = m;
    for (int v = 0; v < m; ++v) {
        LinearOrder r;
        for (int i = 0; i < m; ++i) r.ranking.push_back((v + i) % m);
        p.orders.push_back(std::move(r));
    }
    return p;
}

inline Profile random_profile(int m, int n, std::mt19937_64& rng) {
    Profile p;
    p.m = m;
    for (int v = 0; v < n; ++v) {
        LinearOrder r;
        for (CandidateId c = 0; c < m; ++c) r.ranking.push_back(c);
        std::shuffle(r.ranking.begin(), r.ranking.end(), rng);
        p.orders.push_back(std::move(r));
    }
    return p;
}

// All arcs of the cycle 0,1,...,m-1,0: the string of sausages plus the
// wrap-around pair and the wrap arcs it forces. Contains the cyclic pair
// chain, so it is never a clone structure.
inline SetFamily ring_of_sausages(int m) {
    std::vector<CandidateSet> sets;
    for (int start = 0; start < m; ++start)
        for (int len = 1; len < m; ++len) {
            CandidateSet s;
            for (int i = 0; i < len; ++i) s.push_back((start + i) % m);
            std::sort(s.begin(), s.end());
            sets.push_back(std::move(s));
        }
    CandidateSet full;
    for (int c = 0; c < m; ++c) full.push_back(c);
    sets.push_back(std::move(full));
    return SetFamily::of(m, std::move(sets));
}

// 2^[m] minus the empty set.
inline SetFamily powerset_family(int m) {
    std::vector<CandidateSet> sets;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        CandidateSet s;
        for (int c = 0; c < m; ++c)
            if (mask & (1u << c)) s.push_back(c);
        sets.push_back(std::move(s));
    }
    return SetFamily::of(m, std::move(sets));
}

// The eight-set family of the worked embedding example: a string over
// {a, x+y, c} with a two-element fat sausage in the middle; ids a=0, x=1,
// y=2, c=3.
inline SetFamily embedded_example_family() {
    return SetFamily::of(4, {{0}, {1}, {2}, {3}, {1, 2}, {0, 1, 2}, {1, 2, 3}, {0, 1, 2, 3}});
}

}  // namespace clonelab::testing
