#include "clonelab/axioms.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace clonelab {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::A1: return "A1";
        case Axiom::A2: return "A2";
        case Axiom::A3: return "A3";
        case Axiom::A4: return "A4";
        case Axiom::A5: return "A5";
    }
    return "?";
}

bool AxiomReport::violated(Axiom a) const {
    for (const auto& v : violations)
        if (v.axiom == a) return true;
    return false;
}

std::string report_to_json(const AxiomReport& r, int indent) {
    nlohmann::ordered_json j;
    j["clone_structure"] = r.verdict;
    auto& arr = j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) {
        nlohmann::ordered_json jv;
        jv["axiom"] = axiom_name(v.axiom);
        jv["detail"] = v.detail;
        jv["witnesses"] = v.witnesses;
        arr.push_back(std::move(jv));
    }
    return j.dump(indent);
}

std::vector<CandidateSet> minimal_proper_supersets(const SetFamily& f, const CandidateSet& x) {
    if (!f.contains(x)) throw std::invalid_argument("minimal_proper_supersets: set not in family");
    std::vector<CandidateSet> sups;
    for (const auto& z : f.sets)
        if (z.size() > x.size() && is_subset(x, z)) sups.push_back(z);
    std::vector<CandidateSet> out;
    for (const auto& z : sups) {
        bool minimal = true;
        for (const auto& y : sups)
            if (y.size() < z.size() && is_subset(y, z)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(z);
    }
    return out;
}

AxiomReport check_axioms_a1_a4(const SetFamily& f) {
    AxiomReport rep;
    // A1
    {
        AxiomViolation v{Axiom::A1, {}, ""};
        for (CandidateId c = 0; c < f.ground && v.detail.empty(); ++c)
            if (!f.contains({c})) {
                v.detail = "missing singleton";
                v.witnesses = {{c}};
            }
        if (v.detail.empty() && f.contains({})) {
            v.detail = "empty set present";
            v.witnesses = {{}};
        }
        CandidateSet full(f.ground);
        for (CandidateId c = 0; c < f.ground; ++c) full[c] = c;
        if (v.detail.empty() && !f.contains(full)) {
            v.detail = "missing ground set";
            v.witnesses = {full};
        }
        if (!v.detail.empty()) rep.violations.push_back(std::move(v));
    }
    // A2 and A3 over all pairs, first witness each.
    bool a2_done = false, a3_done = false;
    for (size_t i = 0; i < f.sets.size() && !(a2_done && a3_done); ++i) {
        for (size_t j = i + 1; j < f.sets.size() && !(a2_done && a3_done); ++j) {
            const auto& x = f.sets[i];
            const auto& y = f.sets[j];
            if (x.empty() || y.empty() || !intersects(x, y)) continue;
            if (!a2_done &&
                (!f.contains(set_union(x, y)) || !f.contains(set_intersection(x, y)))) {
                rep.violations.push_back(
                    {Axiom::A2, {x, y}, "union or intersection missing"});
                a2_done = true;
            }
            if (!a3_done && crosses(x, y) &&
                (!f.contains(set_difference(x, y)) || !f.contains(set_difference(y, x)))) {
                rep.violations.push_back({Axiom::A3, {x, y}, "difference missing"});
                a3_done = true;
            }
        }
    }
    // A4
    for (const auto& x : f.sets) {
        if (x.empty()) continue;
        auto sups = minimal_proper_supersets(f, x);
        if (sups.size() > 2) {
            AxiomViolation v{Axiom::A4, {x}, "more than two proper minimal supersets"};
            for (auto& z : sups) v.witnesses.push_back(std::move(z));
            rep.violations.push_back(std::move(v));
            break;
        }
    }
    rep.verdict = rep.violations.empty();
    return rep;
}

bool is_bicycle_chain(const std::vector<CandidateSet>& chain) {
    const int k = static_cast<int>(chain.size());
    if (k < 3) return false;
    for (int i = 0; i < k; ++i) {
        const auto& prev = chain[(i + k - 1) % k];
        const auto& cur = chain[i];
        const auto& next = chain[(i + 1) % k];
        if (!crosses(prev, cur)) return false;
        if (!set_intersection(set_intersection(prev, cur), next).empty()) return false;
        if (!is_subset(cur, set_union(prev, next))) return false;
    }
    return true;
}

std::optional<BicycleChain> find_bicycle_chain(const SetFamily& f) {
    std::vector<CandidateSet> sets;
    for (const auto& s : f.sets)
        if (!s.empty()) sets.push_back(s);
    const int n = static_cast<int>(sets.size());

    // Size-3 chains by triple enumeration (conditions are symmetric).
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!crosses(sets[a], sets[b])) continue;
            for (int c = b + 1; c < n; ++c) {
                std::vector<CandidateSet> tri{sets[a], sets[b], sets[c]};
                if (is_bicycle_chain(tri)) return BicycleChain{std::move(tri)};
            }
        }

    // Longer chains: directed graph on ordered crossing pairs.
    std::vector<std::pair<int, int>> verts;
    std::map<std::pair<int, int>, int> vid;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && crosses(sets[a], sets[b])) {
                vid[{a, b}] = static_cast<int>(verts.size());
                verts.emplace_back(a, b);
            }
    const int V = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(V);
    for (int u = 0; u < V; ++u) {
        auto [x, y] = verts[u];
        for (int z = 0; z < n; ++z) {
            auto it = vid.find({y, z});
            if (it == vid.end()) continue;
            if (!set_intersection(set_intersection(sets[x], sets[y]), sets[z]).empty()) continue;
            if (!is_subset(sets[y], set_union(sets[x], sets[z]))) continue;
            adj[u].push_back(it->second);
        }
    }
    // Iterative DFS with back-edge detection; unwind the stack for the cycle.
    std::vector<int> color(V, 0);  // 0 white, 1 on stack, 2 done
    std::vector<int> stack, iter(V, 0);
    for (int s = 0; s < V; ++s) {
        if (color[s]) continue;
        stack.push_back(s);
        color[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            if (iter[u] < static_cast<int>(adj[u].size())) {
                int w = adj[u][iter[u]++];
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back(w);
                } else if (color[w] == 1) {
                    // Cycle: w ... u on the stack.
                    auto pos = std::find(stack.begin(), stack.end(), w);
                    std::vector<CandidateSet> chain;
                    for (auto it = pos; it != stack.end(); ++it)
                        chain.push_back(sets[verts[*it].first]);
                    if (is_bicycle_chain(chain)) return BicycleChain{std::move(chain)};
                    // A pair-graph cycle always decodes into a valid chain.
                    throw std::logic_error("bicycle chain decode failed");
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

AxiomReport is_clone_structure(const SetFamily& f) {
    AxiomReport rep = check_axioms_a1_a4(f);
    if (auto chain = find_bicycle_chain(f)) {
        AxiomViolation v{Axiom::A5, chain->chain, "bicycle chain present"};
        rep.violations.push_back(std::move(v));
    }
    rep.verdict = rep.violations.empty();
    return rep;
}

}  // namespace clonelab
