#include "clonelab/set_family.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace clonelab {

CandidateSet set_union(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CandidateSet set_intersection(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CandidateSet set_difference(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const CandidateSet& a, const CandidateSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const CandidateSet& a, const CandidateSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

bool crosses(const CandidateSet& a, const CandidateSet& b) {
    return intersects(a, b) && !is_subset(a, b) && !is_subset(b, a);
}

namespace {
bool canonical_less(const CandidateSet& a, const CandidateSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}
}  // namespace

SetFamily SetFamily::of(int ground, std::vector<CandidateSet> sets) {
    SetFamily f;
    f.ground = ground;
    f.sets = std::move(sets);
    for (auto& s : f.sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (CandidateId c : s)
            if (c < 0 || c >= ground)
                throw std::invalid_argument("set family: member id out of range");
    }
    f.canonicalize();
    return f;
}

void SetFamily::canonicalize() {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool SetFamily::contains(const CandidateSet& x) const {
    return std::binary_search(sets.begin(), sets.end(), x, canonical_less);
}

bool is_support(const SetFamily& f, const CandidateSet& e) {
    for (const auto& x : f.sets)
        if (crosses(x, e)) return false;
    return true;
}

SetFamily subfamily_below(const SetFamily& f, const CandidateSet& e) {
    std::vector<int> relabel(f.ground, -1);
    for (size_t i = 0; i < e.size(); ++i) relabel[e[i]] = static_cast<int>(i);
    SetFamily out;
    out.ground = static_cast<int>(e.size());
    for (const auto& x : f.sets) {
        if (x.empty() || !is_subset(x, e)) continue;
        CandidateSet y;
        y.reserve(x.size());
        for (CandidateId c : x) y.push_back(relabel[c]);
        std::sort(y.begin(), y.end());
        out.sets.push_back(std::move(y));
    }
    out.canonicalize();
    return out;
}

SetFamily embed_family(const SetFamily& e, CandidateId elem, const SetFamily& f) {
    if (elem < 0 || elem >= e.ground) throw std::invalid_argument("embed: element out of range");
    const int k = f.ground;
    auto remap_e = [&](CandidateId c) { return c < elem ? c : c + k - 1; };
    CandidateSet f_ground;
    for (int j = 0; j < k; ++j) f_ground.push_back(elem + j);

    SetFamily out;
    out.ground = e.ground + k - 1;
    for (const auto& x : e.sets) {
        CandidateSet y;
        bool has_elem = false;
        for (CandidateId c : x) {
            if (c == elem)
                has_elem = true;
            else
                y.push_back(remap_e(c));
        }
        if (has_elem) y.insert(y.end(), f_ground.begin(), f_ground.end());
        std::sort(y.begin(), y.end());
        out.sets.push_back(std::move(y));
    }
    for (const auto& x : f.sets) {
        CandidateSet y;
        for (CandidateId c : x) y.push_back(elem + c);
        out.sets.push_back(std::move(y));
    }
    out.canonicalize();
    return out;
}

bool is_string_of_sausages(const SetFamily& f, std::vector<CandidateId>* order) {
    const int m = f.ground;
    if (f.size() != m * (m + 1) / 2) return false;
    if (m == 1) {
        if (!f.contains({0})) return false;
        if (order) *order = {0};
        return true;
    }
    // Recover the order from the 2-element sets: they must form a path.
    std::vector<std::vector<CandidateId>> adj(m);
    int pairs = 0;
    for (const auto& x : f.sets)
        if (x.size() == 2) {
            adj[x[0]].push_back(x[1]);
            adj[x[1]].push_back(x[0]);
            ++pairs;
        }
    if (pairs != m - 1) return false;
    CandidateId start = -1;
    for (CandidateId c = 0; c < m; ++c) {
        if (adj[c].size() > 2 || adj[c].empty()) return false;
        if (adj[c].size() == 1 && (start == -1 || c < start)) start = c;
    }
    if (start == -1) return false;
    std::vector<CandidateId> path{start};
    CandidateId prev = -1, cur = start;
    while (static_cast<int>(path.size()) < m) {
        CandidateId next = -1;
        for (CandidateId nb : adj[cur])
            if (nb != prev) next = nb;
        if (next == -1) return false;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    // Every interval of the path must be present (counts already match).
    for (int i = 0; i < m; ++i) {
        CandidateSet run;
        for (int j = i; j < m; ++j) {
            run.push_back(path[j]);
            CandidateSet s = run;
            std::sort(s.begin(), s.end());
            if (!f.contains(s)) return false;
        }
    }
    if (order) {
        if (path.front() > path.back()) std::reverse(path.begin(), path.end());
        *order = path;
    }
    return true;
}

bool is_fat_sausage(const SetFamily& f) {
    const int m = f.ground;
    if (f.size() != m + 1 && !(m == 1 && f.size() == 1)) return false;
    for (CandidateId c = 0; c < m; ++c)
        if (!f.contains({c})) return false;
    CandidateSet full(m);
    for (CandidateId c = 0; c < m; ++c) full[c] = c;
    return f.contains(full);
}

std::string family_to_json(const SetFamily& f, int indent) {
    nlohmann::ordered_json j;
    j["m"] = f.ground;
    auto& arr = j["sets"] = nlohmann::ordered_json::array();
    for (const auto& s : f.sets) arr.push_back(s);
    return j.dump(indent);
}

SetFamily family_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    SetFamily f;
    f.ground = j.at("m").get<int>();
    if (f.ground < 1) throw std::invalid_argument("set family: m must be positive");
    std::set<CandidateSet> seen;
    for (const auto& s : j.at("sets")) {
        CandidateSet x = s.get<CandidateSet>();
        std::sort(x.begin(), x.end());
        if (std::adjacent_find(x.begin(), x.end()) != x.end())
            throw std::invalid_argument("set family: duplicate member in a set");
        for (CandidateId c : x)
            if (c < 0 || c >= f.ground)
                throw std::invalid_argument("set family: member id out of range");
        if (!seen.insert(x).second) throw std::invalid_argument("set family: duplicate set");
        f.sets.push_back(std::move(x));
    }
    f.canonicalize();
    return f;
}

}  // namespace clonelab
