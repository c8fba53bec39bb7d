#include "clonelab/pqtree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "clonelab/axioms.hpp"
#include "json.hpp"

namespace clonelab {

int PQTree::leaf_count() const {
    int n = 0;
    for (const auto& nd : nodes)
        if (nd.kind == Kind::Leaf) ++n;
    return n;
}

CandidateSet PQTree::leaf_set(int node) const {
    CandidateSet out;
    std::function<void(int)> walk = [&](int u) {
        const Node& nd = nodes[u];
        if (nd.kind == Kind::Leaf)
            out.push_back(nd.candidate);
        else
            for (int c : nd.children) walk(c);
    };
    walk(node);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CandidateId> PQTree::frontier() const {
    std::vector<CandidateId> out;
    std::function<void(int)> walk = [&](int u) {
        const Node& nd = nodes[u];
        if (nd.kind == Kind::Leaf)
            out.push_back(nd.candidate);
        else
            for (int c : nd.children) walk(c);
    };
    walk(root);
    return out;
}

void PQTree::validate() const {
    if (root < 0 || root >= static_cast<int>(nodes.size()))
        throw std::invalid_argument("pq tree: bad root");
    auto fr = frontier();
    std::vector<CandidateId> sorted = fr;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<CandidateId>(i))
            throw std::invalid_argument("pq tree: leaves must carry 0..m-1 exactly once");
    std::function<void(int)> walk = [&](int u) {
        const Node& nd = nodes[u];
        if (nd.kind == Kind::Leaf) {
            if (!nd.children.empty()) throw std::invalid_argument("pq tree: leaf with children");
            return;
        }
        if (nd.children.size() < 2) throw std::invalid_argument("pq tree: internal node needs >= 2 children");
        if (nd.kind == Kind::Q && nd.children.size() < 3)
            throw std::invalid_argument("pq tree: Q node needs >= 3 children");
        for (int c : nd.children) walk(c);
    };
    walk(root);
}

void PQTree::canonicalize() {
    std::vector<CandidateId> min_leaf(nodes.size(), -1);
    std::function<CandidateId(int)> pass = [&](int u) -> CandidateId {
        Node& nd = nodes[u];
        if (nd.kind == Kind::Leaf) return min_leaf[u] = nd.candidate;
        for (int c : nd.children) pass(c);
        if (nd.kind == Kind::P) {
            std::sort(nd.children.begin(), nd.children.end(),
                      [&](int a, int b) { return min_leaf[a] < min_leaf[b]; });
        } else if (min_leaf[nd.children.front()] > min_leaf[nd.children.back()]) {
            std::reverse(nd.children.begin(), nd.children.end());
        }
        CandidateId mn = min_leaf[nd.children.front()];
        for (int c : nd.children) mn = std::min(mn, min_leaf[c]);
        return min_leaf[u] = mn;
    };
    pass(root);
    // Renumber nodes in preorder so equal trees compare equal structurally;
    // this also drops any unreachable arena entries.
    std::vector<Node> saved = nodes;
    nodes.clear();
    std::function<int(int)> copy = [&](int u) -> int {
        int id = static_cast<int>(nodes.size());
        nodes.push_back(saved[u]);
        std::vector<int> kids;
        for (int c : saved[u].children) kids.push_back(copy(c));
        nodes[id].children = std::move(kids);
        return id;
    };
    root = copy(root);
}

namespace {

// Minimal non-singleton sets, then grow pairs along the path graph of
// 2-element sets (degree <= 2 and acyclic in any clone structure).
std::vector<CandidateSet> decomposition_unchecked(const SetFamily& f) {
    const int m = f.ground;
    std::vector<CandidateSet> minimal;
    for (const auto& x : f.sets) {
        if (x.size() < 2) continue;
        bool has_smaller = false;
        for (const auto& y : f.sets) {
            if (y.size() < 2 || y.size() >= x.size()) continue;
            if (is_subset(y, x)) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) minimal.push_back(x);
    }

    std::vector<std::vector<CandidateId>> adj(m);
    for (const auto& x : f.sets)
        if (x.size() == 2) {
            adj[x[0]].push_back(x[1]);
            adj[x[1]].push_back(x[0]);
        }

    std::set<CandidateSet> members;
    for (const auto& x : minimal) {
        if (x.size() >= 3) {
            // A minimal set of size >= 3 is never crossed (a crossing set
            // would force a smaller non-singleton subset via A2/A3), so it
            // is the support of a fat sausage.
            members.insert(x);
            continue;
        }
        // Grow the pair to its path component: the candidate support of
        // the maximal string of sausages containing it.
        CandidateSet comp;
        std::vector<char> seen(m, 0);
        std::vector<CandidateId> stack{x[0]};
        seen[x[0]] = 1;
        while (!stack.empty()) {
            CandidateId c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (CandidateId nb : adj[c])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
        }
        std::sort(comp.begin(), comp.end());
        // A crossed component belongs to no irreducible subfamily at this
        // level; it re-chains after deeper members collapse.
        if (is_support(f, comp)) members.insert(comp);
    }
    std::vector<CandidateSet> out(members.begin(), members.end());
    std::sort(out.begin(), out.end(), [](const CandidateSet& a, const CandidateSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (intersects(out[i], out[j]))
                throw std::logic_error("decomposition members must be pairwise disjoint");
    return out;
}

PQTree build_irreducible(const SetFamily& f) {
    // f is the subfamily of a decomposition member, ground 0..m-1.
    PQTree t;
    const int m = f.ground;
    if (m == 1) {
        t.nodes.push_back({PQTree::Kind::Leaf, 0, {}});
        t.root = 0;
        return t;
    }
    std::vector<CandidateId> order;
    PQTree::Node node;
    if (m >= 3 && is_string_of_sausages(f, &order)) {
        node.kind = PQTree::Kind::Q;
    } else if (is_fat_sausage(f)) {
        node.kind = PQTree::Kind::P;
        for (CandidateId c = 0; c < m; ++c) order.push_back(c);
    } else {
        throw std::logic_error("irreducible subfamily is neither string nor fat sausage");
    }
    for (CandidateId c : order) {
        t.nodes.push_back({PQTree::Kind::Leaf, c, {}});
        node.children.push_back(static_cast<int>(t.nodes.size()) - 1);
    }
    t.nodes.push_back(std::move(node));
    t.root = static_cast<int>(t.nodes.size()) - 1;
    return t;
}

// Graft `sub` (over ids 0..k-1) into `t` replacing leaf `leaf`, relabeling
// sub's leaf j to ids[j].
void graft(PQTree& t, int leaf, const PQTree& sub, const CandidateSet& ids) {
    const int base = static_cast<int>(t.nodes.size());
    for (const auto& nd : sub.nodes) {
        PQTree::Node copy = nd;
        if (copy.kind == PQTree::Kind::Leaf) copy.candidate = ids[copy.candidate];
        for (int& c : copy.children) c += base;
        t.nodes.push_back(std::move(copy));
    }
    // Splice: replace the leaf node in place by the sub root's content.
    t.nodes[leaf] = t.nodes[base + sub.root];
}

PQTree build_tree_unchecked(const SetFamily& f) {
    const int m = f.ground;
    if (m == 1) {
        PQTree t;
        t.nodes.push_back({PQTree::Kind::Leaf, 0, {}});
        t.root = 0;
        return t;
    }
    auto dec = decomposition_unchecked(f);
    CandidateSet full(m);
    for (CandidateId c = 0; c < m; ++c) full[c] = c;

    if (dec.size() == 1 && dec[0] == full) return build_irreducible(f);

    // Collapse each member to a placeholder: survivors keep relative order,
    // placeholders appended in dec order (same convention as declone).
    std::vector<int> owner(m, -1);
    for (size_t i = 0; i < dec.size(); ++i)
        for (CandidateId c : dec[i]) owner[c] = static_cast<int>(i);
    std::vector<CandidateId> new_id(m, -1);
    int next = 0;
    for (CandidateId c = 0; c < m; ++c)
        if (owner[c] == -1) new_id[c] = next++;
    std::vector<CandidateId> placeholder(dec.size());
    for (size_t i = 0; i < dec.size(); ++i) placeholder[i] = next++;

    SetFamily collapsed;
    collapsed.ground = next;
    std::set<CandidateSet> cset;
    for (const auto& x : f.sets) {
        // Drop sets strictly inside a member; supports themselves survive
        // as placeholder singletons.
        bool inside = false;
        for (size_t i = 0; i < dec.size() && !inside; ++i)
            if (is_subset(x, dec[i]) && x != dec[i]) inside = true;
        if (inside) continue;
        CandidateSet y;
        std::vector<char> used(dec.size(), 0);
        for (CandidateId c : x) {
            if (owner[c] == -1)
                y.push_back(new_id[c]);
            else if (!used[owner[c]]++)
                y.push_back(placeholder[owner[c]]);
        }
        std::sort(y.begin(), y.end());
        cset.insert(std::move(y));
    }
    collapsed.sets.assign(cset.begin(), cset.end());
    collapsed.canonicalize();

    PQTree t = build_tree_unchecked(collapsed);

    // Relabel skeleton leaves back to original ids; placeholders get subtrees.
    std::vector<CandidateId> back(next, -1);
    for (CandidateId c = 0; c < m; ++c)
        if (owner[c] == -1) back[new_id[c]] = c;
    std::vector<int> leaf_of(next, -1);
    for (size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].kind == PQTree::Kind::Leaf) leaf_of[t.nodes[i].candidate] = static_cast<int>(i);
    for (CandidateId c = 0; c < next; ++c)
        if (back[c] != -1) t.nodes[leaf_of[c]].candidate = back[c];
    for (size_t i = 0; i < dec.size(); ++i) {
        PQTree sub = build_irreducible(subfamily_below(f, dec[i]));
        graft(t, leaf_of[placeholder[i]], sub, dec[i]);
    }
    return t;
}

}  // namespace

std::vector<CandidateSet> decomposition(const SetFamily& f) {
    auto rep = is_clone_structure(f);
    if (!rep.verdict) throw std::invalid_argument("decomposition: not a clone structure");
    return decomposition_unchecked(f);
}

PQTree build_tree(const SetFamily& f) {
    auto rep = is_clone_structure(f);
    if (!rep.verdict) throw std::invalid_argument("build_tree: not a clone structure");
    PQTree t = build_tree_unchecked(f);
    t.canonicalize();
    t.validate();
    return t;
}

SetFamily tree_to_family(const PQTree& t) {
    t.validate();
    std::set<CandidateSet> acc;
    std::function<CandidateSet(int)> walk = [&](int u) -> CandidateSet {
        const auto& nd = t.nodes[u];
        if (nd.kind == PQTree::Kind::Leaf) {
            CandidateSet s{nd.candidate};
            acc.insert(s);
            return s;
        }
        std::vector<CandidateSet> kid_sets;
        for (int c : nd.children) kid_sets.push_back(walk(c));
        CandidateSet mine;
        for (const auto& ks : kid_sets) mine = set_union(mine, ks);
        acc.insert(mine);
        if (nd.kind == PQTree::Kind::Q) {
            const int k = static_cast<int>(kid_sets.size());
            for (int len = 2; len < k; ++len)
                for (int i = 0; i + len <= k; ++i) {
                    CandidateSet run;
                    for (int j = i; j < i + len; ++j) run = set_union(run, kid_sets[j]);
                    acc.insert(std::move(run));
                }
        }
        return mine;
    };
    walk(t.root);
    SetFamily f;
    f.ground = t.leaf_count();
    f.sets.assign(acc.begin(), acc.end());
    f.canonicalize();
    return f;
}

bool is_clone_in_tree(const PQTree& t, const CandidateSet& x) {
    if (x.empty()) return false;
    auto fr = t.frontier();
    const int m = static_cast<int>(fr.size());
    std::vector<int> pos(m, -1);
    for (int i = 0; i < m; ++i) pos[fr[i]] = i;
    for (CandidateId c : x)
        if (c < 0 || c >= m) return false;

    // Per-node frontier intervals.
    std::vector<std::pair<int, int>> span(t.nodes.size());
    std::function<void(int)> compute = [&](int u) {
        const auto& nd = t.nodes[u];
        if (nd.kind == PQTree::Kind::Leaf) {
            span[u] = {pos[nd.candidate], pos[nd.candidate]};
            return;
        }
        for (int c : nd.children) compute(c);
        span[u] = {span[nd.children.front()].first, span[nd.children.back()].second};
    };
    compute(t.root);

    int lo = m, hi = -1;
    for (CandidateId c : x) {
        lo = std::min(lo, pos[c]);
        hi = std::max(hi, pos[c]);
    }
    if (hi - lo + 1 != static_cast<int>(x.size())) return false;  // not even contiguous

    // Smallest node whose span covers [lo, hi].
    int u = t.root;
    for (;;) {
        if (span[u] == std::make_pair(lo, hi)) return true;
        const auto& nd = t.nodes[u];
        if (nd.kind == PQTree::Kind::Leaf) return false;
        int inside = -1;
        for (int c : nd.children)
            if (span[c].first <= lo && hi <= span[c].second) inside = c;
        if (inside != -1) {
            u = inside;
            continue;
        }
        // Covers several children of u: a clone iff u is a Q-node and the
        // run boundaries line up exactly.
        if (nd.kind != PQTree::Kind::Q) return false;
        bool starts = false, ends = false;
        for (int c : nd.children) {
            if (span[c].first == lo) starts = true;
            if (span[c].second == hi) ends = true;
        }
        return starts && ends;
    }
}

std::string tree_to_json(const PQTree& t, int indent) {
    std::function<nlohmann::ordered_json(int)> walk = [&](int u) -> nlohmann::ordered_json {
        const auto& nd = t.nodes[u];
        nlohmann::ordered_json j;
        if (nd.kind == PQTree::Kind::Leaf) {
            j["kind"] = "leaf";
            j["candidate"] = nd.candidate;
        } else {
            j["kind"] = nd.kind == PQTree::Kind::P ? "P" : "Q";
            auto& arr = j["children"] = nlohmann::ordered_json::array();
            for (int c : nd.children) arr.push_back(walk(c));
        }
        return j;
    };
    return walk(t.root).dump(indent);
}

PQTree tree_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    PQTree t;
    std::function<int(const nlohmann::json&)> walk = [&](const nlohmann::json& n) -> int {
        PQTree::Node nd;
        std::string kind = n.at("kind").get<std::string>();
        int id = static_cast<int>(t.nodes.size());
        t.nodes.push_back(nd);
        if (kind == "leaf") {
            t.nodes[id].kind = PQTree::Kind::Leaf;
            t.nodes[id].candidate = n.at("candidate").get<int>();
        } else if (kind == "P" || kind == "Q") {
            t.nodes[id].kind = kind == "P" ? PQTree::Kind::P : PQTree::Kind::Q;
            std::vector<int> kids;
            for (const auto& c : n.at("children")) kids.push_back(walk(c));
            t.nodes[id].children = std::move(kids);
        } else {
            throw std::invalid_argument("pq tree json: unknown kind '" + kind + "'");
        }
        return id;
    };
    t.root = walk(j);
    t.validate();
    return t;
}

std::string tree_to_dot(const PQTree& t, const std::vector<bool>* black) {
    std::string out = "digraph pqtree {\n  node [fontname=\"sans\"];\n";
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& nd = t.nodes[i];
        std::string attrs;
        if (nd.kind == PQTree::Kind::Leaf)
            attrs = "shape=none, label=\"" + std::to_string(nd.candidate) + "\"";
        else if (nd.kind == PQTree::Kind::P)
            attrs = "shape=circle, label=\"P\"";
        else
            attrs = "shape=box, label=\"Q\"";
        if (black) {
            bool b = (*black)[i];
            attrs += b ? ", style=filled, fillcolor=black, fontcolor=white"
                       : ", style=filled, fillcolor=white";
        }
        out += "  n" + std::to_string(i) + " [" + attrs + "];\n";
    }
    std::function<void(int)> walk = [&](int u) {
        for (int c : t.nodes[u].children) {
            out += "  n" + std::to_string(u) + " -> n" + std::to_string(c) + ";\n";
            walk(c);
        }
    };
    walk(t.root);
    out += "}\n";
    return out;
}

}  // namespace clonelab
