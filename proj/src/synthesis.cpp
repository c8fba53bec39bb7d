#include "clonelab/synthesis.hpp"

#include <algorithm>
#include <functional>

#include "clonelab/axioms.hpp"
#include "clonelab/clones.hpp"

namespace clonelab {

Profile implement_string(int m) {
    if (m < 1) throw std::invalid_argument("implement_string: m must be positive");
    Profile p;
    p.m = m;
    LinearOrder r;
    for (CandidateId c = 0; c < m; ++c) r.ranking.push_back(c);
    p.orders.push_back(std::move(r));
    return p;
}

Profile implement_fat(int m) {
    if (m < 2) throw std::invalid_argument("implement_fat: m must be at least 2");
    Profile p;
    p.m = m;
    if (m == 2) {
        p.orders.push_back({{0, 1}});
        return p;
    }
    if (m == 3) {
        p.orders.push_back({{0, 1, 2}});
        p.orders.push_back({{1, 0, 2}});
        p.orders.push_back({{1, 2, 0}});
        return p;
    }
    const int k = m / 2;
    // x_i = i, y_i = k + i (0-based), z = 2k for odd m.
    LinearOrder r1, r2;
    if (m % 2 == 0) {
        for (int i = 0; i < 2 * k; ++i) r1.ranking.push_back(i);
        for (int i = 0; i < k; ++i) {
            r2.ranking.push_back(k + i);
            r2.ranking.push_back(i);
        }
    } else {
        const CandidateId z = 2 * k;
        for (int i = 0; i < k; ++i) r1.ranking.push_back(i);
        for (int i = 0; i < k - 1; ++i) r1.ranking.push_back(k + i);
        r1.ranking.push_back(z);
        r1.ranking.push_back(2 * k - 1);
        for (int i = 0; i < k; ++i) {
            r2.ranking.push_back(k + i);
            r2.ranking.push_back(i);
        }
        r2.ranking.push_back(z);
    }
    p.orders.push_back(std::move(r1));
    p.orders.push_back(std::move(r2));
    return p;
}

namespace {

// Substitute block `block` for candidate c in order r (already remapped).
LinearOrder substitute(const LinearOrder& r, CandidateId c, int shift,
                       const std::vector<CandidateId>& block) {
    LinearOrder out;
    for (CandidateId x : r.ranking) {
        if (x == c) {
            for (CandidateId b : block) out.ranking.push_back(b);
        } else {
            out.ranking.push_back(x < c ? x : x + shift);
        }
    }
    return out;
}

}  // namespace

Profile compose(const Profile& e, CandidateId c, const Profile& f) {
    if (c < 0 || c >= e.m) throw std::invalid_argument("compose: candidate out of range");
    if (f.m == 1) return e;
    if (e.m == 1) return f;

    const int k = f.m;
    const int n = std::max({e.voters(), f.voters(), 2});
    auto order_of = [](const Profile& p, int i) -> const LinearOrder& {
        return p.orders[std::min(i, p.voters() - 1)];
    };
    auto block_of = [&](int i, bool flipped) {
        std::vector<CandidateId> block;
        const auto& q = order_of(f, i).ranking;
        for (CandidateId b : q) block.push_back(c + b);
        if (flipped) std::reverse(block.begin(), block.end());
        return block;
    };

    SetFamily expected = embed_family(all_clone_sets(e), c, all_clone_sets(f));

    Profile out;
    out.m = e.m + k - 1;
    for (int i = 0; i < n; ++i)
        out.orders.push_back(substitute(order_of(e, i), c, k - 1, block_of(i, false)));
    if (all_clone_sets(out) == expected) return out;

    out.orders.back() = substitute(order_of(e, n - 1), c, k - 1, block_of(n - 1, true));
    if (all_clone_sets(out) != expected)
        throw std::logic_error("compose: flipped substitution still leaks clones");
    return out;
}

namespace {

// Relabel a profile over positional ids 0..m-1 through ids[].
Profile relabel(const Profile& p, const std::vector<CandidateId>& ids) {
    Profile out;
    out.m = p.m;
    for (const auto& r : p.orders) {
        LinearOrder nr;
        for (CandidateId c : r.ranking) nr.ranking.push_back(ids[c]);
        out.orders.push_back(std::move(nr));
    }
    return out;
}

using ComposeFn = Profile (*)(const Profile&, CandidateId, const Profile&);

Profile implement_node(const PQTree& t, int node, const std::function<Profile(int)>& skeleton,
                       ComposeFn comp) {
    const auto& nd = t.nodes[node];
    if (nd.kind == PQTree::Kind::Leaf) return implement_string(1);
    Profile cur = skeleton(node);
    int slot = 0;
    for (int child : nd.children) {
        const int sz = static_cast<int>(t.leaf_set(child).size());
        if (t.nodes[child].kind != PQTree::Kind::Leaf)
            cur = comp(cur, slot, implement_node(t, child, skeleton, comp));
        slot += sz;
    }
    return cur;
}

Profile implement_via_tree(const SetFamily& f, const std::function<Profile(const PQTree&, int)>& skel,
                           ComposeFn comp) {
    auto rep = is_clone_structure(f);
    if (!rep.verdict) throw std::invalid_argument("implement: family fails axioms A1-A5");
    PQTree t = build_tree(f);
    auto skeleton = [&](int node) { return skel(t, node); };
    Profile positional = implement_node(t, t.root, skeleton, comp);
    return relabel(positional, t.frontier());
}

}  // namespace

Profile implement_family(const SetFamily& f) {
    return implement_via_tree(
        f,
        [](const PQTree& t, int node) {
            const int k = static_cast<int>(t.nodes[node].children.size());
            return t.nodes[node].kind == PQTree::Kind::Q ? implement_string(k)
                                                         : implement_fat(k);
        },
        &compose);
}

Profile slide(int m) {
    if (m <= 2) throw std::invalid_argument("slide: m must exceed 2");
    Profile p;
    p.m = m;
    for (int v = 0; v < m; ++v) {
        LinearOrder r;
        for (CandidateId c = 1; c <= v; ++c) r.ranking.push_back(c);
        r.ranking.push_back(0);
        for (CandidateId c = v + 1; c < m; ++c) r.ranking.push_back(c);
        p.orders.push_back(std::move(r));
    }
    return p;
}

namespace {

// Embedding step of the single-crossing construction: both inputs are
// single-crossing with respect to their voter index order, and the result
// is too.
Profile sc_compose(const Profile& e, CandidateId c, const Profile& f_in) {
    if (f_in.m == 1) return e;
    if (e.m == 1) return f_in;

    Profile f = f_in;
    if (f.voters() < 2 || f.orders.back() != reverse_order(f.orders.front()))
        f.orders.push_back(reverse_order(f.orders.front()));
    Profile e2 = e;
    while (e2.voters() < f.voters()) e2.orders.push_back(e2.orders.back());
    while (f.voters() < e2.voters()) f.orders.push_back(f.orders.back());
    const int n = e2.voters();
    const int k = f.m;

    auto block_of = [&](int i) {
        std::vector<CandidateId> block;
        for (CandidateId b : f.orders[i].ranking) block.push_back(c + b);
        return block;
    };

    Profile out;
    out.m = e2.m + k - 1;
    for (int i = 0; i < n; ++i)
        out.orders.push_back(substitute(e2.orders[i], c, k - 1, block_of(0)));
    for (int j = 1; j < n; ++j)
        out.orders.push_back(substitute(e2.orders[n - 1], c, k - 1, block_of(j)));

    SetFamily expected = embed_family(all_clone_sets(e2), c, all_clone_sets(f));
    if (all_clone_sets(out) != expected)
        throw std::logic_error("sc_compose: substitution leaks clones");
    return out;
}

}  // namespace

Profile implement_single_crossing(const SetFamily& f) {
    return implement_via_tree(
        f,
        [](const PQTree& t, int node) {
            const int k = static_cast<int>(t.nodes[node].children.size());
            // A two-child P-node is the fat sausage over two elements,
            // which a single order already implements.
            if (t.nodes[node].kind == PQTree::Kind::Q || k == 2) return implement_string(k);
            return slide(k);
        },
        &sc_compose);
}

namespace {

struct SpTreeBuilder {
    const PQTree& t;
    std::vector<std::pair<int, int>> span;   // frontier interval per node
    std::vector<int> parent;
    std::vector<LinearOrder> voters;         // positional ids = frontier order
    int m;

    explicit SpTreeBuilder(const PQTree& tree) : t(tree) {
        m = t.leaf_count();
        span.resize(t.nodes.size());
        parent.assign(t.nodes.size(), -1);
        int next = 0;
        std::function<void(int)> walk = [&](int u) {
            if (t.nodes[u].kind == PQTree::Kind::Leaf) {
                span[u] = {next, next};
                ++next;
                return;
            }
            for (int c : t.nodes[u].children) {
                parent[c] = u;
                walk(c);
            }
            span[u] = {span[t.nodes[u].children.front()].first,
                       span[t.nodes[u].children.back()].second};
        };
        walk(t.root);
    }

    // Ranking of everything outside node v: walk the ancestor path outward.
    // At each level the positions just left of the current block come first
    // (nearest first), then those just right (nearest first).
    std::vector<int> outside_order(int v) const {
        std::vector<int> out;
        int cur = v;
        while (parent[cur] != -1) {
            int up = parent[cur];
            for (int pos = span[cur].first - 1; pos >= span[up].first; --pos) out.push_back(pos);
            for (int pos = span[cur].second + 1; pos <= span[up].second; ++pos) out.push_back(pos);
            cur = up;
        }
        return out;
    }

    void add_child_orders(int v, int child) {
        auto [clo, chi] = span[child];
        auto [vlo, vhi] = span[v];
        auto outside = outside_order(v);
        for (int variant = 0; variant < 4; ++variant) {
            const bool rev_block = variant & 1;
            const bool b_before_a = variant & 2;
            LinearOrder r;
            if (rev_block)
                for (int pos = chi; pos >= clo; --pos) r.ranking.push_back(pos);
            else
                for (int pos = clo; pos <= chi; ++pos) r.ranking.push_back(pos);
            auto left_part = [&] {
                for (int pos = clo - 1; pos >= vlo; --pos) r.ranking.push_back(pos);
            };
            auto right_part = [&] {
                for (int pos = chi + 1; pos <= vhi; ++pos) r.ranking.push_back(pos);
            };
            if (b_before_a) {
                right_part();
                left_part();
            } else {
                left_part();
                right_part();
            }
            for (int pos : outside) r.ranking.push_back(pos);
            voters.push_back(std::move(r));
        }
    }

    Profile build() {
        std::function<void(int)> emit = [&](int u) {
            const auto& nd = t.nodes[u];
            if (nd.kind == PQTree::Kind::Leaf) return;
            if (nd.kind == PQTree::Kind::P) {
                for (int c : nd.children) add_child_orders(u, c);
            } else {
                add_child_orders(u, nd.children.front());
                add_child_orders(u, nd.children.back());
            }
            for (int c : nd.children) emit(c);
        };
        emit(t.root);
        Profile p;
        p.m = m;
        p.orders = std::move(voters);
        return p;
    }
};

}  // namespace

Profile implement_single_peaked_tree(const PQTree& t) {
    t.validate();
    for (const auto& nd : t.nodes) {
        if (nd.kind != PQTree::Kind::Q) continue;
        for (size_t i = 1; i + 1 < nd.children.size(); ++i)
            if (t.nodes[nd.children[i]].kind != PQTree::Kind::Leaf)
                throw std::invalid_argument(
                    "implement_single_peaked_tree: middle child of a Q-node is internal");
    }
    auto fr = t.frontier();
    const int m = static_cast<int>(fr.size());
    if (m == 1) return implement_string(1);
    const auto& root = t.nodes[t.root];
    bool depth1_q = root.kind == PQTree::Kind::Q;
    for (int c : root.children)
        if (t.nodes[c].kind != PQTree::Kind::Leaf) depth1_q = false;
    if (depth1_q) return relabel(implement_string(m), fr);

    SpTreeBuilder builder(t);
    return relabel(builder.build(), fr);
}

}  // namespace clonelab
