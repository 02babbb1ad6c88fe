#include "qarrow/phylogeny.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "qarrow/errors.hpp"

namespace qarrow {

namespace {

// Subtree encoding used for canonical codes: leaves as "#<taxon>", internal
// vertices as "(" + sorted child encodings + ")". Unambiguously parseable, so
// equal encodings mean equal rooted trees.
std::string encode_subtree(const std::vector<std::vector<int>>& adj, int leaf_count, int v,
                           int parent) {
    if (v < leaf_count) return "#" + std::to_string(v);
    std::vector<std::string> parts;
    parts.reserve(adj[static_cast<size_t>(v)].size());
    for (int u : adj[static_cast<size_t>(v)])
        if (u != parent) parts.push_back(encode_subtree(adj, leaf_count, u, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

std::string canonical_code_of(const std::vector<std::vector<int>>& adj, int leaf_count) {
    std::string best;
    for (int v = leaf_count; v < static_cast<int>(adj.size()); ++v) {
        std::string s = encode_subtree(adj, leaf_count, v, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

bool connected_tree(const std::vector<std::vector<int>>& adj) {
    size_t edge_twice = 0;
    for (const auto& nb : adj) edge_twice += nb.size();
    if (edge_twice != 2 * (adj.size() - 1)) return false;
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    size_t visited = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++visited;
                q.push(u);
            }
        }
    }
    return visited == adj.size();
}

} // namespace

Phylogeny Phylogeny::from_adjacency(int leaf_count, std::vector<std::vector<int>> adj) {
    if (leaf_count < 4) fail(Errc::InvalidArgument, "phylogeny needs at least 4 leaves");
    if (!connected_tree(adj)) fail(Errc::NotTree, "adjacency is not a tree");
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        size_t deg = adj[static_cast<size_t>(v)].size();
        if (v < leaf_count && deg != 1)
            fail(Errc::LeafLabelMismatch, "leaf vertex with degree != 1");
        if (v >= leaf_count && deg < 3)
            fail(v >= leaf_count && deg == 2 ? Errc::DegreeTwoVertex : Errc::LeafLabelMismatch,
                 "internal vertex with degree < 3");
        std::sort(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());
    }
    Phylogeny t;
    t.n_ = leaf_count;
    t.adj_ = std::move(adj);
    t.code_ = canonical_code_of(t.adj_, t.n_);
    return t;
}

Phylogeny validate(const RawTree& raw, const LeafSet& leaves) {
    const int V = raw.num_vertices;
    if (V <= 0) fail(Errc::NotTree, "empty vertex set");
    if (leaves.size() < 4) fail(Errc::InvalidArgument, "leaf set needs at least 4 taxa");

    std::vector<std::vector<int>> adj(static_cast<size_t>(V));
    for (auto [a, b] : raw.edges) {
        if (a < 0 || a >= V || b < 0 || b >= V)
            fail(Errc::NotTree, "edge endpoint out of range");
        if (a == b) fail(Errc::NotTree, "self-loop");
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    if (!connected_tree(adj)) fail(Errc::NotTree, "cycle or disconnected input");

    // Leaf labels: bijection between degree-1 vertices and the leaf set.
    std::vector<Taxon> taxon_of(static_cast<size_t>(V), -1);
    std::vector<char> taxon_used(static_cast<size_t>(leaves.size()), 0);
    for (const auto& [vertex, name] : raw.leaf_labels) {
        if (vertex < 0 || vertex >= V) fail(Errc::LeafLabelMismatch, "label on unknown vertex");
        Taxon t = leaves.index_of(name);
        if (t < 0) fail(Errc::UnknownTaxon, "'" + name + "' not in the leaf set");
        if (taxon_used[static_cast<size_t>(t)])
            fail(Errc::LeafLabelMismatch, "taxon '" + name + "' used twice");
        taxon_used[static_cast<size_t>(t)] = 1;
        taxon_of[static_cast<size_t>(vertex)] = t;
    }
    for (int v = 0; v < V; ++v) {
        size_t deg = adj[static_cast<size_t>(v)].size();
        bool labeled = taxon_of[static_cast<size_t>(v)] >= 0;
        if (deg == 2) fail(Errc::DegreeTwoVertex, "vertex " + std::to_string(v) + " has degree 2");
        if (deg == 1 && !labeled)
            fail(Errc::LeafLabelMismatch, "unlabeled degree-1 vertex " + std::to_string(v));
        if (deg != 1 && labeled)
            fail(Errc::LeafLabelMismatch, "labeled vertex with degree != 1");
    }
    for (int t = 0; t < leaves.size(); ++t)
        if (!taxon_used[static_cast<size_t>(t)])
            fail(Errc::LeafLabelMismatch, "taxon '" + leaves.name(t) + "' missing");

    // Normalize: taxon i becomes vertex i, internal vertices follow in BFS order.
    const int n = leaves.size();
    std::vector<int> new_id(static_cast<size_t>(V), -1);
    for (int v = 0; v < V; ++v)
        if (taxon_of[static_cast<size_t>(v)] >= 0) new_id[static_cast<size_t>(v)] = taxon_of[static_cast<size_t>(v)];
    int next = n;
    std::queue<int> q;
    std::vector<char> seen(static_cast<size_t>(V), 0);
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (new_id[static_cast<size_t>(v)] < 0) new_id[static_cast<size_t>(v)] = next++;
        for (int u : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                q.push(u);
            }
    }
    std::vector<std::vector<int>> norm(static_cast<size_t>(V));
    for (int v = 0; v < V; ++v)
        for (int u : adj[static_cast<size_t>(v)])
            norm[static_cast<size_t>(new_id[static_cast<size_t>(v)])].push_back(new_id[static_cast<size_t>(u)]);
    return Phylogeny::from_adjacency(n, std::move(norm));
}

std::uint64_t Phylogeny::path_vertices(int a, int b) const {
    std::vector<int> parent(adj_.size(), -2);
    std::queue<int> q;
    q.push(a);
    parent[static_cast<size_t>(a)] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == b) break;
        for (int u : adj_[static_cast<size_t>(v)])
            if (parent[static_cast<size_t>(u)] == -2) {
                parent[static_cast<size_t>(u)] = v;
                q.push(u);
            }
    }
    std::uint64_t mask = 0;
    for (int v = b; v != -1; v = parent[static_cast<size_t>(v)]) mask |= 1ull << v;
    return mask;
}

std::vector<std::pair<int, int>> Phylogeny::internal_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = n_; v < vertex_count(); ++v)
        for (int u : adj_[static_cast<size_t>(v)])
            if (u >= n_ && u > v) out.emplace_back(v, u);
    return out;
}

std::vector<std::uint64_t> Phylogeny::nontrivial_splits() const {
    std::vector<std::uint64_t> out;
    for (auto [u, v] : internal_edges()) {
        // Leaves on v's side of the edge u-v.
        std::uint64_t side = 0;
        std::vector<int> stack = {v};
        std::vector<char> seen(adj_.size(), 0);
        seen[static_cast<size_t>(u)] = 1;
        seen[static_cast<size_t>(v)] = 1;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            if (is_leaf(w)) side |= 1ull << w;
            for (int x : adj_[static_cast<size_t>(w)])
                if (!seen[static_cast<size_t>(x)]) {
                    seen[static_cast<size_t>(x)] = 1;
                    stack.push_back(x);
                }
        }
        if (side & 1ull) side = ((1ull << n_) - 1) & ~side;
        out.push_back(side);
    }
    return out;
}

std::string subtree_encoding(const Phylogeny& tree, int v, int parent) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(tree.vertex_count()));
    for (int w = 0; w < tree.vertex_count(); ++w) adj[static_cast<size_t>(w)] = tree.neighbors(w);
    return encode_subtree(adj, tree.leaf_count(), v, parent);
}

int canonical_root(const Phylogeny& tree) {
    int best_v = tree.leaf_count();
    std::string best;
    for (int v = tree.leaf_count(); v < tree.vertex_count(); ++v) {
        std::string s = subtree_encoding(tree, v, -1);
        if (best.empty() || s < best) {
            best = std::move(s);
            best_v = v;
        }
    }
    return best_v;
}

Phylogeny relabel(const Phylogeny& tree, const std::vector<Taxon>& perm) {
    if (static_cast<int>(perm.size()) != tree.leaf_count())
        fail(Errc::InvalidArgument, "permutation size mismatch");
    const int V = tree.vertex_count();
    const int n = tree.leaf_count();
    auto map_v = [&](int v) { return v < n ? perm[static_cast<size_t>(v)] : v; };
    std::vector<std::vector<int>> adj(static_cast<size_t>(V));
    for (int v = 0; v < V; ++v)
        for (int u : tree.neighbors(v)) adj[static_cast<size_t>(map_v(v))].push_back(map_v(u));
    return Phylogeny::from_adjacency(n, std::move(adj));
}

Phylogeny star_tree(int n) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        adj[static_cast<size_t>(i)].push_back(n);
        adj[static_cast<size_t>(n)].push_back(i);
    }
    return Phylogeny::from_adjacency(n, std::move(adj));
}

} // namespace qarrow
