#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qarrow/taxa.hpp"

namespace qarrow {

// Raw vertex/edge structure as it comes from a parser or a builder, before any
// invariant has been checked. Vertex ids are arbitrary within [0, num_vertices).
struct RawTree {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> leaf_labels; // vertex -> taxon name
};

// Unrooted leaf-labeled tree: no degree-2 vertex, every degree-1 vertex carries
// a distinct taxon. Immutable after construction. Vertices are normalized so
// that vertex i < leaf_count() is the leaf for taxon i; internal vertices follow.
class Phylogeny {
public:
    int leaf_count() const { return n_; }
    int vertex_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool is_leaf(int v) const { return v < n_; }

    // Canonical code: equal codes <=> equal quartet systems (leaf-label-preserving
    // isomorphism). Minimum over all internal-vertex rootings of a sorted-subtree
    // encoding with leaves written as taxon indices.
    const std::string& code() const { return code_; }

    // Vertex set of the unique a-b path, as a bitmask over vertex ids.
    std::uint64_t path_vertices(int a, int b) const;

    // One leaf-bitmask per internal edge (both endpoints internal); the side not
    // containing leaf 0. These are the nontrivial splits of the tree.
    std::vector<std::uint64_t> nontrivial_splits() const;

    // Endpoints of every internal edge.
    std::vector<std::pair<int, int>> internal_edges() const;

    bool operator==(const Phylogeny& other) const { return code_ == other.code_; }
    bool operator!=(const Phylogeny& other) const { return !(*this == other); }

    // Trusted constructor for enumeration/builders: adjacency must already satisfy
    // the phylogeny invariants with the normalized vertex layout. Checked cheaply.
    static Phylogeny from_adjacency(int leaf_count, std::vector<std::vector<int>> adj);

private:
    Phylogeny() = default;
    friend Phylogeny validate(const RawTree&, const LeafSet&);

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::string code_;
};

// Checks the phylogeny invariants and normalizes vertex numbering.
// Errors: NotTree, DegreeTwoVertex, LeafLabelMismatch, UnknownTaxon.
Phylogeny validate(const RawTree& raw, const LeafSet& leaves);

// Applies a taxon permutation (perm[old_taxon] = new_taxon) and recanonicalizes.
Phylogeny relabel(const Phylogeny& tree, const std::vector<Taxon>& perm);

// Encoding of the subtree at v away from parent, as used by the canonical code.
std::string subtree_encoding(const Phylogeny& tree, int v, int parent);
// The internal vertex whose rooted encoding is the canonical code (smallest id on ties).
int canonical_root(const Phylogeny& tree);

// Star on n leaves (single internal vertex).
Phylogeny star_tree(int n);

} // namespace qarrow
