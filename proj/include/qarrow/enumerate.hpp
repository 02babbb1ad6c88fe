#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qarrow/phylogeny.hpp"
#include "qarrow/quartet.hpp"
#include "qarrow/taxa.hpp"

namespace qarrow {

inline constexpr int kDefaultMaxLeaves = 7;

// Complete duplicate-free list, sorted by canonical code. Binary trees come from
// sequential leaf insertion into every edge; multifurcating trees from contracting
// every subset of internal edges, deduplicated by code.
// Errors: TooManyLeaves (n > max_n), InvalidArgument (n < 4).
std::vector<Phylogeny> enumerate_phylogenies(const LeafSet& leaves, bool binary_only = false,
                                             int max_n = kDefaultMaxLeaves);

// Enumerated trees plus cached quartet systems; the working set for every
// realizability and profile-space scan. Tree ids are positions in `trees`.
class TreeUniverse {
public:
    static std::shared_ptr<const TreeUniverse> build(const LeafSet& leaves,
                                                     int max_n = kDefaultMaxLeaves);

    const LeafSet& leaves() const { return leaves_; }
    int leaf_count() const { return leaves_.size(); }
    size_t tree_count() const { return trees_.size(); }
    const std::vector<Phylogeny>& trees() const { return trees_; }
    const Phylogeny& tree(size_t id) const { return trees_[id]; }
    const QuartetSystem& system(size_t id) const { return systems_[id]; }

    // Id of a tree with this canonical code; enumeration is complete, so every
    // phylogeny on the leaf set is present. IndexOutOfRange if the code is foreign.
    size_t id_of(const Phylogeny& tree) const;

    // Tree ids whose topology on s equals top.
    const std::vector<size_t>& bucket(FourSet s, Topology top) const;

private:
    LeafSet leaves_;
    std::vector<Phylogeny> trees_;
    std::vector<QuartetSystem> systems_;
    std::vector<std::string> codes_; // sorted, parallel to trees_
    std::vector<std::vector<size_t>> buckets_; // [rank(s) * 4 + top]
};

} // namespace qarrow
