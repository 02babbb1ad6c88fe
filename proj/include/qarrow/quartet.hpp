#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qarrow/phylogeny.hpp"
#include "qarrow/taxa.hpp"

namespace qarrow {

// Topology of a 4-subset, stored relative to the sorted subset (t0<t1<t2<t3).
// R12_34 pairs {t0,t1}|{t2,t3}, R13_24 pairs {t0,t2}|{t1,t3}, R14_23 pairs
// {t0,t3}|{t1,t2}. Quotienting out the 8-fold notation symmetry this way makes
// "ab|cd", "ba|dc", "cd|ab" a single value.
enum class Topology : std::uint8_t { R12_34 = 0, R13_24 = 1, R14_23 = 2, Unresolved = 3 };

inline bool is_resolved(Topology t) { return t != Topology::Unresolved; }
constexpr std::array<Topology, 3> kResolvedTopologies = {Topology::R12_34, Topology::R13_24,
                                                         Topology::R14_23};

// Sorted 4-subset of taxa.
struct FourSet {
    std::array<Taxon, 4> t;

    static FourSet of(Taxon a, Taxon b, Taxon c, Taxon d); // sorts, checks distinct
    bool operator==(const FourSet& o) const { return t == o.t; }
    bool operator<(const FourSet& o) const { return t < o.t; }
};

struct Quartet {
    FourSet taxa;
    Topology top = Topology::Unresolved;

    bool operator==(const Quartet& o) const { return taxa == o.taxa && top == o.top; }
    bool operator<(const Quartet& o) const {
        return taxa < o.taxa || (taxa == o.taxa && top < o.top);
    }

    // The two sides of a resolved quartet, each sorted, smaller side first.
    std::array<std::array<Taxon, 2>, 2> sides() const;
    static Quartet resolved(std::array<Taxon, 2> side1, std::array<Taxon, 2> side2);
    static Quartet unresolved(FourSet s) { return Quartet{s, Topology::Unresolved}; }
};

// Text format: resolved "ab|cd" (each side sorted, sides ordered by first taxon),
// unresolved "abcd". Multi-character taxon names use commas: "t1,t2|t3,t4".
std::string quartet_to_string(const Quartet& q, const LeafSet& leaves);
Quartet parse_quartet(const std::string& text, const LeafSet& leaves);

// Path-intersection topology: resolved p|q iff the two paths joining the pairs
// are vertex-disjoint; unresolved iff no pairing is disjoint.
Topology topology_of(const Phylogeny& tree, FourSet fourset);

// Total map from every 4-subset of a leaf subset X to its topology.
class QuartetSystem {
public:
    QuartetSystem() = default;
    QuartetSystem(std::vector<Taxon> leaves_sorted, std::vector<Topology> entries);

    const std::vector<Taxon>& leaves() const { return leaves_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    size_t entry_count() const { return entries_.size(); }

    Topology topology(FourSet s) const; // s must be within leaves()
    Quartet quartet(size_t rank) const; // rank-th 4-subset in lexicographic order
    FourSet fourset(size_t rank) const;

    std::vector<Quartet> resolved_quartets() const;
    size_t resolved_count() const;

    // Sub-map on the 4-subsets of X (restriction coherence: restricting twice
    // equals restricting once to the smaller set).
    QuartetSystem restrict(const std::vector<Taxon>& X) const;

    bool operator==(const QuartetSystem& o) const {
        return leaves_ == o.leaves_ && entries_ == o.entries_;
    }
    bool operator!=(const QuartetSystem& o) const { return !(*this == o); }

private:
    std::vector<Taxon> leaves_;       // sorted global taxon ids
    std::vector<Topology> entries_;   // one per 4-subset, lexicographic order
};

QuartetSystem quartet_system(const Phylogeny& tree);

// q(T) restricted to X. |X| >= 4 (SubsetTooSmall otherwise).
QuartetSystem restrict_tree(const Phylogeny& tree, const std::vector<Taxon>& X);

// Partial map: at most one constraint per 4-subset.
class QuartetConstraintSet {
public:
    QuartetConstraintSet() = default;
    explicit QuartetConstraintSet(std::vector<Taxon> leaves_sorted) : leaves_(std::move(leaves_sorted)) {}

    void add(const Quartet& q); // InvalidArgument on conflicting duplicate
    const std::vector<Quartet>& constraints() const { return constraints_; }
    const std::vector<Taxon>& leaves() const { return leaves_; }
    bool empty() const { return constraints_.empty(); }
    std::optional<Topology> topology_on(FourSet s) const;

    // One quartet per line, '#' comments. Taxa referenced must be in `leaves`.
    static QuartetConstraintSet parse(const std::string& text, const LeafSet& leaves);
    std::string to_text(const LeafSet& leaves) const;

private:
    std::vector<Taxon> leaves_;
    std::vector<Quartet> constraints_; // sorted by FourSet
};

// The two-premise inference used inside the invariance constructions: premises
// sharing one full side and exactly one taxon on the other sides imply the
// quartet pairing the two non-shared taxa against the shared side. Covers both
// quoted shapes (wx|yz ^ wx|vy => wx|vz and wx|yz ^ wv|yz => xv|yz). Returns
// nothing for any other pattern; this is deliberately not a closure engine.
std::optional<Quartet> dyadic_step(const Quartet& premise1, const Quartet& premise2);

// Enumeration helpers for 4-subsets of a sorted leaf list.
std::vector<FourSet> all_foursets(const std::vector<Taxon>& leaves);
// All subsets of `leaves` with size >= min_size, in size-then-lex order.
std::vector<std::vector<Taxon>> subsets_at_least(const std::vector<Taxon>& leaves, int min_size);

} // namespace qarrow
