#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qarrow/enumerate.hpp"
#include "qarrow/phylogeny.hpp"
#include "qarrow/quartet.hpp"

namespace qarrow {

// Ordered k-tuple of phylogenies over a common leaf set. k >= 1.
class Profile {
public:
    Profile(LeafSet leaves, std::vector<Phylogeny> trees);

    int k() const { return static_cast<int>(trees_.size()); }
    const LeafSet& leaves() const { return leaves_; }
    const Phylogeny& tree(int i) const { return trees_[static_cast<size_t>(i)]; } // 0-based
    const std::vector<Phylogeny>& trees() const { return trees_; }

    bool operator==(const Profile& o) const;

private:
    LeafSet leaves_;
    std::vector<Phylogeny> trees_;
};

// Coordinate-wise restriction P|_X.
std::vector<QuartetSystem> restrict_profile(const Profile& P, const std::vector<Taxon>& X);

// Total mapping from profiles (of a fixed k over a fixed leaf set) to a phylogeny.
struct ConsensusRule {
    std::string name;
    int k = 0;
    std::function<Phylogeny(const Profile&)> map;

    Phylogeny operator()(const Profile& P) const { return map(P); }
};

// P -> T_j (j is 1-based). IndexOutOfRange unless 1 <= j <= k.
ConsensusRule dictator_rule(int j, int k);

// Per 4-subset, the resolved topology held by strictly more than k/2 coordinates
// forms the majority set. Majority quartets are inserted in lexicographic order,
// kept while the accumulated set stays realizable by a tree contradicting no
// majority quartet; the output is the witness with the fewest resolved quartets,
// canonical-code-minimal on ties.
ConsensusRule majority_quartet_rule(std::shared_ptr<const TreeUniverse> universe, int k);

// P -> fixed tree.
ConsensusRule constant_rule(const Phylogeny& output, const LeafSet& leaves, int k);

// "dictator:<j>", "majority", "constant:star". InvalidArgument otherwise.
ConsensusRule rule_by_name(const std::string& name, std::shared_ptr<const TreeUniverse> universe,
                           int k);

// The k-fold product of the enumerated tree list; profile ids are k-digit
// base-T numbers, coordinate 1 most significant.
class ProfileSpace {
public:
    ProfileSpace(std::shared_ptr<const TreeUniverse> universe, int k);

    const TreeUniverse& universe() const { return *universe_; }
    std::shared_ptr<const TreeUniverse> universe_ptr() const { return universe_; }
    int k() const { return k_; }
    std::uint64_t size() const { return size_; }

    std::vector<size_t> tree_ids(std::uint64_t profile_id) const;
    Profile profile(std::uint64_t profile_id) const;
    std::uint64_t id_of(const std::vector<size_t>& tree_ids) const;

private:
    std::shared_ptr<const TreeUniverse> universe_;
    int k_;
    std::uint64_t size_;
};

// Output tree id per profile, in profile-id order. Chunked across threads;
// the result is position-indexed, so scheduling cannot change it.
std::vector<size_t> evaluate_rule(const ConsensusRule& rule, const ProfileSpace& space);

enum class Axiom { Dct, Ind, PO };
const char* axiom_name(Axiom a);

struct AxiomWitness {
    std::vector<size_t> profile_a;          // tree ids per coordinate
    std::optional<std::vector<size_t>> profile_b; // Ind only
    std::vector<Taxon> subset;              // the X at fault (PO/Dct: the 4-subset)
    Quartet quartet;                        // PO/Dct: the unanimous/dictator quartet missing
    std::string detail;
};

struct AxiomReport {
    Axiom axiom = Axiom::PO;
    std::string rule;
    bool holds = true;
    std::uint64_t checked_profiles = 0;
    bool sampled = false;
    std::optional<AxiomWitness> witness;
    std::optional<int> dictator; // 1-based, Dct only
    // Dct: first counterexample per candidate coordinate when Dct fails.
    std::vector<AxiomWitness> per_candidate;
};

// Exhaustive scans over the profile space (first witness in scan order; scan
// order is fixed, so reports are deterministic). SpaceTooLarge beyond the cap.
inline constexpr std::uint64_t kDefaultExhaustiveCap = 1u << 21;

struct ScanOptions {
    std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
    std::optional<std::uint64_t> sample_seed; // enables sampling when over cap
    std::uint64_t sample_count = 20000;
};

AxiomReport check_PO(const ConsensusRule& rule, const ProfileSpace& space, ScanOptions opts = {});
AxiomReport check_Ind(const ConsensusRule& rule, const ProfileSpace& space, ScanOptions opts = {});
AxiomReport check_Dct(const ConsensusRule& rule, const ProfileSpace& space, ScanOptions opts = {});

// Re-evaluates a witness through the axiom's definition; true iff the reported
// violation reproduces.
bool replay_witness(const ConsensusRule& rule, const ProfileSpace& space, const AxiomReport& report);

} // namespace qarrow
