#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qarrow/enumerate.hpp"
#include "qarrow/quartet.hpp"

namespace qarrow {

struct RealizationResult {
    QuartetConstraintSet constraints;
    std::vector<size_t> witness_ids; // into the universe, code order
    bool exhaustive = true;

    bool realizable() const { return !witness_ids.empty(); }
    size_t witness_count() const { return witness_ids.size(); }
    // Canonical-code-minimal witness (first in code order).
    std::optional<size_t> minimal_witness() const;
};

// All enumerated trees whose quartet system extends the constraints.
RealizationResult trees_realizing(const QuartetConstraintSet& constraints,
                                  const TreeUniverse& universe);

// Topologies on X exhibited by at least one realizing tree.
std::set<Topology> implied_restriction(const QuartetConstraintSet& constraints, FourSet X,
                                       const TreeUniverse& universe);

// One branch of a profile construction: coordinates whose tree shows `trigger`
// on X get a tree realizing `constraints`.
struct RecipeBranch {
    Topology trigger = Topology::Unresolved;
    QuartetConstraintSet constraints;
};

// A profile construction: group constraints for coalition coordinates, case
// branches keyed by the observed topology on X for the rest. Recipes are data;
// the built-in ones and hand-edited variants go through the same machinery.
struct ProfileRecipe {
    std::string name;
    FourSet X{};            // the 4-subset the construction manipulates
    Taxon extra = -1;       // the taxon outside X used by the construction
    Topology target = Topology::Unresolved; // group topology on X
    QuartetConstraintSet group;
    std::vector<RecipeBranch> cases;

    const RecipeBranch* branch_for(Topology trigger) const;

    // Sections "[group]" and "[case <quartet>]", one constraint quartet per line.
    static ProfileRecipe parse(const std::string& text, const LeafSet& leaves,
                               const std::string& name);
    std::string to_text(const LeafSet& leaves) const;
};

class Profile; // consensus.hpp

// Builds P' from P: coalition coordinates get the canonical-code-minimal witness
// of the group constraints, the rest the witness of their trigger's branch.
// Guarantees P|_X = P'|_X on success.
// Errors: TriggerMismatch (a coordinate's topology on X fits no branch, or a
// coalition coordinate lacks the target topology), UnrealizableBranch (a needed
// branch has no witness).
Profile build_profile_prime(const Profile& P, const std::vector<int>& coalition, FourSet X,
                            Taxon extra, const ProfileRecipe& recipe,
                            const TreeUniverse& universe);

} // namespace qarrow
