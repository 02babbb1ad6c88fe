#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qarrow/decisive.hpp"
#include "qarrow/realize.hpp"

namespace qarrow {

// The built-in invariance constructions. A is the almost-decisive base step
// (taxa a,b,c,d,v); B, C, D lift level A to the matching level (taxa v,w,x,y,z);
// FlawedOriginal is the historical one-construction-fits-all variant whose case
// coverage fails.
enum class RecipeId { A, B, C, D, FlawedOriginal };
const char* recipe_id_name(RecipeId id);
std::optional<RecipeId> parse_recipe_id(const std::string& s);

// Taxa the recipe is written over.
LeafSet recipe_leaves(RecipeId id);
// Decisiveness level whose outside-coalition hypotheses the recipe must cover.
Level recipe_level(RecipeId id);
ProfileRecipe builtin_recipe(RecipeId id);

struct BranchReport {
    std::string label; // "group" or "case <quartet>"
    std::optional<Topology> trigger;
    std::vector<std::string> constraints; // quartet strings
    bool realizable = false;
    size_t witness_count = 0;
    std::string witness_newick; // canonical-minimal witness, empty when none
    bool forces_trigger = true; // implied_restriction on X is exactly the trigger
};

struct StepAudit {
    std::string context;   // which side of the construction uses it
    std::string premise1, premise2, conclusion;
    bool dyadic_pattern = false; // matched by dyadic_step
    bool sound = true;           // every enumerated tree with both premises has the conclusion
    std::string counterexample_newick;
};

struct RestrictionCheck {
    std::uint64_t profiles_checked = 0;
    std::uint64_t equal = 0;
    std::uint64_t trigger_mismatches = 0;    // admissible profiles refused by the recipe
    std::uint64_t unrealizable_hits = 0;     // admissible profiles hitting a witness-less branch
    bool all_equal() const { return equal == profiles_checked; }
};

struct LemmaReport {
    std::string id;
    Level level = Level::A;
    std::vector<BranchReport> branches;
    std::vector<Topology> admitted;   // outside-coalition topologies admitted by the level
    std::vector<Topology> covered;    // admitted topologies with a realizable branch
    std::vector<Topology> uncovered;  // admitted \ covered
    std::vector<StepAudit> steps;
    RestrictionCheck restriction;
    bool valid = false;
    std::string note;
};

std::string topology_on_string(FourSet X, Topology top, const LeafSet& leaves);

// Verifies the almost-decisive invariance construction: both constraint sets
// realizable, the unanimous quartet shared by the two sides, the substitution
// inference sound on every 5-leaf tree, and P|_X = P'|_X over all admissible
// 2-coordinate profiles. `target` defaults to the one-step target xv|yz written
// over a,b,c,d with extra v (i.e. bv|cd); any one-step variant is accepted.
LemmaReport verify_lemma1_construction(const std::optional<Quartet>& target,
                                       const TreeUniverse& universe);

// Verifies a lifting construction (B, C, D or the flawed original) against its
// claimed level: per-branch realizability, trigger coverage of the level's
// hypotheses, restriction preservation on exhaustively generated admissible
// profiles at k=2, and the quoted inference steps on every enumerated tree.
LemmaReport verify_recipe(RecipeId id, const TreeUniverse& universe);
LemmaReport verify_recipe(const ProfileRecipe& recipe, Level level, const TreeUniverse& universe,
                          const std::vector<StepAudit>& extra_steps = {});

// One-step reachability of the almost-decisive spreading argument: from source
// ab|cd, the targets obtainable by one application, plus the closure distances
// showing every resolved quartet is eventually reached.
struct SpreadReport {
    Quartet source;
    std::vector<Quartet> one_step_targets;
    std::vector<std::pair<Quartet, int>> distances; // all 15 resolved quartets
    bool all_reachable = false;
    int max_distance = 0;
};
SpreadReport lemma1_spread(const TreeUniverse& universe);

// The mechanical certificate that the flawed construction cannot meet its
// requirement: both blocking constraint sets have zero witnesses, and the
// implied restriction of the unresolved pair excludes the two alternatives.
struct FlawCertificate {
    std::string constraint_set_1, constraint_set_2; // as text
    size_t witnesses_1 = 0, witnesses_2 = 0;
    std::vector<Topology> implied_on_X;     // from {vwxy, vwxz} alone
    std::vector<Topology> excluded;         // wy|xz, wz|xy
    bool confirmed = false;
};
FlawCertificate reproduce_flaw(const TreeUniverse& universe);

} // namespace qarrow
