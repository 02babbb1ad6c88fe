#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qarrow/consensus.hpp"
#include "qarrow/quartet.hpp"

namespace qarrow {

// The four decisiveness levels, ordered by how much the profiles outside the
// coalition may do on X: A fixes them unresolved, B also allows the coalition's
// resolution, C additionally allows one named alternative, D allows anything.
enum class Level { A, B, C, D };
const char* level_name(Level l);
Level parse_level(const std::string& s);

// The alternative resolution named by the level-C definition for a target
// pairing: the one obtained by swapping the partners of the target's two sides
// (for target ab|cd this is ac|bd).
Topology default_c_alternative(FourSet X, Topology target);

struct DecisivenessQuery {
    std::vector<int> coalition; // 1-based coordinates, sorted; may be empty (degenerate)
    Quartet quartet;            // must be resolved
    Level level = Level::A;
    std::optional<Topology> c_alternative; // level C only; default per definition
};

struct DecisivenessWitness {
    std::vector<size_t> profile; // tree ids
    Topology output_topology = Topology::Unresolved;
};

struct DecisivenessReport {
    DecisivenessQuery query;
    std::string rule;
    bool holds = true;
    std::uint64_t checked_profiles = 0;
    bool degenerate = false; // empty coalition
    std::optional<DecisivenessWitness> witness;
};

// Scans every profile meeting the level's hypothesis and requires the quartet in
// the output. Errors: UnresolvedQuartetQuery, SpaceTooLarge.
DecisivenessReport check_decisiveness(const ConsensusRule& rule, const DecisivenessQuery& query,
                                      const ProfileSpace& space, ScanOptions opts = {});

bool replay_decisiveness(const ConsensusRule& rule, const DecisivenessQuery& query,
                         const ProfileSpace& space, const DecisivenessReport& report);

// Coalitions decisive at `level` for every resolved quartet (the families U-hat
// and U when level is A and D).
std::vector<std::vector<int>> decisive_family(const ConsensusRule& rule, const ProfileSpace& space,
                                              Level level, ScanOptions opts = {});

struct ChainQuartetRow {
    Quartet quartet;
    bool a = false, b = false, c_primary = false, c_other = false, d = false;
    bool monotone = true; // D => C => B => A on this row
};

struct ChainReport {
    std::string rule;
    std::vector<int> coalition;
    bool hypotheses_met = false; // rule passes Ind and PO on the space
    std::vector<ChainQuartetRow> rows; // all 15 resolved quartets
    bool some_a = false;   // exists quartet with A
    bool all_a = false, all_b = false, all_c = false, all_d = false;
    bool invariance_a_ok = true;  // some A => all A
    bool transfer_ok = true;      // all A => all B, all C, all D
    bool monotone_ok = true;      // per-row nesting
    bool contradiction = false;   // any of the three checks failed with hypotheses met
};

// Empirical decisiveness-transfer check for one rule and coalition: invariance
// at level A, the A=>B=>C=>D transfers, and per-query hypothesis nesting.
ChainReport verify_chain(const ConsensusRule& rule, const std::vector<int>& coalition,
                         const ProfileSpace& space, ScanOptions opts = {});

} // namespace qarrow
