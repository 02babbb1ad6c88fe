#pragma once

#include <string>
#include <vector>

#include "qarrow/phylogeny.hpp"
#include "qarrow/taxa.hpp"

namespace qarrow {

// Newick, unrooted semantics: multifurcating, no branch lengths, terminating
// semicolon. The string's root is read as an internal vertex; a degree-2
// artificial root is suppressed.
Phylogeny parse_newick(const std::string& text, const LeafSet& leaves);

// Deterministic writer: rooted at the canonical-code rooting, children ordered
// by their canonical sub-encoding. parse(write(T)) == T under canonical code.
std::string write_newick(const Phylogeny& tree, const LeafSet& leaves);

// Leaf names appearing in a Newick string, sorted and deduplicated.
std::vector<std::string> newick_leaf_names(const std::string& text);

} // namespace qarrow
