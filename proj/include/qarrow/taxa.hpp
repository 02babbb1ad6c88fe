#pragma once

#include <string>
#include <vector>

namespace qarrow {

// Taxon = index into a LeafSet. All quartet and tree structures store indices;
// names only matter at the text boundary (Newick, quartet strings, reports).
using Taxon = int;

class LeafSet {
public:
    LeafSet() = default;
    explicit LeafSet(std::vector<std::string> names); // validates: nonempty, alnum, distinct

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Taxon t) const { return names_.at(static_cast<size_t>(t)); }
    const std::vector<std::string>& names() const { return names_; }

    // -1 if absent
    Taxon index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) >= 0; }

    bool operator==(const LeafSet& other) const { return names_ == other.names_; }

    // a,b,c,... for n <= 7
    static LeafSet default_taxa(int n);
    // v,w,x,y,z — the conventional taxa for the decisiveness harness
    static LeafSet harness_taxa();
    // a,b,c,d,v — the conventional taxa for the almost-decisive construction
    static LeafSet almost_decisive_taxa();

private:
    std::vector<std::string> names_;
};

} // namespace qarrow
