#include "qarrow/taxa.hpp"

#include <algorithm>
#include <cctype>

#include "qarrow/errors.hpp"

namespace qarrow {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isalnum(c) != 0; });
}

} // namespace

LeafSet::LeafSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& name : names_) {
        if (!valid_name(name))
            fail(Errc::InvalidArgument, "taxon name must be nonempty alphanumeric: '" + name + "'");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::InvalidArgument, "duplicate taxon name");
}

Taxon LeafSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Taxon>(i);
    return -1;
}

LeafSet LeafSet::default_taxa(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i < 26) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        } else {
            names.push_back("t" + std::to_string(i));
        }
    }
    return LeafSet(std::move(names));
}

LeafSet LeafSet::harness_taxa() { return LeafSet({"v", "w", "x", "y", "z"}); }

LeafSet LeafSet::almost_decisive_taxa() { return LeafSet({"a", "b", "c", "d", "v"}); }

} // namespace qarrow
