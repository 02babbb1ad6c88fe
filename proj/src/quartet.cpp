#include "qarrow/quartet.hpp"

#include <algorithm>
#include <sstream>

#include "qarrow/errors.hpp"

namespace qarrow {

namespace {

// Lexicographic 4-combinations of {0..n-1}.
std::vector<std::array<int, 4>> four_combinations(int n) {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a + 3 < n; ++a)
        for (int b = a + 1; b +
2 < n; ++b)
            for (int c = b + 1; c + 1 < n; ++c)
                for (int d = c + 1; d < n; ++d) out.push_back({a, b, c, d});
    return out;
}

} // namespace

FourSet FourSet::of(Taxon a, Taxon b, Taxon c, Taxon d) {
    FourSet s{{a, b, c, d}};
    std::sort(s.t.begin(), s.t.end());
    if (s.t[0] == s.t[1] || s.t[1] == s.t[2] || s.t[2] == s.t[3])
        fail(Errc::InvalidArgument, "quartet taxa must be distinct");
    return s;
}

std::array<std::array<Taxon, 2>, 2> Quartet::sides() const {
    if (!is_resolved(top)) fail(Errc::InvalidArgument, "unresolved quartet has no sides");
    const auto& s = taxa.t;
    switch (top) {
        case Topology::R12_34: return {{{s[0], s[1]}, {s[2], s[3]}}};
        case Topology::R13_24: return {{{s[0], s[2]}, {s[1], s[3]}}};
        default: return {{{s[0], s[3]}, {s[1], s[2]}}};
    }
}

Quartet Quartet::resolved(std::array<Taxon, 2> side1, std::array<Taxon, 2> side2) {
    FourSet s = FourSet::of(side1[0], side1[1], side2[0], side2[1]);
    // Kind from the partner of the minimum element.
    Taxon partner = -1;
    for (auto& side : {side1, side2}) {
        if (side[0] == s.t[0]) partner = side[1];
        if (side[1] == s.t[0]) partner = side[0];
    }
    Topology top = partner == s.t[1]   ? Topology::R12_34
                   : partner == s.t[2] ? Topology::R13_24
                                       : Topology::R14_23;
    return Quartet{s, top};
}

std::string quartet_to_string(const Quartet& q, const LeafSet& leaves) {
    bool single = true;
    for (Taxon t : q.taxa.t) single = single && leaves.name(t).size() == 1;
    auto join = [&](std::initializer_list<Taxon> ts) {
        std::string out;
        for (Taxon t : ts) {
            if (!out.empty() && !single) out += ',';
            out += leaves.name(t);
        }
        return out;
    };
    if (!is_resolved(q.top)) {
        return join({q.taxa.t[0], q.taxa.t[1], q.taxa.t[2], q.taxa.t[3]});
    }
    auto sides = q.sides();
    return join({sides[0][0], sides[0][1]}) + "|" + join({sides[1][0], sides[1][1]});
}

namespace {

std::vector<Taxon> parse_taxon_list(const std::string& part, const LeafSet& leaves) {
    std::vector<Taxon> out;
    if (part.find(',') != std::string::npos) {
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            Taxon t = leaves.index_of(tok);
            if (t < 0) fail(Errc::UnknownTaxon, "'" + tok + "' in quartet");
            out.push_back(t);
        }
    } else {
        for (char c : part) {
            Taxon t = leaves.index_of(std::string(1, c));
            if (t < 0) fail(Errc::UnknownTaxon, std::string("'") + c + "' in quartet");
            out.push_back(t);
        }
    }
    return out;
}

} // namespace

Quartet parse_quartet(const std::string& text, const LeafSet& leaves) {
    size_t bar = text.find('|');
    if (bar == std::string::npos) {
        auto ts = parse_taxon_list(text, leaves);
        if (ts.size() != 4) fail(Errc::ParseError, "unresolved quartet needs 4 taxa: " + text);
        return Quartet::unresolved(FourSet::of(ts[0], ts[1], ts[2], ts[3]));
    }
    auto left = parse_taxon_list(text.substr(0, bar), leaves);
    auto right = parse_taxon_list(text.substr(bar + 1), leaves);
    if (left.size() != 2 || right.size() != 2)
        fail(Errc::ParseError, "resolved quartet needs 2+2 taxa: " + text);
    return Quartet::resolved({left[0], left[1]}, {right[0], right[1]});
}

Topology topology_of(const Phylogeny& tree, FourSet fourset) {
    for (Taxon t : fourset.t)
        if (t < 0 || t >= tree.leaf_count()) fail(Errc::UnknownTaxon, "taxon index out of range");
    const auto& s = fourset.t;
    const std::uint64_t p01 = tree.path_vertices(s[0], s[1]);
    const std::uint64_t p23 = tree.path_vertices(s[2], s[3]);
    const std::uint64_t p02 = tree.path_vertices(s[0], s[2]);
    const std::uint64_t p13 = tree.path_vertices(s[1], s[3]);
    const std::uint64_t p03 = tree.path_vertices(s[0], s[3]);
    const std::uint64_t p12 = tree.path_vertices(s[1], s[2]);
    const bool d1 = (p01 & p23) == 0;
    const bool d2 = (p02 & p13) == 0;
    const bool d3 = (p03 & p12) == 0;
    const int disjoint = int(d1) + int(d2) + int(d3);
    if (disjoint > 1) throw std::logic_error("two vertex-disjoint pairings in one tree");
    if (d1) return Topology::R12_34;
    if (d2) return Topology::R13_24;
    if (d3) return Topology::R14_23;
    return Topology::Unresolved;
}

QuartetSystem::QuartetSystem(std::vector<Taxon> leaves_sorted, std::vector<Topology> entries)
    : leaves_(std::move(leaves_sorted)), entries_(std::move(entries)) {
    size_t n = leaves_.size();
    size_t expect = n * (n - 1) * (n - 2) * (n - 3) / 24;
    if (entries_.size() != expect) fail(Errc::InvalidArgument, "quartet system entry count");
}

FourSet QuartetSystem::fourset(size_t rank) const {
    auto combos = four_combinations(leaf_count());
    const auto& c = combos.at(rank);
    return FourSet{{leaves_[static_cast<size_t>(c[0])], leaves_[static_cast<size_t>(c[1])],
                    leaves_[static_cast<size_t>(c[2])], leaves_[static_cast<size_t>(c[3])]}};
}

Quartet QuartetSystem::quartet(size_t rank) const { return Quartet{fourset(rank), entries_[rank]}; }

Topology QuartetSystem::topology(FourSet s) const {
    // Local indices of the four taxa within leaves_.
    std::array<int, 4> idx{};
    for (int i = 0; i < 4; ++i) {
        auto it = std::lower_bound(leaves_.begin(), leaves_.end(), s.t[static_cast<size_t>(i)]);
        if (it == leaves_.end() || *it != s.t[static_cast<size_t>(i)])
            fail(Errc::UnknownTaxon, "taxon not in this system's leaf subset");
        idx[static_cast<size_t>(i)] = static_cast<int>(it - leaves_.begin());
    }
    // Lexicographic rank of the 4-combination.
    const int n = leaf_count();
    auto choose4 = [](int m) { return m < 4 ? 0 : m * (m - 1) * (m - 2) * (m - 3) / 24; };
    auto choose3 = [](int m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; };
    auto choose2 = [](int m) { return m < 2 ? 0 : m * (m - 1) / 2; };
    size_t rank = 0;
    rank += static_cast<size_t>(choose4(n) - choose4(n - idx[0]));
    rank += static_cast<size_t>(choose3(n - 1 - idx[0]) - choose3(n - idx[1]));
    rank += static_cast<size_t>(choose2(n - 1 - idx[1]) - choose2(n - idx[2]));
    rank += static_cast<size_t>(idx[3] - idx[2] - 1);
    return entries_.at(rank);
}

std::vector<Quartet> QuartetSystem::resolved_quartets() const {
    std::vector<Quartet> out;
    for (size_t r = 0; r < entries_.size(); ++r)
        if (is_resolved(entries_[r])) out.push_back(quartet(r));
    return out;
}

size_t QuartetSystem::resolved_count() const {
    return static_cast<size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](Topology t) { return is_resolved(t); }));
}

QuartetSystem QuartetSystem::restrict(const std::vector<Taxon>& X) const {
    if (X.size() < 4) fail(Errc::SubsetTooSmall, "restriction needs at least 4 taxa");
    std::vector<Taxon> xs = X;
    std::sort(xs.begin(), xs.end());
    std::vector<Topology> entries;
    for (const auto& c : four_combinations(static_cast<int>(xs.size()))) {
        FourSet s{{xs[static_cast<size_t>(c[0])], xs[static_cast<size_t>(c[1])],
                   xs[static_cast<size_t>(c[2])], xs[static_cast<size_t>(c[3])]}};
        entries.push_back(topology(s));
    }
    return QuartetSystem(std::move(xs), std::move(entries));
}

QuartetSystem quartet_system(const Phylogeny& tree) {
    const int n = tree.leaf_count();
    std::vector<Taxon> leaves(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) leaves[static_cast<size_t>(i)] = i;
    std::vector<Topology> entries;
    for (const auto& c : four_combinations(n))
        entries.push_back(topology_of(tree, FourSet{{c[0], c[1], c[2], c[3]}}));
    return QuartetSystem(std::move(leaves), std::move(entries));
}

QuartetSystem restrict_tree(const Phylogeny& tree, const std::vector<Taxon>& X) {
    if (X.size() < 4) fail(Errc::SubsetTooSmall, "restriction needs at least 4 taxa");
    return quartet_system(tree).restrict(X);
}

void QuartetConstraintSet::add(const Quartet& q) {
    for (Taxon t : q.taxa.t)
        if (std::find(leaves_.begin(), leaves_.end(), t) == leaves_.end())
            fail(Errc::UnknownTaxon, "constraint taxon outside the leaf subset");
    auto it = std::lower_bound(constraints_.begin(), constraints_.end(), q,
                               [](const Quartet& a, const Quartet& b) { return a.taxa < b.taxa; });
    if (it != constraints_.end() && it->taxa == q.taxa) {
        if (it->top != q.top)
            fail(Errc::InvalidArgument, "conflicting constraints on one 4-subset");
        return;
    }
    constraints_.insert(it, q);
}

std::optional<Topology> QuartetConstraintSet::topology_on(FourSet s) const {
    for (const auto& q : constraints_)
        if (q.taxa == s) return q.top;
    return std::nullopt;
}

QuartetConstraintSet QuartetConstraintSet::parse(const std::string& text, const LeafSet& leaves) {
    std::vector<Taxon> all(static_cast<size_t>(leaves.size()));
    for (int i = 0; i < leaves.size(); ++i) all[static_cast<size_t>(i)] = i;
    QuartetConstraintSet out(all);
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        out.add(parse_quartet(line.substr(b, e - b + 1), leaves));
    }
    return out;
}

std::string QuartetConstraintSet::to_text(const LeafSet& leaves) const {
    std::string out;
    for (const auto& q : constraints_) {
        out += quartet_to_string(q, leaves);
        out += '\n';
    }
    return out;
}

std::optional<Quartet> dyadic_step(const Quartet& p1, const Quartet& p2) {
    if (!is_resolved(p1.top) || !is_resolved(p2.top)) return std::nullopt;
    // Exactly 3 shared taxa.
    std::vector<Taxon> shared;
    for (Taxon t : p1.taxa.t)
        if (std::find(p2.taxa.t.begin(), p2.taxa.t.end(), t) != p2.taxa.t.end())
            shared.push_back(t);
    if (shared.size() != 3) return std::nullopt;
    auto s1 = p1.sides(), s2 = p2.sides();
    auto same_pair = [](const std::array<Taxon, 2>& a, const std::array<Taxon, 2>& b) {
        return (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
    };
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (!same_pair(s1[static_cast<size_t>(i)], s2[static_cast<size_t>(j)])) continue;
            const auto& o1 = s1[static_cast<size_t>(1 - i)];
            const auto& o2 = s2[static_cast<size_t>(1 - j)];
            // With 3 shared taxa the other sides overlap in exactly one taxon;
            // the conclusion pairs the two non-shared ones against the shared side.
            std::array<Taxon, 2> conclusion_side{-1, -1};
            int pos = 0;
            for (Taxon t : {o1[0], o1[1]}) {
                if (t != o2[0] && t != o2[1]) conclusion_side[static_cast<size_t>(pos++)] = t;
            }
            for (Taxon t : {o2[0], o2[1]}) {
                if (t != o1[0] && t != o1[1]) conclusion_side[static_cast<size_t>(pos++)] = t;
            }
            if (pos != 2) return std::nullopt;
            return Quartet::resolved(conclusion_side, s1[static_cast<size_t>(i)]);
        }
    }
    return std::nullopt;
}

std::vector<FourSet> all_foursets(const std::vector<Taxon>& leaves) {
    std::vector<Taxon> xs = leaves;
    std::sort(xs.begin(), xs.end());
    std::vector<FourSet> out;
    for (const auto& c : four_combinations(static_cast<int>(xs.size())))
        out.push_back(FourSet{{xs[static_cast<size_t>(c[0])], xs[static_cast<size_t>(c[1])],
                               xs[static_cast<size_t>(c[2])], xs[static_cast<size_t>(c[3])]}});
    return out;
}

std::vector<std::vector<Taxon>> subsets_at_least(const std::vector<Taxon>& leaves, int min_size) {
    std::vector<Taxon> xs = leaves;
    std::sort(xs.begin(), xs.end());
    const int n = static_cast<int>(xs.size());
    std::vector<std::vector<Taxon>> out;
    for (int size = min_size; size <= n; ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<Taxon> subset;
            subset.reserve(static_cast<size_t>(size));
            for (int i : idx) subset.push_back(xs[static_cast<size_t>(i)]);
            out.push_back(std::move(subset));
            int i = size - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

} // namespace qarrow
