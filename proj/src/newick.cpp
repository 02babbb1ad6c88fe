#include "qarrow/newick.hpp"

#include <algorithm>
#include <cctype>

#include "qarrow/errors.hpp"

namespace qarrow {

namespace {

class Parser {
public:
    Parser(const std::string& text) : s_(text) {}

    RawTree run() {
        int root = parse_node();
        skip_ws();
        if (!eat(';')) fail(Errc::ParseError, "expected ';' at position " + std::to_string(pos_));
        skip_ws();
        if (pos_ != s_.size()) fail(Errc::ParseError, "trailing characters after ';'");
        // A two-child root is an artifact of rooted notation; merge its children
        // and drop the root vertex.
        auto& root_children = children_[static_cast<size_t>(root)];
        if (root_children.size() == 2) {
            int a = root_children[0], b = root_children[1];
            raw_.edges.erase(std::remove_if(raw_.edges.begin(), raw_.edges.end(),
                                            [&](const std::pair<int, int>& e) {
                                                return e.first == root;
                                            }),
                             raw_.edges.end());
            raw_.edges.emplace_back(a, b);
            auto shift = [&](int v) { return v > root ? v - 1 : v; };
            for (auto& e : raw_.edges) e = {shift(e.first), shift(e.second)};
            std::map<int, std::string> labels;
            for (const auto& [v, name] : raw_.leaf_labels) labels[shift(v)] = name;
            raw_.leaf_labels = std::move(labels);
            raw_.num_vertices--;
        }
        return raw_;
    }

private:
    int new_vertex() {
        raw_.num_vertices++;
        children_.emplace_back();
        return raw_.num_vertices - 1;
    }

    int parse_node() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            int v = new_vertex();
            while (true) {
                int child = parse_node();
                raw_.edges.emplace_back(v, child);
                children_[static_cast<size_t>(v)].push_back(child);
                skip_ws();
                if (eat(',')) continue;
                if (eat(')')) break;
                fail(Errc::ParseError, "expected ',' or ')' at position " + std::to_string(pos_));
            }
            if (children_[static_cast<size_t>(v)].size() < 2)
                fail(Errc::ParseError, "internal node with fewer than 2 children");
            skip_ws();
            if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == ':'))
                fail(Errc::ParseError, "internal labels and branch lengths are not supported");
            return v;
        }
        std::string name = parse_name();
        int v = new_vertex();
        raw_.leaf_labels[v] = name;
        return v;
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(Errc::ParseError, "expected taxon name at position " + std::to_string(pos_));
        return s_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    RawTree raw_;
    std::vector<std::vector<int>> children_;
};

void write_subtree(const Phylogeny& tree, const LeafSet& leaves, int v, int parent,
                   std::string& out) {
    if (tree.is_leaf(v)) {
        out += leaves.name(v);
        return;
    }
    std::vector<std::pair<std::string, int>> kids;
    for (int u : tree.neighbors(v))
        if (u != parent) kids.emplace_back(subtree_encoding(tree, u, v), u);
    std::sort(kids.begin(), kids.end());
    out += '(';
    for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ',';
        write_subtree(tree, leaves, kids[i].second, v, out);
    }
    out += ')';
}

} // namespace

Phylogeny parse_newick(const std::string& text, const LeafSet& leaves) {
    RawTree raw = Parser(text).run();
    return validate(raw, leaves);
}

std::string write_newick(const Phylogeny& tree, const LeafSet& leaves) {
    std::string out;
    write_subtree(tree, leaves, canonical_root(tree), -1, out);
    out += ';';
    return out;
}

std::vector<std::string> newick_leaf_names(const std::string& text) {
    std::vector<std::string> names;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isalnum(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            names.push_back(text.substr(start, i - start));
        } else {
            ++i;
        }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

} // namespace qarrow
