#include "orbitcalc/poset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orbitcalc/pl.hpp"

namespace orbitcalc {

namespace {

using Row = std::vector<std::uint64_t>;

bool get_bit(const Row& row, int i) {
    return (row[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
}

void set_bit(Row& row, int i) {
    row[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

LabeledPoset::LabeledPoset(std::string name, std::vector<PosetNode> nodes,
                           std::vector<std::pair<int, int>> covers,
                           std::vector<std::string> warnings)
    : name_(std::move(name)), nodes_(std::move(nodes)), warnings_(std::move(warnings)) {
    const int n = node_count();
    for (size_t i = 0; i < nodes_.size(); ++i)
        for (size_t j = i + 1; j < nodes_.size(); ++j)
            if (nodes_[i].name == nodes_[j].name)
                throw ParseError("duplicate orbit \"" + nodes_[i].name + "\"");
    std::vector<std::vector<int>> up(n);
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw UnknownNode("cover endpoint out of range");
        if (lo == hi)
            throw CycleDetected("self-cover on \"" + nodes_[lo].name + "\"");
        up[lo].push_back(hi);
    }

    // Kahn toposort; leftovers mean a cycle.
    std::vector<int> indeg(n, 0), order;
    for (int lo = 0; lo < n; ++lo)
        for (int hi : up[lo]) ++indeg[hi];
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) order.push_back(i);
    for (size_t head = 0; head < order.size(); ++head)
        for (int hi : up[order[head]])
            if (--indeg[hi] == 0) order.push_back(hi);
    if (static_cast<int>(order.size()) != n)
        throw CycleDetected("cover relation of \"" + name_ + "\" contains a cycle");

    // reach_[v] = down-set of v, accumulated in topological order.
    const size_t words = (static_cast<size_t>(n) + 63) / 64;
    reach_.assign(n, Row(words));
    for (int v : order) {
        set_bit(reach_[v], v);
        for (int hi : up[v])
            for (size_t w = 0; w < words; ++w) reach_[hi][w] |= reach_[v][w];
    }

    // Transitive reduction: keep a cover only if no third node sits
    // strictly between its endpoints.
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    for (auto [lo, hi] : covers) {
        bool redundant = false;
        for (int mid = 0; mid < n && !redundant; ++mid)
            if (mid != lo && mid != hi && get_bit(reach_[mid], lo) &&
                get_bit(reach_[hi], mid))
                redundant = true;
        if (!redundant) covers_.emplace_back(lo, hi);
    }
}

std::optional<int> LabeledPoset::index_of(std::string_view node_name) const {
    for (int i = 0; i < node_count(); ++i)
        if (nodes_[static_cast<size_t>(i)].name == node_name) return i;
    return std::nullopt;
}

bool LabeledPoset::leq(int lower, int upper) const {
    if (lower < 0 || lower >= node_count() || upper < 0 || upper >= node_count())
        throw UnknownNode("node index out of range");
    return get_bit(reach_[static_cast<size_t>(upper)], lower);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_flag(const std::string& token, const std::string& key, bool& out,
                int line_no) {
    if (token.rfind(key + "=", 0) != 0) return false;
    const std::string value = token.substr(key.size() + 1);
    if (value != "0" && value != "1")
        throw ParseError(key + " must be 0 or 1, got \"" + value + "\"", line_no);
    out = value == "1";
    return true;
}

}  // namespace

LabeledPoset load_poset(std::istream& in) {
    std::string group_name;
    bool have_group = false;
    std::vector<PosetNode> nodes;
    std::vector<std::tuple<int, std::string, std::string>> raw_covers;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "group") {
            if (tokens.size() != 2) throw ParseError("expected: group <name>", line_no);
            if (have_group) throw ParseError("duplicate group line", line_no);
            group_name = tokens[1];
            have_group = true;
        } else if (tokens[0] == "orbit") {
            if (tokens.size() != 4)
                throw ParseError("expected: orbit <name> special=<0|1> pl=<0|1>", line_no);
            PosetNode node;
            node.name = tokens[1];
            bool saw_special = false, saw_pl = false;
            for (size_t t = 2; t < tokens.size(); ++t) {
                if (parse_flag(tokens[t], "special", node.special, line_no))
                    saw_special = true;
                else if (parse_flag(tokens[t], "pl", node.pl, line_no))
                    saw_pl = true;
                else
                    throw ParseError("unknown attribute \"" + tokens[t] + "\"", line_no);
            }
            if (!saw_special || !saw_pl)
                throw ParseError("orbit line needs both special= and pl=", line_no);
            for (const auto& existing : nodes)
                if (existing.name == node.name)
                    throw ParseError("duplicate orbit \"" + node.name + "\"", line_no);
            nodes.push_back(std::move(node));
        } else if (tokens[0] == "cover") {
            if (tokens.size() != 3)
                throw ParseError("expected: cover <lower> <upper>", line_no);
            raw_covers.emplace_back(line_no, tokens[1], tokens[2]);
        } else {
            throw ParseError("unknown directive \"" + tokens[0] + "\"", line_no);
        }
    }
    if (!have_group) throw ParseError("missing group line");

    auto index_of = [&](const std::string& name, int at_line) {
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].name == name) return static_cast<int>(i);
        throw UnknownNode("line " + std::to_string(at_line) +
                          ": undeclared orbit \"" + name + "\"");
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto& [at_line, lo, hi] : raw_covers) {
        auto edge = std::make_pair(index_of(lo, at_line), index_of(hi, at_line));
        if (std::find(covers.begin(), covers.end(), edge) != covers.end())
            throw ParseError("duplicate cover " + lo + " " + hi, at_line);
        covers.push_back(edge);
    }

    std::vector<std::string> warnings;
    if (is_exceptional_group_name(group_name)) {
        // Bala-Carter convention: PL orbits are the ones named after a
        // plain Levi type, i.e. without parentheses.
        for (const auto& node : nodes) {
            const bool plain = node.name.find('(') == std::string::npos;
            if (plain != node.pl)
                warnings.push_back("orbit " + node.name + ": pl=" +
                                   (node.pl ? "1" : "0") +
                                   " disagrees with the no-parenthesis rule");
        }
    }
    return LabeledPoset(group_name, std::move(nodes), std::move(covers),
                        std::move(warnings));
}

LabeledPoset load_poset(const std::string& text) {
    std::istringstream in(text);
    return load_poset(in);
}

LabeledPoset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    return load_poset(in);
}

std::map<std::string, std::vector<std::string>> pl_sets_of(const LabeledPoset& poset) {
    std::map<std::string, std::vector<std::string>> out;
    for (int v = 0; v < poset.node_count(); ++v) {
        std::vector<std::string> members;
        for (int u = 0; u < poset.node_count(); ++u)
            if (poset.node(u).pl && poset.leq(u, v)) members.push_back(poset.node(u).name);
        out[poset.node(v).name] = std::move(members);
    }
    return out;
}

std::vector<RelatedClass> related_classes(const LabeledPoset& poset) {
    // Key each node by its PL down-set; classes keep declaration order.
    std::vector<std::vector<int>> keys(poset.node_count());
    for (int v = 0; v < poset.node_count(); ++v)
        for (int u = 0; u < poset.node_count(); ++u)
            if (poset.node(u).pl && poset.leq(u, v)) keys[v].push_back(u);

    std::vector<RelatedClass> out;
    std::vector<char> used(poset.node_count(), 0);
    for (int v = 0; v < poset.node_count(); ++v) {
        if (used[v]) continue;
        RelatedClass cls{poset.name(), {}};
        for (int w = v; w < poset.node_count(); ++w)
            if (!used[w] && keys[w] == keys[v]) {
                used[w] = 1;
                cls.orbits.emplace_back(poset.node(w).name, poset.node(w).special);
            }
        if (cls.orbits.size() >= 2) out.push_back(std::move(cls));
    }
    return out;
}

void verify_against_embedded(const LabeledPoset& poset,
                             const std::vector<RelatedClass>& computed) {
    if (!is_exceptional_group_name(poset.name())) return;
    auto canonical = [](std::vector<RelatedClass> classes) {
        for (auto& cls : classes) std::sort(cls.orbits.begin(), cls.orbits.end());
        std::sort(classes.begin(), classes.end(),
                  [](const RelatedClass& a, const RelatedClass& b) {
                      return a.orbits < b.orbits;
                  });
        return classes;
    };
    const auto expected = canonical(embedded_related_table(poset.name()));
    const auto actual = canonical(computed);
    if (expected == actual) return;
    auto render = [](const std::vector<RelatedClass>& classes) {
        std::string s;
        for (const auto& cls : classes) {
            s += " {";
            for (size_t i = 0; i < cls.orbits.size(); ++i) {
                if (i) s += ", ";
                s += cls.orbits[i].first;
                if (cls.orbits[i].second) s += "*";
            }
            s += "}";
        }
        return s.empty() ? std::string(" (none)") : s;
    };
    throw DataError("related classes for " + poset.name() +
                    " do not match the reference table; expected" +
                    render(expected) + " but computed" + render(actual));
}

LabeledPoset classical_orbit_poset(const GroupKind& group, int cap) {
    const auto orbits = orbits_of(group, cap);
    std::vector<PosetNode> nodes;
    nodes.reserve(orbits.size());
    for (const auto& orbit : orbits)
        nodes.push_back({to_string(orbit), false, is_pl(group, orbit.partition())});
    std::vector<std::pair<int, int>> covers;
    const int n = static_cast<int>(orbits.size());
    for (int lo = 0; lo < n; ++lo)
        for (int hi = 0; hi < n; ++hi) {
            if (lo == hi) continue;
            if (!closure_leq(orbits[lo], orbits[hi])) continue;
            covers.emplace_back(lo, hi);  // reduced to Hasse edges on load
        }
    return LabeledPoset(to_string(group), std::move(nodes), std::move(covers));
}

std::string to_dot(const LabeledPoset& poset) {
    std::string out = "digraph \"" + poset.name() + "\" {\n  rankdir=BT;\n";
    for (const auto& node : poset.nodes()) {
        out += "  \"" + node.name + "\"";
        if (node.pl) out += " [shape=box]";
        out += ";\n";
    }
    for (auto [lo, hi] : poset.covers())
        out += "  \"" + poset.node(lo).name + "\" -> \"" + poset.node(hi).name +
               "\";\n";
    out += "}\n";
    return out;
}

std::string to_poset_format(const LabeledPoset& poset) {
    std::string out = "group " + poset.name() + "\n";
    for (const auto& node : poset.nodes())
        out += "orbit " + node.name + " special=" + (node.special ? "1" : "0") +
               " pl=" + (node.pl ? "1" : "0") + "\n";
    for (auto [lo, hi] : poset.covers())
        out += "cover " + poset.node(lo).name + " " + poset.node(hi).name + "\n";
    return out;
}

}  // namespace orbitcalc
