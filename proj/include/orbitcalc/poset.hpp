#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitcalc/group.hpp"

namespace orbitcalc {

struct PosetNode {
    std::string name;
    bool special = false;
    bool pl = false;

    bool operator==(const PosetNode&) const = default;
};

/** Finite poset of named orbits with special/PL flags, built from cover
 *  relations. Input covers may contain transitive edges; the transitive
 *  reduction is computed on load and exposed as covers(). Immutable once
 *  built. */
class LabeledPoset {
public:
    /// Validates: unique names, declared endpoints, acyclic covers.
    LabeledPoset(std::string name, std::vector<PosetNode> nodes,
                 std::vector<std::pair<int, int>> covers,
                 std::vector<std::string> warnings = {});

    const std::string& name() const { return name_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const PosetNode& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    const std::vector<PosetNode>& nodes() const { return nodes_; }
    std::optional<int> index_of(std::string_view name) const;

    /// Reflexive-transitive order generated by the covers.
    bool leq(int lower, int upper) const;
    /// Hasse edges (lower, upper), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    /// Diagnostics collected while loading (never fatal).
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::string name_;
    std::vector<PosetNode> nodes_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<std::uint64_t>> reach_;  // row = everything <= node
    std::vector<std::string> warnings_;
};

/** Parses the line-oriented poset format:
 *      group <name>
 *      orbit <name> special=<0|1> pl=<0|1>
 *      cover <lower-name> <upper-name>
 *  '#' starts a comment; names carry no whitespace. For exceptional group
 *  names a PL flag disagreeing with the no-parenthesis naming convention
 *  is reported as a warning. */
LabeledPoset load_poset(std::istream& in);
LabeledPoset load_poset(const std::string& text);
LabeledPoset load_poset_file(const std::string& path);

/// For every node, the PL-flagged nodes below it (inclusively), as names
/// in declaration order.
std::map<std::string, std::vector<std::string>> pl_sets_of(const LabeledPoset& poset);

/// Orbits of one group sharing a single PL set.
struct RelatedClass {
    std::string group;
    std::vector<std::pair<std::string, bool>> orbits;  // (name, special)

    bool operator==(const RelatedClass&) const = default;
};

/// Equivalence classes of size >= 2 under equal PL sets, in declaration
/// order of their first members.
std::vector<RelatedClass> related_classes(const LabeledPoset& poset);

/// The complete related-orbit table for the exceptional groups, keyed by
/// Bala-Carter names ("A~1" spells the twisted A1).
const std::vector<RelatedClass>& embedded_related_table();
std::vector<RelatedClass> embedded_related_table(const std::string& group);
bool is_exceptional_group_name(std::string_view name);

/** Checks computed related classes of an ingested exceptional poset
 *  against the embedded table; throws DataError on any difference.
 *  Posets named after non-exceptional groups pass vacuously. */
void verify_against_embedded(const LabeledPoset& poset,
                             const std::vector<RelatedClass>& computed);

/// Closure poset of a classical group's orbits: nodes are serialized
/// orbits with PL flags (special flags are not computed and stay 0).
LabeledPoset classical_orbit_poset(const GroupKind& group,
                                   int cap = kDefaultEnumerationCap);

std::string to_dot(const LabeledPoset& poset);
std::string to_poset_format(const LabeledPoset& poset);

}  // namespace orbitcalc
