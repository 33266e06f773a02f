#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/** Classical group family. GL covers GL(d,R), GL(d,C) and SL(d,C), whose
 *  nilpotent orbits share the parametrization by all partitions of d. */
enum class GroupFamily { GL, O, SO, Sp };

std::string to_string(GroupFamily family);
/// Accepts GL, SL (alias of GL), O, SO, Sp — case-insensitively.
GroupFamily parse_group_family(const std::string& text);

struct GroupKind {
    GroupFamily family;
    int dim;

    /// Throws InvalidGroup for negative dimension, odd-dimensional Sp, or
    /// zero-dimensional O/SO/Sp (only the GL tower degenerates gracefully).
    GroupKind(GroupFamily family, int dim);

    bool operator==(const GroupKind&) const = default;
};

std::string to_string(const GroupKind& group);

/// Very-even partitions parametrize a pair of SO orbits.
enum class VeryEvenLabel { I, II };
std::string to_string(VeryEvenLabel label);

/// Membership in P(G): any partition for GL; even parts need even
/// multiplicity for O/SO; odd parts need even multiplicity for Sp.
/// Throws UnequalWeight when the weight differs from the dimension.
bool is_valid_partition(const GroupKind& group, const Partition& lambda);

/// True when every part is even (vacuously for the empty partition).
bool is_very_even(const Partition& lambda);

/** One nilpotent orbit: a group, a partition of its dimension, and for SO
 *  a label distinguishing the two orbits of a very-even partition. The
 *  label is present exactly in that case. */
class Orbit {
public:
    Orbit(GroupKind group, Partition partition,
          std::optional<VeryEvenLabel> label = std::nullopt);

    const GroupKind& group() const { return group_; }
    const Partition& partition() const { return partition_; }
    const std::optional<VeryEvenLabel>& label() const { return label_; }

    bool operator==(const Orbit&) const = default;

private:
    GroupKind group_;
    Partition partition_;
    std::optional<VeryEvenLabel> label_;
};

/// "<kind><dim>:<partition>[:I|II]", e.g. "O11:7,3,1" or "SO4:2,2:I".
std::string to_string(const Orbit& orbit);

/// All nilpotent orbits of the group; very-even partitions are emitted
/// twice (I then II) for SO. Partitions appear in decreasing lex order.
std::vector<Orbit> orbits_of(const GroupKind& group,
                             int cap = kDefaultEnumerationCap);

/** Closure order. Equals dominance order on the partitions, except that
 *  the two SO orbits of one very-even partition are incomparable, and a
 *  comparison between orbits of two distinct very-even partitions throws
 *  LabelOrderUndefined. Throws GroupMismatch across groups. */
bool closure_leq(const Orbit& a, const Orbit& b);

/// Partition of the principal (maximal) orbit: (d-1,1) for O/SO with d
/// even, (d) otherwise.
Partition principal_partition(const GroupKind& group);

/// Matrix rank of any orbit element: dim - length(partition).
int rank(const Orbit& orbit);
/// Order of nilpotence of any orbit element: lambda_1.
int depth(const Orbit& orbit);

/** A finite union of orbit closures, stored as the antichain of its
 *  maximal orbits in a canonical order. */
class OrbitSet {
public:
    /// Canonicalizes: deduplicates, drops dominated orbits, sorts.
    /// Throws GroupMismatch if any orbit belongs to a different group.
    OrbitSet(GroupKind group, std::vector<Orbit> orbits);

    const GroupKind& group() const { return group_; }
    const std::vector<Orbit>& maximal() const { return maximal_; }
    bool empty() const { return maximal_.empty(); }

    bool operator==(const OrbitSet&) const = default;

private:
    GroupKind group_;
    std::vector<Orbit> maximal_;
};

}  // namespace orbitcalc
