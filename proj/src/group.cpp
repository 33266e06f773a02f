#include "orbitcalc/group.hpp"

#include <algorithm>
#include <cctype>

namespace orbitcalc {

std::string to_string(GroupFamily family) {
    switch (family) {
        case GroupFamily::GL: return "GL";
        case GroupFamily::O: return "O";
        case GroupFamily::SO: return "SO";
        case GroupFamily::Sp: return "Sp";
    }
    throw InvalidGroup("unknown group family");
}

GroupFamily parse_group_family(const std::string& text) {
    std::string up;
    for (char c : text) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == "GL" || up == "SL") return GroupFamily::GL;
    if (up == "O") return GroupFamily::O;
    if (up == "SO") return GroupFamily::SO;
    if (up == "SP") return GroupFamily::Sp;
    throw ParseError("unknown group \"" + text + "\" (expected GL, SL, O, SO or Sp)");
}

GroupKind::GroupKind(GroupFamily family, int dim) : family(family), dim(dim) {
    if (dim < 0) throw InvalidGroup("group dimension must be nonnegative");
    if (family == GroupFamily::Sp && dim % 2 != 0)
        throw InvalidGroup("Sp(d) requires even d, got d=" + std::to_string(dim));
    if (family != GroupFamily::GL && dim == 0)
        throw InvalidGroup("O/SO/Sp require positive dimension");
}

std::string to_string(const GroupKind& group) {
    return to_string(group.family) + std::to_string(group.dim);
}

std::string to_string(VeryEvenLabel label) {
    return label == VeryEvenLabel::I ? "I" : "II";
}

bool is_valid_partition(const GroupKind& group, const Partition& lambda) {
    if (lambda.n() != group.dim)
        throw UnequalWeight("partition " + to_string(lambda) + " has weight " +
                            std::to_string(lambda.n()) + ", group " +
                            to_string(group) + " needs " + std::to_string(group.dim));
    if (group.family == GroupFamily::GL) return true;
    const bool constrain_even = group.family != GroupFamily::Sp;
    int i = 0;
    const auto& parts = lambda.parts();
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && parts[j] == parts[i]) ++j;
        const bool part_even = parts[i] % 2 == 0;
        if (part_even == constrain_even && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

bool is_very_even(const Partition& lambda) {
    for (int p : lambda.parts())
        if (p % 2 != 0) return false;
    return true;
}

Orbit::Orbit(GroupKind group, Partition partition, std::optional<VeryEvenLabel> label)
    : group_(group), partition_(std::move(partition)), label_(label) {
    if (!is_valid_partition(group_, partition_))
        throw InvalidPartition("partition " + to_string(partition_) +
                               " is not valid for " + to_string(group_));
    const bool needs_label =
        group_.family == GroupFamily::SO && is_very_even(partition_);
    if (needs_label && !label_)
        throw InvalidPartition("very-even SO orbit " + to_string(partition_) +
                               " requires a label I or II");
    if (!needs_label && label_)
        throw InvalidPartition("orbit " + to_string(group_) + ":" +
                               to_string(partition_) + " does not carry a label");
}

std::string to_string(const Orbit& orbit) {
    std::string out = to_string(orbit.group()) + ":" + to_string(orbit.partition());
    if (orbit.label()) out += ":" + to_string(*orbit.label());
    return out;
}

std::vector<Orbit> orbits_of(const GroupKind& group, int cap) {
    if (group.dim > cap)
        throw CapExceeded("orbit enumeration for " + to_string(group) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<Orbit> out;
    for (auto& lambda : enumerate_partitions(group.dim, cap)) {
        if (!is_valid_partition(group, lambda)) continue;
        if (group.family == GroupFamily::SO && is_very_even(lambda)) {
            out.emplace_back(group, lambda, VeryEvenLabel::I);
            out.emplace_back(group, lambda, VeryEvenLabel::II);
        } else {
            out.emplace_back(group, std::move(lambda));
        }
    }
    return out;
}

bool closure_leq(const Orbit& a, const Orbit& b) {
    if (!(a.group() == b.group()))
        throw GroupMismatch("cannot compare orbits of " + to_string(a.group()) +
                            " and " + to_string(b.group()));
    if (a.partition() == b.partition()) {
        if (a.label() && b.label()) return *a.label() == *b.label();
        return true;
    }
    // Distinct very-even partitions: both orbits carry labels (SO) and the
    // paper leaves the relation between the labelled families open.
    if (a.label() && b.label())
        throw LabelOrderUndefined("closure order between " + to_string(a) +
                                  " and " + to_string(b) + " is not defined");
    return dominance_leq(a.partition(), b.partition());
}

Partition principal_partition(const GroupKind& group) {
    if (group.dim == 0) return Partition();
    const bool split_top = (group.family == GroupFamily::O ||
                            group.family == GroupFamily::SO) &&
                           group.dim % 2 == 0;
    if (split_top) return Partition{group.dim - 1, 1};
    return Partition{group.dim};
}

int rank(const Orbit& orbit) {
    return orbit.group().dim - orbit.partition().length();
}

int depth(const Orbit& orbit) { return orbit.partition().part(1); }

OrbitSet::OrbitSet(GroupKind group, std::vector<Orbit> orbits) : group_(group) {
    for (const auto& o : orbits)
        if (!(o.group() == group_))
            throw GroupMismatch("orbit " + to_string(o) + " does not belong to " +
                                to_string(group_));
    // Dedupe, then keep only orbits not strictly below another member.
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& x, const Orbit& y) {
        if (x.partition() != y.partition()) return x.partition() > y.partition();
        return x.label() < y.label();
    });
    orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
    for (const auto& o : orbits) {
        bool dominated = false;
        for (const auto& other : orbits) {
            if (other == o) continue;
            if (closure_leq(o, other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal_.push_back(o);
    }
}

}  // namespace orbitcalc
