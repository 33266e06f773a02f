#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

/// Maximum weight accepted by the partition/orbit enumerators unless the
/// caller passes an explicit cap.
inline constexpr int kDefaultEnumerationCap = 40;

/** An integer partition: a weakly decreasing sequence of positive parts.
 *
 *  Zero parts are never stored; an operation that produces a zero part
 *  drops it. The empty partition (weight 0) is valid. Values are
 *  immutable after construction and safe to share across threads.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Requires `parts` weakly decreasing and strictly positive.
    explicit Partition(std::vector<int> parts);

    /// Builds a partition from an arbitrary multiset of nonnegative
    /// integers: sorts descending and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// 1-based part access, zero-padded beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    /// Lexicographic order on the part sequences. Within a fixed weight
    /// the enumeration below emits partitions in decreasing order.
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Conjugate partition: transpose(l)_i = #{j : l_j >= i}.
Partition transpose(const Partition& lambda);

/// Dominance order on partitions of equal weight: every prefix sum of
/// `lambda` is at most the matching prefix sum of `mu` (zero-padded).
/// Throws UnequalWeight when the weights differ.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// Number of parts equal to p (p >= 1).
int multiplicity(const Partition& lambda, int p);

/// Multiset union with a single new part k >= 1.
Partition insert_part(const Partition& mu, int k);

/// lambda_1 + ... + lambda_k, zero-padded beyond the length (k >= 0).
int prefix_sum(const Partition& lambda, int k);

/// All partitions of n in lexicographically decreasing order.
/// Throws CapExceeded when n exceeds the cap.
std::vector<Partition> enumerate_partitions(int n,
                                            int cap = kDefaultEnumerationCap);

/// "7,3,1"; the empty partition prints as "-".
std::string to_string(const Partition& lambda);
/// Inverse of to_string; throws ParseError on malformed input (parts must
/// be positive and weakly decreasing).
Partition parse_partition(const std::string& text);

}  // namespace orbitcalc
