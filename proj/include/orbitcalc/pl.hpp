#pragma once

#include <optional>
#include <vector>

#include "orbitcalc/group.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Parts greater than 1 with odd multiplicity, in decreasing order.
std::vector<int> om_set(const Partition& lambda);

/** Whether the orbit of lambda is principal in some Levi subgroup:
 *  always for GL; |OM(lambda)| <= 1 for O/SO/Sp. Requires lambda valid
 *  for the group (InvalidPartition otherwise). */
bool is_pl(const GroupKind& group, const Partition& lambda);

/** Partition of the principal nilpotent orbit of the Levi subgroup
 *  O/Sp(d') x GL(kappa_1) x ... x GL(kappa_r): each GL factor contributes
 *  its size twice, the O/Sp factor contributes its own principal
 *  partition. Requires group O or Sp and d' == dim - 2|kappa| >= 0. */
Partition levi_principal_partition(const GroupKind& group, const Partition& kappa,
                                   int d_prime);

/** The PL partitions below a given orbit. `members` is ordered
 *  lexicographically decreasing; `label` tags the generating orbit when
 *  it is a very-even SO orbit (the pair (members, label) determines the
 *  orbit). */
struct PLSet {
    GroupKind group;
    std::vector<Partition> members;
    std::optional<VeryEvenLabel> label;

    bool operator==(const PLSet&) const = default;
};

PLSet pl_set(const GroupKind& group, const Partition& lambda,
             int cap = kDefaultEnumerationCap);
PLSet pl_set(const Orbit& orbit, int cap = kDefaultEnumerationCap);

/** A PL partition mu <= lambda with mu_1 + ... + mu_k = lambda_1 + ... +
 *  lambda_k: within the block of parts >= lambda_k, pairs of parts with
 *  odd multiplicity are merged largest-first into equal halves, and the
 *  remaining tail is flattened into 1's. All postconditions are verified
 *  before returning. */
Partition recpart_witness(const GroupKind& group, const Partition& lambda, int k);

/** Recovers lambda from its PL set: each prefix sum of lambda is the
 *  maximum of the matching prefix sums over the members. Throws
 *  InconsistentSet when the recovered increments are not weakly
 *  decreasing or the result is not valid for the group. */
Partition reconstruct(const GroupKind& group, const PLSet& s);
Partition reconstruct(const PLSet& s);

/// lambda together with a pair {mu, nu} whose PL sets union to its own.
struct RelatedUnion {
    Partition whole;  // lambda
    Partition left;   // lexicographically smaller of the pair
    Partition right;

    bool operator==(const RelatedUnion&) const = default;
};

/** All triples of distinct valid partitions (lambda, mu, nu) with mu, nu
 *  <= lambda and pl_set(lambda) = pl_set(mu) u pl_set(nu), deduped over
 *  unordered pairs and deterministically ordered. The search is chunked
 *  over ORBITCALC_THREADS workers with an order-independent merge. */
std::vector<RelatedUnion> find_related_unions(const GroupKind& group,
                                              int cap = kDefaultEnumerationCap);

/// Worker count used by internal parallel searches: ORBITCALC_THREADS,
/// clamped to [1, 64]; defaults to 1.
int worker_count();

}  // namespace orbitcalc
