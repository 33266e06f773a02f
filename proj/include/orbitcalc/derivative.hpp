#pragma once

#include <optional>

#include "orbitcalc/group.hpp"
#include "orbitcalc/partition.hpp"
#include "orbitcalc/whittaker.hpp"

namespace orbitcalc {

/** k-th derivative of a partition (k >= 1). Empty when k > lambda_1;
 *  otherwise, with i the unique index satisfying lambda_i >= k >
 *  lambda_{i+1}, parts i and i+1 are replaced by lambda_i + lambda_{i+1}
 *  - k (dropped when zero). The result is a partition of n - k. */
std::optional<Partition> b_k(const Partition& lambda, int k);

/** Whether mu-union-k lies below lambda in dominance order; equivalently
 *  (and cross-checked when assertions are enabled) k <= lambda_1 and
 *  mu <= b_k(lambda). Requires mu.n + k == lambda.n. */
bool comb_part_leq(const Partition& mu, int k, const Partition& lambda);

/** Derivative of a union of orbit closures over GL: applies b_k to each
 *  maximal orbit with lambda_1 >= k and re-canonicalizes. Throws
 *  GroupMismatch unless the set lives over GL. */
OrbitSet b_k_orbit_set(const OrbitSet& v, int k);

/// Max lambda_1 over the maximal orbits (0 for the empty set);
/// b_k_orbit_set(v, k) is empty exactly when k > max_depth(v).
int max_depth(const OrbitSet& v);

/** Support of the Whittaker character attached to lambda: the complement
 *  in {1,...,n-1} of the head cumulative sums lambda_1 + ... + lambda_k,
 *  1 <= k < length. The associated superdiagonal matrix has Jordan type
 *  exactly lambda. Requires lambda.n >= 1. */
WhittakerSupport whittaker_support(const Partition& lambda);

/** Support attached to a composition (ordered, not necessarily sorted,
 *  positive entries); the associated matrix has Jordan type sort(alpha). */
WhittakerSupport composition_support(const std::vector<int>& alpha);

}  // namespace orbitcalc
