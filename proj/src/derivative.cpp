#include "orbitcalc/derivative.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace orbitcalc {

WhittakerSupport::WhittakerSupport(int n, std::vector<int> support)
    : n(n), support(std::move(support)) {
    if (n < 1) throw InvalidPartition("Whittaker support needs n >= 1");
    for (size_t i = 0; i < this->support.size(); ++i) {
        const int j = this->support[i];
        if (j < 1 || j > n - 1)
            throw InvalidPartition("support position " + std::to_string(j) +
                                   " outside 1.." + std::to_string(n - 1));
        if (i > 0 && this->support[i - 1] >= j)
            throw InvalidPartition("support positions must be strictly increasing");
    }
}

std::string to_string(const WhittakerSupport& s) {
    if (s.support.empty()) return "support:-";
    std::string out = "support:";
    for (size_t i = 0; i < s.support.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.support[i]);
    }
    return out;
}

std::optional<Partition> b_k(const Partition& lambda, int k) {
    if (k < 1) throw InvalidPartition("derivative order k must be >= 1");
    if (k > lambda.part(1)) return std::nullopt;
    // Unique i with lambda_i >= k > lambda_{i+1}: the last part >= k.
    int i = 1;
    while (lambda.part(i + 1) >= k) ++i;
    std::vector<int> parts;
    parts.reserve(lambda.length());
    for (int j = 1; j <= lambda.length(); ++j)
        if (j != i && j != i + 1) parts.push_back(lambda.part(j));
    const int merged = lambda.part(i) + lambda.part(i + 1) - k;
    Partition rest(std::move(parts));
    return merged > 0 ? insert_part(rest, merged) : rest;
}

bool comb_part_leq(const Partition& mu, int k, const Partition& lambda) {
    if (mu.n() + k != lambda.n())
        throw UnequalWeight("comb_part_leq needs mu.n + k == lambda.n");
    const bool direct = dominance_leq(insert_part(mu, k), lambda);
#ifndef NDEBUG
    const auto derived = b_k(lambda, k);
    const bool via_bk = k <= lambda.part(1) && derived.has_value() &&
                        dominance_leq(mu, *derived);
    assert(direct == via_bk);
#endif
    return direct;
}

OrbitSet b_k_orbit_set(const OrbitSet& v, int k) {
    if (v.group().family != GroupFamily::GL)
        throw GroupMismatch("derivatives act on GL orbit sets, got " +
                            to_string(v.group()));
    const GroupKind target(GroupFamily::GL, std::max(0, v.group().dim - k));
    std::vector<Orbit> images;
    for (const auto& orbit : v.maximal())
        if (auto image = b_k(orbit.partition(), k))
            images.emplace_back(target, std::move(*image));
    OrbitSet result(target, std::move(images));
#ifndef NDEBUG
    // Cross-check against the full closure expansion at desk scale: the
    // down-closure of the result must be { mu : mu-union-k <= some max }.
    if (v.group().dim <= 12 && v.group().dim >= k) {
        for (const auto& mu : enumerate_partitions(v.group().dim - k)) {
            bool in_expanded = false;
            for (const auto& orbit : v.maximal())
                if (comb_part_leq(mu, k, orbit.partition())) in_expanded = true;
            bool in_result = false;
            for (const auto& orbit : result.maximal())
                if (dominance_leq(mu, orbit.partition())) in_result = true;
            assert(in_expanded == in_result);
        }
    }
#endif
    return result;
}

int max_depth(const OrbitSet& v) {
    int d = 0;
    for (const auto& orbit : v.maximal()) d = std::max(d, orbit.partition().part(1));
    return d;
}

WhittakerSupport whittaker_support(const Partition& lambda) {
    if (lambda.n() < 1) throw InvalidPartition("whittaker_support needs n >= 1");
    std::vector<int> cuts;
    int acc = 0;
    for (int i = 1; i < lambda.length(); ++i) {
        acc += lambda.part(i);
        cuts.push_back(acc);
    }
    std::vector<int> support;
    for (int j = 1; j < lambda.n(); ++j)
        if (!std::binary_search(cuts.begin(), cuts.end(), j)) support.push_back(j);
    return WhittakerSupport(lambda.n(), std::move(support));
}

WhittakerSupport composition_support(const std::vector<int>& alpha) {
    if (alpha.empty()) throw InvalidPartition("composition must be nonempty");
    for (int a : alpha)
        if (a < 1) throw InvalidPartition("composition entries must be positive");
    const int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    std::vector<int> cuts;
    int acc = 0;
    for (size_t i = 0; i + 1 < alpha.size(); ++i) {
        acc += alpha[i];
        cuts.push_back(acc);
    }
    std::vector<int> support;
    for (int j = 1; j < n; ++j)
        if (!std::binary_search(cuts.begin(), cuts.end(), j)) support.push_back(j);
    return WhittakerSupport(n, std::move(support));
}

}  // namespace orbitcalc
