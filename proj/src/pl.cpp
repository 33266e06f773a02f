#include "orbitcalc/pl.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <thread>

namespace orbitcalc {

std::vector<int> om_set(const Partition& lambda) {
    std::vector<int> out;
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] > 1 && (j - i) % 2 != 0) out.push_back(parts[i]);
        i = j;
    }
    return out;
}

bool is_pl(const GroupKind& group, const Partition& lambda) {
    if (!is_valid_partition(group, lambda))
        throw InvalidPartition("partition " + to_string(lambda) +
                               " is not valid for " + to_string(group));
    if (group.family == GroupFamily::GL) return true;
    return om_set(lambda).size() <= 1;
}

Partition levi_principal_partition(const GroupKind& group, const Partition& kappa,
                                   int d_prime) {
    if (group.family != GroupFamily::O && group.family != GroupFamily::Sp)
        throw InvalidGroup("Levi data is defined for O and Sp, got " +
                           to_string(group));
    if (d_prime != group.dim - 2 * kappa.n() || d_prime < 0)
        throw DimensionMismatch("d' = " + std::to_string(d_prime) +
                                " does not match " + to_string(group) +
                                " with |kappa| = " + std::to_string(kappa.n()));
    if (group.family == GroupFamily::Sp && d_prime % 2 != 0)
        throw DimensionMismatch("symplectic factor needs even d'");
    std::vector<int> parts;
    if (group.family == GroupFamily::O && group.dim % 2 == 0 && d_prime >= 2) {
        parts.push_back(d_prime - 1);
        parts.push_back(1);
    } else if (d_prime > 0) {
        parts.push_back(d_prime);
    }
    for (int k : kappa.parts()) {
        parts.push_back(k);
        parts.push_back(k);
    }
    Partition result = Partition::from_unsorted(std::move(parts));
    if (!is_pl(group, result))
        throw DimensionMismatch("internal: lambda_kappa postcondition failed");
    return result;
}

namespace {

bool pl_flag(const GroupKind& group, const Partition& lambda) {
    // Partition-level test without the validity precondition.
    return group.family == GroupFamily::GL || om_set(lambda).size() <= 1;
}

}  // namespace

PLSet pl_set(const GroupKind& group, const Partition& lambda, int cap) {
    if (group.dim > cap)
        throw CapExceeded("pl_set for " + to_string(group) + " exceeds cap " +
                          std::to_string(cap));
    if (!is_valid_partition(group, lambda))
        throw InvalidPartition("partition " + to_string(lambda) +
                               " is not valid for " + to_string(group));
    std::vector<Partition> members;
    for (auto& mu : enumerate_partitions(group.dim, cap)) {
        if (!is_valid_partition(group, mu)) continue;
        if (!pl_flag(group, mu)) continue;
        if (dominance_leq(mu, lambda)) members.push_back(std::move(mu));
    }
    return PLSet{group, std::move(members), std::nullopt};
}

PLSet pl_set(const Orbit& orbit, int cap) {
    PLSet s = pl_set(orbit.group(), orbit.partition(), cap);
    s.label = orbit.label();
    return s;
}

Partition recpart_witness(const GroupKind& group, const Partition& lambda, int k) {
    if (k < 1) throw InvalidPartition("recpart_witness needs k >= 1");
    if (!is_valid_partition(group, lambda))
        throw InvalidPartition("partition " + to_string(lambda) +
                               " is not valid for " + to_string(group));
    Partition mu = lambda;
    if (group.family != GroupFamily::GL && !lambda.empty()) {
        const int kc = std::min(k, lambda.length());
        int j = kc;
        while (j < lambda.length() && lambda.part(j + 1) == lambda.part(kc)) ++j;
        std::vector<int> head(lambda.parts().begin(), lambda.parts().begin() + j);
        int tail = lambda.n() - prefix_sum(lambda, j);
        // Merge the two largest odd-multiplicity values into equal halves
        // until at most one remains; valid parity makes (p+q)/2 integral.
        for (;;) {
            std::vector<int> odd;
            size_t i = 0;
            std::sort(head.begin(), head.end(), std::greater<int>());
            while (i < head.size()) {
                size_t e = i;
                while (e < head.size() && head[e] == head[i]) ++e;
                if ((e - i) % 2 != 0) odd.push_back(head[i]);
                i = e;
            }
            if (odd.size() <= 1) break;
            const int p = odd[0], q = odd[1];
            head.erase(std::find(head.begin(), head.end(), p));
            head.erase(std::find(head.begin(), head.end(), q));
            head.push_back((p + q) / 2);
            head.push_back((p + q) / 2);
        }
        for (int t = 0; t < tail; ++t) head.push_back(1);
        mu = Partition::from_unsorted(std::move(head));
    }
    if (!is_pl(group, mu) || !dominance_leq(mu, lambda) ||
        prefix_sum(mu, k) != prefix_sum(lambda, k))
        throw InvalidPartition("internal: witness postcondition failed for " +
                               to_string(lambda) + ", k=" + std::to_string(k));
    return mu;
}

Partition reconstruct(const GroupKind& group, const PLSet& s) {
    if (!(s.group == group))
        throw GroupMismatch("PL set belongs to " + to_string(s.group) +
                            ", not " + to_string(group));
    if (s.members.empty())
        throw InconsistentSet("a PL set is never empty");
    for (const auto& mu : s.members)
        if (mu.n() != group.dim)
            throw InconsistentSet("member " + to_string(mu) +
                                  " has wrong weight for " + to_string(group));
    std::vector<int> parts;
    int prev_sum = 0, prev_inc = group.dim + 1;
    for (int k = 1; k <= group.dim; ++k) {
        int sk = 0;
        for (const auto& mu : s.members) sk = std::max(sk, prefix_sum(mu, k));
        const int inc = sk - prev_sum;
        if (inc > prev_inc)
            throw InconsistentSet("recovered prefix sums are not concave");
        if (inc > 0) parts.push_back(inc);
        prev_sum = sk;
        prev_inc = inc;
    }
    Partition lambda(std::move(parts));
    if (!is_valid_partition(group, lambda))
        throw InconsistentSet("recovered partition " + to_string(lambda) +
                              " is not valid for " + to_string(group));
    return lambda;
}

Partition reconstruct(const PLSet& s) { return reconstruct(s.group, s); }

int worker_count() {
    const char* env = std::getenv("ORBITCALC_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return std::clamp(v, 1, 64);
}

namespace {

// Fixed-universe bitset over the valid-partition list.
using Mask = std::vector<std::uint64_t>;

void set_bit(Mask& m, size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }

bool union_equals(const Mask& a, const Mask& b, const Mask& target) {
    for (size_t w = 0; w < target.size(); ++w)
        if ((a[w] | b[w]) != target[w]) return false;
    return true;
}

}  // namespace

std::vector<RelatedUnion> find_related_unions(const GroupKind& group, int cap) {
    if (group.dim > cap)
        throw CapExceeded("related-union search for " + to_string(group) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<Partition> valid;
    for (auto& lambda : enumerate_partitions(group.dim, cap))
        if (is_valid_partition(group, lambda)) valid.push_back(std::move(lambda));

    const size_t count = valid.size();
    const size_t words = (count + 63) / 64;
    std::vector<char> pl(count);
    for (size_t i = 0; i < count; ++i) pl[i] = pl_flag(group, valid[i]) ? 1 : 0;

    // leq[a] = indices below valid[a]; plset[a] = PL indices below valid[a].
    std::vector<std::vector<size_t>> below(count);
    std::vector<Mask> plset(count, Mask(words));
    for (size_t a = 0; a < count; ++a)
        for (size_t i = 0; i < count; ++i) {
            if (!dominance_leq(valid[i], valid[a])) continue;
            if (i != a) below[a].push_back(i);
            if (pl[i]) set_bit(plset[a], i);
        }

    std::vector<std::vector<RelatedUnion>> slots(count);
    auto search_one = [&](size_t a) {
        if (pl[a]) return;  // pl_set(lambda) contains lambda, no union can
        const auto& cand = below[a];
        for (size_t x = 0; x < cand.size(); ++x)
            for (size_t y = x + 1; y < cand.size(); ++y) {
                if (!union_equals(plset[cand[x]], plset[cand[y]], plset[a])) continue;
                const Partition& mu = valid[cand[x]];
                const Partition& nu = valid[cand[y]];
                if (mu < nu)
                    slots[a].push_back({valid[a], mu, nu});
                else
                    slots[a].push_back({valid[a], nu, mu});
            }
    };

    const int workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (size_t a = 0; a < count; ++a) search_one(a);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (size_t a = static_cast<size_t>(w); a < count;
                     a += static_cast<size_t>(workers))
                    search_one(a);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<RelatedUnion> out;
    for (auto& slot : slots)
        out.insert(out.end(), slot.begin(), slot.end());
    std::sort(out.begin(), out.end(), [](const RelatedUnion& a, const RelatedUnion& b) {
        if (a.whole != b.whole) return a.whole > b.whole;
        if (a.left != b.left) return a.left > b.left;
        return a.right > b.right;
    });
    return out;
}

}  // namespace orbitcalc
