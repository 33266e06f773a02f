#include "orbitcalc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace orbitcalc {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidPartition("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw InvalidPartition("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> cols;
    cols.reserve(lambda.part(1));
    for (int i = 1; i <= lambda.part(1); ++i) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= i) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw UnequalWeight("dominance order compares partitions of equal weight: " +
                            to_string(lambda) + " vs " + to_string(mu));
    int sa = 0, sb = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int k = 1; k <= len; ++k) {
        sa += lambda.part(k);
        sb += mu.part(k);
        if (sa > sb) return false;
    }
    return true;
}

int multiplicity(const Partition& lambda, int p) {
    if (p < 1) throw InvalidPartition("multiplicity is defined for parts >= 1");
    int count = 0;
    for (int q : lambda.parts())
        if (q == p) ++count;
    return count;
}

Partition insert_part(const Partition& mu, int k) {
    if (k < 1) throw InvalidPartition("inserted part must be positive");
    std::vector<int> parts = mu.parts();
    auto pos = std::upper_bound(parts.begin(), parts.end(), k, std::greater<int>());
    parts.insert(pos, k);
    return Partition(std::move(parts));
}

int prefix_sum(const Partition& lambda, int k) {
    int s = 0;
    for (int i = 1; i <= std::min(k, lambda.length()); ++i) s += lambda.part(i);
    return s;
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
    if (n < 0) throw InvalidPartition("cannot partition a negative integer");
    if (n > cap)
        throw CapExceeded("partition enumeration for n=" + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> stack;
    // Descending-lex order: always try the largest admissible part first.
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(stack);
            return;
        }
        for (int m = std::min(rem, maxpart); m >= 1; --m) {
            stack.push_back(m);
            rec(rem - m, m);
            stack.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string to_string(const Partition& lambda) {
    if (lambda.empty()) return "-";
    std::string out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text.empty()) throw ParseError("empty partition string (use \"-\" for the empty partition)");
    if (text == "-") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok(text.data() + pos,
                             (comma == std::string::npos ? text.size() : comma) - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("malformed partition \"" + text + "\"");
        if (value < 1)
            throw ParseError("partition parts must be positive in \"" + text + "\"");
        if (!parts.empty() && value > parts.back())
            throw ParseError("partition parts must be weakly decreasing in \"" + text + "\"");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace orbitcalc
