#include "orbitcalc/oracle.hpp"

#include <utility>

namespace orbitcalc {

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_strictly_upper_triangular() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix sizes differ");
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int t = 0; t < n_; ++t) {
            const BigInt& v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += v * o.at(t, j);
        }
    return r;
}

IntMatrix matrix_of_support(const WhittakerSupport& s) {
    IntMatrix m(s.n);
    for (int j : s.support) m.at(j - 1, j) = 1;
    return m;
}

int rank_exact(const IntMatrix& x) {
    const int n = x.size();
    IntMatrix m = x;
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        // Bareiss update: every new entry is a minor of x divided by the
        // previous pivot, so the division below is exact.
        for (int i = rank + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) -
                              m.at(i, col) * m.at(rank, j)) /
                             prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

int nilpotence_order(const IntMatrix& x) {
    if (x.is_zero()) return 1;
    IntMatrix power = x;
    for (int p = 1; p <= x.size(); ++p) {
        if (power.is_zero()) return p;
        power = power * x;
    }
    throw NotNilpotent("matrix is not nilpotent (x^n != 0)");
}

Partition jordan_type(const IntMatrix& x) {
    const int n = x.size();
    // ranks[i] = rank(x^i); stops once the power vanishes.
    std::vector<int> ranks{n};
    IntMatrix power = x;
    while (ranks.back() > 0) {
        if (static_cast<int>(ranks.size()) > n)
            throw NotNilpotent("matrix is not nilpotent (x^n != 0)");
        ranks.push_back(rank_exact(power));
        power = power * x;
    }
    // block_count[i] = #{Jordan blocks of size >= i} = rank(x^{i-1}) - rank(x^i),
    // hence exactly block_count[i] - block_count[i+1] blocks of size i.
    const int depth = static_cast<int>(ranks.size()) - 1;
    std::vector<int> parts;
    for (int size = depth; size >= 1; --size) {
        const int geq = ranks[size - 1] - ranks[size];
        const int gt = size < depth ? ranks[size] - ranks[size + 1] : 0;
        for (int c = 0; c < geq - gt; ++c) parts.push_back(size);
    }
    return Partition(std::move(parts));
}

}  // namespace orbitcalc
