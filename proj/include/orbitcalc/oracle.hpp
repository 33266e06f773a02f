#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "orbitcalc/partition.hpp"
#include "orbitcalc/whittaker.hpp"

// Brute-force verification backend. Everything here works on exact
// integer matrices and is kept independent of the partition-formula code
// paths it is used to check (no dominance, no derivative calculus).

namespace orbitcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square matrix with arbitrary-precision integer entries.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n < 1) throw InvalidPartition("matrix size must be >= 1");
    }

    int size() const { return n_; }
    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool is_zero() const;
    bool is_strictly_upper_triangular() const;
    IntMatrix operator*(const IntMatrix& o) const;

    bool operator==(const IntMatrix&) const = default;

private:
    int n_;
    std::vector<BigInt> a_;
};

/// 0/1 matrix with a 1 at (j, j+1) for every j in the support.
IntMatrix matrix_of_support(const WhittakerSupport& s);

/// Rank over the rationals, via fraction-free (Bareiss) elimination.
int rank_exact(const IntMatrix& x);

/// Smallest p >= 1 with x^p == 0; throws NotNilpotent.
int nilpotence_order(const IntMatrix& x);

/// Jordan type of a nilpotent matrix, from ranks of successive powers.
/// Throws NotNilpotent when x^n != 0.
Partition jordan_type(const IntMatrix& x);

}  // namespace orbitcalc
