#pragma once

#include <string>
#include <vector>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

/** Superdiagonal support of a degenerate Whittaker character on gl(n):
 *  the positions j in {1,...,n-1} where the entry X_{j,j+1} carries the
 *  character. Positions are stored strictly increasing. */
struct WhittakerSupport {
    int n = 0;
    std::vector<int> support;

    WhittakerSupport(int n, std::vector<int> support);

    bool operator==(const WhittakerSupport&) const = default;
};

/// "support:1,3,4"; empty support prints as "support:-".
std::string to_string(const WhittakerSupport& s);

}  // namespace orbitcalc
