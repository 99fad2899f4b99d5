#pragma once

#include <string>
#include <vector>

namespace rigdp {

using Weights = std::vector<int>;

int gcd_of(const std::vector<int>& xs);
long long lcm_of(const std::vector<int>& xs);

// Weights sorted ascending, rendered like P(1^2,3,5^2,7).
std::string weights_str(Weights w);

bool is_wellformed_space(const Weights& w);

struct Stratum {
    int r = 0;
    std::vector<int> indices;  // coordinate positions, ascending
    int dimension() const { return static_cast<int>(indices.size()) - 1; }
};

// One stratum per r > 1 that is the gcd of some subset of weights; indices are
// all coordinates whose weight r divides. Sorted by (r, indices).
std::vector<Stratum> singular_strata(const Weights& w);

}  // namespace rigdp
