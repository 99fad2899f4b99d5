#pragma once

#include "rigdp/fixtures.hpp"
#include "rigdp/invariants.hpp"

#include <string>
#include <vector>

namespace rigdp {

struct CellDiff {
    int serial = 0;
    std::string column;
    std::string expected;
    std::string actual;
};

// Recompute a reference row end to end and diff every column it carries.
std::vector<CellDiff> verify_row(const FixtureRow& row, uint64_t seed = 1);

}  // namespace rigdp
