#pragma once

#include "rigdp/formats.hpp"

#include <array>
#include <string>
#include <vector>

namespace rigdp {

// One row of the reference tables. Basket strings are kept in printed form.
struct FixtureRow {
    int serial = 0;
    int codim = 0;
    std::vector<int> matrix;  // Plucker entries (codim 3) or 3x3 row-major (codim 4)
    Weights ambient;
    std::vector<int> degrees;
    int I = 0;
    std::string K2;
    int h0 = 0;
    std::string e;     // codim 2 only
    std::string eorb;  // codim 2 only
    std::string basket;
};

const std::vector<FixtureRow>& fixture_rows();

// Number of families per index I = 1..9 in each codimension, and the largest q of each.
struct SummaryRow {
    int codim;
    std::array<int, 9> count;
    std::array<int, 9> q;  // 0 when no family
};
const std::vector<SummaryRow>& summary_table();

// Hypersurface worked example.
FixtureRow fixture_81();

// Descriptor reconstructed from a row: cones are ambient weights not among the matrix
// entries, cuts are entries (or cones) missing from the ambient.
FormatDescriptor descriptor_of(const FixtureRow& row);

}  // namespace rigdp
