#include "rigdp/fixtures.hpp"

#include <algorithm>
#include <map>

namespace rigdp {

const std::vector<FixtureRow>& fixture_rows() {
    static const std::vector<FixtureRow> rows = {
        {82, 2, {}, {1,1,1,1,1}, {2,2}, 1, "4", 5, "8", "8", ""},
        {83, 2, {}, {1,1,2,2,3}, {4,4}, 1, "4/3", 2, "10", "28/3", "1/3(1,1)"},
        {84, 2, {}, {1,2,2,3,3}, {4,6}, 1, "2/3", 1, "10", "26/3", "2x1/3(1,1)"},
        {85, 2, {}, {1,1,3,3,5}, {6,6}, 1, "4/5", 2, "12", "56/5", "1/5(1,1)"},
        {86, 2, {}, {2,2,3,3,3}, {6,6}, 1, "1/3", 0, "9", "19/3", "4x1/3(1,1)"},
        {87, 2, {}, {1,2,3,3,5}, {6,7}, 1, "7/15", 1, "11", "133/15", "2x1/3(1,1),1/5(1,1)"},
        {88, 2, {}, {1,2,3,4,5}, {6,8}, 1, "2/5", 1, "10", "46/5", "1/5(1,2)"},
        {89, 2, {}, {1,1,4,4,7}, {8,8}, 1, "4/7", 2, "14", "92/7", "1/7(1,1)"},
        {90, 2, {}, {1,3,3,5,5}, {6,10}, 1, "4/15", 1, "12", "136/15", "2x1/3(1,1),2x1/5(1,1)"},
        {91, 2, {}, {2,3,4,5,5}, {8,10}, 1, "2/15", 0, "8", "86/15", "1/3(1,1),2x1/5(1,2)"},
        {92, 2, {}, {2,3,3,5,7}, {9,10}, 1, "1/7", 0, "9", "43/7", "3x1/3(1,1),1/7(1,2)"},
        {93, 2, {}, {1,1,5,5,9}, {10,10}, 1, "4/9", 2, "16", "136/9", "1/9(1,1)"},
        {94, 2, {}, {1,2,5,5,9}, {10,11}, 1, "11/45", 1, "13", "473/45", "2x1/5(1,2),1/9(1,1)"},
        {95, 2, {}, {3,3,5,5,7}, {10,12}, 1, "8/105", 0, "10", "512/105", "4x1/3(1,1),2x1/5(1,1),1/7(1,2)"},
        {96, 2, {}, {2,3,5,6,7}, {10,12}, 1, "2/21", 0, "8", "122/21", "2x1/3(1,1),1/7(1,3)"},
        {97, 2, {}, {1,3,3,4,5}, {6,8}, 2, "16/15", 1, "8", "88/15", "2x1/3(1,1),1/5(1,2)"},
        {98, 2, {}, {1,3,4,5,7}, {8,10}, 2, "16/21", 1, "8", "136/21", "1/3(1,1),1/7(1,3)"},
        {99, 2, {}, {1,3,5,6,7}, {8,12}, 2, "64/105", 1, "10", "736/105", "2x1/3(1,1),1/5(1,1),1/7(1,2)"},
        {100, 2, {}, {3,4,5,5,7}, {10,12}, 2, "8/35", 0, "6", "124/35", "2x1/5(1,2),1/7(1,3)"},
        {101, 2, {}, {1,3,6,7,8}, {9,14}, 2, "1/2", 1, "10", "61/8", "1/3(1,1),1/6(1,1),1/8(1,5)"},
        {102, 2, {}, {3,4,5,7,9}, {12,14}, 2, "8/45", 0, "6", "164/45", "1/3(1,1),1/5(1,2),1/9(1,4)"},
        {103, 2, {}, {3,6,7,7,8}, {14,15}, 2, "5/42", 0, "8", "545/168", "2x1/3(1,1),1/6(1,1),2x1/7(1,2),1/8(1,5)"},
        {104, 2, {}, {1,3,8,9,10}, {11,18}, 2, "11/30", 1, "12", "1067/120", "2x1/3(1,1),1/8(1,1),1/10(1,3)"},
        {105, 2, {}, {4,5,6,7,7}, {12,14}, 3, "9/35", 0, "5", "87/35", "1/5(1,2),2x1/7(1,3)"},
        {106, 2, {}, {3,5,5,6,7}, {10,12}, 4, "64/105", 0, "6", "232/105", "2x1/3(1,1),2x1/5(1,2),1/7(1,2)"},
        {107, 3, {1,1,1,1,1,1,1,1,1,1}, {1,1,1,1,1,1}, {2,2,2,2,2}, 1, "5", 6, "", "", ""},
        {108, 3, {1,1,2,2,1,2,2,2,2,3}, {1,1,1,2,2,3}, {3,3,4,4,4}, 1, "7/3", 3, "", "", "1/3(1,1)"},
        {109, 3, {1,1,3,3,1,3,3,3,3,5}, {1,1,1,3,3,5}, {4,4,6,6,6}, 1, "9/5", 3, "", "", "1/5(1,1)"},
        {110, 3, {1,1,2,3,2,3,4,3,4,5}, {1,1,2,3,3,5}, {4,5,6,6,7}, 1, "17/15", 2, "", "", "1/3(1,1),1/5(1,1)"},
        {111, 3, {1,1,4,4,1,4,4,4,4,7}, {1,1,1,4,4,7}, {5,5,8,8,8}, 1, "11/7", 3, "", "", "1/7(1,1)"},
        {112, 3, {1,2,3,4,3,4,5,5,6,7}, {1,2,3,3,5,7}, {6,7,8,9,10}, 1, "10/21", 1, "", "", "1/3(1,1),1/7(1,4)"},
        {113, 3, {1,1,5,5,1,5,5,5,5,9}, {1,1,1,5,5,9}, {6,6,10,10,10}, 1, "13/9", 3, "", "", "1/9(1,1)"},
        {114, 3, {2,3,3,4,4,4,5,5,6,6}, {2,3,3,4,5,5}, {7,8,8,9,10}, 1, "1/5", 0, "", "", "3x1/3(1,1),1/5(1,2),1/5(1,1)"},
        {115, 3, {1,1,4,5,2,5,6,5,6,9}, {1,1,2,5,5,9}, {6,7,10,10,11}, 1, "38/45", 2, "", "", "1/5(1,2),1/9(1,1)"},
        {116, 3, {1,1,3,5,3,5,7,5,7,9}, {1,3,3,5,5,7}, {6,8,10,10,12}, 1, "29/105", 1, "", "", "1/3(1,1),1/5(1,1),1/7(1,4)"},
        {117, 3, {3,3,5,5,5,7,7,7,7,9}, {3,3,5,5,7,7}, {10,10,12,12,14}, 1, "3/35", 0, "", "", "3x1/3(1,1),1/5(1,1),2x1/7(1,4)"},
        {118, 3, {2,5,5,6,6,6,7,9,10,10}, {2,5,5,6,7,9}, {11,12,12,15,16}, 1, "23/315", 0, "", "", "3x1/5(1,2),1/7(1,3),1/9(1,1)"},
        {119, 3, {1,1,2,5,2,3,6,3,6,7}, {1,1,2,3,6,7}, {4,7,8,8,9}, 2, "22/7", 4, "", "", "1/3(1,1),1/6(1,1),1/7(1,2)"},
        {120, 3, {1,1,2,6,2,3,7,3,7,8}, {1,1,2,3,7,8}, {4,8,9,9,10}, 2, "43/14", 4, "", "", "1/7(1,1),1/8(1,5)"},
        {121, 3, {1,1,2,8,2,3,9,3,9,10}, {1,1,2,3,9,10}, {4,10,11,11,12}, 2, "134/45", 4, "", "", "1/3(1,1),1/9(1,1),1/10(1,3)"},
        {122, 3, {1,2,5,6,3,6,7,7,8,11}, {1,3,5,6,7,8}, {8,9,12,13,14}, 2, "19/30", 1, "", "", "1/3(1,1),1/5(1,1),1/8(1,5)"},
        {123, 3, {4,5,7,7,5,7,7,8,8,10}, {4,5,5,7,7,8}, {12,12,14,15,15}, 2, "11/70", 0, "", "", "2x1/5(1,2),2x1/7(1,3),1/8(1,1)"},
        {124, 3, {6,6,7,7,7,8,8,8,8,9}, {3,6,7,7,8,8}, {14,14,15,15,16}, 2, "1/7", 0, "", "", "1/3(1,1),1/6(1,1),1/7(1,2),2x1/8(1,5)"},
        {125, 3, {7,8,8,9,8,8,9,9,10,10}, {3,7,8,8,9,10}, {16,17,17,18,18}, 2, "11/105", 0, "", "", "1/3(1,1),1/7(1,1),2x1/8(1,5),1/10(1,3)"},
        {126, 3, {1,1,3,3,3,5,5,5,5,7}, {1,1,3,5,5,7}, {6,6,8,8,10}, 3, "153/35", 4, "", "", "2x1/5(1,2),1/7(1,1)"},
        {127, 3, {1,1,4,4,4,7,7,7,7,10}, {1,1,4,7,7,10}, {8,8,11,11,14}, 4, "184/35", 6, "", "", "2x1/7(1,3),1/10(1,1)"},
        {128, 4, {1,1,1,1,1,1,1,1,1}, {1,1,1,1,1,1,1}, {2,2,2,2,2,2,2,2,2}, 1, "6", 7, "", "", ""},
        {129, 4, {1,1,2,1,1,2,2,2,3}, {1,1,1,1,2,2,3}, {2,3,3,3,3,4,4,4,4}, 1, "10/3", 4, "", "", "1/3(1,1)"},
        {130, 4, {1,1,3,1,1,3,3,3,5}, {1,1,1,1,3,3,5}, {2,4,4,4,4,6,6,6,6}, 1, "14/5", 4, "", "", "1/5(1,1)"},
        {131, 4, {1,1,4,1,1,4,4,4,7}, {1,1,1,1,4,4,7}, {2,5,5,5,5,8,8,8,8}, 1, "18/7", 4, "", "", "1/7(1,1)"},
        {132, 4, {1,2,3,2,3,4,3,4,5}, {1,2,2,3,3,3,5}, {4,5,5,6,6,6,7,7,8}, 1, "4/5", 1, "", "", "3x1/3(1,1),1/5(1,1)"},
        {133, 4, {1,1,5,1,1,5,5,5,9}, {1,1,1,1,5,5,9}, {2,6,6,6,6,10,10,10,10}, 1, "22/9", 4, "", "", "1/9(1,1)"},
        {134, 4, {1,2,3,3,4,5,4,5,6}, {1,2,3,3,4,5,5}, {5,6,6,7,7,8,8,9,10}, 1, "8/15", 1, "", "", "1/3(1,1),1/5(1,2),1/5(1,1)"},
        {135, 4, {1,2,5,2,3,6,5,6,9}, {1,2,2,3,5,5,9}, {4,7,7,8,8,10,11,11,12}, 1, "26/45", 1, "", "", "1/3(1,1),2x1/5(1,2),1/9(1,1)"},
        {136, 4, {1,3,5,3,5,7,5,7,9}, {1,3,3,5,5,7,7}, {6,8,8,10,10,10,12,12,14}, 1, "2/7", 1, "", "", "2x1/7(1,4)"},
        {137, 4, {1,2,5,5,6,9,6,7,10}, {1,2,5,5,6,7,9}, {7,8,10,11,11,12,12,15,16}, 1, "86/315", 1, "", "", "1/5(1,2),1/7(1,3),1/9(1,1)"},
        {138, 4, {4,5,6,5,6,7,6,7,8}, {3,4,5,5,6,7,7}, {10,11,11,12,12,12,13,13,14}, 1, "3/35", 0, "", "", "2x1/5(1,2),2x1/7(1,4)"},
        {139, 4, {2,3,6,5,6,9,6,7,10}, {2,3,5,5,6,7,9}, {8,9,11,12,12,12,13,15,16}, 1, "38/315", 0, "", "", "1/3(1,1),3x1/5(1,2),1/7(1,4),1/9(1,1)"},
        {140, 4, {1,2,6,2,3,7,6,7,11}, {1,2,3,6,6,7,7}, {4,8,8,9,9,12,13,13,14}, 2, "20/21", 2, "", "", "1/3(1,1),2x1/6(1,1),2x1/7(1,2)"},
        {141, 4, {1,2,6,2,3,7,7,8,12}, {1,2,3,6,7,7,8}, {4,8,9,9,10,13,14,14,15}, 2, "37/42", 2, "", "", "1/6(1,1),1/7(1,1),1/7(1,2),1/8(1,5)"},
        {142, 4, {1,2,6,2,3,7,9,10,14}, {1,2,3,6,7,9,10}, {4,8,9,11,12,15,16,16,17}, 2, "248/315", 2, "", "", "1/3(1,1),1/6(1,1),1/7(1,2),1/9(1,1),1/10(1,3)"},
        {143, 4, {1,2,7,2,3,8,9,10,15}, {1,2,3,7,8,9,10}, {4,9,10,11,12,16,17,17,18}, 2, "451/630", 2, "", "", "1/7(1,1),1/8(1,5),1/9(1,1),1/10(1,3)"},
        {144, 4, {1,2,9,2,3,10,9,10,17}, {1,2,3,9,9,10,10}, {4,11,11,12,12,18,19,19,20}, 2, "28/45", 2, "", "", "1/3(1,1),2x1/9(1,1),2x1/10(1,3)"},
        {145, 4, {6,7,8,7,8,9,8,9,10}, {3,6,7,7,8,9,10}, {14,15,15,16,16,16,17,17,18}, 2, "16/105", 0, "", "", "3x1/3(1,1),1/6(1,1),2x1/7(1,2),1/10(1,3)"},
        {146, 4, {1,3,5,3,5,7,5,7,9}, {1,3,3,5,7,7,9}, {6,8,8,10,10,10,12,12,14}, 5, "250/63", 4, "", "", "2x1/3(1,1),2x1/7(1,3),1/9(1,1)"},
        {147, 4, {6,7,8,7,8,9,8,9,10}, {6,7,7,8,9,9,10}, {14,15,15,16,16,16,17,17,18}, 8, "256/315", 1, "", "", "1/6(1,1),2x1/7(1,3),2x1/9(1,4),1/10(1,1)"},
    };
    return rows;
}

const std::vector<SummaryRow>& summary_table() {
    static const std::vector<SummaryRow> rows = {
        {1, {11, 44, 6, 6, 6, 2, 2, 4, 0}, {28, 36, 15, 21, 21, 16, 17, 15, 0}},
        {2, {15, 8, 1, 1, 0, 0, 0, 0, 0}, {22, 29, 26, 22, 0, 0, 0, 0, 0}},
        {3, {12, 7, 1, 1, 0, 0, 0, 0, 0}, {33, 43, 19, 26, 0, 0, 0, 0, 0}},
        {4, {12, 6, 0, 0, 1, 0, 0, 1, 0}, {42, 48, 0, 0, 30, 0, 0, 42, 0}},
    };
    return rows;
}

FixtureRow fixture_81() {
    return {81, 1, {}, {1, 5, 7, 10}, {15}, 8, "", 3, "", "", "1/5(1,2),1/7(1,2),1/10(1,3)"};
}

namespace {

// a - b as multisets; b must be contained in a
std::vector<int> minus(std::vector<int> a, const std::vector<int>& b) {
    for (int x : b) {
        auto it = std::find(a.begin(), a.end(), x);
        if (it != a.end()) a.erase(it);
    }
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

FormatDescriptor descriptor_of(const FixtureRow& row) {
    if (row.codim == 1) return FormatDescriptor::hypersurface(row.degrees[0], row.ambient);
    if (row.codim == 2) return FormatDescriptor::ci2(row.degrees[0], row.degrees[1], row.ambient);
    const auto& a = row.matrix;
    std::vector<int> cones = minus(row.ambient, a);
    std::vector<int> all = a;
    all.insert(all.end(), cones.begin(), cones.end());
    std::vector<int> cuts = minus(all, row.ambient);
    if (row.codim == 3) {
        // a_12 + a_13 - a_23 = 2 w_1
        int W1 = a[0] + a[1] - a[4];
        std::array<int, 5> w2{W1, 2 * a[0] - W1, 2 * a[1] - W1, 2 * a[2] - W1, 2 * a[3] - W1};
        return FormatDescriptor::pfaff(w2, cones, cuts);
    }
    std::array<int, 3> b2{0, 2 * (a[3] - a[0]), 2 * (a[6] - a[0])};
    std::array<int, 3> c2{2 * a[0], 2 * a[1], 2 * a[2]};
    return FormatDescriptor::segre(b2, c2, cones, cuts);
}

}  // namespace rigdp
