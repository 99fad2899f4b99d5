#include "doctest.h"
#include "rigdp/orbpoints.hpp"
#include "rigdp/wps.hpp"

#include <numeric>
#include <set>

using namespace rigdp;

TEST_CASE("wellformed spaces") {
    CHECK(is_wellformed_space({1, 2, 2, 3, 3}));
    CHECK_FALSE(is_wellformed_space({1, 2, 4}));
    CHECK(is_wellformed_space({1, 5, 7, 10}));
    CHECK_FALSE(is_wellformed_space({2, 4, 6, 8}));
    CHECK(is_wellformed_space({1, 1, 1, 1}));
    CHECK(weights_str({7, 1, 5, 3, 5, 1}) == "P(1^2,3,5^2,7)");
}

TEST_CASE("singular strata") {
    auto s = singular_strata({1, 2, 3, 4, 5});
    REQUIRE(s.size() == 4);
    CHECK(s[0].r == 2);
    CHECK(s[0].indices == std::vector<int>{1, 3});
    CHECK(s[1].r == 3);
    CHECK(s[2].r == 4);
    CHECK(s[3].r == 5);
    CHECK(singular_strata({1, 1, 1, 1}).empty());
    auto t = singular_strata({1, 5, 7, 10});
    REQUIRE(t.size() == 3);
    CHECK(t[0].r == 5);
    CHECK(t[0].indices == std::vector<int>{1, 3});
    CHECK(t[0].dimension() == 1);
    CHECK(t[1].r == 7);
    CHECK(t[2].r == 10);
}

TEST_CASE("strata are exactly the subset gcds") {
    std::vector<Weights> spaces{{1, 2, 3, 4, 5, 6}, {3, 6, 7, 8, 9, 10}, {2, 3, 3, 4, 5, 5, 6}, {4, 6, 9, 10}};
    for (const auto& w : spaces) {
        std::set<int> gcds;
        int n = static_cast<int>(w.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            int g = 0;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) g = std::gcd(g, w[i]);
            if (g > 1) gcds.insert(g);
        }
        std::set<int> got;
        for (const auto& s : singular_strata(w)) {
            got.insert(s.r);
            for (int i = 0; i < n; ++i) {
                bool in = std::find(s.indices.begin(), s.indices.end(), i) != s.indices.end();
                CHECK(in == (w[i] % s.r == 0));
            }
        }
        CHECK(got == gcds);
    }
}

TEST_CASE("normalization examples") {
    CHECK(normalize(7, 5, 10).str() == "1/7(1,2)");
    CHECK(normalize(10, 1, 7).str() == "1/10(1,3)");
    CHECK(normalize(3, 2, 2).str() == "1/3(1,1)");
    CHECK(parse_point("1/7(1,4)") == normalize(7, 1, 2));
    CHECK(parse_point("1/9(1,4)").str() == "1/9(1,4)");
    CHECK_THROWS_AS(normalize(6, 2, 1), NonIsolatedPoint);
    CHECK_THROWS_AS(normalize(4, 1, 2), NonIsolatedPoint);
}

TEST_CASE("normalization is idempotent and symmetric for r <= 30") {
    for (int r = 2; r <= 30; ++r)
        for (int a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1) continue;
            for (int b = 1; b < r; ++b) {
                if (std::gcd(b, r) != 1) continue;
                OrbifoldPoint p = normalize(r, a, b);
                CHECK(p.a == 1);
                CHECK(normalize(p.r, p.a, p.b) == p);
                CHECK(normalize(r, b, a) == p);
                // rescaling by a unit gives the same point
                for (int u = 2; u < r; ++u)
                    if (std::gcd(u, r) == 1) CHECK(normalize(r, a * u % r, b * u % r) == p);
                // 1/r(1,b) = 1/r(1,b') when b b' = 1 mod r
                for (int bi = 1; bi < r; ++bi)
                    if (b * bi % r == 1) CHECK(normalize(r, 1, bi) == normalize(r, 1, b));
                CHECK(p.b <= r - 1);
                CHECK(parse_point(p.str()) == p);
            }
        }
}

TEST_CASE("classification") {
    CHECK(classify(normalize(3, 1, 1)) == PointClass::R);
    CHECK(classify(normalize(4, 1, 1)) == PointClass::T);
    CHECK(classify(normalize(2, 1, 1)) == PointClass::T);
    CHECK(in_rigid_catalog(parse_point("1/7(1,3)")));
    CHECK_FALSE(in_rigid_catalog(parse_point("1/4(1,1)")));
    CHECK(in_rigid_catalog(parse_point("1/7(1,4)")));
    CHECK(rigid_catalog().size() == 13);
    CHECK(classify(normalize(6, 1, 5)) == PointClass::T);
    CHECK_FALSE(in_rigid_catalog(normalize(6, 1, 5)));
}

TEST_CASE("rigid catalog equals the R points with 3 <= r <= 10") {
    std::set<OrbifoldPoint> want;
    for (int r = 3; r <= 10; ++r)
        for (int a = 1; a < r; ++a)
            for (int b = 1; b < r; ++b) {
                if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1) continue;
                int m = std::gcd(a + b, r), k = r / m;
                if (m < k) want.insert(normalize(r, a, b));
            }
    std::set<OrbifoldPoint> got(rigid_catalog().begin(), rigid_catalog().end());
    CHECK(got == want);
    for (const auto& p : rigid_catalog()) CHECK(classify(p) == PointClass::R);
}

TEST_CASE("baskets") {
    Basket b = Basket::parse("2x1/5(1,2),1/7(1,1)");
    CHECK(b.size() == 3);
    CHECK(b.str() == "2x1/5(1,2),1/7(1,1)");
    CHECK(Basket::parse("1/7(1,1), 2 x 1/5(2,4)") == b);
    CHECK(Basket::parse("-").empty());
    CHECK(Basket().str() == "-");
    Basket c;
    c.add(normalize(10, 1, 7));
    c.add(normalize(7, 5, 10));
    c.add(normalize(5, 1, 2));
    CHECK(c.str() == "1/5(1,2),1/7(1,2),1/10(1,3)");
}
