#include "doctest.h"
#include "rigdp/fixtures.hpp"
#include "rigdp/invariants.hpp"

using namespace rigdp;

namespace {

Rational R(const std::string& s) { return Rational::parse(s); }

HilbertData ci(std::vector<int> d, std::vector<int> w) {
    return hilbert_series(d.size() == 1 ? FormatDescriptor::hypersurface(d[0], w)
                                        : FormatDescriptor::ci2(d[0], d[1], w));
}

Rational blache_sum(const Basket& b) {
    Rational s;
    for (const auto& [p, k] : b.entries()) s += Rational(k) * Rational(BigInt(p.r - 1), BigInt(p.r));
    return s;
}

}  // namespace

TEST_CASE("plurigenus and degree") {
    CHECK(first_plurigenus(ci({15}, {1, 5, 7, 10}), 8) == 3);
    CHECK(first_plurigenus(ci({2, 2}, {1, 1, 1, 1, 1}), 1) == 5);
    CHECK(first_plurigenus(hilbert_series(FormatDescriptor::parse("pf:-1/2,3/2,3/2,7/2,7/2:cuts=3,3,5,5")), 3) == 5);
    CHECK(degree_K2(ci({2, 2}, {1, 1, 1, 1, 1}), 1) == 4);
    CHECK(degree_K2(ci({4, 6}, {1, 2, 2, 3, 3}), 1) == R("2/3"));
    CHECK(degree_K2(hilbert_series(FormatDescriptor::parse("pf:-1/2,3/2,3/2,7/2,7/2:cuts=3,3,5,5")), 3) == R("153/35"));
    CHECK(degree_K2(ci({3}, {1, 1, 1, 1}), 1) == 3);
}

TEST_CASE("Euler numbers") {
    CHECK(euler_orbifold({2, 2}, {1, 1, 1, 1, 1}) == 8);
    CHECK(euler_orbifold({4, 6}, {1, 2, 2, 3, 3}) == R("26/3"));
    CHECK(euler_orbifold({6, 8}, {1, 2, 3, 4, 5}) == R("46/5"));
    CHECK(euler_topological(R("26/3"), Basket::parse("2x1/3(1,1)")) == 10);
    CHECK(euler_topological(8, Basket()) == 8);
    CHECK(euler_topological(R("46/5"), Basket::parse("1/5(1,2)")) == 10);
    CHECK_THROWS_AS(euler_topological(R("26/3"), Basket::parse("1/3(1,1)")), CandidateIntegrityError);
    CHECK_THROWS_AS(euler_orbifold({2}, {1, 1, 1, 1, 1}), DimensionMismatch);
    // smooth cubic: 9 = 2 + rho
    CHECK(euler_orbifold({3}, {1, 1, 1, 1}) == 9);
}

TEST_CASE("Picard rank of hypersurfaces") {
    CHECK(picard_rank_hypersurface(3, {1, 1, 1, 1}) == 7);
    CHECK(picard_rank_hypersurface(2, {1, 1, 1, 1}) == 2);
    CHECK(picard_rank_hypersurface(3, {1, 1, 2, 3}) == 1);
    // rational surfaces have e = 2 + rho
    CHECK(picard_rank_hypersurface(15, {1, 5, 7, 10}) == 3);
    auto f = FormatDescriptor::parse("hyp:15:1,5,7,10");
    auto r = analyze(f);
    CHECK(r.etop == Rational(5));
    CHECK(r.picard == 3);
}

TEST_CASE("prime flag") {
    CHECK_FALSE(prime_flag(R("26/3")));
    CHECK(prime_flag(R("87/35")));
    CHECK(prime_flag(3));
    CHECK_THROWS_AS(prime_flag(0), CandidateIntegrityError);
}

TEST_CASE("codimension 2 fixtures: Euler numbers and Blache consistency") {
    int rows = 0;
    for (const auto& row : fixture_rows()) {
        if (row.codim != 2) continue;
        ++rows;
        INFO(row.serial);
        Basket b = Basket::parse(row.basket);
        Rational eorb = euler_orbifold(row.degrees, row.ambient);
        CHECK(eorb == R(row.eorb));
        CHECK(euler_topological(eorb, b) == R(row.e));
        CHECK(R(row.e) == R(row.eorb) + blache_sum(b));
        CHECK(R(row.e).is_integer());
        CHECK(prime_flag(eorb) == (eorb <= Rational(3)));
    }
    CHECK(rows == 25);
}

TEST_CASE("reports of certified fixtures") {
    for (const auto& row : fixture_rows()) {
        INFO(row.serial);
        auto r = analyze(descriptor_of(row));
        REQUIRE(r.verdict == Verdict::Certified);
        CHECK(r.K2.sign() > 0);
        CHECK(r.I == row.I);
        CHECK(r.class_tg == (r.h0 > 0));
        if (!row.K2.empty()) CHECK(r.K2 == R(row.K2));
        if (row.codim <= 2) {
            REQUIRE(r.etop.has_value());
            CHECK(r.etop->is_integer());
            CHECK(*r.etop == *r.eorb + blache_sum(r.basket));
        } else {
            CHECK_FALSE(r.eorb.has_value());
            CHECK_FALSE(r.picard.has_value());
        }
    }
}
