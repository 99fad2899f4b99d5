#include "doctest.h"
#include "oracles.hpp"
#include "rigdp/analysis.hpp"
#include "rigdp/fixtures.hpp"
#include "rigdp/invariants.hpp"

#include <regex>
#include <set>
#include <sstream>

using namespace rigdp;

namespace {

FormatDescriptor P(const std::string& s) { return FormatDescriptor::parse(s); }

std::vector<FormatDescriptor> fixture_descriptors(int max_codim = 4) {
    std::vector<FormatDescriptor> out;
    for (const auto& row : fixture_rows())
        if (row.codim <= max_codim) out.push_back(descriptor_of(row));
    out.push_back(descriptor_of(fixture_81()));
    return out;
}

// number of monomials of weighted degree d
long monomials_of_degree(const Weights& w, int d) {
    std::vector<long> c(d + 1, 0);
    c[0] = 1;
    for (int a : w)
        for (int i = a; i <= d; ++i) c[i] += c[i - a];
    return c[d];
}

}  // namespace

TEST_CASE("worked hypersurface X_15 in P(1,5,7,10)") {
    auto f = P("hyp:15:1,5,7,10");
    auto a = certify(f);
    CHECK(a.verdict == Verdict::Certified);
    CHECK(a.basket.str() == "1/5(1,2),1/7(1,2),1/10(1,3)");
    auto r = make_report(f, a);
    CHECK(r.I == 8);
    CHECK(r.h0 == 3);
    CHECK(r.K2 == Rational::parse("96/35"));
    CHECK(r.basket == Basket::parse(fixture_81().basket));
    CHECK(r.h0 == fixture_81().h0);
    // the stratum P^1(5,10) holds two points, one of them the weight-10 vertex
    auto m = generic_model(f);
    CHECK(count_stratum_points(m, Stratum{5, {1, 3}}) == 2);
    CHECK(count_stratum_points(m, Stratum{10, {3}}) == 1);
    CHECK(check_wellformed_surface(f, m).ok);
    bool tangent_y_at_p1 = false;
    for (const auto& pc : a.cert.points)
        if (pc.support == std::vector<int>{3})
            for (auto [eq, var] : pc.tangent) tangent_y_at_p1 |= var == 1;
    CHECK(tangent_y_at_p1);
}

TEST_CASE("worked Pfaffian #126") {
    auto f = P("pf:-1/2,3/2,3/2,7/2,7/2:cuts=3,3,5,5");
    auto a = certify(f);
    CHECK(a.verdict == Verdict::Certified);
    CHECK(a.basket.str() == "2x1/5(1,2),1/7(1,1)");
    auto r = make_report(f, a);
    CHECK(r.I == 3);
    CHECK(r.K2 == Rational::parse("153/35"));
    // the tables print 4; degree 3 has five monomials x1^3, x1^2x2, x1x2^2, x2^3, y1 and no
    // relation (the smallest equation degree is 6)
    CHECK(monomials_of_degree({1, 1, 3, 5, 5, 7}, 3) == 5);
    CHECK(r.h0 == 5);
}

TEST_CASE("X_{6,30} fails at the weight 9 point") {
    auto f = P("ci:6,30:1,3,9,10,15");
    auto a = certify(f);
    CHECK(a.verdict == Verdict::NotQuasismooth);
    CHECK(a.cert.failure.find("x3:9") != std::string::npos);
    CHECK(a.cert.witness.find("tangent") == std::string::npos);
    CHECK(a.cert.witness.find("x_m") != std::string::npos);
    CHECK_FALSE(quasismooth_everywhere(f));
    CHECK(certify(f, {1, true}).verdict == Verdict::NotQuasismooth);
}

TEST_CASE("small complete intersections") {
    auto q = P("ci:2,2:1,1,1,1,1");
    auto a = certify(q);
    CHECK(a.verdict == Verdict::Certified);
    CHECK(a.basket.empty());
    auto c = P("ci:4,6:1,2,2,3,3");
    auto b = certify(c);
    CHECK(b.verdict == Verdict::Certified);
    CHECK(b.basket.str() == "2x1/3(1,1)");
    auto m = generic_model(c);
    CHECK(check_wellformed_surface(c, m).ok);
    CHECK(count_stratum_points(m, Stratum{3, {3, 4}}) == 2);
    // degree 5 in P(1,2,2,3) vanishes on the line P^1(2,2)
    auto bad = P("hyp:5:1,2,2,3");
    CHECK_FALSE(check_wellformed_surface(bad, generic_model(bad)).ok);
    CHECK(certify(bad).verdict == Verdict::NotWellformed);
    CHECK(certify(P("hyp:5:1,1,1,1")).verdict == Verdict::NotFano);
}

TEST_CASE("every fixture certifies with its tabulated basket") {
    for (const auto& row : fixture_rows()) {
        INFO(row.serial);
        auto a = certify(descriptor_of(row));
        CHECK(a.verdict == Verdict::Certified);
        CHECK(a.basket == Basket::parse(row.basket));
    }
}

TEST_CASE("certificates carry a tangent matching of size codim") {
    for (const auto& f : fixture_descriptors()) {
        INFO(f.str());
        auto a = certify(f);
        REQUIRE(a.verdict == Verdict::Certified);
        for (const auto& pc : a.cert.points) {
            CHECK(pc.tangent.size() == static_cast<size_t>(f.codim()));
            std::set<int> eqs, vars;
            for (auto [e, v] : pc.tangent) {
                eqs.insert(e);
                vars.insert(v);
            }
            CHECK(eqs.size() == pc.tangent.size());
            CHECK(vars.size() == pc.tangent.size());
        }
    }
}

TEST_CASE("point counts do not depend on the seed") {
    for (const auto& f : fixture_descriptors(3)) {
        INFO(f.str());
        auto w = ambient_after_cuts(f);
        auto strata = singular_strata(w);
        std::vector<std::optional<int>> base;
        auto m1 = generic_model(f, 1);
        for (const auto& s : singular_strata(m1.member.w)) base.push_back(count_stratum_points(m1, s));
        for (uint64_t seed : {2, 3}) {
            auto m = generic_model(f, seed);
            std::vector<std::optional<int>> got;
            for (const auto& s : singular_strata(m.member.w)) got.push_back(count_stratum_points(m, s));
            CHECK(got == base);
            CHECK(certify(f, {seed, false}).basket == certify(f).basket);
        }
    }
}

TEST_CASE("fixture members are quasismooth on the whole ambient") {
    // the whole-space check takes minutes on most Pfaffian and Segre rows; these are the quick ones
    const std::set<int> quick{107, 108, 109, 110, 112, 114, 116, 117, 118};
    for (const auto& row : fixture_rows()) {
        if (row.codim > 2 && !quick.count(row.serial)) continue;
        INFO(row.serial);
        CHECK(quasismooth_everywhere(descriptor_of(row)));
    }
    CHECK(quasismooth_everywhere(descriptor_of(fixture_81())));
}

TEST_CASE("exact counting helpers") {
    using namespace rigdp::modp;
    // x^2 - y^2 = 0 in P^1: two points
    Poly x = var(0), y = var(1);
    Poly q = sub(mul(x, x), mul(y, y));
    CHECK(stable_count({q}, {1, 1}, 1) == 2);
    CHECK(empty_projectively({x, y}, {1, 1}));
    CHECK_FALSE(empty_projectively({x}, {1, 1}));
    CHECK_FALSE(empty_projectively({q}, {1, 1}));
    // x^3 = y^2 in P(2,3) is one point (1:1)
    Poly c = sub(mul(x, mul(x, x)), mul(y, y));
    CHECK(stable_count({c}, {2, 3}, 1) == 1);
    // nothing cuts P^2: positive dimensional
    CHECK_FALSE(stable_count({}, {1, 1, 1}, 1).has_value());
    CHECK_FALSE(stable_count({x}, {1, 1, 1}, 1).has_value());
    CHECK(frobenius_number({3, 5}) == 7);
    CHECK(frobenius_number({4, 7}) == 17);
    CHECK(frobenius_number({6, 9, 20}) == 43);
    CHECK(frobenius_number({1, 5}) == -1);
}

TEST_CASE("explicit integer members") {
    auto f = P("pf:-1/2,3/2,3/2,7/2,7/2:cuts=3,3,5,5");
    auto a = export_member(random_member(f, 11));
    CHECK(a == export_member(random_member(f, 11)));
    CHECK(a != export_member(random_member(f, 12)));
    auto m = random_member(f, 11);
    REQUIRE(m.eqs.size() == 5);
    for (size_t j = 0; j < m.eqs.size(); ++j)
        for (const auto& [exps, c] : m.eqs[j]) {
            int d = 0;
            for (size_t i = 0; i < exps.size(); ++i) d += exps[i] * m.w[i];
            CHECK(d == m.eq_degrees[j]);
            CHECK(c != 0);
        }
    // every line is a comment or a polynomial terminated by ';'
    std::istringstream is(a);
    std::regex term(R"(^-?\d*\*?(x\d+(\^\d+)?(\*x\d+(\^\d+)?)*)?$)");
    std::string line;
    int eqs = 0;
    while (std::getline(is, line)) {
        if (line.rfind("#", 0) == 0) continue;
        REQUIRE(!line.empty());
        CHECK(line.back() == ';');
        ++eqs;
        std::string body = line.substr(0, line.size() - 1);
        body = std::regex_replace(body, std::regex(" [+-] "), "|");
        std::istringstream ts(body);
        std::string t;
        while (std::getline(ts, t, '|')) CHECK(std::regex_match(t, term));
    }
    CHECK(eqs == 5);
    // coefficients of a hypersurface member are drawn from [-5,5] minus 0
    auto h = random_member(P("hyp:15:1,5,7,10"), 3);
    for (const auto& [exps, c] : h.eqs[0]) CHECK((c != 0 && c >= -5 && c <= 5));
}
