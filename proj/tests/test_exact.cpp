#include "doctest.h"
#include "rigdp/exact.hpp"

#include <random>

using namespace rigdp;

namespace {

HilbertData hd(std::vector<int> num, std::vector<int> den) {
    HilbertData h;
    h.numerator_factors = std::move(num);
    h.denominator_factors = std::move(den);
    return h;
}

std::vector<long long> ll(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(static_cast<long long>(x));
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic and printing") {
    Rational a(1), b(BigInt(1), BigInt(3));
    CHECK((a / 2 + b).str() == "5/6");
    CHECK(Rational(BigInt(-4), BigInt(6)).str() == "-2/3");
    CHECK(Rational(BigInt(4), BigInt(-2)).str() == "-2");
    CHECK(Rational::parse("153/35") == Rational(BigInt(153), BigInt(35)));
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(BigInt(2), BigInt(3)) < Rational(1));
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK_THROWS(Rational::parse("1/2/3"));
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int it = 0; it < 300; ++it) {
        auto r = [&] {
            int den = d(rng);
            return Rational(BigInt(d(rng)), BigInt(den == 0 ? 1 : den));
        };
        Rational x = r(), y = r(), z = r();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == Rational(0));
        if (y.sign() != 0) CHECK((x / y) * y == x);
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("integer polynomials") {
    IntPoly p = IntPoly::constant(1);
    p.mul_one_minus(2);
    p.mul_one_minus(3);
    CHECK(p.str() == "1 - t^2 - t^3 + t^5");
    CHECK(p.is_palindromic());
    CHECK(p.div_one_minus(3));
    CHECK(p == IntPoly(std::vector<BigInt>{1, 0, -1}));
    IntPoly keep = p;
    CHECK_FALSE(p.div_one_minus(5));
    CHECK(p == keep);
    CHECK((IntPoly::monomial(3, 2) * IntPoly::monomial(-2, 1)).str() == "-6t^3");
    CHECK((p - p).is_zero());
    CHECK(IntPoly(std::vector<BigInt>{1, 1, 0, 0}).degree() == 1);
    CHECK_FALSE(IntPoly(std::vector<BigInt>{1, 2}).is_palindromic());
    CHECK(IntPoly(std::vector<BigInt>{1, 0, -1}).is_palindromic());  // antisymmetric
    CHECK(IntPoly(std::vector<BigInt>{1, 1, 1}).eval_at_one() == 3);
}

TEST_CASE("series expansion") {
    CHECK(ll(expand_series(hd({2, 2}, {1, 1, 1, 1, 1}), 2)) == std::vector<long long>{1, 5, 13});
    CHECK(ll(expand_series(hd({4}, {4}), 3)) == std::vector<long long>{1, 0, 0, 0});
    auto s81 = expand_series(hd({15}, {1, 5, 7, 10}), 8);
    CHECK(s81[8] == 3);
    // 1/(1-t)^2 has coefficients m + 1
    auto s = expand_series(hd({}, {1, 1}), 30);
    for (int m = 0; m <= 30; ++m) CHECK(s[m] == m + 1);
}

TEST_CASE("series expansion agrees with naive convolution") {
    std::vector<std::vector<int>> dens{{1, 2, 3, 4}, {1, 1, 2, 3, 5}, {2, 3, 3, 4, 7}};
    for (const auto& den : dens) {
        const int order = 25;
        std::vector<long long> naive(order + 1, 0);
        naive[0] = 1;
        for (int a : den)
            for (int i = a; i <= order; ++i) naive[i] += naive[i - a];
        CHECK(ll(expand_series(hd({}, den), order)) == naive);
    }
}

TEST_CASE("numerator normal form") {
    auto n = numerator_normal_form(hd({15}, {1, 5, 7, 10}), {1, 5, 7, 10});
    CHECK(n.N.str() == "1 - t^15");
    CHECK(n.q == 15);
    auto ci = numerator_normal_form(hd({4, 6}, {1, 2, 2, 3, 3}), {1, 2, 2, 3, 3});
    CHECK(ci.q == 10);
    IntPoly want = IntPoly::constant(1);
    want.mul_one_minus(4);
    want.mul_one_minus(6);
    CHECK(ci.N == want);
    HilbertData gr;
    gr.extra = IntPoly(std::vector<BigInt>{1, 0, -5, 5, 0, -1});
    gr.denominator_factors.assign(10, 1);
    auto g = numerator_normal_form(gr, std::vector<int>(10, 1));
    CHECK(g.q == 5);
}

TEST_CASE("value at t = 1") {
    CHECK(evaluate_H_at_1(hd({2, 2}, {1, 1, 1, 1, 1})) == Rational(4));
    CHECK(evaluate_H_at_1(hd({4, 6}, {1, 2, 2, 3, 3})) == Rational(BigInt(2), BigInt(3)));
    CHECK(evaluate_H_at_1(hd({3}, {1, 1, 1, 1})) == Rational(3));
    CHECK(evaluate_H_at_1(hd({15}, {1, 5, 7, 10})) == Rational(BigInt(15), BigInt(350)));
    CHECK_THROWS_AS(evaluate_H_at_1(hd({2}, {1, 1, 1})), DimensionMismatch);
    CHECK_THROWS_AS(evaluate_H_at_1(hd({}, {1, 1, 1, 1, 1})), DimensionMismatch);
}
