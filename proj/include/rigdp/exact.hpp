#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigdp {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p" when integral, else "p/q".
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    void reduce();
    BigInt num_;
    BigInt den_;
};

// Dense integer polynomial, c[i] is the coefficient of t^i. Trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c);
    static IntPoly constant(long long v);
    static IntPoly monomial(long long coeff, int exp);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // multiply by (1 - t^a)
    void mul_one_minus(int a);
    // exact division by (1 - t^a); false (and unchanged) if not divisible
    bool div_one_minus(int a);
    BigInt eval_at_one() const;
    // N(t) == sign * t^deg * N(1/t) for sign = +1 or -1
    bool is_palindromic() const;
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CandidateIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// extra(t) * prod(1 - t^d) / prod(1 - t^a)
struct HilbertData {
    std::vector<int> numerator_factors;
    IntPoly extra = IntPoly::constant(1);
    std::vector<int> denominator_factors;

    IntPoly numerator() const;
};

std::vector<BigInt> expand_series(const HilbertData& h, int order);

struct NumeratorForm {
    IntPoly N;
    int q = 0;
};
NumeratorForm numerator_normal_form(const HilbertData& h, const std::vector<int>& ambient);

Rational evaluate_H_at_1(const HilbertData& h);

}  // namespace rigdp
