#include "rigdp/exact.hpp"

#include <algorithm>
#include <sstream>

namespace rigdp {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

IntPoly::IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::constant(long long v) { return IntPoly({BigInt(v)}); }

IntPoly IntPoly::monomial(long long coeff, int exp) {
    std::vector<BigInt> c(exp + 1);
    c[exp] = coeff;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

void IntPoly::mul_one_minus(int a) {
    if (c_.empty()) return;
    size_t n = c_.size();
    c_.resize(n + a);
    for (size_t i = n + a; i-- > static_cast<size_t>(a);) c_[i] -= c_[i - a];
    trim();
}

bool IntPoly::div_one_minus(int a) {
    // q(t)(1 - t^a) = p(t)  =>  q_i = p_i + q_{i-a}
    if (c_.empty()) return true;
    int n = degree();
    if (n < a) return false;
    std::vector<BigInt> q(n - a + 1);
    for (int i = 0; i <= n - a; ++i) {
        q[i] = c_[i];
        if (i >= a) q[i] += q[i - a];
    }
    // check the top a coefficients: p_i = -q_{i-a} for i > n-a
    for (int i = n - a + 1; i <= n; ++i) {
        BigInt expect = (i - a >= 0 && i - a <= n - a) ? BigInt(-q[i - a]) : BigInt(0);
        if (i <= n - a) expect += q[i];
        if (c_[i] != expect) return false;
    }
    c_ = std::move(q);
    trim();
    return true;
}

BigInt IntPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

bool IntPoly::is_palindromic() const {
    int n = degree();
    if (n < 0) return true;
    bool plus = true, minus = true;
    for (int i = 0; i <= n; ++i) {
        if (c_[i] != c_[n - i]) plus = false;
        if (c_[i] != -c_[n - i]) minus = false;
    }
    return plus || minus;
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt v = c_[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (v < 0) v = -v;
        if (i == 0 || v != 1) os << v;
        if (i > 0) os << "t";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly HilbertData::numerator() const {
    IntPoly p = extra;
    for (int d : numerator_factors) p.mul_one_minus(d);
    return p;
}

std::vector<BigInt> expand_series(const HilbertData& h, int order) {
    std::vector<BigInt> c(order + 1);
    IntPoly num = h.numerator();
    for (int i = 0; i <= order && i <= num.degree(); ++i) c[i] = num.coeff(i);
    // divide by each (1 - t^a): running sums with stride a
    for (int a : h.denominator_factors)
        for (int i = a; i <= order; ++i) c[i] += c[i - a];
    return c;
}

NumeratorForm numerator_normal_form(const HilbertData& h, const std::vector<int>& ambient) {
    IntPoly N = h.numerator();
    std::vector<int> den = h.denominator_factors;
    std::vector<int> amb = ambient;
    // cancel common factors first, then move the remainder across
    std::sort(den.begin(), den.end());
    std::sort(amb.begin(), amb.end());
    std::vector<int> only_den, only_amb;
    std::set_difference(den.begin(), den.end(), amb.begin(), amb.end(), std::back_inserter(only_den));
    std::set_difference(amb.begin(), amb.end(), den.begin(), den.end(), std::back_inserter(only_amb));
    for (int a : only_amb) N.mul_one_minus(a);
    for (int a : only_den)
        if (!N.div_one_minus(a))
            throw CandidateIntegrityError("Hilbert numerator is not a polynomial over the ambient");
    if (!N.is_palindromic()) throw CandidateIntegrityError("Hilbert numerator is not palindromic");
    return {N, N.degree()};
}

Rational evaluate_H_at_1(const HilbertData& h) {
    IntPoly num = h.numerator();
    if (num.is_zero()) throw DimensionMismatch("zero Hilbert series");
    int mult = 0;
    while (num.eval_at_one() == 0) {
        if (!num.div_one_minus(1)) throw DimensionMismatch("numerator division failed");
        ++mult;
    }
    int pole = static_cast<int>(h.denominator_factors.size()) - mult;
    if (pole != 3)
        throw DimensionMismatch("pole order at t=1 is " + std::to_string(pole) + ", expected 3");
    BigInt den = 1;
    for (int a : h.denominator_factors) den *= a;
    return Rational(num.eval_at_one(), den);
}

}  // namespace rigdp
