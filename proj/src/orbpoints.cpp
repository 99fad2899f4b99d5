#include "rigdp/orbpoints.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace rigdp {

namespace {

int inverse_mod(int a, int r) {
    for (int x = 1; x < r; ++x)
        if (a * x % r == 1) return x;
    throw NonIsolatedPoint("no inverse");
}

int mod(int a, int r) { return ((a % r) + r) % r; }

}  // namespace

int OrbifoldPoint::m() const { return std::gcd(a + b, r); }
int OrbifoldPoint::k() const { return r / m(); }

std::string OrbifoldPoint::str() const {
    return "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

OrbifoldPoint normalize(int r, int a, int b) {
    if (r < 2) throw NonIsolatedPoint("local index must be at least 2");
    a = mod(a, r);
    b = mod(b, r);
    if (a == 0 || b == 0 || std::gcd(a, r) != 1 || std::gcd(b, r) != 1)
        throw NonIsolatedPoint("1/" + std::to_string(r) + "(" + std::to_string(a) + "," +
                               std::to_string(b) + ") is not isolated");
    int x = inverse_mod(a, r) * b % r;
    int y = inverse_mod(b, r) * a % r;
    return {r, 1, std::min(x, y)};
}

OrbifoldPoint parse_point(const std::string& s) {
    int r = 0, a = 0, b = 0;
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    std::istringstream is(s);
    int one = 0;
    if (!(is >> one >> c1 >> r >> c2 >> a >> c3 >> b >> c4) || one != 1 || c1 != '/' || c2 != '(' ||
        c3 != ',' || c4 != ')')
        throw std::invalid_argument("cannot parse orbifold point: " + s);
    return normalize(r, a, b);
}

const char* class_name(PointClass c) {
    switch (c) {
        case PointClass::T: return "T";
        case PointClass::R: return "R";
        default: return "neither";
    }
}

PointClass classify(const OrbifoldPoint& p) {
    int m = p.m();
    int k = p.r / m;
    if (m % k == 0) return PointClass::T;
    if (m < k) return PointClass::R;
    return PointClass::Neither;
}

const std::vector<OrbifoldPoint>& rigid_catalog() {
    static const std::vector<OrbifoldPoint> cat = {
        {3, 1, 1}, {5, 1, 1}, {5, 1, 2}, {6, 1, 1}, {7, 1, 1}, {7, 1, 2},
        {7, 1, 3}, {8, 1, 1}, {8, 1, 5}, {9, 1, 1}, {9, 1, 4}, {10, 1, 1}, {10, 1, 3},
    };
    return cat;
}

bool in_rigid_catalog(const OrbifoldPoint& p) {
    OrbifoldPoint n = normalize(p.r, p.a, p.b);
    const auto& cat = rigid_catalog();
    return std::find(cat.begin(), cat.end(), n) != cat.end();
}

void Basket::add(const OrbifoldPoint& p, int k) {
    if (k <= 0) return;
    entries_[normalize(p.r, p.a, p.b)] += k;
}

int Basket::size() const {
    int n = 0;
    for (const auto& [p, k] : entries_) n += k;
    return n;
}

std::string Basket::str() const {
    if (entries_.empty()) return "-";
    std::string out;
    for (const auto& [p, k] : entries_) {
        if (!out.empty()) out += ",";
        if (k > 1) out += std::to_string(k) + "x";
        out += p.str();
    }
    return out;
}

Basket Basket::parse(const std::string& s) {
    Basket b;
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "-") return b;
    // split on commas that are outside parentheses
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        int k = 1;
        auto x = cur.find('x');
        std::string pt = cur;
        if (x != std::string::npos) {
            k = std::stoi(cur.substr(0, x));
            pt = cur.substr(x + 1);
        }
        b.add(parse_point(pt), k);
        cur.clear();
    };
    for (char c : t) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    if (!cur.empty()) flush();
    return b;
}

}  // namespace rigdp
