#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigdp {

struct NonIsolatedPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 1/r(a,b), stored normalized as a = 1.
struct OrbifoldPoint {
    int r = 0;
    int a = 0;
    int b = 0;

    int m() const;  // gcd(a+b, r)
    int k() const;  // r / m
    std::string str() const;
    friend auto operator<=>(const OrbifoldPoint&, const OrbifoldPoint&) = default;
};

OrbifoldPoint normalize(int r, int a, int b);
// Accepts forms like "1/7(1,4)" or "1/7(5,10)"; result is normalized.
OrbifoldPoint parse_point(const std::string& s);

enum class PointClass { T, R, Neither };
const char* class_name(PointClass c);
PointClass classify(const OrbifoldPoint& p);

const std::vector<OrbifoldPoint>& rigid_catalog();
bool in_rigid_catalog(const OrbifoldPoint& p);

class Basket {
public:
    void add(const OrbifoldPoint& p, int k = 1);
    const std::map<OrbifoldPoint, int>& entries() const { return entries_; }
    int size() const;  // with multiplicity
    bool empty() const { return entries_.empty(); }
    // "2x1/5(1,2),1/7(1,1)"; empty basket is "-"
    std::string str() const;
    // inverse of str(); also accepts "2 x 1/5(1,2)" and unnormalized points
    static Basket parse(const std::string& s);
    friend bool operator==(const Basket&, const Basket&) = default;

private:
    std::map<OrbifoldPoint, int> entries_;
};

}  // namespace rigdp
