#include "rigdp/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rigdp {

int gcd_of(const std::vector<int>& xs) {
    int g = 0;
    for (int x : xs) g = std::gcd(g, x);
    return g;
}

long long lcm_of(const std::vector<int>& xs) {
    long long l = 1;
    for (int x : xs) l = std::lcm(l, static_cast<long long>(x));
    return l;
}

std::string weights_str(Weights w) {
    std::sort(w.begin(), w.end());
    std::ostringstream os;
    os << "P(";
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (i) os << ",";
        os << w[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    os << ")";
    return os.str();
}

bool is_wellformed_space(const Weights& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        int g = 0;
        for (size_t j = 0; j < w.size(); ++j)
            if (j != i) g = std::gcd(g, w[j]);
        if (g != 1) return false;
    }
    return true;
}

std::vector<Stratum> singular_strata(const Weights& w) {
    // the gcds of subsets are exactly the values gcd(a_{S_r}) = r with S_r = {i : r | a_i}
    std::set<int> rs;
    int maxw = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    for (int r = 2; r <= maxw; ++r) {
        int g = 0;
        for (int a : w)
            if (a % r == 0) g = std::gcd(g, a);
        if (g == r) rs.insert(r);
    }
    std::vector<Stratum> out;
    for (int r : rs) {
        Stratum s{r, {}};
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] % r == 0) s.indices.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace rigdp
