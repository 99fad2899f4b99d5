#pragma once

// Brute-force graded pieces used as independent checks on the Hilbert series code.

#include "rigdp/formats.hpp"
#include "rigdp/analysis.hpp"
#include "rigdp/modp.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

// Graded pieces of the weighted Grassmannian cone ring by counting standard
// monomials: products p_{i1 j1} ... p_{ik jk} with i1 <= ... <= ik and j1 <= ... <= jk.
inline std::vector<long long> grassmannian_pieces(const std::array<int, 5>& w2, int order) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    auto wt = [&](int p) { return (w2[pairs[p].first] + w2[pairs[p].second]) / 2; };
    // f[m][p]: chains of total weight m whose last element is pair p
    std::vector<std::vector<long long>> f(order + 1, std::vector<long long>(10, 0));
    std::vector<long long> out(order + 1, 0);
    out[0] = 1;
    for (int m = 1; m <= order; ++m)
        for (int p = 0; p < 10; ++p) {
            int a = wt(p);
            if (a > m) continue;
            long long c = (a == m) ? 1 : 0;
            for (int prev = 0; prev < 10; ++prev)
                if (pairs[prev].first <= pairs[p].first && pairs[prev].second <= pairs[p].second) c += f[m - a][prev];
            f[m][p] = c;
            out[m] += c;
        }
    return out;
}

// Segre cone pieces: pairs of monomials of equal degree k in (y_1..y_3) and (z_1..z_3),
// weight of y^alpha z^beta is sum alpha_i b_i + beta_j c_j.
inline std::vector<long long> segre_pieces(const std::array<int, 3>& b2, const std::array<int, 3>& c2, int order) {
    std::vector<long long> out(order + 1, 0);
    int minstep = (b2[0] + c2[0]) / 2;
    for (int k = 0; k * minstep <= order; ++k) {
        for (int a0 = 0; a0 <= k; ++a0)
            for (int a1 = 0; a0 + a1 <= k; ++a1) {
                int a2 = k - a0 - a1;
                int wb = a0 * b2[0] + a1 * b2[1] + a2 * b2[2];
                for (int c0 = 0; c0 <= k; ++c0)
                    for (int c1 = 0; c0 + c1 <= k; ++c1) {
                        int cc = k - c0 - c1;
                        int w = wb + c0 * c2[0] + c1 * c2[1] + cc * c2[2];
                        if (w % 2) continue;  // cannot happen for valid data
                        if (w / 2 <= order && w >= 0) ++out[w / 2];
                    }
            }
        if (k > 2 * order + 2) break;
    }
    return out;
}

// multiply a series by 1/(1 - t^c) or (1 - t^c)
inline void divide_one_minus(std::vector<long long>& s, int c) {
    for (size_t i = c; i < s.size(); ++i) s[i] += s[i - c];
}
inline void multiply_one_minus(std::vector<long long>& s, int c) {
    for (size_t i = s.size(); i-- > static_cast<size_t>(c);) s[i] -= s[i - c];
}

// Hilbert function of the descriptor's variety to the given order.
inline std::vector<long long> descriptor_pieces(const rigdp::FormatDescriptor& f, int order) {
    std::vector<long long> s;
    if (f.kind == rigdp::FormatKind::PfaffGr)
        s = grassmannian_pieces(f.w2, order);
    else
        s = segre_pieces(f.b2, f.c2, order);
    for (int c : f.cones) divide_one_minus(s, c);
    for (int c : f.cuts) multiply_one_minus(s, c);
    return s;
}

// Same pieces by exact rank computations over F_p on an explicit member in final coordinates.
inline std::vector<long long> member_pieces(const rigdp::FormatDescriptor& f, int order, uint64_t seed = 1) {
    auto m = rigdp::build_member(f, seed);
    std::vector<long long> out(order + 1);
    for (int d = 0; d <= order; ++d) out[d] = rigdp::modp::hilbert_value(m.eqs, m.w, d);
    return out;
}

inline std::vector<long long> series_pieces(const rigdp::FormatDescriptor& f, int order) {
    auto c = rigdp::expand_series(rigdp::hilbert_series(f), order);
    return std::vector<long long>(c.begin(), c.end());
}

// sub-multisets of xs of size k
inline void sub_multisets(const std::vector<int>& xs, size_t i, size_t k, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    if (i == xs.size()) return;
    size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    for (size_t take = 0; take <= j - i && cur.size() + take <= k; ++take) {
        cur.insert(cur.end(), take, xs[i]);
        sub_multisets(xs, j, k, cur, out);
        cur.resize(cur.size() - take);
    }
}

// Every Pfaffian and Segre descriptor with at most one cone whose pre-cut weights are all <= maxw.
// Entries are shifted so that the smallest is positive; b1 = 0 for Segre.
inline std::vector<rigdp::FormatDescriptor> small_descriptors(int maxw) {
    using rigdp::FormatDescriptor;
    std::vector<rigdp::FormatDescriptor> out;
    auto add = [&](auto make, std::vector<int> entries, int base) {
        for (int cone = 0; cone <= maxw; ++cone) {
            std::vector<int> cones;
            if (cone) cones.push_back(cone);
            std::vector<int> pool = entries;
            pool.insert(pool.end(), cones.begin(), cones.end());
            std::sort(pool.begin(), pool.end());
            std::vector<std::vector<int>> cuts;
            std::vector<int> cur;
            sub_multisets(pool, 0, base + cones.size(), cur, cuts);
            for (const auto& c : cuts) {
                try {
                    out.push_back(make(cones, c));
                } catch (const rigdp::InvalidFormat&) {
                }
            }
        }
    };
    for (int W1 = -2 * maxw; W1 <= 2 * maxw; ++W1)
        for (int W2 = W1; W2 <= 2 * maxw; W2 += 2)
            for (int W3 = W2; W3 <= 2 * maxw; W3 += 2)
                for (int W4 = W3; W4 <= 2 * maxw; W4 += 2)
                    for (int W5 = W4; W4 + W5 <= 2 * maxw; W5 += 2) {
                        if (W1 + W2 < 2) continue;
                        std::array<int, 5> w{W1, W2, W3, W4, W5};
                        auto a = rigdp::plucker_weights(w);
                        add([&](auto& cones, auto& cuts) { return FormatDescriptor::pfaff(w, cones, cuts); },
                            std::vector<int>(a.begin(), a.end()), 4);
                    }
    for (int b2 = 0; b2 <= maxw; ++b2)
        for (int b3 = b2; b3 <= maxw; ++b3)
            for (int c1 = 1; c1 <= maxw; ++c1)
                for (int c2 = c1; c2 <= maxw; ++c2)
                    for (int c3 = c2; b3 + c3 <= maxw; ++c3) {
                        std::array<int, 3> B{0, 2 * b2, 2 * b3}, C{2 * c1, 2 * c2, 2 * c3};
                        auto s = rigdp::segre_weights(B, C);
                        add([&](auto& cones, auto& cuts) { return FormatDescriptor::segre(B, C, cones, cuts); },
                            std::vector<int>(s.a.begin(), s.a.end()), 2);
                    }
    return out;
}

}  // namespace oracle
