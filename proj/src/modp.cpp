#include "rigdp/modp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace rigdp::modp {

uint32_t inv(uint32_t a) {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    uint64_t r = 1, b = a, e = P - 2;
    while (e) {
        if (e & 1) r = reduce64(r * b);
        b = reduce64(b * b);
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

Poly var(int i) {
    Mono m;
    m.set(i, 1);
    return {{m, 1}};
}

Poly constant(uint32_t c) {
    if (c % P == 0) return {};
    return {{Mono{}, c % P}};
}

Poly canonical(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    Poly out;
    out.reserve(t.size());
    for (const Term& x : t) {
        if (!out.empty() && out.back().m == x.m)
            out.back().c = add(out.back().c, x.c);
        else
            out.push_back(x);
        if (out.back().c == 0) out.pop_back();
    }
    return out;
}

namespace {

Poly combine(const Poly& a, const Poly& b, bool negate_b) {
    Poly out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].m < b[j].m)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].m < a[i].m) {
            out.push_back({b[j].m, negate_b ? sub(0, b[j].c) : b[j].c});
            ++j;
        } else {
            uint32_t c = negate_b ? sub(a[i].c, b[j].c) : add(a[i].c, b[j].c);
            if (c) out.push_back({a[i].m, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly add(const Poly& a, const Poly& b) { return combine(a, b, false); }
Poly sub(const Poly& a, const Poly& b) { return combine(a, b, true); }

Poly scale(const Poly& a, uint32_t c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& t : out) t.c = mul(t.c, c);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Term> t;
    t.reserve(a.size() * b.size());
    for (const Term& x : a)
        for (const Term& y : b) t.push_back({x.m + y.m, mul(x.c, y.c)});
    return canonical(std::move(t));
}

Poly diff(const Poly& a, int i) {
    std::vector<Term> t;
    for (const Term& x : a) {
        int e = x.m.exp(i);
        if (e == 0) continue;
        Mono m = x.m;
        m.set(i, e - 1);
        uint32_t c = mul(x.c, static_cast<uint32_t>(e));
        if (c) t.push_back({m, c});
    }
    return canonical(std::move(t));
}

Poly restrict_to(const Poly& a, const std::vector<int>& S) {
    std::vector<Term> t;
    for (const Term& x : a) {
        Mono m;
        int used = 0;
        for (size_t k = 0; k < S.size(); ++k) {
            int e = x.m.exp(S[k]);
            m.set(static_cast<int>(k), e);
            used += e;
        }
        int total = 0;
        for (int i = 0; i < kMaxVars; ++i) total += x.m.exp(i);
        if (used == total) t.push_back({m, x.c});
    }
    return canonical(std::move(t));
}

int degree(const Poly& a, const Weights& w) {
    if (a.empty()) return -1;
    int d = 0;
    for (size_t i = 0; i < w.size(); ++i) d += a[0].m.exp(static_cast<int>(i)) * w[i];
    return d;
}

namespace {

struct MonoKeyHash {
    size_t operator()(const std::pair<Weights, int>& k) const {
        size_t h = std::hash<int>()(k.second);
        for (int x : k.first) h = h * 1000003u ^ std::hash<int>()(x);
        return h;
    }
};

void enumerate(const Weights& w, size_t i, int rem, Mono cur, std::vector<Mono>& out) {
    if (i + 1 == w.size()) {
        if (rem % w[i] == 0) {
            int e = rem / w[i];
            if (e > 0xffff) throw std::overflow_error("exponent overflow");
            cur.set(static_cast<int>(i), e);
            out.push_back(cur);
        }
        return;
    }
    for (int e = 0; e * w[i] <= rem; ++e) {
        cur.set(static_cast<int>(i), e);
        enumerate(w, i + 1, rem - e * w[i], cur, out);
    }
}

}  // namespace

const std::vector<Mono>& monomials(const Weights& w, int d) {
    thread_local std::unordered_map<std::pair<Weights, int>, std::vector<Mono>, MonoKeyHash> cache;
    thread_local size_t cached_terms = 0;
    auto key = std::make_pair(w, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (cached_terms > (1u << 24)) {
        cache.clear();
        cached_terms = 0;
    }
    if (w.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    std::vector<Mono> out;
    if (d == 0) {
        out.push_back(Mono{});
    } else if (d > 0 && !w.empty()) {
        enumerate(w, 0, d, Mono{}, out);
    }
    std::sort(out.begin(), out.end());
    cached_terms += out.size() + 1;
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

uint32_t random_unit(Rng& rng) {
    std::uniform_int_distribution<uint32_t> dist(1, P - 1);
    return dist(rng);
}

Poly random_form(const Weights& w, int d, Rng& rng) {
    Poly p;
    for (const Mono& m : monomials(w, d)) p.push_back({m, random_unit(rng)});
    return p;  // monomials() is sorted
}

long hilbert_value(const std::vector<Poly>& polys, const Weights& w, int delta) {
    const std::vector<Mono>& cols = monomials(w, delta);
    const long n = static_cast<long>(cols.size());
    if (n == 0) return 0;
    auto col_of = [&](Mono m) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m);
        return static_cast<int>(it - cols.begin());
    };
    std::vector<int> pivot(n, -1);
    std::vector<std::vector<std::pair<int, uint32_t>>> rows;
    std::vector<uint32_t> work(n, 0);
    long rank = 0;
    for (const Poly& g : polys) {
        if (g.empty()) continue;
        int e = degree(g, w);
        if (e > delta) continue;
        if (e == 0) return 0;  // unit ideal
        for (const Mono& mu : monomials(w, delta - e)) {
            int lo = static_cast<int>(n);
            for (const Term& t : g) {
                int c = col_of(t.m + mu);
                work[c] = t.c;
                lo = std::min(lo, c);
            }
            bool added = false;
            for (int c = lo; c < n; ++c) {
                uint32_t f = work[c];
                if (!f) continue;
                int pr = pivot[c];
                if (pr < 0) {
                    // new pivot: normalize and store the tail
                    uint32_t s = inv(f);
                    std::vector<std::pair<int, uint32_t>> row;
                    for (int k = c; k < n; ++k)
                        if (work[k]) {
                            row.push_back({k, mul(work[k], s)});
                            work[k] = 0;
                        }
                    pivot[c] = static_cast<int>(rows.size());
                    rows.push_back(std::move(row));
                    ++rank;
                    added = true;
                    break;
                }
                uint32_t nf = P - f;
                for (const auto& [k, v] : rows[pr]) work[k] = reduce64(work[k] + static_cast<uint64_t>(nf) * v);
            }
            if (!added) {
                // row reduced to zero; work is already clear
            }
            if (rank == n) return 0;
        }
    }
    return n - rank;
}

std::vector<Poly> basis_by_degree(const std::vector<Poly>& polys, const Weights& w) {
    std::map<int, std::vector<const Poly*>> bydeg;
    for (const Poly& g : polys)
        if (!g.empty()) bydeg[degree(g, w)].push_back(&g);
    std::vector<Poly> out;
    for (auto& [d, gs] : bydeg) {
        std::vector<Mono> mons;
        for (const Poly* g : gs)
            for (const Term& t : *g) mons.push_back(t.m);
        std::sort(mons.begin(), mons.end());
        mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
        const int n = static_cast<int>(mons.size());
        std::vector<std::vector<uint32_t>> M;
        for (const Poly* g : gs) {
            std::vector<uint32_t> row(n, 0);
            for (const Term& t : *g) row[std::lower_bound(mons.begin(), mons.end(), t.m) - mons.begin()] = t.c;
            M.push_back(std::move(row));
        }
        int r = 0;
        for (int c = 0; c < n && r < static_cast<int>(M.size()); ++c) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(M.size()); ++i)
                if (M[i][c]) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(M[r], M[piv]);
            uint32_t s = inv(M[r][c]);
            for (auto& x : M[r]) x = mul(x, s);
            for (int i = 0; i < static_cast<int>(M.size()); ++i) {
                if (i == r || !M[i][c]) continue;
                uint32_t f = P - M[i][c];
                for (int k = c; k < n; ++k)
                    if (M[r][k]) M[i][k] = reduce64(M[i][k] + static_cast<uint64_t>(f) * M[r][k]);
            }
            ++r;
        }
        for (int i = 0; i < r; ++i) {
            Poly p;
            for (int k = 0; k < n; ++k)
                if (M[i][k]) p.push_back({mons[k], M[i][k]});
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Poly> minors(const std::vector<std::vector<Poly>>& M, int k) {
    const int nr = static_cast<int>(M.size());
    if (nr == 0 || k <= 0) return {};
    const int nc = static_cast<int>(M[0].size());
    std::vector<int> rows, cols;
    for (int i = 0; i < nr; ++i) {
        bool nz = false;
        for (int j = 0; j < nc; ++j) nz = nz || !M[i][j].empty();
        if (nz) rows.push_back(i);
    }
    for (int j = 0; j < nc; ++j) {
        bool nz = false;
        for (int i : rows) nz = nz || !M[i][j].empty();
        if (nz) cols.push_back(j);
    }
    if (static_cast<int>(rows.size()) < k || static_cast<int>(cols.size()) < k) return {};
    // det of rows (bitmask) x cols (bitmask) with equal popcount, expanded along the lowest row
    std::unordered_map<uint32_t, Poly> memo;
    std::function<const Poly&(uint32_t, uint32_t)> det = [&](uint32_t rm, uint32_t cm) -> const Poly& {
        uint32_t key = (rm << 16) | cm;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int r0 = __builtin_ctz(rm);
        Poly acc;
        if (__builtin_popcount(rm) == 1) {
            acc = M[r0][__builtin_ctz(cm)];
        } else {
            int pos = 0;
            for (int j = 0; j < nc; ++j) {
                if (!(cm >> j & 1)) continue;
                const Poly& e = M[r0][j];
                if (!e.empty()) {
                    const Poly& sub_det = det(rm & ~(1u << r0), cm & ~(1u << j));
                    if (!sub_det.empty()) {
                        Poly t = mul(e, sub_det);
                        acc = (pos % 2 == 0) ? add(acc, t) : sub(acc, t);
                    }
                }
                ++pos;
            }
        }
        return memo.emplace(key, std::move(acc)).first->second;
    };
    std::vector<Poly> out;
    std::vector<int> ri(k), ci(k);
    std::function<void(int, int, uint32_t)> pick_rows, pick_cols;
    uint32_t cur_rows = 0;
    pick_cols = [&](int start, int left, uint32_t cm) {
        if (left == 0) {
            const Poly& d = det(cur_rows, cm);
            if (!d.empty()) out.push_back(d);
            return;
        }
        for (size_t j = start; j + left <= cols.size(); ++j)
            pick_cols(static_cast<int>(j) + 1, left - 1, cm | (1u << cols[j]));
    };
    pick_rows = [&](int start, int left, uint32_t rm) {
        if (left == 0) {
            cur_rows = rm;
            pick_cols(0, k, 0);
            return;
        }
        for (size_t i = start; i + left <= rows.size(); ++i)
            pick_rows(static_cast<int>(i) + 1, left - 1, rm | (1u << rows[i]));
    };
    pick_rows(0, k, 0);
    return out;
}

}  // namespace rigdp::modp
