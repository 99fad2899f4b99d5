#include "rigdp/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace rigdp {

using modp::Mono;
using modp::Poly;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::NotFano: return "not-fano";
        case Verdict::NotWellformed: return "not-wellformed";
        case Verdict::NotQuasismooth: return "not-quasismooth";
        case Verdict::NonRigid: return "non-rigid-basket";
        case Verdict::OutOfRange: return "r-out-of-range";
        case Verdict::Integrity: return "integrity-failure";
    }
    return "?";
}

uint64_t descriptor_hash(const FormatDescriptor& f) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : f.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

// Positions of the 4 indices other than i, for Pf_i.
std::array<int, 4> complement4(int i) {
    std::array<int, 4> c{};
    int k = 0;
    for (int x = 0; x < 5; ++x)
        if (x != i) c[k++] = x;
    return c;
}

// Eliminate the last alive position of each cut degree; returns alive positions.
std::vector<int> eliminate(const Weights& pre, const std::vector<int>& cuts) {
    std::vector<int> alive(pre.size());
    std::iota(alive.begin(), alive.end(), 0);
    for (int c : cuts) {
        auto it = std::find_if(alive.rbegin(), alive.rend(), [&](int v) { return pre[v] == c; });
        if (it == alive.rend()) throw InvalidFormat("cut degree not an ambient weight");
        alive.erase(std::next(it).base());
    }
    return alive;
}

}  // namespace

Member build_member(const FormatDescriptor& f, uint64_t seed) {
    modp::Rng rng(descriptor_hash(f) ^ (seed * 0x9e3779b97f4a7c15ULL));
    Member m;
    m.kind = f.kind;
    m.codim = f.codim();
    if (f.kind == FormatKind::Hypersurface || f.kind == FormatKind::CI2) {
        m.w = f.weights;
        for (int d : f.degrees) {
            m.eqs.push_back(modp::random_form(m.w, d, rng));
            m.eq_degrees.push_back(d);
        }
        return m;
    }
    Weights pre = pre_ambient(f);
    const int nentries = f.kind == FormatKind::PfaffGr ? 10 : 9;
    std::vector<int> alive = eliminate(pre, f.cuts);
    std::vector<int> pos(pre.size(), -1);
    for (size_t k = 0; k < alive.size(); ++k) {
        pos[alive[k]] = static_cast<int>(k);
        m.w.push_back(pre[alive[k]]);
    }
    for (size_t v = nentries; v < pre.size(); ++v)
        if (pos[v] >= 0) m.cone_vars.push_back(pos[v]);
    m.cut_degrees = f.cuts;
    for (int e = 0; e < nentries; ++e) {
        m.entry_weights.push_back(pre[e]);
        m.entry_var.push_back(pos[e]);
        m.entries.push_back(pos[e] >= 0 ? modp::var(pos[e]) : modp::random_form(m.w, pre[e], rng));
    }
    if (f.kind == FormatKind::PfaffGr) {
        auto E = [&](int i, int j) -> const Poly& { return m.entries[plucker_index(i, j)]; };
        auto d = pfaffian_degrees(f.w2);
        for (int i = 0; i < 5; ++i) {
            auto [j, k, l, n] = complement4(i);
            Poly pf = modp::mul(E(j, k), E(l, n));
            pf = modp::sub(pf, modp::mul(E(j, l), E(k, n)));
            pf = modp::add(pf, modp::mul(E(j, n), E(k, l)));
            m.eqs.push_back(std::move(pf));
            m.eq_degrees.push_back(d[i]);
        }
    } else {
        auto s = segre_weights(f.b2, f.c2);
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                int r1 = k == 0 ? 1 : 0, r2 = k == 2 ? 1 : 2;
                int c1 = l == 0 ? 1 : 0, c2 = l == 2 ? 1 : 2;
                Poly mn = modp::mul(m.entries[3 * r1 + c1], m.entries[3 * r2 + c2]);
                mn = modp::sub(mn, modp::mul(m.entries[3 * r1 + c2], m.entries[3 * r2 + c1]));
                m.eqs.push_back(std::move(mn));
                m.eq_degrees.push_back(s.minors[3 * k + l]);
            }
    }
    return m;
}

GenericEquationModel generic_model(const FormatDescriptor& f, uint64_t seed) {
    GenericEquationModel g{build_member(f, seed), {}};
    for (const Poly& p : g.member.eqs) {
        std::vector<Mono> s;
        for (const auto& t : p) s.push_back(t.m);
        g.support.push_back(std::move(s));
    }
    return g;
}

int frobenius_number(const std::vector<int>& gens) {
    if (gens.empty()) return 0;
    int m = *std::min_element(gens.begin(), gens.end());
    if (m == 1) return -1;
    // shortest representable value in each residue class mod m
    const long long INF = 1LL << 60;
    std::vector<long long> dist(m, INF);
    dist[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < m; ++r) {
            if (dist[r] == INF) continue;
            for (int x : gens) {
                int t = (r + x) % m;
                if (dist[r] + x < dist[t]) {
                    dist[t] = dist[r] + x;
                    changed = true;
                }
            }
        }
    }
    long long mx = *std::max_element(dist.begin(), dist.end());
    if (mx >= INF) return -1;  // gcd > 1; caller divides out gcd first
    return static_cast<int>(mx - m);
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int next_prime(int n) {
    while (!is_prime(n)) ++n;
    return n;
}

// max Frobenius number of w_T / r over subsets T with gcd exactly r, for each r
std::map<int, int> frobenius_by_gcd(const Weights& w) {
    std::map<int, int> out;
    const int n = static_cast<int>(w.size());
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(w[i]);
        int g = gcd_of(sub);
        for (int& x : sub) x /= g;
        int fr = frobenius_number(sub);
        auto it = out.find(g);
        if (it == out.end() || it->second < fr) out[g] = fr;
    }
    return out;
}

std::vector<int> sorted_degrees_desc(const std::vector<Poly>& polys, const Weights& w) {
    std::vector<int> d;
    for (const Poly& p : polys)
        if (!p.empty()) d.push_back(modp::degree(p, w));
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace

bool empty_projectively(const std::vector<Poly>& in, const Weights& w) {
    std::vector<Poly> polys;
    for (const Poly& p : in)
        if (!p.empty()) polys.push_back(p);
    if (polys.empty()) return w.empty();
    for (const Poly& p : polys)
        if (modp::degree(p, w) == 0) return true;
    const int n = static_cast<int>(w.size());
    auto degs = sorted_degrees_desc(polys, w);
    long reg = *std::max_element(w.begin(), w.end());
    for (int i = 0; i < n && i < static_cast<int>(degs.size()); ++i) reg += degs[i];
    int mindeg = degs.back();
    for (const auto& [r, fr] : frobenius_by_gcd(w)) {
        int start = std::max({fr + 1, (mindeg + r - 1) / r, 2});
        // nonzero past the regularity bound means a common zero
        for (int k = next_prime(start);; k = next_prime(k + 1)) {
            if (modp::hilbert_value(polys, w, r * k) == 0) break;
            if (1L * r * k > reg) return false;
        }
    }
    return true;
}

namespace {

// g = sum c_i x_i^(L / w_i) with L = lcm(w) avoids any finite set for generic c
bool finite_locus(const std::vector<Poly>& polys, const Weights& w) {
    long long L = lcm_of(w);
    modp::Rng rng(0x5eed1234ULL + polys.size());
    Poly g;
    for (size_t i = 0; i < w.size(); ++i) {
        Poly t = modp::constant(modp::random_unit(rng));
        for (long long k = 0; k < L / w[i]; ++k) t = modp::mul(t, modp::var(static_cast<int>(i)));
        g = modp::add(g, t);
    }
    std::vector<Poly> cut = polys;
    cut.push_back(g);
    return empty_projectively(cut, w);
}

}  // namespace

std::optional<long> stable_count(const std::vector<Poly>& in, const Weights& w, int r) {
    std::vector<Poly> polys;
    for (const Poly& p : in)
        if (!p.empty()) polys.push_back(p);
    if (polys.empty()) {
        if (w.size() == 1) return 1;
        return std::nullopt;
    }
    std::vector<int> b;
    for (int x : w) b.push_back(x / r);
    auto degs = sorted_degrees_desc(polys, w);
    int top = 0;
    for (size_t i = 0; i < w.size() && i < degs.size(); ++i) top += degs[i];
    int start = std::max(*std::max_element(b.begin(), b.end()) + 1, top / r + 1);
    for (const auto& [g, fr] : frobenius_by_gcd(b))
        if (g == 1) start = std::max(start, fr + 1);
    int p = next_prime(start);
    std::vector<long> vals;
    for (int tries = 0; tries < 8; ++tries) {
        vals.push_back(modp::hilbert_value(polys, w, r * p));
        size_t s = vals.size();
        if (s >= 2 && vals[s - 1] == vals[s - 2]) return vals.back();
        // values moving: a positive dimensional locus still meets a generic hypersurface
        if (s == 2 && !finite_locus(polys, w)) return std::nullopt;
        p = next_prime(p + 1);
    }
    return std::nullopt;
}

namespace {

bool in_allowed_range(int r) { return r >= 3 && r <= 10; }

std::vector<int> positions(uint32_t mask, const std::vector<int>& S) {
    std::vector<int> out;
    for (size_t k = 0; k < S.size(); ++k)
        if (mask >> k & 1) out.push_back(S[k]);
    return out;
}

std::string coords_str(const Member& m, const std::vector<int>& idx) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << "x" << idx[i] + 1 << ":" << m.w[idx[i]];
    os << "}";
    return os.str();
}

class Engine {
public:
    explicit Engine(const Member& m) : m_(m) {}

    const Member& member() const { return m_; }

    std::vector<Poly> restricted(const std::vector<int>& U, const std::vector<Poly>& extra) const {
        std::vector<Poly> out;
        for (const Poly& f : m_.eqs) {
            Poly q = modp::restrict_to(f, U);
            if (!q.empty()) out.push_back(std::move(q));
        }
        for (const Poly& f : extra) {
            Poly q = modp::restrict_to(f, U);
            if (!q.empty()) out.push_back(std::move(q));
        }
        return out;
    }

    Weights weights_of(const std::vector<int>& U) const {
        Weights w;
        for (int i : U) w.push_back(m_.w[i]);
        return w;
    }

    // points with support inside U and stabilizer exactly r, on X cut by the extra equations
    std::optional<long> exact_count(const std::vector<int>& U, int r, const std::vector<Poly>& extra) const {
        Weights wU = weights_of(U);
        if (gcd_of(wU) != r) return 0;
        auto F = restricted(U, extra);
        if (U.size() == 1) return F.empty() ? 1 : 0;
        return stable_count(F, wU, r);
    }

    // support-exact counts N(T) for all T inside S via inclusion-exclusion
    std::optional<std::map<uint32_t, long>> orbit_counts(const std::vector<int>& S, int r,
                                                         const std::vector<Poly>& extra) const {
        const int s = static_cast<int>(S.size());
        const uint32_t full = (1u << s) - 1;
        std::vector<long> E(full + 1, 0);
        std::vector<uint32_t> masks;
        for (uint32_t U = 1; U <= full; ++U) masks.push_back(U);
        std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        std::vector<bool> known_zero(full + 1, false);
        for (uint32_t U : masks) {
            bool zero = false;
            for (int k = 0; k < s && !zero; ++k)
                if (!(U >> k & 1) && known_zero[U | (1u << k)]) zero = true;
            if (!zero) {
                auto c = exact_count(positions(U, S), r, extra);
                if (!c) return std::nullopt;
                E[U] = *c;
                zero = *c == 0;
            }
            known_zero[U] = zero;
        }
        std::map<uint32_t, long> N;
        for (uint32_t T = 1; T <= full; ++T) {
            if (known_zero[T]) continue;
            long n = 0;
            for (uint32_t U = T;; U = (U - 1) & T) {
                if (U) n += ((__builtin_popcount(T) - __builtin_popcount(U)) % 2 ? -1 : 1) * E[U];
                if (!U) break;
            }
            if (n != 0) N[T] = n;
        }
        return N;
    }

    // normal weights for each candidate chart at an orbit with support T; the bool marks a
    // chart whose unit entry is a coordinate of T (valid at every point of the orbit)
    std::vector<std::pair<std::vector<int>, int>> normal_candidates(const std::vector<int>& T, int r) const {
        std::vector<std::pair<std::vector<int>, int>> out;  // (normals, entry index or -1)
        if (m_.kind == FormatKind::Hypersurface || m_.kind == FormatKind::CI2) {
            out.push_back({m_.eq_degrees, -1});
            return out;
        }
        for (size_t e = 0; e < m_.entries.size(); ++e) {
            if (m_.entry_weights[e] % r) continue;
            int v = m_.entry_var[e];
            bool coordinate_in_T = v >= 0 && std::find(T.begin(), T.end(), v) != T.end();
            if (!coordinate_in_T && modp::restrict_to(m_.entries[e], T).empty()) continue;
            std::vector<int> normals = entry_normals(static_cast<int>(e));
            if (coordinate_in_T) return {{normals, -1}};
            out.push_back({normals, static_cast<int>(e)});
        }
        return out;
    }

    std::vector<int> entry_normals(int e) const {
        std::vector<int> n;
        if (m_.kind == FormatKind::PfaffGr) {
            int a = 0, b = 0;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (plucker_index(i, j) == e) {
                        a = i;
                        b = j;
                    }
            std::vector<int> c;
            for (int x = 0; x < 5; ++x)
                if (x != a && x != b) c.push_back(x);
            n = {m_.entry_weights[plucker_index(c[0], c[1])], m_.entry_weights[plucker_index(c[0], c[2])],
                 m_.entry_weights[plucker_index(c[1], c[2])]};
        } else {
            int a = e / 3, b = e % 3;
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    if (j != a && l != b) n.push_back(m_.entry_weights[3 * j + l]);
        }
        return n;
    }

    std::optional<std::vector<int>> local_type(int r, const std::vector<int>& normals) const {
        std::multiset<int> tw;
        for (int a : m_.w) tw.insert(a % r);
        std::vector<int> rm = normals;
        for (int& x : rm) x %= r;
        rm.push_back(0);
        for (int x : rm) {
            auto it = tw.find(x);
            if (it == tw.end()) return std::nullopt;
            tw.erase(it);
        }
        if (tw.size() != 2) return std::nullopt;
        return std::vector<int>(tw.begin(), tw.end());
    }

    // lexicographically first set of `codim` (equation, coordinate) pairs with distinct
    // coordinates such that equation j has a monomial x_T^M * x_m
    std::optional<std::vector<std::pair<int, int>>> tangent_matching(const std::vector<int>& T) const {
        const int neq = static_cast<int>(m_.eqs.size());
        const int n = static_cast<int>(m_.w.size());
        std::vector<std::vector<int>> adj(neq);
        for (int j = 0; j < neq; ++j) {
            std::vector<bool> ok(n, false);
            for (const auto& t : m_.eqs[j]) {
                for (int mv = 0; mv < n; ++mv) {
                    int e = t.m.exp(mv);
                    if (e == 0 || ok[mv]) continue;
                    bool rest_in_T = true;
                    for (int v = 0; v < n && rest_in_T; ++v) {
                        int ev = t.m.exp(v) - (v == mv ? 1 : 0);
                        if (ev > 0 && std::find(T.begin(), T.end(), v) == T.end()) rest_in_T = false;
                    }
                    if (rest_in_T) ok[mv] = true;
                }
            }
            for (int mv = 0; mv < n; ++mv)
                if (ok[mv]) adj[j].push_back(mv);
        }
        std::vector<std::pair<int, int>> chosen;
        std::vector<bool> used(n, false);
        std::function<bool(int)> dfs = [&](int j) -> bool {
            if (static_cast<int>(chosen.size()) == m_.codim) return true;
            if (j == neq) return false;
            if (neq - j < m_.codim - static_cast<int>(chosen.size())) return false;
            for (int mv : adj[j]) {
                if (used[mv]) continue;
                used[mv] = true;
                chosen.push_back({j, mv});
                if (dfs(j + 1)) return true;
                chosen.pop_back();
                used[mv] = false;
            }
            return dfs(j + 1);
        };
        if (dfs(0)) return chosen;
        return std::nullopt;
    }

    // singular locus of X inside P(S) is empty
    bool quasismooth_on(const std::vector<int>& S) const {
        Weights wS = weights_of(S);
        std::vector<Poly> gens = restricted(S, {});
        const int n = static_cast<int>(m_.w.size());
        std::vector<std::vector<Poly>> J(m_.eqs.size(), std::vector<Poly>(n));
        for (size_t j = 0; j < m_.eqs.size(); ++j)
            for (int v = 0; v < n; ++v) J[j][v] = modp::restrict_to(modp::diff(m_.eqs[j], v), S);
        for (Poly& d : modp::minors(J, m_.codim)) gens.push_back(std::move(d));
        return empty_projectively(modp::basis_by_degree(gens, wS), wS);
    }

    // maximal coordinate subsets with no monomial of degree d
    std::vector<std::vector<int>> base_subspaces(int d) const {
        const int n = static_cast<int>(m_.w.size());
        std::vector<uint32_t> lacking;
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            Weights wS;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) wS.push_back(m_.w[i]);
            if (modp::monomials(wS, d).empty()) lacking.push_back(mask);
        }
        std::vector<std::vector<int>> out;
        for (uint32_t a : lacking) {
            bool maximal = true;
            for (uint32_t b : lacking)
                if (b != a && (a & b) == a) maximal = false;
            if (maximal) {
                std::vector<int> S;
                for (int i = 0; i < n; ++i)
                    if (a >> i & 1) S.push_back(i);
                out.push_back(S);
            }
        }
        return out;
    }

private:
    const Member& m_;
};

struct Outcome {
    Verdict v;
    std::string failure;
    std::string witness;
};

}  // namespace

Analysis certify(const FormatDescriptor& f, const AnalysisOptions& opt) {
    Analysis out;
    Member mem = build_member(f, opt.seed);
    out.weights = mem.w;
    Engine eng(mem);
    std::optional<Outcome> reject;
    auto fail = [&](Verdict v, std::string failure, std::string witness = {}) {
        if (!reject) reject = Outcome{v, std::move(failure), std::move(witness)};
    };
    auto finish = [&]() -> Analysis {
        if (reject) {
            out.verdict = reject->v;
            out.cert.pass = false;
            out.cert.failure = reject->failure;
            out.cert.witness = reject->witness;
        } else {
            out.verdict = Verdict::Certified;
            out.cert.pass = true;
        }
        return std::move(out);
    };

    if (canonical_degree(f) >= 0) {
        fail(Verdict::NotFano, "canonical class O(" + std::to_string(canonical_degree(f)) + ") is not negative");
        return finish();
    }
    if (!is_wellformed_space(mem.w)) {
        fail(Verdict::NotWellformed, "ambient " + weights_str(mem.w) + " is not wellformed");
        return finish();
    }
    for (const Poly& e : mem.eqs)
        if (e.empty()) {
            fail(Verdict::NotWellformed, "an equation vanishes identically");
            return finish();
        }

    // coordinate points first: cheap, and counts on strata are meaningless where X is singular
    for (size_t i = 0; i < mem.w.size(); ++i) {
        std::vector<int> T{static_cast<int>(i)};
        if (!eng.restricted(T, {}).empty()) continue;
        if (!eng.tangent_matching(T)) {
            fail(Verdict::NotQuasismooth, "no tangent variables at coordinate point " + coords_str(mem, T),
                 "fewer than " + std::to_string(mem.codim) + " distinct x_m with a monomial x^l x_m at " +
                     coords_str(mem, T));
            if (opt.early_exit) return finish();
        }
        int a = mem.w[i];
        if (a > 10 && opt.early_exit) {
            fail(Verdict::OutOfRange, "coordinate point of weight " + std::to_string(a) + " lies on X");
            return finish();
        }
        if ((a == 2 || a == 4) && opt.early_exit) {
            fail(Verdict::NonRigid, "coordinate point of weight " + std::to_string(a) + " lies on X");
            return finish();
        }
    }

    for (const Stratum& st : singular_strata(mem.w)) {
        StratumVerdict sv{st.r, st.indices, 0};
        auto N = eng.orbit_counts(st.indices, st.r, {});
        if (!N) {
            sv.points = -1;
            out.cert.strata.push_back(sv);
            fail(Verdict::NotWellformed, "X meets the stratum " + coords_str(mem, st.indices) + " in a curve");
            if (opt.early_exit) return finish();
            continue;
        }
        long total = 0;
        for (const auto& [T, n] : *N) total += n;
        sv.points = static_cast<int>(total);
        out.cert.strata.push_back(sv);
        if (total == 0) continue;
        if (total < 0) {
            fail(Verdict::Integrity, "negative point count on stratum r=" + std::to_string(st.r));
            if (opt.early_exit) return finish();
            continue;
        }
        if (st.r > 10) {
            fail(Verdict::OutOfRange, "points of index " + std::to_string(st.r) + " on X");
            if (opt.early_exit) return finish();
        } else if (!in_allowed_range(st.r) || st.r == 4) {
            fail(Verdict::NonRigid, "points of index " + std::to_string(st.r) + " on X");
            if (opt.early_exit) return finish();
        }
        for (const auto& [Tmask, n] : *N) {
            if (n < 0) {
                fail(Verdict::Integrity, "negative orbit count");
                continue;
            }
            std::vector<int> T = positions(Tmask, st.indices);
            auto tangent = eng.tangent_matching(T);
            if (!tangent) {
                fail(Verdict::NotQuasismooth, "no tangent variables on orbit " + coords_str(mem, T),
                     "fewer than " + std::to_string(mem.codim) + " distinct tangent coordinates at " +
                         coords_str(mem, T));
                if (opt.early_exit) return finish();
                continue;
            }
            // split the orbit by charts when unit entries disagree on the type
            auto cands = eng.normal_candidates(T, st.r);
            std::vector<std::pair<std::vector<int>, long>> parts;
            std::set<std::vector<int>> distinct;
            for (auto& c : cands) distinct.insert(c.first);
            if (cands.empty()) {
                fail(Verdict::NotQuasismooth, "no unit entry on orbit " + coords_str(mem, T));
                if (opt.early_exit) return finish();
                continue;
            }
            if (distinct.size() == 1) {
                parts.push_back({cands[0].first, n});
            } else {
                std::vector<Poly> zero;
                long left = n;
                for (auto& [normals, e] : cands) {
                    if (left == 0) break;
                    std::vector<Poly> next = zero;
                    next.push_back(mem.entries[e]);
                    auto sub = eng.orbit_counts(T, st.r, next);
                    long rest = 0;
                    if (sub) {
                        auto it = sub->find((1u << T.size()) - 1);
                        rest = it == sub->end() ? 0 : it->second;
                    } else {
                        rest = -1;
                    }
                    if (rest < 0 || rest > left) {
                        fail(Verdict::Integrity, "inconsistent chart split on " + coords_str(mem, T));
                        break;
                    }
                    if (left - rest > 0) parts.push_back({normals, left - rest});
                    left = rest;
                    zero = std::move(next);
                }
                if (left != 0) fail(Verdict::NotQuasismooth, "points with no unit entry on " + coords_str(mem, T));
            }
            for (auto& [normals, cnt] : parts) {
                auto tw = eng.local_type(st.r, normals);
                if (!tw) {
                    fail(Verdict::NotQuasismooth, "tangent weights do not split at " + coords_str(mem, T));
                    continue;
                }
                PointCertificate pc;
                pc.r = st.r;
                pc.support = T;
                pc.count = static_cast<int>(cnt);
                pc.tangent = *tangent;
                pc.transverse = *tw;
                try {
                    pc.type = normalize(st.r, (*tw)[0], (*tw)[1]);
                } catch (const NonIsolatedPoint&) {
                    fail(Verdict::NotWellformed, "non-isolated orbifold locus at " + coords_str(mem, T));
                    continue;
                }
                out.basket.add(pc.type, pc.count);
                if (st.r > 10)
                    fail(Verdict::OutOfRange, pc.type.str() + " has r > 10");
                else if (!in_rigid_catalog(pc.type))
                    fail(Verdict::NonRigid, pc.type.str() + " is not rigid");
                out.cert.points.push_back(std::move(pc));
            }
            if (reject && opt.early_exit) return finish();
        }
    }

    // away from these subspaces a generic member is quasismooth by Bertini
    std::set<std::vector<int>> subspaces;
    std::set<int> degs;
    if (mem.kind == FormatKind::Hypersurface || mem.kind == FormatKind::CI2)
        degs.insert(mem.eq_degrees.begin(), mem.eq_degrees.end());
    else
        degs.insert(mem.cut_degrees.begin(), mem.cut_degrees.end());
    for (int d : degs)
        for (auto& S : eng.base_subspaces(d)) subspaces.insert(S);
    if (!mem.cone_vars.empty()) subspaces.insert(mem.cone_vars);
    for (const auto& S : subspaces) {
        if (reject && opt.early_exit) break;
        // the reduction presumes a surface; a curve in a stratum already settles it
        if (reject && reject->v == Verdict::NotWellformed) break;
        out.cert.checked_subspaces.push_back(S);
        if (!eng.quasismooth_on(S)) {
            fail(Verdict::NotQuasismooth, "singular points of X inside " + coords_str(mem, S),
                 "Jacobian rank drops on the base locus " + coords_str(mem, S));
        }
    }
    return finish();
}

bool quasismooth_everywhere(const FormatDescriptor& f, uint64_t seed) {
    Member mem = build_member(f, seed);
    Engine eng(mem);
    std::vector<int> all(mem.w.size());
    std::iota(all.begin(), all.end(), 0);
    return eng.quasismooth_on(all);
}

WellformedVerdict check_wellformed_surface(const FormatDescriptor& f, const GenericEquationModel& m) {
    (void)f;
    const Member& mem = m.member;
    WellformedVerdict v;
    Engine eng(mem);
    for (const Stratum& st : singular_strata(mem.w)) {
        int nonvanishing = static_cast<int>(eng.restricted(st.indices, {}).size());
        int expected = st.dimension() - std::min(nonvanishing, mem.codim);
        if (expected > 0) {
            v.ok = false;
            v.witness = "stratum r=" + std::to_string(st.r) + " " + coords_str(mem, st.indices) + " meets X in dimension " +
                        std::to_string(expected);
            return v;
        }
    }
    return v;
}

Certificate check_quasismooth(const FormatDescriptor& f, const GenericEquationModel& /*m*/) {
    // rebuilt from the descriptor with seed 1
    AnalysisOptions opt;
    return certify(f, opt).cert;
}

Basket compute_basket(const FormatDescriptor& f, const GenericEquationModel& m) {
    (void)m;
    return certify(f, {}).basket;
}

std::optional<int> count_stratum_points(const GenericEquationModel& m, const Stratum& s) {
    Engine eng(m.member);
    long total = 0;
    const int k = static_cast<int>(s.indices.size());
    for (uint32_t T = 1; T < (1u << k); ++T) {
        std::vector<int> sub = positions(T, s.indices);
        int r = gcd_of(eng.weights_of(sub));
        // support-exact count for this T via inclusion-exclusion over its subsets
        long n = 0;
        for (uint32_t U = T;; U = (U - 1) & T) {
            if (U) {
                auto c = eng.exact_count(positions(U, s.indices), r, {});
                if (!c) return std::nullopt;
                n += ((__builtin_popcount(T) - __builtin_popcount(U)) % 2 ? -1 : 1) * *c;
            }
            if (!U) break;
        }
        total += n;
    }
    return static_cast<int>(total);
}

namespace {

using IPoly = std::map<std::vector<int>, long long>;

IPoly imul(const IPoly& a, const IPoly& b) {
    IPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

IPoly iadd(IPoly a, const IPoly& b, long long s) {
    for (const auto& [e, c] : b) a[e] += s * c;
    for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
    return a;
}

IPoly iform(const Weights& w, int d, modp::Rng& rng) {
    std::uniform_int_distribution<int> dist(1, 10);
    IPoly p;
    for (const Mono& m : modp::monomials(w, d)) {
        std::vector<int> e(w.size());
        for (size_t i = 0; i < w.size(); ++i) e[i] = m.exp(static_cast<int>(i));
        int x = dist(rng);
        p[e] = x <= 5 ? x : 5 - x;  // [-5,-1] u [1,5]
    }
    return p;
}

IPoly ivar(size_t n, int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return {{e, 1}};
}

}  // namespace

IntegerMember random_member(const FormatDescriptor& f, uint64_t seed) {
    modp::Rng rng(descriptor_hash(f) ^ (seed * 0xd1b54a32d192ed03ULL));
    IntegerMember out;
    if (f.kind == FormatKind::Hypersurface || f.kind == FormatKind::CI2) {
        out.w = f.weights;
        for (int d : f.degrees) {
            out.eqs.push_back(iform(out.w, d, rng));
            out.eq_degrees.push_back(d);
        }
        return out;
    }
    Weights pre = pre_ambient(f);
    const int nentries = f.kind == FormatKind::PfaffGr ? 10 : 9;
    std::vector<int> alive = eliminate(pre, f.cuts);
    std::vector<int> pos(pre.size(), -1);
    for (size_t k = 0; k < alive.size(); ++k) {
        pos[alive[k]] = static_cast<int>(k);
        out.w.push_back(pre[alive[k]]);
    }
    std::vector<IPoly> E;
    for (int e = 0; e < nentries; ++e)
        E.push_back(pos[e] >= 0 ? ivar(out.w.size(), pos[e]) : iform(out.w, pre[e], rng));
    if (f.kind == FormatKind::PfaffGr) {
        auto d = pfaffian_degrees(f.w2);
        for (int i = 0; i < 5; ++i) {
            auto [j, k, l, n] = complement4(i);
            auto e = [&](int x, int y) -> const IPoly& { return E[plucker_index(x, y)]; };
            IPoly pf = imul(e(j, k), e(l, n));
            pf = iadd(pf, imul(e(j, l), e(k, n)), -1);
            pf = iadd(pf, imul(e(j, n), e(k, l)), 1);
            out.eqs.push_back(std::move(pf));
            out.eq_degrees.push_back(d[i]);
        }
    } else {
        auto s = segre_weights(f.b2, f.c2);
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                int r1 = k == 0 ? 1 : 0, r2 = k == 2 ? 1 : 2;
                int c1 = l == 0 ? 1 : 0, c2 = l == 2 ? 1 : 2;
                IPoly mn = imul(E[3 * r1 + c1], E[3 * r2 + c2]);
                mn = iadd(mn, imul(E[3 * r1 + c2], E[3 * r2 + c1]), -1);
                out.eqs.push_back(std::move(mn));
                out.eq_degrees.push_back(s.minors[3 * k + l]);
            }
    }
    return out;
}

std::string export_member(const IntegerMember& m) {
    std::ostringstream os;
    os << "# weights";
    for (size_t i = 0; i < m.w.size(); ++i) os << " x" << i + 1 << ":" << m.w[i];
    os << "\n";
    for (size_t j = 0; j < m.eqs.size(); ++j) {
        os << "# degree " << m.eq_degrees[j] << "\n";
        bool first = true;
        // highest monomials first, for readability
        for (auto it = m.eqs[j].rbegin(); it != m.eqs[j].rend(); ++it) {
            long long c = it->second;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            long long a = c < 0 ? -c : c;
            bool unit = true;
            for (int e : it->first) unit = unit && e == 0;
            bool wrote = false;
            if (a != 1 || unit) {
                os << a;
                wrote = true;
            }
            for (size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (!e) continue;
                os << (wrote ? "*" : "") << "x" << i + 1;
                if (e > 1) os << "^" << e;
                wrote = true;
            }
            first = false;
        }
        if (first) os << "0";
        os << ";\n";
    }
    return os.str();
}

}  // namespace rigdp
