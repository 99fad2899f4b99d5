#include "rigdp/formats.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>

namespace rigdp {

const char* kind_name(FormatKind k) {
    switch (k) {
        case FormatKind::Hypersurface: return "hyp";
        case FormatKind::CI2: return "ci";
        case FormatKind::PfaffGr: return "pf";
        case FormatKind::SegreP2P2: return "seg";
    }
    return "?";
}

int codimension(FormatKind k) {
    switch (k) {
        case FormatKind::Hypersurface: return 1;
        case FormatKind::CI2: return 2;
        case FormatKind::PfaffGr: return 3;
        case FormatKind::SegreP2P2: return 4;
    }
    return 0;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string half_str(int x2) {
    if (x2 % 2 == 0) return std::to_string(x2 / 2);
    return std::to_string(x2) + "/2";
}

void check_cuts(const Weights& pre, const std::vector<int>& cuts) {
    std::multiset<int> ms(pre.begin(), pre.end());
    for (int c : cuts) {
        auto it = ms.find(c);
        if (it == ms.end()) throw InvalidFormat("cut degree " + std::to_string(c) + " is not an ambient weight");
        ms.erase(it);
    }
}

}  // namespace

FormatDescriptor FormatDescriptor::hypersurface(int d, Weights w) {
    if (w.size() != 4) throw InvalidFormat("hypersurface needs 4 weights");
    std::sort(w.begin(), w.end());
    if (w.front() < 1 || d < 1) throw InvalidFormat("weights and degree must be positive");
    FormatDescriptor f;
    f.kind = FormatKind::Hypersurface;
    f.weights = std::move(w);
    f.degrees = {d};
    return f;
}

FormatDescriptor FormatDescriptor::ci2(int d1, int d2, Weights w) {
    if (w.size() != 5) throw InvalidFormat("codimension 2 complete intersection needs 5 weights");
    std::sort(w.begin(), w.end());
    if (w.front() < 1 || d1 < 1 || d2 < 1) throw InvalidFormat("weights and degrees must be positive");
    FormatDescriptor f;
    f.kind = FormatKind::CI2;
    f.weights = std::move(w);
    f.degrees = {std::min(d1, d2), std::max(d1, d2)};
    return f;
}

FormatDescriptor FormatDescriptor::pfaff(std::array<int, 5> w2, std::vector<int> cones, std::vector<int> cuts) {
    std::sort(w2.begin(), w2.end());
    for (int x : w2)
        if ((x - w2[0]) % 2 != 0) throw InvalidFormat("Grassmannian weights must be all integral or all half-odd");
    if (w2[0] + w2[1] <= 0) throw InvalidFormat("Plucker weights must be positive");
    std::sort(cones.begin(), cones.end());
    std::sort(cuts.begin(), cuts.end());
    for (int c : cones)
        if (c < 1) throw InvalidFormat("cone weights must be positive");
    if (cuts.size() != 4 + cones.size()) throw InvalidFormat("Pfaffian format needs 4 + #cones cuts");
    FormatDescriptor f;
    f.kind = FormatKind::PfaffGr;
    f.w2 = w2;
    f.cones = std::move(cones);
    f.cuts = std::move(cuts);
    for (int d : pfaffian_degrees(w2))
        if (d <= 0) throw InvalidFormat("nonpositive Pfaffian degree");
    check_cuts(pre_ambient(f), f.cuts);
    return f;
}

FormatDescriptor FormatDescriptor::segre(std::array<int, 3> b2, std::array<int, 3> c2, std::vector<int> cones,
                                         std::vector<int> cuts) {
    std::sort(b2.begin(), b2.end());
    std::sort(c2.begin(), c2.end());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((b2[i] + c2[j]) % 2 != 0) throw InvalidFormat("Segre weights must sum to integers");
    if (b2[0] + c2[0] <= 0) throw InvalidFormat("Segre weights must be positive");
    // b_i + c_j is unchanged by b -> b + x, c -> c - x; fix b_1 = 0
    int shift = b2[0];
    for (auto& x : b2) x -= shift;
    for (auto& x : c2) x += shift;
    // transpose symmetry: keep the lexicographically smaller of (b,c) and (c - c_1, b + c_1)
    std::array<int, 3> tb{c2[0] - c2[0], c2[1] - c2[0], c2[2] - c2[0]};
    std::array<int, 3> tc{b2[0] + c2[0], b2[1] + c2[0], b2[2] + c2[0]};
    if (std::tie(tb, tc) < std::tie(b2, c2)) {
        b2 = tb;
        c2 = tc;
    }
    std::sort(cones.begin(), cones.end());
    std::sort(cuts.begin(), cuts.end());
    for (int c : cones)
        if (c < 1) throw InvalidFormat("cone weights must be positive");
    if (cuts.size() != 2 + cones.size()) throw InvalidFormat("Segre format needs 2 + #cones cuts");
    FormatDescriptor f;
    f.kind = FormatKind::SegreP2P2;
    f.b2 = b2;
    f.c2 = c2;
    f.cones = std::move(cones);
    f.cuts = std::move(cuts);
    check_cuts(pre_ambient(f), f.cuts);
    return f;
}

std::string FormatDescriptor::str() const {
    std::ostringstream os;
    os << kind_name(kind) << ":";
    switch (kind) {
        case FormatKind::Hypersurface:
        case FormatKind::CI2: os << join(degrees) << ":" << join(weights); return os.str();
        case FormatKind::PfaffGr:
            for (int i = 0; i < 5; ++i) os << (i ? "," : "") << half_str(w2[i]);
            break;
        case FormatKind::SegreP2P2:
            os << "b=";
            for (int i = 0; i < 3; ++i) os << (i ? "," : "") << half_str(b2[i]);
            os << ":c=";
            for (int i = 0; i < 3; ++i) os << (i ? "," : "") << half_str(c2[i]);
            break;
    }
    if (!cones.empty()) os << ":cones=" << join(cones);
    os << ":cuts=" << join(cuts);
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw InvalidFormat("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw InvalidFormat("not an integer: '" + s + "'");
    return v;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& t : split(s, ',')) out.push_back(parse_int(t));
    return out;
}

// "3/2" -> 3, "2" -> 4
int parse_doubled(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return 2 * parse_int(s);
    if (s.substr(slash + 1) != "2") throw InvalidFormat("expected a half-integer: '" + s + "'");
    int n = parse_int(s.substr(0, slash));
    if (n % 2 == 0) throw InvalidFormat("half-integer not in lowest terms: '" + s + "'");
    return n;
}

template <size_t K>
std::array<int, K> parse_halves(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != K) throw InvalidFormat("expected " + std::to_string(K) + " values in '" + s + "'");
    std::array<int, K> out{};
    for (size_t i = 0; i < K; ++i) out[i] = parse_doubled(parts[i]);
    return out;
}

std::string strip_key(const std::string& field, const std::string& key) {
    if (field.rfind(key + "=", 0) != 0) throw InvalidFormat("expected '" + key + "=' in '" + field + "'");
    return field.substr(key.size() + 1);
}

}  // namespace

FormatDescriptor FormatDescriptor::parse(const std::string& s) {
    auto f = split(s, ':');
    const std::string& k = f[0];
    if (k == "hyp" || k == "ci") {
        if (f.size() != 3) throw InvalidFormat("expected kind:degrees:weights");
        auto d = parse_ints(f[1]);
        auto w = parse_ints(f[2]);
        if (k == "hyp") {
            if (d.size() != 1) throw InvalidFormat("hypersurface takes one degree");
            return hypersurface(d[0], w);
        }
        if (d.size() != 2) throw InvalidFormat("complete intersection takes two degrees");
        return ci2(d[0], d[1], w);
    }
    std::vector<int> cones;
    auto tail = [&](size_t from) {
        if (f.size() == from + 2) {
            cones = parse_ints(strip_key(f[from], "cones"));
            ++from;
        } else if (f.size() != from + 1) {
            throw InvalidFormat("malformed descriptor '" + s + "'");
        }
        return parse_ints(strip_key(f[from], "cuts"));
    };
    if (k == "pf") {
        if (f.size() < 3) throw InvalidFormat("expected pf:w:cuts=..");
        auto w2 = parse_halves<5>(f[1]);
        auto cuts = tail(2);
        return pfaff(w2, cones, cuts);
    }
    if (k == "seg") {
        if (f.size() < 4) throw InvalidFormat("expected seg:b=..:c=..:cuts=..");
        auto b2 = parse_halves<3>(strip_key(f[1], "b"));
        auto c2 = parse_halves<3>(strip_key(f[2], "c"));
        auto cuts = tail(3);
        return segre(b2, c2, cones, cuts);
    }
    throw InvalidFormat("unknown format kind '" + k + "'");
}

std::array<int, 10> plucker_weights(const std::array<int, 5>& w2) {
    std::array<int, 10> a{};
    int k = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            int s = w2[i] + w2[j];
            if (s <= 0 || s % 2) throw InvalidFormat("Plucker weight not a positive integer");
            a[k++] = s / 2;
        }
    return a;
}

int plucker_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static const int base[5] = {0, 4, 7, 9, 10};
    return base[i] + (j - i - 1);
}

std::string plucker_matrix_str(const std::array<int, 10>& a) {
    std::ostringstream os;
    os << "(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << " | " << a[4] << "," << a[5] << ","
       << a[6] << " | " << a[7] << "," << a[8] << " | " << a[9] << ")";
    return os.str();
}

std::array<int, 5> pfaffian_degrees(const std::array<int, 5>& w2) {
    int s2 = std::accumulate(w2.begin(), w2.end(), 0);
    std::array<int, 5> d{};
    for (int i = 0; i < 5; ++i) {
        if ((s2 - w2[i]) % 2) throw InvalidFormat("Pfaffian degree not integral");
        d[i] = (s2 - w2[i]) / 2;
    }
    return d;
}

SegreData segre_weights(const std::array<int, 3>& b2, const std::array<int, 3>& c2) {
    SegreData s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int x = b2[i] + c2[j];
            if (x <= 0 || x % 2) throw InvalidFormat("Segre weight not a positive integer");
            s.a[3 * i + j] = x / 2;
        }
    s.T = s.a[0] + s.a[4] + s.a[8];
    for (int k = 0; k < 9; ++k) s.minors[k] = s.T - s.a[k];
    return s;
}

std::string matrix3_str(const std::array<int, 9>& a) {
    std::ostringstream os;
    os << "(" << a[0] << "," << a[1] << "," << a[2] << " | " << a[3] << "," << a[4] << "," << a[5] << " | "
       << a[6] << "," << a[7] << "," << a[8] << ")";
    return os.str();
}

Weights pre_ambient(const FormatDescriptor& f) {
    Weights w;
    switch (f.kind) {
        case FormatKind::Hypersurface:
        case FormatKind::CI2: return f.weights;
        case FormatKind::PfaffGr: {
            auto a = plucker_weights(f.w2);
            w.assign(a.begin(), a.end());
            break;
        }
        case FormatKind::SegreP2P2: {
            auto s = segre_weights(f.b2, f.c2);
            w.assign(s.a.begin(), s.a.end());
            break;
        }
    }
    w.insert(w.end(), f.cones.begin(), f.cones.end());
    return w;
}

Weights ambient_after_cuts(const FormatDescriptor& f) {
    Weights pre = pre_ambient(f);
    std::multiset<int> ms(pre.begin(), pre.end());
    for (int c : f.cuts) {
        auto it = ms.find(c);
        if (it == ms.end()) throw InvalidFormat("cut degree " + std::to_string(c) + " is not an ambient weight");
        ms.erase(it);
    }
    return Weights(ms.begin(), ms.end());
}

std::vector<int> equation_degrees(const FormatDescriptor& f) {
    std::vector<int> d;
    switch (f.kind) {
        case FormatKind::Hypersurface:
        case FormatKind::CI2: d = f.degrees; break;
        case FormatKind::PfaffGr: {
            auto p = pfaffian_degrees(f.w2);
            d.assign(p.begin(), p.end());
            break;
        }
        case FormatKind::SegreP2P2: {
            auto s = segre_weights(f.b2, f.c2);
            d.assign(s.minors.begin(), s.minors.end());
            break;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

int adjunction_number(const FormatDescriptor& f) {
    switch (f.kind) {
        case FormatKind::Hypersurface:
        case FormatKind::CI2: return std::accumulate(f.degrees.begin(), f.degrees.end(), 0);
        case FormatKind::PfaffGr: return std::accumulate(f.w2.begin(), f.w2.end(), 0);
        case FormatKind::SegreP2P2: return 2 * segre_weights(f.b2, f.c2).T;
    }
    return 0;
}

int canonical_degree(const FormatDescriptor& f) {
    int cones = std::accumulate(f.cones.begin(), f.cones.end(), 0);
    int cuts = std::accumulate(f.cuts.begin(), f.cuts.end(), 0);
    switch (f.kind) {
        case FormatKind::Hypersurface:
        case FormatKind::CI2: {
            int sa = std::accumulate(f.weights.begin(), f.weights.end(), 0);
            return adjunction_number(f) - sa;
        }
        case FormatKind::PfaffGr: return -adjunction_number(f) - cones + cuts;
        case FormatKind::SegreP2P2: return -segre_weights(f.b2, f.c2).T - cones + cuts;
    }
    return 0;
}

namespace {

// sum over m of h_m(t^{b}) h_m(t^{c}) up to t^order, with b, c doubled
std::vector<long long> segre_diagonal(const std::array<int, 3>& b2, const std::array<int, 3>& c2, int order) {
    std::vector<long long> out(order + 1, 0);
    int lim = 2 * order;  // doubled exponent bound
    int minstep = b2[0] + c2[0];
    for (int m = 0; m * minstep <= lim; ++m) {
        auto side = [&](const std::array<int, 3>& v) {
            std::vector<long long> p(lim + 1, 0);
            for (int i = 0; i <= m; ++i)
                for (int j = 0; i + j <= m; ++j) {
                    int k = m - i - j;
                    long long e = 1LL * i * v[0] + 1LL * j * v[1] + 1LL * k * v[2];
                    e -= 1LL * m * v[0];  // shift so exponents are nonnegative
                    if (e <= lim) p[e] += 1;
                }
            return p;
        };
        auto pb = side(b2);
        auto pc = side(c2);
        long long base = 1LL * m * (b2[0] + c2[0]);
        for (int x = 0; x <= lim; ++x) {
            if (!pb[x]) continue;
            for (int y = 0; x + y + base <= lim; ++y) {
                if (!pc[y]) continue;
                long long e = x + y + base;
                if (e % 2) throw CandidateIntegrityError("odd doubled degree in Segre series");
                out[e / 2] += pb[x] * pc[y];
            }
        }
    }
    return out;
}

}  // namespace

HilbertData hilbert_series(const FormatDescriptor& f) {
    HilbertData h;
    switch (f.kind) {
        case FormatKind::Hypersurface:
        case FormatKind::CI2:
            h.numerator_factors = f.degrees;
            h.denominator_factors = f.weights;
            return h;
        case FormatKind::PfaffGr: {
            int s2 = adjunction_number(f);
            std::vector<BigInt> c(s2 + 1);
            c[0] += 1;
            c[s2] -= 1;
            for (int x : f.w2) {
                c[(s2 - x) / 2] -= 1;
                c[(s2 + x) / 2] += 1;
            }
            h.extra = IntPoly(std::move(c));
            break;
        }
        case FormatKind::SegreP2P2: {
            auto s = segre_weights(f.b2, f.c2);
            int q = 2 * s.T;
            int maxa = *std::max_element(s.a.begin(), s.a.end());
            int order = q + maxa + 1;
            auto diag = segre_diagonal(f.b2, f.c2, order);
            std::vector<BigInt> c(diag.begin(), diag.end());
            IntPoly p(std::move(c));
            for (int a : s.a) p.mul_one_minus(a);
            std::vector<BigInt> n(q + 1);
            for (int i = 0; i <= q; ++i) n[i] = p.coeff(i);
            for (int i = q + 1; i <= order; ++i)
                if (p.coeff(i) != 0) throw CandidateIntegrityError("Segre numerator exceeds degree 2T");
            h.extra = IntPoly(std::move(n));
            break;
        }
    }
    Weights pre = pre_ambient(f);
    h.denominator_factors = pre;
    h.numerator_factors = f.cuts;
    return h;
}

}  // namespace rigdp
