#include "rigdp/invariants.hpp"

#include <algorithm>

namespace rigdp {

BigInt first_plurigenus(const HilbertData& h, int I) {
    if (I < 0) return 0;
    return expand_series(h, I)[I];
}

Rational degree_K2(const HilbertData& h, int I) { return Rational(I) * Rational(I) * evaluate_H_at_1(h); }

namespace {

// coefficients up to t^2 of prod(1 + x t)^{sign}
std::vector<Rational> low_terms(const std::vector<int>& xs, bool invert) {
    std::vector<Rational> c{Rational(1), Rational(0), Rational(0)};
    for (int x : xs) {
        std::vector<Rational> f{Rational(1), Rational(x), Rational(0)};
        if (invert) f = {Rational(1), Rational(-x), Rational(x) * Rational(x)};
        std::vector<Rational> out(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; i + j < 3; ++j) out[i + j] += c[i] * f[j];
        c = out;
    }
    return c;
}

}  // namespace

Rational euler_orbifold(const std::vector<int>& degrees, const Weights& weights) {
    if (weights.size() - degrees.size() != 3) throw DimensionMismatch("not a surface complete intersection");
    Rational deg(1);
    for (int d : degrees) deg *= Rational(d);
    for (int a : weights) deg /= Rational(a);
    auto A = low_terms(weights, false);
    auto D = low_terms(degrees, true);
    Rational c2 = A[0] * D[2] + A[1] * D[1] + A[2] * D[0];
    return deg * c2;
}

Rational euler_topological(const Rational& eorb, const Basket& b) {
    Rational e = eorb;
    for (const auto& [p, k] : b.entries()) e += Rational(k) * Rational(p.r - 1, p.r);
    if (!e.is_integer()) throw CandidateIntegrityError("non-integral Euler number " + e.str());
    return e;
}

int picard_rank_hypersurface(int d, const Weights& a) {
    int target = 2 * d;
    for (int x : a) target -= x;
    if (target < 0) return 1;
    // each factor (t^{d-a} - 1)/(t^a - 1); a negative exponent is pulled out as a shift
    int shift = 0, sign = 1;
    HilbertData h;
    for (int x : a) {
        int e = d - x;
        if (e == 0) return 1;
        if (e < 0) {
            shift += e;
            sign = -sign;
            e = -e;
        }
        h.numerator_factors.push_back(e);
        h.denominator_factors.push_back(x);
    }
    int k = target - shift;
    BigInt l = expand_series(h, k)[k] * sign;
    return static_cast<int>(l) + 1;
}

bool prime_flag(const Rational& eorb) {
    if (eorb.sign() <= 0) throw CandidateIntegrityError("non-positive orbifold Euler number");
    return eorb <= Rational(3);
}

SurfaceReport make_report(const FormatDescriptor& f, const Analysis& a) {
    SurfaceReport r;
    r.descriptor = f;
    r.ambient = ambient_after_cuts(f);
    std::sort(r.ambient.begin(), r.ambient.end());
    r.degrees = equation_degrees(f);
    r.I = -canonical_degree(f);
    r.q = adjunction_number(f);
    r.basket = a.basket;
    r.verdict = a.verdict;
    r.failure = a.cert.failure;
    r.witness = a.cert.witness;
    HilbertData h = hilbert_series(f);
    r.numerator = numerator_normal_form(h, r.ambient).N.str();
    r.h0 = r.I > 0 ? first_plurigenus(h, r.I) : BigInt(0);
    r.K2 = degree_K2(h, r.I);
    r.class_tg = r.h0 > 0;
    if (f.codim() <= 2) {
        r.eorb = euler_orbifold(f.degrees, f.weights);
        if (a.verdict == Verdict::Certified) {
            r.etop = euler_topological(*r.eorb, a.basket);
            r.possibly_prime = prime_flag(*r.eorb);
        }
    }
    if (f.kind == FormatKind::Hypersurface) r.picard = picard_rank_hypersurface(f.degrees[0], f.weights);
    return r;
}

SurfaceReport analyze(const FormatDescriptor& f, const AnalysisOptions& opt) { return make_report(f, certify(f, opt)); }

}  // namespace rigdp
