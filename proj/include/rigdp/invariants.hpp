#pragma once

#include "rigdp/analysis.hpp"
#include "rigdp/exact.hpp"
#include "rigdp/formats.hpp"
#include "rigdp/orbpoints.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rigdp {

BigInt first_plurigenus(const HilbertData& h, int I);
Rational degree_K2(const HilbertData& h, int I);
// Surface complete intersections only (codim <= 2).
Rational euler_orbifold(const std::vector<int>& degrees, const Weights& weights);
// Throws CandidateIntegrityError when the result is not an integer.
Rational euler_topological(const Rational& eorb, const Basket& b);
int picard_rank_hypersurface(int d, const Weights& a);
// false: certainly rho > 1. true: possibly prime (e_orb <= 3).
bool prime_flag(const Rational& eorb);

struct SurfaceReport {
    FormatDescriptor descriptor;
    Weights ambient;          // final weights, ascending
    std::vector<int> degrees;  // ascending
    int I = 0;
    int q = 0;
    std::string numerator;  // Hilbert numerator over the final ambient
    Basket basket;
    BigInt h0 = 0;
    Rational K2;
    std::optional<Rational> eorb;
    std::optional<Rational> etop;
    std::optional<int> picard;
    std::optional<bool> possibly_prime;
    bool class_tg = false;  // h0 > 0
    Verdict verdict = Verdict::Integrity;
    std::string failure;
    std::string witness;
    std::string flag;  // set by dedupe when a collision with differing invariants is kept

    friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

// Invariants of a certified candidate. For rejected candidates only the
// numerical columns that are always defined are filled.
SurfaceReport make_report(const FormatDescriptor& f, const Analysis& a);
SurfaceReport analyze(const FormatDescriptor& f, const AnalysisOptions& opt = {});

}  // namespace rigdp
