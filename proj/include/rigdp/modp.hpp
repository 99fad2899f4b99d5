#pragma once

// Sparse polynomials over F_p, p = 2^31 - 1, in at most 8 weighted variables,
// and Hilbert-function evaluation of homogeneous ideals by Macaulay matrices.

#include "rigdp/wps.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace rigdp::modp {

constexpr uint32_t P = 2147483647u;
constexpr int kMaxVars = 8;

inline uint32_t reduce64(uint64_t x) {
    x = (x & P) + (x >> 31);
    x = (x & P) + (x >> 31);
    return static_cast<uint32_t>(x == P ? 0 : x);
}
inline uint32_t add(uint32_t a, uint32_t b) {
    uint32_t s = a + b;
    return s >= P ? s - P : s;
}
inline uint32_t sub(uint32_t a, uint32_t b) { return a >= b ? a - b : a + P - b; }
inline uint32_t mul(uint32_t a, uint32_t b) { return reduce64(static_cast<uint64_t>(a) * b); }
uint32_t inv(uint32_t a);

// 16-bit exponents, variables 0..3 in lo and 4..7 in hi.
struct Mono {
    uint64_t lo = 0;
    uint64_t hi = 0;

    int exp(int i) const {
        return static_cast<int>(((i < 4 ? lo : hi) >> (16 * (i & 3))) & 0xffff);
    }
    void set(int i, int e) {
        uint64_t& w = i < 4 ? lo : hi;
        int sh = 16 * (i & 3);
        w = (w & ~(0xffffULL << sh)) | (static_cast<uint64_t>(e) << sh);
    }
    bool is_one() const { return lo == 0 && hi == 0; }
    friend Mono operator+(Mono a, Mono b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend bool operator==(Mono a, Mono b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator<(Mono a, Mono b) { return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo; }
};

struct Term {
    Mono m;
    uint32_t c;
};
using Poly = std::vector<Term>;  // sorted by monomial, nonzero coefficients

Poly var(int i);
Poly constant(uint32_t c);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& a, uint32_t c);
Poly mul(const Poly& a, const Poly& b);
Poly diff(const Poly& a, int i);
// Keep monomials supported on the positions in S; reindex so S[k] becomes variable k.
Poly restrict_to(const Poly& a, const std::vector<int>& S);
int degree(const Poly& a, const Weights& w);  // -1 for zero
Poly canonical(std::vector<Term> terms);     // sort and merge

// All exponent vectors of weighted degree d; cached per thread.
const std::vector<Mono>& monomials(const Weights& w, int d);

using Rng = std::mt19937_64;
uint32_t random_unit(Rng& rng);
Poly random_form(const Weights& w, int d, Rng& rng);

// dim_F (F[x]/(polys))_delta for homogeneous polys; stops early at 0.
long hilbert_value(const std::vector<Poly>& polys, const Weights& w, int delta);
// Linearly independent family spanning the same homogeneous pieces.
std::vector<Poly> basis_by_degree(const std::vector<Poly>& polys, const Weights& w);

// Determinants of all k x k minors of a polynomial matrix (rows x cols), nonzero ones only.
std::vector<Poly> minors(const std::vector<std::vector<Poly>>& M, int k);

}  // namespace rigdp::modp
