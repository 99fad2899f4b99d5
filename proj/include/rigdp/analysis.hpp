#pragma once

#include "rigdp/formats.hpp"
#include "rigdp/modp.hpp"
#include "rigdp/orbpoints.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rigdp {

// Explicit member over F_p in the final coordinates. For PfaffGr/SegreP2P2 the
// matrix entries are either coordinates or random forms of the entry weight.
struct Member {
    FormatKind kind = FormatKind::Hypersurface;
    int codim = 1;
    Weights w;  // final coordinates, construction order
    std::vector<modp::Poly> eqs;
    std::vector<int> eq_degrees;
    std::vector<modp::Poly> entries;
    std::vector<int> entry_weights;
    std::vector<int> entry_var;  // coordinate index, or -1 for a substituted form
    std::vector<int> cone_vars;
    std::vector<int> cut_degrees;
};

uint64_t descriptor_hash(const FormatDescriptor& f);
Member build_member(const FormatDescriptor& f, uint64_t seed);

// Monomial supports of the equations of a generic member.
struct GenericEquationModel {
    Member member;
    std::vector<std::vector<modp::Mono>> support;
};
GenericEquationModel generic_model(const FormatDescriptor& f, uint64_t seed = 1);

enum class Verdict { Certified, NotFano, NotWellformed, NotQuasismooth, NonRigid, OutOfRange, Integrity };
const char* verdict_name(Verdict v);

struct PointCertificate {
    int r = 0;
    std::vector<int> support;                  // coordinates nonzero on the orbit
    int count = 0;                             // points with exactly this support
    std::vector<std::pair<int, int>> tangent;  // (equation, coordinate)
    std::vector<int> transverse;               // two local weights mod r
    OrbifoldPoint type;
};

struct StratumVerdict {
    int r = 0;
    std::vector<int> indices;
    int points = -1;  // -1 when positive dimensional
};

struct Certificate {
    bool pass = false;
    std::vector<StratumVerdict> strata;
    std::vector<PointCertificate> points;
    std::vector<std::vector<int>> checked_subspaces;  // emptiness of the singular locus verified here
    std::string failure;                            // empty on pass
    std::string witness;
};

struct Analysis {
    Verdict verdict = Verdict::Integrity;
    Basket basket;
    Certificate cert;
    Weights weights;  // final coordinates in construction order
};

struct AnalysisOptions {
    uint64_t seed = 1;
    bool early_exit = false;  // stop at the first rejection reason (search mode)
};

Analysis certify(const FormatDescriptor& f, const AnalysisOptions& opt = {});

// Entry points over a generic model.
struct WellformedVerdict {
    bool ok = true;
    std::string witness;
};
WellformedVerdict check_wellformed_surface(const FormatDescriptor& f, const GenericEquationModel& m);
Certificate check_quasismooth(const FormatDescriptor& f, const GenericEquationModel& m);
Basket compute_basket(const FormatDescriptor& f, const GenericEquationModel& m);
// Points of X on the stratum (all stabilizers), std::nullopt if positive dimensional.
std::optional<int> count_stratum_points(const GenericEquationModel& m, const Stratum& s);

// Integer member with coefficients in [-5,5]\{0} on the free coefficients.
struct IntegerMember {
    Weights w;
    std::vector<std::map<std::vector<int>, long long>> eqs;
    std::vector<int> eq_degrees;
};
IntegerMember random_member(const FormatDescriptor& f, uint64_t seed);
// Plain-text script: variables x1..xn, integer coefficients, '^' powers, ';' after each equation.
std::string export_member(const IntegerMember& m);

// Singular locus of the affine cone checked on the whole ambient (slow; an oracle for tests).
bool quasismooth_everywhere(const FormatDescriptor& f, uint64_t seed = 1);

// Lowest-level helpers, exposed for tests.
std::optional<long> stable_count(const std::vector<modp::Poly>& polys, const Weights& w, int r);
bool empty_projectively(const std::vector<modp::Poly>& polys, const Weights& w);
int frobenius_number(const std::vector<int>& gens);

}  // namespace rigdp
