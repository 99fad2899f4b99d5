#include "rigdp/verify.hpp"

#include <algorithm>
#include <sstream>

namespace rigdp {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<int> matrix_of(const FormatDescriptor& f) {
    if (f.kind == FormatKind::PfaffGr) {
        auto a = plucker_weights(f.w2);
        return {a.begin(), a.end()};
    }
    if (f.kind == FormatKind::SegreP2P2) {
        auto s = segre_weights(f.b2, f.c2);
        return {s.a.begin(), s.a.end()};
    }
    return {};
}

std::vector<int> transpose3(const std::vector<int>& m) {
    std::vector<int> t(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[3 * j + i] = m[3 * i + j];
    return t;
}

}  // namespace

std::vector<CellDiff> verify_row(const FixtureRow& row, uint64_t seed) {
    std::vector<CellDiff> out;
    auto diff = [&](const std::string& col, const std::string& want, const std::string& got) {
        if (want != got) out.push_back({row.serial, col, want, got});
    };
    FormatDescriptor f;
    try {
        f = descriptor_of(row);
    } catch (const std::exception& e) {
        out.push_back({row.serial, "descriptor", "valid", e.what()});
        return out;
    }
    AnalysisOptions opt;
    opt.seed = seed;
    SurfaceReport r = analyze(f, opt);
    Weights amb = row.ambient;
    std::sort(amb.begin(), amb.end());
    diff("verdict", "certified", verdict_name(r.verdict));
    diff("ambient", join(amb), join(r.ambient));
    diff("degrees", join(row.degrees), join(r.degrees));
    if (!row.matrix.empty()) {
        // the tables print some 3x3 matrices transposed
        std::vector<int> m = matrix_of(f);
        if (m.size() == 9 && m != row.matrix) m = transpose3(m);
        diff("matrix", join(row.matrix), join(m));
    }
    diff("I", std::to_string(row.I), std::to_string(r.I));
    if (!row.K2.empty()) diff("K2", Rational::parse(row.K2).str(), r.K2.str());
    diff("h0", std::to_string(row.h0), r.h0.str());
    if (!row.e.empty()) diff("e", Rational::parse(row.e).str(), r.etop ? r.etop->str() : "absent");
    if (!row.eorb.empty()) diff("e_orb", Rational::parse(row.eorb).str(), r.eorb ? r.eorb->str() : "absent");
    diff("basket", Basket::parse(row.basket).str(), r.basket.str());
    return out;
}

}  // namespace rigdp
