#include "rigdp/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace rigdp {

using nlohmann::json;

Verdict verdict_from_name(const std::string& s) {
    for (Verdict v : {Verdict::Certified, Verdict::NotFano, Verdict::NotWellformed, Verdict::NotQuasismooth,
                      Verdict::NonRigid, Verdict::OutOfRange, Verdict::Integrity})
        if (s == verdict_name(v)) return v;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

json report_to_json(const SurfaceReport& r) {
    json j;
    j["descriptor"] = r.descriptor.str();
    j["codim"] = r.descriptor.codim();
    j["ambient"] = r.ambient;
    j["degrees"] = r.degrees;
    j["I"] = r.I;
    j["q"] = r.q;
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::Certified) {
        j["numerator"] = r.numerator;
        j["basket"] = r.basket.str();
        j["h0"] = r.h0.str();
        j["K2"] = r.K2.str();
        if (r.eorb) j["e_orb"] = r.eorb->str();
        if (r.etop) j["e"] = r.etop->str();
        if (r.picard) j["picard"] = *r.picard;
        if (r.possibly_prime) j["possibly_prime"] = *r.possibly_prime;
        j["class_tg"] = r.class_tg;
    }
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.flag.empty()) j["flag"] = r.flag;
    return j;
}

SurfaceReport report_from_json(const json& j) {
    SurfaceReport r;
    r.descriptor = FormatDescriptor::parse(j.at("descriptor").get<std::string>());
    r.ambient = j.at("ambient").get<Weights>();
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.I = j.at("I").get<int>();
    r.q = j.at("q").get<int>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (j.contains("numerator")) r.numerator = j["numerator"].get<std::string>();
    if (j.contains("basket")) r.basket = Basket::parse(j["basket"].get<std::string>());
    if (j.contains("h0")) r.h0 = BigInt(j["h0"].get<std::string>());
    if (j.contains("K2")) r.K2 = Rational::parse(j["K2"].get<std::string>());
    if (j.contains("e_orb")) r.eorb = Rational::parse(j["e_orb"].get<std::string>());
    if (j.contains("e")) r.etop = Rational::parse(j["e"].get<std::string>());
    if (j.contains("picard")) r.picard = j["picard"].get<int>();
    if (j.contains("possibly_prime")) r.possibly_prime = j["possibly_prime"].get<bool>();
    if (j.contains("class_tg")) r.class_tg = j["class_tg"].get<bool>();
    if (j.contains("failure")) r.failure = j["failure"].get<std::string>();
    if (j.contains("witness")) r.witness = j["witness"].get<std::string>();
    if (j.contains("flag")) r.flag = j["flag"].get<std::string>();
    return r;
}

std::string report_line(const SurfaceReport& r) { return report_to_json(r).dump(); }

namespace {

std::string variety_str(const SurfaceReport& r) {
    std::ostringstream os;
    os << "X_{";
    for (size_t i = 0; i < r.degrees.size(); ++i) os << (i ? "," : "") << r.degrees[i];
    os << "} in " << weights_str(r.ambient);
    return os.str();
}

}  // namespace

std::string tsv_header(int codim) {
    std::string h = "descriptor\tX\tI\t-K^2\th0\t";
    if (codim <= 2) h += "e\te_orb\t";
    if (codim == 1) h += "rho\t";
    return h + "basket\tq";
}

std::string tsv_row(const SurfaceReport& r) {
    std::ostringstream os;
    os << r.descriptor.str() << '\t' << variety_str(r) << '\t' << r.I << '\t' << r.K2.str() << '\t' << r.h0.str()
       << '\t';
    int c = r.descriptor.codim();
    if (c <= 2) os << (r.etop ? r.etop->str() : "-") << '\t' << (r.eorb ? r.eorb->str() : "-") << '\t';
    if (c == 1) os << (r.picard ? std::to_string(*r.picard) : "-") << '\t';
    os << r.basket.str() << '\t' << r.q;
    return os.str();
}

json checkpoint_to_json(const SearchCheckpoint& c) {
    json j;
    j["codim"] = c.bounds.codim;
    j["indices"] = c.bounds.indices;
    j["N"] = c.bounds.N;
    j["adaptive"] = c.bounds.adaptive;
    j["extend_indices"] = c.bounds.extend_indices;
    j["candidate_cap"] = c.bounds.candidate_cap;
    j["seed"] = c.bounds.seed;
    j["last_ordinal"] = c.last_ordinal;
    j["indices_done"] = c.indices_done;
    j["current_index"] = c.current_index;
    j["current_N"] = c.current_N;
    j["last_q"] = c.last_q;
    j["rejected"] = c.rejected;
    j["certified"] = json::array();
    for (const auto& r : c.certified) j["certified"].push_back(report_to_json(r));
    return j;
}

SearchCheckpoint checkpoint_from_json(const json& j) {
    SearchCheckpoint c;
    c.bounds.codim = j.at("codim").get<int>();
    c.bounds.indices = j.at("indices").get<std::vector<int>>();
    c.bounds.N = j.at("N").get<int>();
    c.bounds.adaptive = j.at("adaptive").get<bool>();
    c.bounds.extend_indices = j.value("extend_indices", true);
    c.bounds.candidate_cap = j.at("candidate_cap").get<long long>();
    c.bounds.seed = j.at("seed").get<uint64_t>();
    c.last_ordinal = j.at("last_ordinal").get<long long>();
    c.indices_done = j.at("indices_done").get<std::vector<int>>();
    c.current_index = j.at("current_index").get<int>();
    c.current_N = j.at("current_N").get<int>();
    c.last_q = j.at("last_q").get<int>();
    c.rejected = j.at("rejected").get<std::map<std::string, long long>>();
    for (const auto& r : j.at("certified")) c.certified.push_back(report_from_json(r));
    return c;
}

}  // namespace rigdp
