// rigdp: search, analyze, verify, tables.

#include "rigdp/fixtures.hpp"
#include "rigdp/report_io.hpp"
#include "rigdp/search.hpp"
#include "rigdp/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace rigdp;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kInterrupted = 3;

std::atomic<bool> g_stop{false};
extern "C" void on_signal(int) { g_stop = true; }

// key = value, '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(n) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::vector<int> parse_index_list(const std::string& s) {
    // "1,2,5" or "1-9"
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash != std::string::npos && dash > 0) {
            int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
            for (int i = a; i <= b; ++i) out.push_back(i);
        } else {
            out.push_back(std::stoi(tok));
        }
    }
    return out;
}

fs::path cache_dir() {
    if (const char* d = std::getenv("RIGDP_CACHE_DIR")) return d;
    return ".rigdp-cache";
}

std::string hex(uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// Append-only JSONL keyed by descriptor hash. Only the main thread touches it.
class Cache {
public:
    Cache(const fs::path& file) : file_(file) {
        std::ifstream in(file_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                auto j = nlohmann::json::parse(line);
                map_[j.at("key").get<std::string>()] = report_from_json(j.at("report"));
            } catch (const std::exception&) {
                // a torn last line from an interrupted run
            }
        }
        fs::create_directories(file_.parent_path());
        out_.open(file_, std::ios::app);
    }
    std::optional<SurfaceReport> lookup(const FormatDescriptor& f) const {
        auto it = map_.find(hex(descriptor_hash(f)));
        if (it == map_.end() || !(it->second.descriptor == f)) return std::nullopt;
        return it->second;
    }
    void store(const SurfaceReport& r) {
        std::string key = hex(descriptor_hash(r.descriptor));
        nlohmann::json j{{"key", key}, {"report", report_to_json(r)}};
        out_ << j.dump() << '\n';
        out_.flush();
        map_[key] = r;
    }

private:
    fs::path file_;
    std::map<std::string, SurfaceReport> map_;
    std::ofstream out_;
};

void write_atomic(const fs::path& p, const std::string& content) {
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary);
        o << content;
    }
    fs::rename(tmp, p);
}

struct SearchOpts {
    int codim = 0;
    std::string index;
    int bound = -1;
    std::string out;
    int jobs = 0;
    long long seed = -1;
    long long cap = -1;
    std::string config;
    bool no_cache = false;
    bool no_adaptive = false;
    std::string checkpoint;
    bool resume = false;
};

int cmd_search(const SearchOpts& o) {
    SearchBounds b;
    std::map<std::string, std::string> cfg;
    if (!o.config.empty()) cfg = read_config(o.config);
    auto cfg_int = [&](const char* k, long long dflt) { return cfg.count(k) ? std::stoll(cfg[k]) : dflt; };
    b.codim = o.codim ? o.codim : static_cast<int>(cfg_int("codim", 0));
    if (b.codim < 1 || b.codim > 4) {
        std::cerr << "search: --codim must be 1..4\n";
        return kUsage;
    }
    std::string idx = !o.index.empty() ? o.index : (cfg.count("index") ? cfg["index"] : "");
    if (!idx.empty()) {
        b.indices = parse_index_list(idx);
        b.extend_indices = false;
    }
    b.N = o.bound >= 0 ? o.bound : static_cast<int>(cfg_int("bound", 50));
    b.jobs = o.jobs > 0 ? o.jobs : static_cast<int>(cfg_int("jobs", 1));
    b.seed = static_cast<uint64_t>(o.seed >= 0 ? o.seed : cfg_int("seed", 1));
    b.candidate_cap = o.cap >= 0 ? o.cap : cfg_int("cap", b.candidate_cap);
    b.adaptive = !o.no_adaptive && (cfg.count("adaptive") ? cfg["adaptive"] != "false" : true);
    bool use_cache = !o.no_cache && (cfg.count("cache") ? cfg["cache"] != "false" : true);
    std::string out = !o.out.empty() ? o.out : (cfg.count("out") ? cfg["out"] : "");

    std::optional<Cache> cache;
    if (use_cache)
        cache.emplace(cache_dir() / ("codim" + std::to_string(b.codim) + "-seed" + std::to_string(b.seed) + ".jsonl"));
    SearchHooks hooks;
    if (cache) {
        hooks.lookup = [&](const FormatDescriptor& f) { return cache->lookup(f); };
        hooks.store = [&](const SurfaceReport& r) { cache->store(r); };
    }
    hooks.stop = &g_stop;
    fs::path cp = !o.checkpoint.empty() ? fs::path(o.checkpoint) : (!out.empty() ? fs::path(out + ".checkpoint.json") : fs::path());
    if (!cp.empty()) {
        hooks.checkpoint = [&](const SearchCheckpoint& c) { write_atomic(cp, checkpoint_to_json(c).dump(1) + "\n"); };
        if (o.resume && fs::exists(cp)) {
            std::ifstream in(cp);
            hooks.resume = checkpoint_from_json(nlohmann::json::parse(in));
        }
    }
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    SearchRun run = run_search(b, hooks);

    std::ostringstream jl, tsv;
    tsv << tsv_header(b.codim) << '\n';
    for (const auto& r : run.certified) {
        jl << report_line(r) << '\n';
        tsv << tsv_row(r) << '\n';
    }
    if (!out.empty()) {
        write_atomic(out + ".jsonl", jl.str());
        write_atomic(out + ".tsv", tsv.str());
    } else {
        std::cout << jl.str();
    }
    std::cerr << "codim " << b.codim << ": examined " << run.examined << ", certified " << run.certified.size() << "\n";
    for (const auto& s : run.per_index)
        std::cerr << "  I=" << s.I << ": " << s.count << (s.count ? "(" + std::to_string(s.last_q) + ")" : "")
                  << "  N=" << s.N << "\n";
    for (const auto& [k, v] : run.rejected) std::cerr << "  rejected " << k << ": " << v << "\n";
    if (!run.complete) {
        std::cerr << "interrupted; resume with --resume" << (cp.empty() ? " and --checkpoint" : "") << "\n";
        if (!cp.empty() && run.checkpoint) write_atomic(cp, checkpoint_to_json(*run.checkpoint).dump(1) + "\n");
        return kInterrupted;
    }
    return kOk;
}

void print_certificate(const FormatDescriptor& f, const Analysis& a) {
    auto coord = [&](int i) { return "x" + std::to_string(i + 1) + ":" + std::to_string(a.weights[i]); };
    std::cout << "coordinates:";
    for (size_t i = 0; i < a.weights.size(); ++i) std::cout << " " << coord(static_cast<int>(i));
    std::cout << "\n";
    if (f.kind == FormatKind::PfaffGr) std::cout << "weight matrix: " << plucker_matrix_str(plucker_weights(f.w2)) << "\n";
    if (f.kind == FormatKind::SegreP2P2) std::cout << "weight matrix: " << matrix3_str(segre_weights(f.b2, f.c2).a) << "\n";
    for (const auto& s : a.cert.strata) {
        std::cout << "stratum r=" << s.r << " {";
        for (size_t k = 0; k < s.indices.size(); ++k) std::cout << (k ? "," : "") << coord(s.indices[k]);
        std::cout << "}: " << (s.points < 0 ? std::string("curve") : std::to_string(s.points) + " point(s)") << "\n";
    }
    for (const auto& p : a.cert.points) {
        std::cout << "  " << p.count << " x " << p.type.str() << " on {";
        for (size_t k = 0; k < p.support.size(); ++k) std::cout << (k ? "," : "") << coord(p.support[k]);
        std::cout << "}, tangent";
        for (auto [eq, v] : p.tangent) std::cout << " (F" << eq + 1 << "," << coord(v) << ")";
        std::cout << "\n";
    }
    for (const auto& S : a.cert.checked_subspaces) {
        std::cout << "quasismooth on base locus {";
        for (size_t k = 0; k < S.size(); ++k) std::cout << (k ? "," : "") << coord(S[k]);
        std::cout << "}\n";
    }
}

int cmd_analyze(const std::string& spec, bool export_member_flag, long long seed, bool as_json) {
    FormatDescriptor f;
    try {
        f = FormatDescriptor::parse(spec);
    } catch (const std::exception& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return kUsage;
    }
    AnalysisOptions opt;
    opt.seed = static_cast<uint64_t>(seed);
    Analysis a = certify(f, opt);
    SurfaceReport r;
    try {
        r = a.verdict == Verdict::Certified ? make_report(f, a) : rejection_report(f, a.verdict, a.cert.failure);
    } catch (const std::exception& e) {
        r = rejection_report(f, Verdict::Integrity, e.what());
    }
    r.witness = a.cert.witness;
    if (as_json) {
        std::cout << report_line(r) << "\n";
    } else {
        HilbertData h = hilbert_series(f);
        std::cout << "descriptor: " << f.str() << "\n";
        std::cout << "X_{";
        for (size_t i = 0; i < r.degrees.size(); ++i) std::cout << (i ? "," : "") << r.degrees[i];
        std::cout << "} in " << weights_str(r.ambient) << "\n";
        std::cout << "Hilbert numerator: " << numerator_normal_form(h, r.ambient).N.str() << "\n";
        std::cout << "adjunction number q = " << r.q << ", K_X = O(" << -r.I << "), I = " << r.I << "\n";
        print_certificate(f, a);
        std::cout << "verdict: " << (a.verdict == Verdict::Certified ? "PASS" : "FAIL") << " ("
                  << verdict_name(a.verdict) << ")\n";
        if (!a.cert.failure.empty()) std::cout << "failure: " << a.cert.failure << "\n";
        if (!a.cert.witness.empty()) std::cout << "witness: " << a.cert.witness << "\n";
        std::cout << "basket: " << a.basket.str() << "\n";
        try {
            std::cout << "-K^2 = " << degree_K2(h, r.I).str() << "\n";
            std::cout << "h0(-K) = " << first_plurigenus(h, r.I).str() << (first_plurigenus(h, r.I) == 0 ? " (not of class TG)" : "") << "\n";
        } catch (const std::exception& e) {
            std::cout << "invariants unavailable: " << e.what() << "\n";
        }
        if (r.eorb) std::cout << "e_orb = " << r.eorb->str() << "\n";
        if (r.etop) std::cout << "e = " << r.etop->str() << "\n";
        if (r.possibly_prime) std::cout << (*r.possibly_prime ? "e_orb <= 3" : "e_orb > 3, so rho > 1") << "\n";
        if (r.picard) std::cout << "rho = " << *r.picard << "\n";
    }
    if (export_member_flag) std::cout << export_member(random_member(f, opt.seed));
    return a.verdict == Verdict::Certified ? kOk : kMismatch;
}

int verify_rows(int codim) {
    int rows = 0, bad_rows = 0;
    std::vector<FixtureRow> all = fixture_rows();
    all.insert(all.begin(), fixture_81());
    for (const auto& row : all) {
        if (codim && row.codim != codim) continue;
        ++rows;
        auto d = verify_row(row);
        if (d.empty()) continue;
        ++bad_rows;
        for (const auto& c : d) {
            nlohmann::json j{{"serial", c.serial}, {"column", c.column}, {"expected", c.expected}, {"actual", c.actual}};
            std::cout << j.dump() << "\n";
        }
    }
    std::cerr << (rows - bad_rows) << "/" << rows << " rows match\n";
    return bad_rows ? kMismatch : kOk;
}

int verify_summary(int codim, int jobs) {
    int bad = 0;
    for (const auto& s : summary_table()) {
        if (codim && s.codim != codim) continue;
        SearchBounds b;
        b.codim = s.codim;
        b.jobs = jobs;
        SearchRun run = run_search(b);
        std::array<int, 9> got{};
        for (const auto& r : run.certified)
            if (r.I >= 1 && r.I <= 9) ++got[r.I - 1];
        int beyond = 0;
        for (const auto& r : run.certified)
            if (r.I > 9) ++beyond;
        for (int i = 0; i < 9; ++i)
            if (got[i] != s.count[i]) {
                ++bad;
                nlohmann::json j{{"codim", s.codim}, {"I", i + 1}, {"expected", s.count[i]}, {"actual", got[i]}};
                std::cout << j.dump() << "\n";
            }
        if (beyond) {
            ++bad;
            std::cout << nlohmann::json{{"codim", s.codim}, {"I", ">9"}, {"expected", 0}, {"actual", beyond}}.dump() << "\n";
        }
        std::cerr << "codim " << s.codim << ": " << run.certified.size() << " families\n";
    }
    return bad ? kMismatch : kOk;
}

int cmd_tables(int codim) {
    for (int c = 1; c <= 4; ++c) {
        if (codim && c != codim) continue;
        std::cout << "# codim " << c << "\nserial\tambient\tdegrees\tmatrix\tI\t-K^2\th0\te\te_orb\tbasket\n";
        std::vector<FixtureRow> rows = fixture_rows();
        rows.insert(rows.begin(), fixture_81());
        for (const auto& r : rows) {
            if (r.codim != c) continue;
            auto join = [](const std::vector<int>& v) {
                std::string s;
                for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
                return s.empty() ? std::string("-") : s;
            };
            std::cout << r.serial << '\t' << join(r.ambient) << '\t' << join(r.degrees) << '\t' << join(r.matrix) << '\t'
                      << r.I << '\t' << (r.K2.empty() ? "-" : r.K2) << '\t' << r.h0 << '\t' << (r.e.empty() ? "-" : r.e)
                      << '\t' << (r.eorb.empty() ? "-" : r.eorb) << '\t' << (r.basket.empty() ? "-" : r.basket) << '\n';
        }
        for (const auto& s : summary_table()) {
            if (s.codim != c) continue;
            std::cout << "# summary";
            for (int i = 0; i < 9; ++i)
                std::cout << " I=" << i + 1 << ":" << s.count[i] << (s.q[i] ? "(" + std::to_string(s.q[i]) + ")" : "");
            std::cout << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search and certification of rigid orbifold del Pezzo surfaces in low codimension"};
    app.require_subcommand(1);

    SearchOpts so;
    auto* search = app.add_subcommand("search", "enumerate and certify candidates");
    search->add_option("--codim", so.codim, "codimension 1..4");
    search->add_option("--index", so.index, "Fano indices, e.g. 1 or 1,2 or 1-9 (default 1-9, extended adaptively)");
    search->add_option("--bound", so.bound, "N with W - I <= N (default 50)");
    search->add_option("--out", so.out, "output prefix; writes PREFIX.jsonl and PREFIX.tsv");
    search->add_option("--jobs", so.jobs, "worker threads");
    search->add_option("--seed", so.seed, "seed for the random members");
    search->add_option("--cap", so.cap, "candidate cap");
    search->add_option("--config", so.config, "key = value config file");
    search->add_option("--checkpoint", so.checkpoint, "checkpoint file (default PREFIX.checkpoint.json)");
    search->add_flag("--resume", so.resume, "continue from the checkpoint");
    search->add_flag("--no-cache", so.no_cache, "ignore the result cache");
    search->add_flag("--no-adaptive", so.no_adaptive, "keep N fixed");

    std::string desc;
    bool exp = false, as_json = false;
    long long aseed = 1;
    auto* analyze = app.add_subcommand("analyze", "analyze one descriptor");
    analyze->add_option("descriptor", desc, "e.g. hyp:15:1,5,7,10 or pf:-1/2,3/2,3/2,7/2,7/2:cuts=3,3,5,5")->required();
    analyze->add_flag("--export-member", exp, "print an explicit integer member");
    analyze->add_option("--seed", aseed, "seed");
    analyze->add_flag("--json", as_json, "print the report as JSON");

    int vcodim = 0, vjobs = 1;
    bool vsummary = false;
    auto* verify = app.add_subcommand("verify", "recompute the reference tables");
    verify->add_option("--codim", vcodim, "restrict to one codimension");
    verify->add_flag("--summary", vsummary, "recompute the per-index counts by search");
    verify->add_option("--jobs", vjobs, "worker threads for --summary");

    int tcodim = 0;
    auto* tables = app.add_subcommand("tables", "print the embedded fixtures");
    tables->add_option("--codim", tcodim, "restrict to one codimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        if (*search) return cmd_search(so);
        if (*analyze) return cmd_analyze(desc, exp, aseed, as_json);
        if (*verify) return vsummary ? verify_summary(vcodim, vjobs) : verify_rows(vcodim);
        if (*tables) return cmd_tables(tcodim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
