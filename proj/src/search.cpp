#include "rigdp/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace rigdp {

namespace {

bool vertex_allowed(int a) { return a == 1 || (a >= 3 && a <= 10 && a != 4); }

// sub-multisets of `vals` (with multiplicities) of size k and sum s, values excluded in `ban`
void choose_cuts(const std::vector<std::pair<int, int>>& vals, size_t i, int k, int s, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& out) {
    if (k == 0) {
        if (s == 0) out(cur);
        return;
    }
    if (i == vals.size() || s <= 0) return;
    auto [v, mult] = vals[i];
    for (int take = 0; take <= mult && take <= k && take * v <= s; ++take) {
        for (int t = 0; t < take; ++t) cur.push_back(v);
        choose_cuts(vals, i + 1, k - take, s - take * v, cur, out);
        for (int t = 0; t < take; ++t) cur.pop_back();
    }
}

struct Layout {
    Weights pre;
    int nentries = 0;
    std::vector<int> pos;  // -1 when eliminated
};

Layout layout_of(const FormatDescriptor& f) {
    Layout L;
    L.pre = pre_ambient(f);
    L.nentries = f.kind == FormatKind::PfaffGr ? 10 : 9;
    std::vector<int> alive(L.pre.size());
    std::iota(alive.begin(), alive.end(), 0);
    for (int c : f.cuts) {
        auto it = std::find_if(alive.rbegin(), alive.rend(), [&](int v) { return L.pre[v] == c; });
        alive.erase(std::next(it).base());
    }
    L.pos.assign(L.pre.size(), -1);
    for (size_t k = 0; k < alive.size(); ++k) L.pos[alive[k]] = static_cast<int>(k);
    return L;
}

const std::vector<std::pair<int, int>>& pfaff_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < 5; ++i) {
            std::vector<int> c;
            for (int x = 0; x < 5; ++x)
                if (x != i) c.push_back(x);
            out.push_back({plucker_index(c[0], c[1]), plucker_index(c[2], c[3])});
            out.push_back({plucker_index(c[0], c[2]), plucker_index(c[1], c[3])});
            out.push_back({plucker_index(c[0], c[3]), plucker_index(c[1], c[2])});
        }
        return out;
    }();
    return pairs;
}

const std::vector<std::pair<int, int>>& segre_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> out;
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                int r1 = k == 0 ? 1 : 0, r2 = k == 2 ? 1 : 2;
                int c1 = l == 0 ? 1 : 0, c2 = l == 2 ? 1 : 2;
                out.push_back({3 * r1 + c1, 3 * r2 + c2});
                out.push_back({3 * r1 + c2, 3 * r2 + c1});
            }
        return out;
    }();
    return pairs;
}

// every coordinate point that cannot be a rigid orbifold point must be off X,
// which needs an equation with a pure power of that coordinate
std::optional<std::pair<Verdict, std::string>> vertex_filter(const FormatDescriptor& f) {
    auto bad = [](int a) -> std::pair<Verdict, std::string> {
        Verdict v = a > 10 ? Verdict::OutOfRange : Verdict::NonRigid;
        return {v, "coordinate point of weight " + std::to_string(a) + " lies on X"};
    };
    if (f.kind == FormatKind::Hypersurface || f.kind == FormatKind::CI2) {
        for (int a : f.weights) {
            if (vertex_allowed(a)) continue;
            bool off = std::any_of(f.degrees.begin(), f.degrees.end(), [&](int d) { return d % a == 0; });
            if (!off) return bad(a);
        }
        return std::nullopt;
    }
    Layout L = layout_of(f);
    const auto& pairs = f.kind == FormatKind::PfaffGr ? pfaff_pairs() : segre_pairs();
    for (size_t v = 0; v < L.pre.size(); ++v) {
        if (L.pos[v] < 0) continue;
        int a = L.pre[v];
        if (vertex_allowed(a)) continue;
        auto pure = [&](int e) {
            if (e == static_cast<int>(v)) return true;
            return L.pos[e] < 0 && L.pre[e] % a == 0;
        };
        bool off = std::any_of(pairs.begin(), pairs.end(), [&](auto pr) { return pure(pr.first) && pure(pr.second); });
        if (!off) return bad(a);
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> multiplicities(std::vector<int> xs, const std::vector<int>& ban) {
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<int, int>> out;
    for (int x : xs) {
        if (std::find(ban.begin(), ban.end(), x) != ban.end()) continue;
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.push_back({x, 1});
    }
    return out;
}

// cone multisets: at most two, weights 1..10
const std::vector<std::vector<int>>& cone_choices() {
    static const std::vector<std::vector<int>> out = [] {
        std::vector<std::vector<int>> v{{}};
        for (int a = 1; a <= 10; ++a) v.push_back({a});
        for (int a = 1; a <= 10; ++a)
            for (int b = a; b <= 10; ++b) v.push_back({a, b});
        return v;
    }();
    return out;
}

void add_candidate(std::vector<Candidate>& out, FormatDescriptor f) {
    Weights fin = ambient_after_cuts(f);
    if (!is_wellformed_space(fin)) return;
    Candidate c{std::move(f), std::nullopt, {}};
    if (auto r = vertex_filter(c.f)) {
        c.prefilter = r->first;
        c.reason = r->second;
    }
    out.push_back(std::move(c));
}

// weights a_1 <= ... <= a_n summing to s, each in [lo, hi]
void partitions(int n, int s, int lo, int hi, std::vector<int>& cur, const std::function<void()>& out) {
    if (n == 0) {
        if (s == 0) out();
        return;
    }
    for (int a = lo; a <= hi && a * n <= s; ++a) {
        cur.push_back(a);
        partitions(n - 1, s - a, a, hi, cur, out);
        cur.pop_back();
    }
}

void level_ci(int codim, int I, int q, std::vector<Candidate>& out) {
    const int n = codim == 1 ? 4 : 5;
    std::vector<std::vector<int>> degree_sets;
    if (codim == 1) {
        degree_sets.push_back({q});
    } else {
        for (int d1 = 1; 2 * d1 <= q; ++d1) degree_sets.push_back({d1, q - d1});
    }
    for (const auto& d : degree_sets) {
        // a weight equal to a degree makes that equation linear in it
        int hi = *std::max_element(d.begin(), d.end()) - 1;
        std::vector<int> w;
        partitions(n, q + I, 1, hi, w, [&] {
            for (int a : w)
                if (std::find(d.begin(), d.end(), a) != d.end()) return;
            FormatDescriptor f = codim == 1 ? FormatDescriptor::hypersurface(d[0], w)
                                            : FormatDescriptor::ci2(d[0], d[1], w);
            add_candidate(out, std::move(f));
        });
    }
}

template <typename Make>
void with_cones_and_cuts(const std::vector<int>& entries, int q, int I, int base_cuts, Make make,
                         std::vector<Candidate>& out) {
    // W = sum(entries) + sum(cones) - sum(cuts) = q + I
    const int se = std::accumulate(entries.begin(), entries.end(), 0);
    for (const auto& cones : cone_choices()) {
        int sc = std::accumulate(cones.begin(), cones.end(), 0);
        int cut_sum = se + sc - q - I;
        int k = base_cuts + static_cast<int>(cones.size());
        if (cut_sum < k) continue;
        auto vals = multiplicities(entries, cones);
        std::vector<int> cur;
        choose_cuts(vals, 0, k, cut_sum, cur, [&](const std::vector<int>& cuts) {
            try {
                add_candidate(out, make(cones, cuts));
            } catch (const InvalidFormat&) {
            }
        });
    }
}

void level_pfaff(int I, int q, std::vector<Candidate>& out) {
    // doubled weights W1 <= ... <= W5 of one parity, sum q, W1 + W2 >= 2
    int w2max = (q - 2) / 3;
    for (int W2 = -q; W2 <= w2max; ++W2) {
        for (int W1 = std::max(2 - W2, -4 * q); W1 <= W2; ++W1) {
            if ((W2 - W1) % 2) continue;
            for (int W3 = W2; W1 + W2 + 3 * W3 <= q; W3 += 2) {
                for (int W4 = W3; W1 + W2 + W3 + 2 * W4 <= q; W4 += 2) {
                    int W5 = q - W1 - W2 - W3 - W4;
                    if (W5 < W4 || (W5 - W4) % 2) continue;
                    std::array<int, 5> w{W1, W2, W3, W4, W5};
                    auto a = plucker_weights(w);
                    std::vector<int> entries(a.begin(), a.end());
                    with_cones_and_cuts(
                        entries, q, I, 4,
                        [&](const std::vector<int>& cones, const std::vector<int>& cuts) {
                            return FormatDescriptor::pfaff(w, cones, cuts);
                        },
                        out);
                }
            }
        }
    }
}

void level_segre(int I, int q, std::vector<Candidate>& out) {
    if (q % 2) return;
    const int T = q / 2;
    // b = (0, b2, b3), c = (c1, c2, c3) integral, T = b2 + b3 + c1 + c2 + c3
    for (int c1 = 1; 3 * c1 <= T; ++c1)
        for (int c2 = c1; c1 + 2 * c2 <= T; ++c2)
            for (int c3 = c2; c1 + c2 + c3 <= T; ++c3) {
                int rest = T - c1 - c2 - c3;
                for (int b2 = 0; 2 * b2 <= rest; ++b2) {
                    int b3 = rest - b2;
                    std::array<int, 3> B{0, 2 * b2, 2 * b3}, C{2 * c1, 2 * c2, 2 * c3};
                    std::array<int, 3> TB{0, 2 * (c2 - c1), 2 * (c3 - c1)}, TC{2 * c1, 2 * (c1 + b2), 2 * (c1 + b3)};
                    if (std::tie(TB, TC) < std::tie(B, C)) continue;
                    auto s = segre_weights(B, C);
                    std::vector<int> entries(s.a.begin(), s.a.end());
                    with_cones_and_cuts(
                        entries, q, I, 2,
                        [&](const std::vector<int>& cones, const std::vector<int>& cuts) {
                            return FormatDescriptor::segre(B, C, cones, cuts);
                        },
                        out);
                }
            }
}

auto sort_key(const Candidate& c) {
    Weights w = ambient_after_cuts(c.f);
    std::sort(w.begin(), w.end());
    return std::make_tuple(w, equation_degrees(c.f), c.f.str());
}

}  // namespace

std::vector<Candidate> enumerate_level(int codim, int I, int q) {
    std::vector<Candidate> out;
    if (q < 1 || I < 1) return out;
    if (codim <= 2)
        level_ci(codim, I, q, out);
    else if (codim == 3)
        level_pfaff(I, q, out);
    else
        level_segre(I, q, out);
    std::vector<std::pair<decltype(sort_key(out[0])), size_t>> keyed;
    keyed.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i) keyed.push_back({sort_key(out[i]), i});
    std::sort(keyed.begin(), keyed.end());
    std::vector<Candidate> sorted;
    sorted.reserve(out.size());
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i && std::get<2>(keyed[i].first) == std::get<2>(keyed[i - 1].first)) continue;
        sorted.push_back(std::move(out[keyed[i].second]));
    }
    return sorted;
}

void enumerate_candidates(const SearchBounds& b, const std::function<void(const Candidate&)>& sink) {
    std::vector<int> idx = b.indices;
    std::sort(idx.begin(), idx.end());
    int maxI = idx.empty() ? 0 : idx.back();
    for (int W = 1; W <= b.N + maxI; ++W)
        for (int I : idx) {
            int q = W - I;
            if (q < 1 || q > b.N) continue;
            for (const auto& c : enumerate_level(b.codim, I, q)) sink(c);
        }
}

SurfaceReport rejection_report(const FormatDescriptor& f, Verdict v, const std::string& why) {
    SurfaceReport r;
    r.descriptor = f;
    r.ambient = ambient_after_cuts(f);
    std::sort(r.ambient.begin(), r.ambient.end());
    r.degrees = equation_degrees(f);
    r.I = -canonical_degree(f);
    r.q = adjunction_number(f);
    r.verdict = v;
    r.failure = why;
    return r;
}

SurfaceReport evaluate_candidate(const Candidate& c, uint64_t seed) {
    if (c.prefilter) return rejection_report(c.f, *c.prefilter, c.reason);
    AnalysisOptions opt;
    opt.seed = seed;
    opt.early_exit = true;
    Analysis a = certify(c.f, opt);
    if (a.verdict != Verdict::Certified) {
        SurfaceReport r = rejection_report(c.f, a.verdict, a.cert.failure);
        r.witness = a.cert.witness;
        return r;
    }
    try {
        SurfaceReport r = make_report(c.f, a);
        if (r.K2.sign() <= 0) return rejection_report(c.f, Verdict::Integrity, "-K^2 is not positive");
        return r;
    } catch (const std::exception& e) {
        return rejection_report(c.f, Verdict::Integrity, e.what());
    }
}

std::vector<SurfaceReport> dedupe(const std::vector<SurfaceReport>& reports) {
    using Key = std::tuple<Weights, std::vector<int>, int>;
    std::map<Key, std::vector<size_t>> groups;
    for (size_t i = 0; i < reports.size(); ++i)
        groups[{reports[i].ambient, reports[i].degrees, reports[i].I}].push_back(i);
    std::vector<bool> keep(reports.size(), false);
    std::vector<std::string> flag(reports.size());
    for (const auto& [key, idx] : groups) {
        std::map<std::string, size_t> by_basket;  // basket -> representative
        for (size_t i : idx) {
            auto [it, fresh] = by_basket.try_emplace(reports[i].basket.str(), i);
            if (!fresh && reports[i].descriptor.str() < reports[it->second].descriptor.str()) it->second = i;
        }
        for (const auto& [bk, i] : by_basket) {
            keep[i] = true;
            if (by_basket.size() > 1) flag[i] = "same ambient and degrees with a different basket";
        }
    }
    std::vector<SurfaceReport> out;
    for (size_t i = 0; i < reports.size(); ++i)
        if (keep[i]) {
            out.push_back(reports[i]);
            if (!flag[i].empty()) out.back().flag = flag[i];
        }
    return out;
}

namespace {

std::string reason_key(Verdict v) { return verdict_name(v); }

}  // namespace

SearchRun run_search(const SearchBounds& b, const SearchHooks& hooks) {
    SearchRun run;
    run.bounds = b;
    std::vector<int> todo = b.indices;
    std::sort(todo.begin(), todo.end());
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
    std::vector<SurfaceReport> all;
    std::set<int> done;
    long long ordinal = 0;
    long long skip_until = -1;
    int resume_index = 0, resume_q = 0, resume_N = 0;
    if (hooks.resume) {
        const auto& cp = *hooks.resume;
        skip_until = cp.last_ordinal;
        ordinal = cp.last_ordinal + 1;
        all = cp.certified;
        run.rejected = cp.rejected;
        done.insert(cp.indices_done.begin(), cp.indices_done.end());
        resume_index = cp.current_index;
        resume_q = cp.last_q;
        resume_N = cp.current_N;
        for (int I : cp.bounds.indices)
            if (std::find(todo.begin(), todo.end(), I) == todo.end()) todo.push_back(I);
        std::sort(todo.begin(), todo.end());
    }
    const int jobs = std::max(1, b.jobs);
    auto snapshot = [&](int I, int N, int q) {
        SearchCheckpoint cp;
        cp.bounds = b;
        cp.bounds.indices = todo;
        cp.last_ordinal = ordinal - 1;
        cp.indices_done.assign(done.begin(), done.end());
        cp.current_index = I;
        cp.current_N = N;
        cp.last_q = q;
        cp.rejected = run.rejected;
        cp.certified = all;
        return cp;
    };
    auto stopped = [&] { return hooks.stop && hooks.stop->load(); };

    size_t next = 0;
    while (next < todo.size()) {
        int I = todo[next++];
        if (done.count(I)) {
            int lq = 0;
            for (const auto& r : all)
                if (r.I == I) lq = std::max(lq, r.q);
            run.per_index.push_back({I, 0, lq, std::max(b.N, b.adaptive ? 2 * lq : 0)});
            continue;
        }
        int N = b.N;
        int q0 = 1;
        if (I == resume_index && resume_N) {
            N = resume_N;
            q0 = resume_q + 1;
        }
        int last_q = 0;
        for (const auto& r : all)
            if (r.I == I) last_q = std::max(last_q, r.q);
        int levels = 0;
        long long index_work = 0;  // candidates sent to analysis at this index
        for (int q = q0; q <= N; ++q) {
            std::vector<Candidate> level = enumerate_level(b.codim, I, q);
            long long level_start = ordinal;
            std::vector<SurfaceReport> res(level.size());
            std::vector<char> have(level.size(), 0);
            for (size_t i = 0; i < level.size(); ++i) {
                if (level_start + static_cast<long long>(i) <= skip_until) continue;
                if (hooks.lookup)
                    if (auto hit = hooks.lookup(level[i].f)) {
                        res[i] = *hit;
                        have[i] = 1;
                    }
            }
            index_work += std::count_if(level.begin(), level.end(), [](const Candidate& c) { return !c.prefilter; });
            if (index_work > b.candidate_cap || stopped()) {
                run.complete = false;
                run.checkpoint = snapshot(I, N, q - 1);
                break;
            }
            std::atomic<size_t> cursor{0};
            auto work = [&] {
                for (;;) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= level.size()) return;
                    if (have[i] || level_start + static_cast<long long>(i) <= skip_until) continue;
                    if (stopped()) return;
                    res[i] = evaluate_candidate(level[i], b.seed);
                    have[i] = 2;
                }
            };
            if (jobs == 1) {
                work();
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
                for (auto& t : pool) t.join();
            }
            if (stopped()) {
                run.complete = false;
                run.checkpoint = snapshot(I, N, q - 1);
                break;
            }
            for (size_t i = 0; i < level.size(); ++i, ++ordinal) {
                if (ordinal <= skip_until) continue;
                ++run.examined;
                const SurfaceReport& r = res[i];
                if (have[i] == 2 && hooks.store) hooks.store(r);
                if (r.verdict == Verdict::Certified) {
                    all.push_back(r);
                    last_q = std::max(last_q, q);
                    if (hooks.on_certified) hooks.on_certified(r);
                } else {
                    ++run.rejected[reason_key(r.verdict)];
                }
            }
            if (b.adaptive) N = std::max(N, 2 * last_q);
            if (hooks.checkpoint && ++levels % std::max(1, hooks.checkpoint_every_levels) == 0)
                hooks.checkpoint(snapshot(I, N, q));
        }
        if (!run.complete) break;
        done.insert(I);
        run.per_index.push_back({I, 0, last_q, N});
        if (b.adaptive && b.extend_indices && next == todo.size()) {
            // the largest index with an example inside the base bound drives the extension
            int top = 0;
            for (const auto& r : all)
                if (r.q <= b.N) top = std::max(top, r.I);
            if (top > 5)
                for (int J = todo.back() + 1; J <= 2 * top; ++J) todo.push_back(J);
        }
    }
    run.certified = dedupe(all);
    for (auto& s : run.per_index) {
        s.count = 0;
        for (const auto& r : run.certified)
            if (r.I == s.I) ++s.count;
    }
    if (hooks.checkpoint && run.complete) hooks.checkpoint(snapshot(0, 0, 0));
    return run;
}

}  // namespace rigdp
