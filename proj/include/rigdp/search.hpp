#pragma once

#include "rigdp/invariants.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rigdp {

struct SearchBounds {
    int codim = 1;
    std::vector<int> indices{1, 2, 3, 4, 5, 6, 7, 8, 9};
    int N = 50;  // W - I <= N
    bool adaptive = true;
    bool extend_indices = true;  // search up to 2I when an example beyond I = 5 turns up
    long long candidate_cap = 10'000'000;
    int jobs = 1;
    uint64_t seed = 1;
};

// Every descriptor of the given codimension, index I and adjunction number q = W - I
// that is Fano, has a wellformed final ambient, and passes the cheap vertex filter.
// Sorted by (ambient, degrees, descriptor).
struct Candidate {
    FormatDescriptor f;
    std::optional<Verdict> prefilter;  // set when rejected without building a member
    std::string reason;
};
std::vector<Candidate> enumerate_level(int codim, int I, int q);

// Deterministic stream over all (I, q) in the bounds, ascending W = q + I.
void enumerate_candidates(const SearchBounds& b, const std::function<void(const Candidate&)>& sink);

struct SearchCheckpoint {
    SearchBounds bounds;
    long long last_ordinal = -1;
    std::vector<int> indices_done;
    int current_index = 0;
    int current_N = 0;
    int last_q = 0;
    std::map<std::string, long long> rejected;
    std::vector<SurfaceReport> certified;
};

struct SearchHooks {
    std::function<std::optional<SurfaceReport>(const FormatDescriptor&)> lookup;
    std::function<void(const SurfaceReport&)> store;
    std::function<void(const SurfaceReport&)> on_certified;
    const std::atomic<bool>* stop = nullptr;
    std::optional<SearchCheckpoint> resume;
    std::function<void(const SearchCheckpoint&)> checkpoint;
    int checkpoint_every_levels = 1;
};

struct IndexSummary {
    int I = 0;
    int count = 0;   // families after dedupe
    int last_q = 0;  // largest q among them
    int N = 0;       // final bound reached
};

struct SearchRun {
    SearchBounds bounds;
    long long examined = 0;
    std::vector<SurfaceReport> certified;  // deduped, in enumeration order
    std::map<std::string, long long> rejected;
    std::vector<IndexSummary> per_index;
    bool complete = true;  // false when interrupted or capped
    std::optional<SearchCheckpoint> checkpoint;
};

SearchRun run_search(const SearchBounds& b, const SearchHooks& hooks = {});

// Collapse reports with equal (ambient, degrees, I, basket), keeping the least descriptor.
// Reports sharing (ambient, degrees, I) with different baskets stay separate and are flagged.
std::vector<SurfaceReport> dedupe(const std::vector<SurfaceReport>& reports);

// Minimal report for a rejected candidate.
SurfaceReport rejection_report(const FormatDescriptor& f, Verdict v, const std::string& why);
// Full pipeline on one candidate, honoring the prefilter.
SurfaceReport evaluate_candidate(const Candidate& c, uint64_t seed);

}  // namespace rigdp
