#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace queuelab {

struct ExperimentRow {
    int delta = 0;
    int n = 0;
    std::uint64_t seed = 0;
    bool exact = false;
    int queue_number = 0;
    double theorem_lower_c1 = 0.0;
    double dujwoo_upper = 0.0;
    long long runtime_ms = 0;
    std::string error; // empty on success; failed rows keep their slot
};

struct ExperimentConfig {
    int delta = 3;
    std::vector<int> n_list;
    int samples = 1;
    std::uint64_t seed = 0;
    int exact_limit = 8;                    // exact search up to this n, heuristic beyond
    int restarts = 32;                      // heuristic restarts
    std::uint64_t node_budget = 10'000'000; // exact search budget
    bool measured_timings = false;          // see runtime_ms note in experiment_csv
};

// One row per (n, sample), in that order; sample i of the whole run uses
// seed + i. Generation failures are recorded in the row, not thrown.
// Requires delta >= 3 (the lower-bound column) and samples >= 1.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// CSV with a versioned header comment. runtime_ms is 0 unless measured
// timings were requested, which keeps default output byte-reproducible for
// a fixed seed.
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

// Text-only SVG scatter of queue_number against n with the lower- and
// upper-bound curves.
std::string experiment_svg(const std::vector<ExperimentRow>& rows);

} // namespace queuelab
