#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthocevia/relations.hpp"

namespace orthocevia {

struct SuiteConfig {
    int trials = 1000;
    std::uint64_t seed = 42;
    Tolerance tolerance{};
    double min_area_ratio = 0.05;  // sampler rejection threshold for 2*area/max_side^2
    double interior_margin = 0.05; // barycentric floor for sampled interior points
    bool parallel = true;
};

struct TrialReport {
    int trial_index = 0;
    std::array<Point, 3> triangle{};
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::pair<std::string, double>> residuals;
    std::string error; // non-empty when the trial raised
    bool passed = true;
};

// Fraction-based negative control aggregated over eligible trials.
struct ControlSummary {
    std::string name;
    int tripped = 0;
    int eligible = 0;
    double required_fraction = 0.0;
    double fraction() const { return eligible ? double(tripped) / eligible : 0.0; }
    bool passed() const { return eligible > 0 && fraction() >= required_fraction; }
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    int trials_run = 0;
    int skipped = 0;
    std::vector<TrialReport> failures;
    std::vector<std::pair<std::string, double>> max_residuals;
    std::vector<ControlSummary> controls;
    std::vector<std::string> notes;
    bool passed = false;
};

// Deterministic splitmix64 stream; per-trial streams are derived by hashing
// (seed, trial_index) so parallel execution cannot perturb results.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng for_trial(std::uint64_t seed, int trial_index);

    std::uint64_t next_u64();
    double uniform();                        // [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int n);                  // [0, n)

private:
    std::uint64_t state_;
};

// Vertices i.i.d. uniform in [-1,1]^2, rejection-resampled until
// 2*area/max_side^2 >= config.min_area_ratio. Throws SamplingExhausted after
// 1000 rejections.
Triangle sample_triangle(Rng& rng, const SuiteConfig& config);

// Uniform barycentric sample with every coordinate >= margin.
Point sample_interior_point(Rng& rng, const Triangle& t, double margin);

const std::vector<std::string>& suite_names();

// Runs the named randomized suite. Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

nlohmann::ordered_json report_to_json(const SuiteReport& report);
std::string report_json_string(const SuiteReport& report);

} // namespace orthocevia
