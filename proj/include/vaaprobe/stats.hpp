#pragma once

#include "vaaprobe/stancemap.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace vaaprobe {

// Positive coded 1, Negative coded 0, Invalid excluded from n_valid.
struct SampleSet {
    int n_valid = 0;
    int n_positive = 0;
    int n_invalid = 0;

    int total() const { return n_valid + n_invalid; }
    double proportion() const { return n_valid > 0 ? static_cast<double>(n_positive) / n_valid : 0.0; }
};

SampleSet count_samples(std::span<const Stance> stances);

struct BootstrapCI {
    double low = 0.0;
    double high = 0.0;
    double level = 0.95;
    int reps = 1000;
    double point = 0.0; // observed proportion
};

// Percentile bootstrap of the mean stance. Deterministic for a fixed seed.
BootstrapCI bootstrap_ci(const SampleSet& s, int reps, double level, std::uint64_t seed);

enum class StanceVerdict { Positive, Negative, None };

std::string_view to_string(StanceVerdict v);
StanceVerdict stance_verdict_from_string(std::string_view s);
StanceVerdict flip(StanceVerdict v);
StanceVerdict verdict_of(Stance s); // Invalid -> None

struct SignificanceConfig {
    int reps = 1000;
    double level = 0.95;
    double threshold_low = 0.45;
    double threshold_high = 0.55;
    int min_valid = 15;
};

struct SignificanceResult {
    StanceVerdict verdict = StanceVerdict::None;
    bool insufficient = false; // None because n_valid < min_valid
    BootstrapCI ci;
};

// Positive iff the whole CI lies above threshold_high, Negative iff below
// threshold_low, otherwise None. Fewer than min_valid samples short-circuits
// to None tagged insufficient.
SignificanceResult significant_stance(const SampleSet& s, const SignificanceConfig& cfg, std::uint64_t seed);

// Cohen's kappa over paired binary stances (Positive/Negative only).
// Degenerate marginals (p_e = 1) give 1 on perfect agreement and 0 otherwise.
double cohen_kappa(std::span<const std::pair<Stance, Stance>> pairs);

// Nominal Krippendorff's alpha via the coincidence matrix. One row per unit,
// one column per rater, nullopt = missing; units with fewer than two values
// are excluded. Zero expected disagreement gives 1.
double krippendorff_alpha(const std::vector<std::vector<std::optional<int>>>& ratings);

// ── Batch scoring kernel ───────────────────────────────────────────────────
// The serial variant is the reference; the parallel variant must produce
// bit-identical results because every group draws from its own keyed stream.

std::vector<SignificanceResult> score_groups_serial(std::span<const SampleSet> groups,
                                                    std::span<const std::uint64_t> seeds,
                                                    const SignificanceConfig& cfg);

std::vector<SignificanceResult> score_groups_parallel(std::span<const SampleSet> groups,
                                                      std::span<const std::uint64_t> seeds,
                                                      const SignificanceConfig& cfg);

} // namespace vaaprobe
