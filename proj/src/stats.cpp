#include "vaaprobe/stats.hpp"

#include "vaaprobe/errors.hpp"
#include "vaaprobe/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace vaaprobe {

SampleSet count_samples(std::span<const Stance> stances) {
    SampleSet s;
    for (Stance st : stances) {
        switch (st) {
        case Stance::Positive:
            ++s.n_valid;
            ++s.n_positive;
            break;
        case Stance::Negative:
            ++s.n_valid;
            break;
        case Stance::Invalid:
            ++s.n_invalid;
            break;
        }
    }
    return s;
}

std::string_view to_string(StanceVerdict v) {
    switch (v) {
    case StanceVerdict::Positive: return "positive";
    case StanceVerdict::Negative: return "negative";
    case StanceVerdict::None: return "none";
    }
    return "none";
}

StanceVerdict stance_verdict_from_string(std::string_view s) {
    if (s == "positive") return StanceVerdict::Positive;
    if (s == "negative") return StanceVerdict::Negative;
    if (s == "none") return StanceVerdict::None;
    throw ParseError("unknown stance verdict '" + std::string(s) + "'");
}

StanceVerdict flip(StanceVerdict v) {
    switch (v) {
    case StanceVerdict::Positive: return StanceVerdict::Negative;
    case StanceVerdict::Negative: return StanceVerdict::Positive;
    case StanceVerdict::None: return StanceVerdict::None;
    }
    return StanceVerdict::None;
}

StanceVerdict verdict_of(Stance s) {
    switch (s) {
    case Stance::Positive: return StanceVerdict::Positive;
    case Stance::Negative: return StanceVerdict::Negative;
    case Stance::Invalid: return StanceVerdict::None;
    }
    return StanceVerdict::None;
}

namespace {

// Linearly interpolated empirical quantile over a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    if (sorted.size() == 1) return sorted.front();
    const double rank = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(rank);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

} // namespace

BootstrapCI bootstrap_ci(const SampleSet& s, int reps, double level, std::uint64_t seed) {
    if (s.n_valid < 1) throw ValidationError("bootstrap_ci: no valid samples");
    if (reps < 1) throw ValidationError("bootstrap_ci: reps must be >= 1");
    if (level <= 0.0 || level >= 1.0) throw ValidationError("bootstrap_ci: level must be in (0,1)");

    BootstrapCI ci;
    ci.level = level;
    ci.reps = reps;
    ci.point = s.proportion();

    const auto n = static_cast<std::uint32_t>(s.n_valid);
    const auto positives = static_cast<std::uint32_t>(s.n_positive);
    KeyedRng rng(seed, 0x626f6f74ULL); // stream tag: "boot"

    std::vector<double> means(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        // resampling the 0/1 coded values with replacement: an index below
        // n_positive draws a 1
        std::uint32_t hits = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (rng.uniform_below(n) < positives) ++hits;
        }
        means[static_cast<std::size_t>(r)] = static_cast<double>(hits) / static_cast<double>(n);
    }
    std::sort(means.begin(), means.end());

    const double tail = (1.0 - level) / 2.0;
    ci.low = quantile_sorted(means, tail);
    ci.high = quantile_sorted(means, 1.0 - tail);
    return ci;
}

SignificanceResult significant_stance(const SampleSet& s, const SignificanceConfig& cfg, std::uint64_t seed) {
    SignificanceResult res;
    if (s.n_valid < cfg.min_valid) {
        res.verdict = StanceVerdict::None;
        res.insufficient = true;
        if (s.n_valid > 0) res.ci.point = s.proportion();
        return res;
    }
    res.ci = bootstrap_ci(s, cfg.reps, cfg.level, seed);
    if (res.ci.low > cfg.threshold_high) {
        res.verdict = StanceVerdict::Positive;
    } else if (res.ci.high < cfg.threshold_low) {
        res.verdict = StanceVerdict::Negative;
    } else {
        res.verdict = StanceVerdict::None;
    }
    return res;
}

double cohen_kappa(std::span<const std::pair<Stance, Stance>> pairs) {
    if (pairs.empty()) throw ValidationError("cohen_kappa: no pairs");
    double n = 0.0, agree = 0.0, a_pos = 0.0, b_pos = 0.0;
    for (const auto& [a, b] : pairs) {
        if (a == Stance::Invalid || b == Stance::Invalid) {
            throw ValidationError("cohen_kappa: Invalid stance in pair");
        }
        n += 1.0;
        if (a == b) agree += 1.0;
        if (a == Stance::Positive) a_pos += 1.0;
        if (b == Stance::Positive) b_pos += 1.0;
    }
    const double p_o = agree / n;
    const double pa = a_pos / n, pb = b_pos / n;
    const double p_e = pa * pb + (1.0 - pa) * (1.0 - pb);
    if (p_e >= 1.0) return p_o >= 1.0 ? 1.0 : 0.0;
    return (p_o - p_e) / (1.0 - p_e);
}

double krippendorff_alpha(const std::vector<std::vector<std::optional<int>>>& ratings) {
    // coincidence matrix over observed category values
    std::map<int, std::map<int, double>> coincidence;
    std::map<int, double> totals;
    double n_total = 0.0;
    bool any_pairable = false;

    for (const auto& unit : ratings) {
        std::vector<int> vals;
        for (const auto& v : unit) {
            if (v.has_value()) vals.push_back(*v);
        }
        const std::size_t m = vals.size();
        if (m < 2) continue; // units with <2 values are excluded
        any_pairable = true;
        const double w = 1.0 / static_cast<double>(m - 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                coincidence[vals[i]][vals[j]] += w;
            }
        }
    }
    if (!any_pairable) throw ValidationError("krippendorff_alpha: no unit with two or more values");

    for (const auto& [c, row] : coincidence) {
        for (const auto& [k, v] : row) {
            totals[c] += v;
            n_total += v;
        }
    }

    double observed_disagreement = 0.0;
    for (const auto& [c, row] : coincidence) {
        for (const auto& [k, v] : row) {
            if (c != k) observed_disagreement += v;
        }
    }

    double expected_pairs = 0.0;
    for (const auto& [c, nc] : totals) {
        for (const auto& [k, nk] : totals) {
            if (c != k) expected_pairs += nc * nk;
        }
    }
    if (expected_pairs <= 0.0) return 1.0; // single observed category: no expected disagreement

    const double d_o = observed_disagreement / n_total;
    const double d_e = expected_pairs / (n_total * (n_total - 1.0));
    if (d_e <= 0.0) return 1.0;
    return 1.0 - d_o / d_e;
}

// ── Batch kernel ───────────────────────────────────────────────────────────

std::vector<SignificanceResult> score_groups_serial(std::span<const SampleSet> groups,
                                                    std::span<const std::uint64_t> seeds,
                                                    const SignificanceConfig& cfg) {
    if (groups.size() != seeds.size()) throw ValidationError("score_groups: seeds/groups size mismatch");
    std::vector<SignificanceResult> out(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        out[i] = significant_stance(groups[i], cfg, seeds[i]);
    }
    return out;
}

std::vector<SignificanceResult> score_groups_parallel(std::span<const SampleSet> groups,
                                                      std::span<const std::uint64_t> seeds,
                                                      const SignificanceConfig& cfg) {
    if (groups.size() != seeds.size()) throw ValidationError("score_groups: seeds/groups size mismatch");
    std::vector<SignificanceResult> out(groups.size());
    const auto count = static_cast<std::int64_t>(groups.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] =
            significant_stance(groups[static_cast<std::size_t>(i)], cfg, seeds[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace vaaprobe
