#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperrigid/body.hpp"
#include "hyperrigid/measure.hpp"
#include "hyperrigid/rng.hpp"

namespace hyperrigid::verify {

struct CheckResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    double worst = 0.0;  // worst slack seen (sign convention per check)
    bool ok() const { return failed == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

/// Trial counts for the randomized checks; defaults match the shipped
/// verification configuration.
struct SuiteConfig {
    long gauge_trials = 200;
    long boundary_trials = 1000;
    long hull_trials = 100;
    long support_trials = 1000;
    long secant_trials = 500;
    long angle_trials = 500;
    long partition_trials = 50;
    long distance_trials = 500;
    long gtilde_trials = 200;
    long brown_trials = 1000;
    int brown_dim = 20;
    long chain_trials = 100;
    long schwarz_trials = 100;
    int deviation_restarts = 10;
};

SuiteResult run_body_suite(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult run_tangent_suite(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult run_angle_suite(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult run_motion_suite(std::uint64_t seed, const SuiteConfig& cfg = {});
SuiteResult run_operator_suite(std::uint64_t seed, const SuiteConfig& cfg = {});
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed,
                                    const SuiteConfig& cfg = {});

// --- shared randomized generators -----------------------------------------

/// Hull of up to max_vertices uniform points in [-1,1]^2, centered.
ConvexBody random_convex_polygon(Rng& rng, int max_vertices = 12);

/// Polygon, disc, or ellipse (centered), uniformly over kinds.
ConvexBody random_body(Rng& rng);

/// Disjoint closed intervals with all four endpoint gaps at least min_gap.
std::pair<CircleInterval, CircleInterval> random_disjoint_intervals(Rng& rng,
                                                                    double min_gap = 0.05);

/// Brute-force O(n^3) hull vertex set (test oracle).
std::vector<Vec2> brute_force_hull(const std::vector<Vec2>& pts);

}  // namespace hyperrigid::verify
