#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bibliodex/corpus.hpp"

namespace bibliodex {

/// Career shapes for generated authors.
///   linear        — steady output, roughly linear h growth
///   delayed_start — low output in the first career years, then steady
///   accelerating  — paper impact grows with seniority, convex h
///   plateau       — stops publishing at stop_year (or 60% of the career)
///   complex       — active/quiet/active phases, non-monotone h slope
enum class Archetype { linear, delayed_start, accelerating, plateau, complex };

std::string to_string(Archetype a);
Archetype archetype_from_string(const std::string& name);

/// Discrete per-paper citation profile: linear ramp up to peak_height at
/// peak_delay years after publication, then geometric decay.
struct CitationKernel {
    double peak_height = 3.0;
    int peak_delay = 2;
    double decay = 0.85;
};

struct AuthorSpec {
    std::string id;
    Archetype archetype = Archetype::linear;
    int start_year = 0;
    std::optional<int> stop_year;  // inclusive last active year
    double papers_per_year = 2.0;
    /// Career year at which the author switches from first-author to
    /// last-author papers.
    int senior_after = 10;
    /// Shape strength multiplier for accelerating/complex archetypes.
    double intensity = 1.0;
    /// Collaborator pool. The first two ids collaborate during the junior
    /// phase (one of them takes the last-author slot); the rest are students
    /// who appear from senior_after on (one takes the first-author slot).
    std::vector<std::string> collaborators;
};

struct ScenarioConfig {
    std::uint64_t seed = 0;
    int observation_year = 0;
    std::vector<AuthorSpec> authors;
    CitationKernel kernel;
};

/// Deterministic corpus generation: equal (seed, config) gives equal corpora,
/// bit for bit, on every platform. Throws DataError naming the offending
/// config field when the config is invalid.
Corpus generate(const ScenarioConfig& config);

/// Pinned scenario presets: figure1b, abc_out_alpha, cohort_default.
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

ScenarioConfig config_from_json(std::istream& in, const std::string& name = "config");
ScenarioConfig config_from_json_string(const std::string& text);
std::string config_to_json(const ScenarioConfig& config);

}  // namespace bibliodex
