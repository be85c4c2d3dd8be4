#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bibliodex/alpha.hpp"
#include "bibliodex/corpus.hpp"
#include "bibliodex/indices.hpp"

namespace bibliodex {

/// Cohort selection: authors with career length >= min_career_length.
struct CohortSpec {
    int min_career_length = 1;
    IndexKind kind = IndexKind::h;
    std::optional<int> truncate_after;          // keep only papers with relative pub year < N
    TiePolicy tie_policy = TiePolicy::inclusive;  // used by the h_alpha kinds
};

struct CohortPoint {
    int t = 0;
    double mean = 0.0;
    int cohort_size = 0;
};

struct FitResult {
    std::string author_id;
    double slope = 0.0;
    int intercept = 0;  // fixed at the observed series value at t = 0
    double rss = 0.0;
};

struct HistogramBin {
    double lo = 0.0;  // bins are [lo, hi), left-closed
    double hi = 0.0;
    int count = 0;
};

struct DistributionRow {
    int h = 0;
    int gh = 0;
    int count = 0;  // multiplicity within the cohort
};

/// Index series of any kind, optionally truncated: with truncate_after = N
/// only papers published in relative career years t < N are considered, while
/// citations to those retained papers keep accruing through each evaluation
/// year. Alpha assignments (for the h_alpha kinds) always come from the full
/// corpus.
HSeries index_series(const Corpus& corpus, const std::string& author_id, IndexKind kind,
                     TiePolicy tie_policy = TiePolicy::inclusive,
                     std::optional<int> truncate_after = {});

std::vector<std::string> cohort_members(const Corpus& corpus, int min_career_length);

/// Mean of series[t] over all cohort members, for t = 0..min_career_length-1.
/// Every member contributes at every t. Throws on an empty cohort.
std::vector<CohortPoint> cohort_average(const Corpus& corpus, const CohortSpec& spec);

/// Least-squares slope of series[t] - h0 - s*t with h0 pinned to series[0]:
///   s = sum_t t*(series[t] - h0) / sum_t t^2.
/// Requires at least two points.
FitResult fit_linear_constrained(const HSeries& series);

/// h series counting only papers published in the first `first_years` career
/// years; citations to retained papers continue to accrue.
HSeries truncate_career(const Corpus& corpus, const std::string& author_id, int first_years);

/// Non-empty bins [k*w, (k+1)*w) covering the given slopes.
std::vector<HistogramBin> slope_histogram(const std::vector<FitResult>& fits, double bin_width);

/// Pairs each cohort member's final h with their final gh under `scheme`,
/// aggregating duplicate (h, gh) pairs into multiplicities. Rows sorted by
/// (h, gh). Throws on an empty cohort.
std::vector<DistributionRow> distribution_table(const Corpus& corpus, int min_career_length,
                                                CreditScheme scheme);

}  // namespace bibliodex
