#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bibliodex/corpus.hpp"
#include "bibliodex/indices.hpp"

namespace bibliodex {

/// current    — compare co-author h values at the observation year.
/// historical — compare co-author h values at the paper's publication year.
enum class AlphaMode { current, historical };

/// inclusive — every argmax co-author may count the paper.
/// strict    — only a unique argmax counts it.
enum class TiePolicy { inclusive, strict };

std::string to_string(AlphaMode mode);
std::string to_string(TiePolicy policy);
AlphaMode alpha_mode_from_string(const std::string& name);
TiePolicy tie_policy_from_string(const std::string& name);

/// Per-paper alpha decision: which co-authors attain the maximal h, and the
/// h values the decision was based on.
struct AlphaAssignment {
    std::string paper_id;
    AlphaMode mode = AlphaMode::current;
    std::vector<std::string> alpha_authors;  // sorted, non-empty, subset of the paper's authors
    std::map<std::string, int> h_used;
    bool tie = false;
};

AlphaAssignment assign_alpha(const Corpus& corpus, const std::string& paper_id, AlphaMode mode,
                             const HatCache* cache = nullptr);

/// h recipe over the full citation counts of the author's alpha papers.
int h_alpha(const Corpus& corpus, const std::string& author_id, AlphaMode mode,
            TiePolicy policy = TiePolicy::inclusive);

/// h_alpha per career year. Assignments are fixed functions of (corpus, mode);
/// only the paper/citation cutoff varies with t, so the series is non-decreasing.
HSeries h_alpha_series(const Corpus& corpus, const std::string& author_id, AlphaMode mode,
                       TiePolicy policy = TiePolicy::inclusive);

/// Smallest year y in [pub_year, observation_year] at which `challenger` is
/// the unique h maximum among the paper's co-authors, or nullopt if that
/// never happens within the data range.
std::optional<int> out_alpha_year(const Corpus& corpus, const std::string& paper_id,
                                  const std::string& challenger);

}  // namespace bibliodex
