#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "bibliodex/corpus.hpp"

namespace bibliodex {

enum class IndexKind { h, gh_e, gh_1, gh_L, h_alpha_current, h_alpha_historical };
enum class CreditScheme { equal, first, last };

std::string to_string(IndexKind kind);
std::string to_string(CreditScheme scheme);
IndexKind index_kind_from_string(const std::string& name);
CreditScheme credit_scheme_from_string(const std::string& name);

/// An author's index value per career year t = 0..L-1.
struct HSeries {
    std::string author_id;
    IndexKind kind = IndexKind::h;
    std::vector<int> values;
};

/// The h recipe: largest i such that at least i entries are >= i. Entries are
/// credited citation counts and may be fractional; they compare against the
/// integer threshold with >=. Empty input gives 0.
int h_recipe(std::span<const double> credited);

/// h for `author` counting only papers published by `year` and citations
/// accrued through `year`. `year` must lie in [first_pub_year, observation_year].
int h_at(const Corpus& corpus, const std::string& author_id, int year);

/// h_at for every career year t = 0..L-1.
HSeries h_series(const Corpus& corpus, const std::string& author_id);

/// Credited citations of one paper for one author through `year`:
///   equal -> C/k, first -> C if first author else 0, last -> C if last author else 0.
/// A single-author paper yields C under all three schemes.
double gh_credit(const PaperRecord& paper, const std::string& author_id, int year,
                 CreditScheme scheme);

/// h recipe over the gh_credit values of all the author's papers published by `year`.
int gh_index(const Corpus& corpus, const std::string& author_id, int year, CreditScheme scheme);

HSeries gh_series(const Corpus& corpus, const std::string& author_id, CreditScheme scheme);

/// Memoizing wrapper around h_at. Pure cache: results are identical with or
/// without it. Not safe for concurrent mutation; use one per thread.
class HatCache {
public:
    explicit HatCache(const Corpus& corpus) : corpus_(&corpus) {}

    int h_at(const std::string& author_id, int year) const;

private:
    const Corpus* corpus_;
    mutable std::map<std::pair<std::string, int>, int> memo_;
};

}  // namespace bibliodex
