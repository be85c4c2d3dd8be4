#include "bibliodex/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bibliodex {

namespace {

bool paper_retained(const PaperRecord& paper, int first_pub_year,
                    std::optional<int> truncate_after) {
    if (!truncate_after) return true;
    return paper.pub_year - first_pub_year < *truncate_after;
}

// Credited citations of one paper for the recipe behind `kind` at `year`.
// For the h_alpha kinds the caller has already filtered to alpha papers.
double credit_for(const PaperRecord& paper, const std::string& author_id, int year,
                  IndexKind kind) {
    switch (kind) {
        case IndexKind::gh_e: return gh_credit(paper, author_id, year, CreditScheme::equal);
        case IndexKind::gh_1: return gh_credit(paper, author_id, year, CreditScheme::first);
        case IndexKind::gh_L: return gh_credit(paper, author_id, year, CreditScheme::last);
        default: return static_cast<double>(paper.citations_through(year));
    }
}

}  // namespace

HSeries index_series(const Corpus& corpus, const std::string& author_id, IndexKind kind,
                     TiePolicy tie_policy, std::optional<int> truncate_after) {
    if (truncate_after && *truncate_after < 1)
        throw DataError("truncation horizon must be >= 1");
    const AuthorCareer career = corpus.career(author_id);

    const bool is_alpha =
        kind == IndexKind::h_alpha_current || kind == IndexKind::h_alpha_historical;
    const AlphaMode mode =
        kind == IndexKind::h_alpha_current ? AlphaMode::current : AlphaMode::historical;
    const HatCache cache(corpus);

    std::vector<const PaperRecord*> papers;
    for (const auto& paper_id : corpus.papers_of(author_id)) {
        const PaperRecord& paper = corpus.paper(paper_id);
        if (!paper_retained(paper, career.first_pub_year, truncate_after)) continue;
        if (is_alpha) {
            const auto assignment = assign_alpha(corpus, paper_id, mode, &cache);
            const auto& alphas = assignment.alpha_authors;
            const bool counts =
                tie_policy == TiePolicy::strict
                    ? alphas.size() == 1 && alphas.front() == author_id
                    : std::find(alphas.begin(), alphas.end(), author_id) != alphas.end();
            if (!counts) continue;
        }
        papers.push_back(&paper);
    }

    HSeries series{author_id, kind, {}};
    series.values.reserve(career.career_length);
    for (int t = 0; t < career.career_length; ++t) {
        const int year = career.first_pub_year + t;
        std::vector<double> credited;
        for (const PaperRecord* paper : papers) {
            if (paper->pub_year > year) continue;
            credited.push_back(credit_for(*paper, author_id, year, kind));
        }
        series.values.push_back(h_recipe(credited));
    }
    return series;
}

std::vector<std::string> cohort_members(const Corpus& corpus, int min_career_length) {
    std::vector<std::string> members;
    for (const auto& author : corpus.author_ids())
        if (corpus.career(author).career_length >= min_career_length) members.push_back(author);
    return members;
}

std::vector<CohortPoint> cohort_average(const Corpus& corpus, const CohortSpec& spec) {
    if (spec.min_career_length < 1) throw DataError("min career length must be >= 1");
    const auto members = cohort_members(corpus, spec.min_career_length);
    if (members.empty())
        throw DataError("empty cohort: no author has career length >= " +
                        std::to_string(spec.min_career_length));

    const int length = spec.min_career_length;
    std::vector<long long> sums(length, 0);
    for (const auto& author : members) {
        const HSeries series =
            index_series(corpus, author, spec.kind, spec.tie_policy, spec.truncate_after);
        for (int t = 0; t < length; ++t) sums[t] += series.values[t];
    }

    std::vector<CohortPoint> points;
    points.reserve(length);
    const int n = static_cast<int>(members.size());
    for (int t = 0; t < length; ++t)
        points.push_back({t, static_cast<double>(sums[t]) / n, n});
    return points;
}

FitResult fit_linear_constrained(const HSeries& series) {
    const std::size_t n = series.values.size();
    if (n < 2) throw DataError("series must have at least 2 points to fit");
    const int h0 = series.values.front();

    double num = 0.0, den = 0.0;
    for (std::size_t t = 1; t < n; ++t) {
        const double dt = static_cast<double>(t);
        num += dt * (series.values[t] - h0);
        den += dt * dt;
    }
    const double slope = num / den;

    double rss = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double r = series.values[t] - h0 - slope * static_cast<double>(t);
        rss += r * r;
    }
    return {series.author_id, slope, h0, rss};
}

HSeries truncate_career(const Corpus& corpus, const std::string& author_id, int first_years) {
    if (first_years < 1) throw DataError("truncation horizon must be >= 1");
    return index_series(corpus, author_id, IndexKind::h, TiePolicy::inclusive, first_years);
}

std::vector<HistogramBin> slope_histogram(const std::vector<FitResult>& fits, double bin_width) {
    if (fits.empty()) throw DataError("cannot build a histogram from no fits");
    if (!(bin_width > 0.0)) throw DataError("bin width must be > 0");

    std::map<long long, int> counts;
    for (const auto& fit : fits)
        counts[static_cast<long long>(std::floor(fit.slope / bin_width))]++;

    std::vector<HistogramBin> bins;
    bins.reserve(counts.size());
    for (const auto& [k, count] : counts)
        bins.push_back({k * bin_width, (k + 1) * bin_width, count});
    return bins;
}

std::vector<DistributionRow> distribution_table(const Corpus& corpus, int min_career_length,
                                                CreditScheme scheme) {
    const auto members = cohort_members(corpus, min_career_length);
    if (members.empty())
        throw DataError("empty cohort: no author has career length >= " +
                        std::to_string(min_career_length));

    std::map<std::pair<int, int>, int> counts;
    const int year = corpus.observation_year();
    for (const auto& author : members)
        counts[{h_at(corpus, author, year), gh_index(corpus, author, year, scheme)}]++;

    std::vector<DistributionRow> rows;
    rows.reserve(counts.size());
    for (const auto& [pair, count] : counts) rows.push_back({pair.first, pair.second, count});
    return rows;
}

}  // namespace bibliodex
