// Test-side oracles, deliberately independent of the library's computation
// paths: the h recipe as a literal scan over every candidate value, h-at-year
// as recomputation on a physically filtered corpus copy, and the constrained
// fit as a grid search over the slope.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "bibliodex/corpus.hpp"

namespace oracles {

// Largest i such that at least i entries are >= i, checked for every i.
inline int brute_force_h(const std::vector<double>& credited) {
    int best = 0;
    for (std::size_t i = 1; i <= credited.size(); ++i) {
        std::size_t at_least = 0;
        for (double c : credited)
            if (c >= static_cast<double>(i)) ++at_least;
        if (at_least >= i) best = static_cast<int>(i);
    }
    return best;
}

// Builds a physically filtered copy: papers published by `year`, citation
// entries through `year`, observation pinned to `year`.
inline bibliodex::Corpus filtered_copy(const bibliodex::Corpus& corpus, int year) {
    std::vector<bibliodex::PaperRecord> records;
    for (const auto& [id, paper] : corpus.papers()) {
        if (paper.pub_year > year) continue;
        bibliodex::PaperRecord copy;
        copy.paper_id = paper.paper_id;
        copy.pub_year = paper.pub_year;
        copy.authors = paper.authors;
        for (const auto& [cite_year, count] : paper.cites_by_year)
            if (cite_year <= year) copy.cites_by_year[cite_year] = count;
        records.push_back(std::move(copy));
    }
    return bibliodex::Corpus::from_records(std::move(records), year);
}

// h recomputed from scratch on the filtered copy.
inline int h_from_filtered(const bibliodex::Corpus& corpus, const std::string& author,
                           int year) {
    const bibliodex::Corpus snapshot = filtered_copy(corpus, year);
    std::vector<double> credited;
    for (const auto& paper_id : snapshot.papers_of(author))
        credited.push_back(
            static_cast<double>(snapshot.paper(paper_id).total_citations()));
    return brute_force_h(credited);
}

inline double rss_at_slope(const std::vector<int>& values, double slope) {
    const double h0 = values.front();
    double rss = 0.0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        const double r = values[t] - h0 - slope * static_cast<double>(t);
        rss += r * r;
    }
    return rss;
}

// Best slope on a uniform grid centered at `center`.
inline std::pair<double, double> grid_search_slope(const std::vector<int>& values, double center,
                                                   double half_width, double step) {
    double best_slope = center - half_width;
    double best_rss = rss_at_slope(values, best_slope);
    for (double s = center - half_width; s <= center + half_width + step / 2; s += step) {
        const double rss = rss_at_slope(values, s);
        if (rss < best_rss) {
            best_rss = rss;
            best_slope = s;
        }
    }
    return {best_slope, best_rss};
}

// Small random corpora for property tests. Independent of the synth module.
inline bibliodex::Corpus random_corpus(std::mt19937_64& rng, int max_papers = 50,
                                       int max_cites_per_paper = 40) {
    const int observation_year = 2014;
    const int n_authors = 2 + static_cast<int>(rng() % 8);
    std::vector<std::string> pool;
    for (int a = 0; a < n_authors; ++a) pool.push_back("a" + std::to_string(a));

    const int n_papers = 1 + static_cast<int>(rng() % max_papers);
    std::vector<bibliodex::PaperRecord> records;
    for (int p = 0; p < n_papers; ++p) {
        bibliodex::PaperRecord paper;
        paper.paper_id = "p" + std::to_string(p);
        paper.pub_year = 2000 + static_cast<int>(rng() % 15);

        const int k = 1 + static_cast<int>(rng() % std::min<std::size_t>(4, pool.size()));
        std::vector<std::string> authors = pool;
        for (int i = 0; i < k; ++i)
            std::swap(authors[i], authors[i + rng() % (authors.size() - i)]);
        authors.resize(k);
        paper.authors = authors;

        int cites = static_cast<int>(rng() % (max_cites_per_paper + 1));
        while (cites > 0) {
            const int year =
                paper.pub_year + static_cast<int>(rng() % (observation_year - paper.pub_year + 1));
            const int chunk = 1 + static_cast<int>(rng() % cites);
            paper.cites_by_year[year] += chunk;
            cites -= chunk;
        }
        records.push_back(std::move(paper));
    }
    return bibliodex::Corpus::from_records(std::move(records), observation_year);
}

}  // namespace oracles
