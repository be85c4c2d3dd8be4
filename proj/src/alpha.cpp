#include "bibliodex/alpha.hpp"

#include <algorithm>

namespace bibliodex {

std::string to_string(AlphaMode mode) {
    return mode == AlphaMode::current ? "current" : "historical";
}

std::string to_string(TiePolicy policy) {
    return policy == TiePolicy::inclusive ? "inclusive" : "strict";
}

AlphaMode alpha_mode_from_string(const std::string& name) {
    if (name == "current") return AlphaMode::current;
    if (name == "historical") return AlphaMode::historical;
    throw DataError("unknown alpha mode '" + name + "'");
}

TiePolicy tie_policy_from_string(const std::string& name) {
    if (name == "inclusive") return TiePolicy::inclusive;
    if (name == "strict") return TiePolicy::strict;
    throw DataError("unknown tie policy '" + name + "'");
}

AlphaAssignment assign_alpha(const Corpus& corpus, const std::string& paper_id, AlphaMode mode,
                             const HatCache* cache) {
    const PaperRecord& paper = corpus.paper(paper_id);
    const int eval_year = mode == AlphaMode::current ? corpus.observation_year() : paper.pub_year;

    AlphaAssignment assignment;
    assignment.paper_id = paper_id;
    assignment.mode = mode;
    int max_h = 0;
    for (const auto& author : paper.authors) {
        const int h = cache ? cache->h_at(author, eval_year) : h_at(corpus, author, eval_year);
        assignment.h_used.emplace(author, h);
        max_h = std::max(max_h, h);
    }
    for (const auto& [author, h] : assignment.h_used)
        if (h == max_h) assignment.alpha_authors.push_back(author);  // already sorted via map
    assignment.tie = assignment.alpha_authors.size() > 1;
    return assignment;
}

namespace {

bool counts_for(const AlphaAssignment& assignment, const std::string& author_id,
                TiePolicy policy) {
    const auto& alphas = assignment.alpha_authors;
    if (policy == TiePolicy::strict)
        return alphas.size() == 1 && alphas.front() == author_id;
    return std::find(alphas.begin(), alphas.end(), author_id) != alphas.end();
}

}  // namespace

int h_alpha(const Corpus& corpus, const std::string& author_id, AlphaMode mode,
            TiePolicy policy) {
    const HatCache cache(corpus);
    std::vector<double> credited;
    for (const auto& paper_id : corpus.papers_of(author_id)) {
        const auto assignment = assign_alpha(corpus, paper_id, mode, &cache);
        if (!counts_for(assignment, author_id, policy)) continue;
        credited.push_back(
            static_cast<double>(corpus.paper(paper_id).citations_through(corpus.observation_year())));
    }
    return h_recipe(credited);
}

HSeries h_alpha_series(const Corpus& corpus, const std::string& author_id, AlphaMode mode,
                       TiePolicy policy) {
    const AuthorCareer career = corpus.career(author_id);
    const HatCache cache(corpus);

    // Assignments are fixed by (corpus, mode); t only moves the cutoff.
    std::vector<const PaperRecord*> alpha_papers;
    for (const auto& paper_id : corpus.papers_of(author_id)) {
        const auto assignment = assign_alpha(corpus, paper_id, mode, &cache);
        if (counts_for(assignment, author_id, policy))
            alpha_papers.push_back(&corpus.paper(paper_id));
    }

    HSeries series{author_id,
                   mode == AlphaMode::current ? IndexKind::h_alpha_current
                                              : IndexKind::h_alpha_historical,
                   {}};
    series.values.reserve(career.career_length);
    for (int t = 0; t < career.career_length; ++t) {
        const int year = career.first_pub_year + t;
        std::vector<double> credited;
        for (const PaperRecord* paper : alpha_papers) {
            if (paper->pub_year > year) continue;
            credited.push_back(static_cast<double>(paper->citations_through(year)));
        }
        series.values.push_back(h_recipe(credited));
    }
    return series;
}

std::optional<int> out_alpha_year(const Corpus& corpus, const std::string& paper_id,
                                  const std::string& challenger) {
    const PaperRecord& paper = corpus.paper(paper_id);
    if (!paper.has_author(challenger))
        throw DataError("author " + challenger + " is not on paper " + paper_id);

    const HatCache cache(corpus);
    for (int year = paper.pub_year; year <= corpus.observation_year(); ++year) {
        const int challenger_h = cache.h_at(challenger, year);
        bool unique_max = true;
        for (const auto& author : paper.authors) {
            if (author == challenger) continue;
            if (cache.h_at(author, year) >= challenger_h) {
                unique_max = false;
                break;
            }
        }
        if (unique_max) return year;
    }
    return std::nullopt;
}

}  // namespace bibliodex
