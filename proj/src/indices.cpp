#include "bibliodex/indices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bibliodex {

std::string to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::h: return "h";
        case IndexKind::gh_e: return "gh_e";
        case IndexKind::gh_1: return "gh_1";
        case IndexKind::gh_L: return "gh_L";
        case IndexKind::h_alpha_current: return "h_alpha_current";
        case IndexKind::h_alpha_historical: return "h_alpha_historical";
    }
    return "h";
}

std::string to_string(CreditScheme scheme) {
    switch (scheme) {
        case CreditScheme::equal: return "equal";
        case CreditScheme::first: return "first";
        case CreditScheme::last: return "last";
    }
    return "equal";
}

IndexKind index_kind_from_string(const std::string& name) {
    if (name == "h") return IndexKind::h;
    if (name == "gh_e") return IndexKind::gh_e;
    if (name == "gh_1") return IndexKind::gh_1;
    if (name == "gh_L") return IndexKind::gh_L;
    if (name == "h_alpha_current") return IndexKind::h_alpha_current;
    if (name == "h_alpha_historical") return IndexKind::h_alpha_historical;
    throw DataError("unknown index kind '" + name + "'");
}

CreditScheme credit_scheme_from_string(const std::string& name) {
    if (name == "equal") return CreditScheme::equal;
    if (name == "first") return CreditScheme::first;
    if (name == "last") return CreditScheme::last;
    throw DataError("unknown credit scheme '" + name + "'");
}

int h_recipe(std::span<const double> credited) {
    std::vector<double> sorted(credited.begin(), credited.end());
    for (double c : sorted) {
        if (!(c >= 0.0) || !std::isfinite(c))
            throw DataError("credited citation counts must be finite and >= 0");
    }
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    int h = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= static_cast<double>(i + 1))
            h = static_cast<int>(i + 1);
        else
            break;
    }
    return h;
}

namespace {

void check_year_range(const Corpus& corpus, const AuthorCareer& career, int year) {
    if (year < career.first_pub_year || year > corpus.observation_year())
        throw DataError("year " + std::to_string(year) + " outside career of " +
                        career.author_id + " [" + std::to_string(career.first_pub_year) + ", " +
                        std::to_string(corpus.observation_year()) + "]");
}

}  // namespace

int h_at(const Corpus& corpus, const std::string& author_id, int year) {
    const AuthorCareer career = corpus.career(author_id);
    check_year_range(corpus, career, year);
    std::vector<double> credited;
    for (const auto& paper_id : corpus.papers_of(author_id)) {
        const PaperRecord& paper = corpus.paper(paper_id);
        if (paper.pub_year > year) continue;
        credited.push_back(static_cast<double>(paper.citations_through(year)));
    }
    return h_recipe(credited);
}

HSeries h_series(const Corpus& corpus, const std::string& author_id) {
    const AuthorCareer career = corpus.career(author_id);
    HSeries series{author_id, IndexKind::h, {}};
    series.values.reserve(career.career_length);
    for (int t = 0; t < career.career_length; ++t)
        series.values.push_back(h_at(corpus, author_id, career.first_pub_year + t));
    return series;
}

double gh_credit(const PaperRecord& paper, const std::string& author_id, int year,
                 CreditScheme scheme) {
    const auto position = paper.author_position(author_id);
    if (!position)
        throw DataError("author " + author_id + " is not on paper " + paper.paper_id);
    if (year < paper.pub_year)
        throw DataError("year " + std::to_string(year) + " is before paper " + paper.paper_id +
                        "'s publication year");
    const double cites = static_cast<double>(paper.citations_through(year));
    switch (scheme) {
        case CreditScheme::equal:
            return cites / static_cast<double>(paper.authors.size());
        case CreditScheme::first:
            return *position == 0 ? cites : 0.0;
        case CreditScheme::last:
            return *position + 1 == paper.authors.size() ? cites : 0.0;
    }
    return 0.0;
}

int gh_index(const Corpus& corpus, const std::string& author_id, int year, CreditScheme scheme) {
    const AuthorCareer career = corpus.career(author_id);
    check_year_range(corpus, career, year);
    std::vector<double> credited;
    for (const auto& paper_id : corpus.papers_of(author_id)) {
        const PaperRecord& paper = corpus.paper(paper_id);
        if (paper.pub_year > year) continue;
        credited.push_back(gh_credit(paper, author_id, year, scheme));
    }
    return h_recipe(credited);
}

HSeries gh_series(const Corpus& corpus, const std::string& author_id, CreditScheme scheme) {
    const AuthorCareer career = corpus.career(author_id);
    IndexKind kind = scheme == CreditScheme::equal ? IndexKind::gh_e
                     : scheme == CreditScheme::first ? IndexKind::gh_1
                                                     : IndexKind::gh_L;
    HSeries series{author_id, kind, {}};
    series.values.reserve(career.career_length);
    for (int t = 0; t < career.career_length; ++t)
        series.values.push_back(gh_index(corpus, author_id, career.first_pub_year + t, scheme));
    return series;
}

int HatCache::h_at(const std::string& author_id, int year) const {
    auto key = std::make_pair(author_id, year);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int value = bibliodex::h_at(*corpus_, author_id, year);
    memo_.emplace(std::move(key), value);
    return value;
}

}  // namespace bibliodex
