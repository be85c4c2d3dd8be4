#include <doctest.h>

#include <sstream>

#include "bibliodex/alpha.hpp"
#include "bibliodex/cohort.hpp"
#include "bibliodex/corpus.hpp"
#include "bibliodex/indices.hpp"
#include "bibliodex/synth.hpp"

using namespace bibliodex;

namespace {

bool message_mentions(const DataError& e, const std::string& field) {
    return std::string(e.what()).find(field) != std::string::npos;
}

double window_increment(const std::vector<int>& v, int from, int to) {
    return static_cast<double>(v[to] - v[from]) / (to - from);
}

// Non-monotone slope: a mid-career growth slump clearly below both the early
// and the late pace.
bool has_midcareer_slump(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size()) - 1;
    const double q1 = window_increment(v, 0, n / 4);
    const double q2 = window_increment(v, n / 4, n / 2);
    const double q3 = window_increment(v, n / 2, 3 * n / 4);
    const double q4 = window_increment(v, 3 * n / 4, n);
    return std::min(q2, q3) <= 0.85 * std::min(q1, q4);
}

}  // namespace

TEST_SUITE_BEGIN("synth");

TEST_CASE("degenerate single-author scenario") {
    ScenarioConfig config;
    config.seed = 42;
    config.observation_year = 2014;
    config.kernel = {2.0, 0, 1.0};  // flat two citations per year, forever
    AuthorSpec solo;
    solo.id = "solo";
    solo.start_year = 1995;
    solo.papers_per_year = 1.0;
    config.authors = {solo};

    const Corpus corpus = generate(config);
    CHECK(corpus.paper_count() == 20);
    CHECK(corpus.author_count() == 1);
    for (const auto& [id, paper] : corpus.papers()) {
        CHECK(paper.authors == std::vector<std::string>{"solo"});
        // integral rate and flat kernel leave nothing to chance
        for (int year = paper.pub_year; year <= 2014; ++year)
            CHECK(paper.cites_by_year.at(year) == 2);
    }
    CHECK(corpus.career("solo").career_length == 20);
}

TEST_CASE("same seed and config give identical corpora") {
    for (const auto& name : preset_names()) {
        const ScenarioConfig config = preset(name);
        const Corpus first = generate(config);
        const Corpus second = generate(config);
        CHECK(first == second);
        CHECK(to_json_string(first) == to_json_string(second));
    }
    SUBCASE("a different seed changes the corpus") {
        ScenarioConfig config = preset("abc_out_alpha");
        const Corpus base = generate(config);
        config.seed += 1;
        CHECK_FALSE(generate(config) == base);
    }
}

TEST_CASE("generated corpora survive a serialization round trip") {
    for (const auto& name : preset_names()) {
        const Corpus corpus = generate(preset(name));
        std::istringstream in(to_json_string(corpus));
        CHECK(ingest_json_stream(in) == corpus);
    }
}

TEST_CASE("invalid configs are rejected with the offending field") {
    ScenarioConfig config = preset("abc_out_alpha");

    SUBCASE("no authors") {
        config.authors.clear();
        CHECK_THROWS_WITH_AS(generate(config), doctest::Contains("authors"), DataError);
    }
    SUBCASE("bad decay") {
        config.kernel.decay = 1.5;
        try {
            generate(config);
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(message_mentions(e, "citation_kernel.decay"));
        }
    }
    SUBCASE("stop before start") {
        config.authors[1].stop_year = 1980;
        try {
            generate(config);
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(message_mentions(e, "authors[1].stop_year"));
        }
    }
    SUBCASE("negative rate") {
        config.authors[0].papers_per_year = -1.0;
        try {
            generate(config);
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(message_mentions(e, "authors[0].papers_per_year"));
        }
    }
    SUBCASE("duplicate author id") {
        config.authors[2].id = "A";
        CHECK_THROWS_AS(generate(config), DataError);
    }
    SUBCASE("author in its own pool") {
        config.authors[0].collaborators = {"A"};
        CHECK_THROWS_AS(generate(config), DataError);
    }
}

TEST_CASE("unknown preset") {
    CHECK_THROWS_AS(preset("figure9z"), DataError);
    CHECK(preset_names().size() == 3);
}

TEST_CASE("config JSON round trip") {
    for (const auto& name : preset_names()) {
        const ScenarioConfig config = preset(name);
        const ScenarioConfig back = config_from_json_string(config_to_json(config));
        CHECK(generate(back) == generate(config));
    }
    SUBCASE("missing fields are reported") {
        CHECK_THROWS_WITH_AS(config_from_json_string(R"({"seed": 1})"),
                             doctest::Contains("observation_year"), DataError);
        CHECK_THROWS_WITH_AS(
            config_from_json_string(
                R"({"seed":1,"observation_year":2000,"authors":[{"id":"x"}]})"),
            doctest::Contains("archetype"), DataError);
    }
}

TEST_CASE("abc_out_alpha: stopping authors get out-alpha'ed") {
    const ScenarioConfig config = preset("abc_out_alpha");
    const int stop_year = *config.authors[1].stop_year;
    const Corpus corpus = generate(config);
    CHECK(corpus.paper_count() == 89);  // pinned seed, pinned output

    // B and C publish nothing, and appear on nothing, after their stop year
    for (const auto& [id, paper] : corpus.papers())
        if (paper.pub_year > stop_year) {
            CHECK_FALSE(paper.has_author("B"));
            CHECK_FALSE(paper.has_author("C"));
        }

    int joint = 0, divergent = 0, with_out_year = 0;
    for (const auto& [id, paper] : corpus.papers()) {
        if (paper.pub_year > stop_year || !paper.has_author("A") || !paper.has_author("B") ||
            !paper.has_author("C"))
            continue;
        ++joint;
        const auto current = assign_alpha(corpus, id, AlphaMode::current);
        const auto historical = assign_alpha(corpus, id, AlphaMode::historical);
        if (current.alpha_authors != historical.alpha_authors) ++divergent;
        const auto out_year = out_alpha_year(corpus, id, "A");
        if (out_year) {
            ++with_out_year;
            CHECK(*out_year > stop_year);
        }
    }
    CHECK(joint > 0);
    CHECK(divergent > 0);
    CHECK(with_out_year > 0);
}

TEST_CASE("cohort_default: population scale and junior/senior roles") {
    const Corpus corpus = generate(preset("cohort_default"));
    CHECK(cohort_members(corpus, 25).size() >= 60);
    CHECK(cohort_members(corpus, 20).size() >= cohort_members(corpus, 25).size());

    // focal author c00: first author while junior, last author once senior
    for (const auto& paper_id : corpus.papers_of("c00")) {
        const PaperRecord& paper = corpus.paper(paper_id);
        if (paper.authors.size() == 1) continue;  // debut-year solo papers
        if (paper.pub_year - 1990 < 12)
            CHECK(paper.authors.front() == "c00");
        else
            CHECK(paper.authors.back() == "c00");
    }
}

TEST_CASE("figure1b: five qualitatively different careers") {
    const Corpus corpus = generate(preset("figure1b"));
    std::map<std::string, std::vector<int>> series;
    std::map<std::string, double> rss;
    for (const std::string id : {"V", "W", "X", "Y", "Z"}) {
        CHECK(corpus.career(id).career_length == 25);
        const HSeries s = h_series(corpus, id);
        series[id] = s.values;
        rss[id] = fit_linear_constrained(s).rss;
    }

    // V is the most linear of the five
    for (const std::string id : {"W", "X", "Y", "Z"}) CHECK(rss.at("V") < rss.at(id));

    // W grows faster late than early; X dramatically so
    auto halves = [&](const std::string& id) {
        const auto& v = series.at(id);
        const int mid = static_cast<int>(v.size()) / 2;
        const int last = static_cast<int>(v.size()) - 1;
        return std::pair{window_increment(v, 0, mid), window_increment(v, mid, last)};
    };
    const auto [w_early, w_late] = halves("W");
    CHECK(w_late > w_early + 0.3);
    const auto [x_early, x_late] = halves("X");
    CHECK(x_late > x_early + 1.0);

    // Y and Z slump mid-career; the convex/linear three do not
    CHECK(has_midcareer_slump(series.at("Y")));
    CHECK(has_midcareer_slump(series.at("Z")));
    CHECK_FALSE(has_midcareer_slump(series.at("W")));
    CHECK_FALSE(has_midcareer_slump(series.at("X")));
}

TEST_SUITE_END();
