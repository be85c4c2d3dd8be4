#include "bibliodex/synth.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace bibliodex {

namespace {

// mt19937_64 output is fully specified by the standard; the mappings below
// avoid std::uniform_*_distribution (whose results vary across standard
// libraries) so that a seed reproduces the same corpus on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() {  // [0, 1), 53-bit resolution
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    int below(int n) {  // [0, n)
        if (n <= 1) return 0;
        return static_cast<int>(next() % static_cast<std::uint64_t>(n));
    }

    long long stochastic_round(double x) {
        const double f = std::floor(x);
        return static_cast<long long>(f) + (uniform() < x - f ? 1 : 0);
    }

    // First k elements of a random permutation of [0, n).
    std::vector<int> sample(int n, int k) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        k = std::min(k, n);
        for (int i = 0; i < k; ++i) std::swap(idx[i], idx[i + below(n - i)]);
        idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

struct ActiveWindow {
    int start = 0;
    int stop = 0;  // inclusive
};

int effective_stop(const AuthorSpec& spec, int observation_year) {
    if (spec.stop_year) return std::min(*spec.stop_year, observation_year);
    if (spec.archetype == Archetype::plateau) {
        // plateau without an explicit stop: publish for 60% of the career
        const int span = observation_year - spec.start_year;
        return spec.start_year + (span * 6) / 10;
    }
    return observation_year;
}

double rate_factor(const AuthorSpec& spec, int t) {
    switch (spec.archetype) {
        case Archetype::linear: return 1.0;
        case Archetype::delayed_start: return t < 4 ? 0.25 : 1.0;
        case Archetype::accelerating:
            return std::min(2.0, 0.4 + 0.07 * t * spec.intensity);
        case Archetype::plateau: return 1.0;
        case Archetype::complex:
            if (t < 6) return 1.0;
            if (t < 12) return 0.1;
            return 1.0 + 0.25 * spec.intensity;
    }
    return 1.0;
}

double quality_factor(const AuthorSpec& spec, int t) {
    switch (spec.archetype) {
        case Archetype::linear: return 1.0;
        case Archetype::delayed_start: return t < 4 ? 0.6 : 1.0;
        case Archetype::accelerating: return 0.5 + 0.09 * t * spec.intensity;
        case Archetype::plateau: return 1.0;
        case Archetype::complex:
            if (t < 6) return 1.0;
            if (t < 12) return 0.6;
            return 1.1;
    }
    return 1.0;
}

// {0.5, 0.75, 1.0, 1.0, 1.25, 1.75}: per-paper impact spread
double paper_quality(Rng& rng) {
    static constexpr double levels[] = {0.5, 0.75, 1.0, 1.0, 1.25, 1.75};
    return levels[rng.below(6)];
}

void check_config(const ScenarioConfig& config) {
    auto fail = [](const std::string& field, const std::string& why) {
        throw DataError("invalid config: " + field + " " + why);
    };
    if (config.authors.empty()) fail("authors", "must not be empty");
    if (!(config.kernel.peak_height >= 0.0)) fail("citation_kernel.peak_height", "must be >= 0");
    if (config.kernel.peak_delay < 0) fail("citation_kernel.peak_delay", "must be >= 0");
    if (!(config.kernel.decay > 0.0) || config.kernel.decay > 1.0)
        fail("citation_kernel.decay", "must be in (0, 1]");

    std::map<std::string, int> ids;
    for (std::size_t i = 0; i < config.authors.size(); ++i) {
        const auto& a = config.authors[i];
        const std::string where = "authors[" + std::to_string(i) + "]";
        if (a.id.empty()) fail(where + ".id", "must not be empty");
        if (!ids.emplace(a.id, static_cast<int>(i)).second)
            fail(where + ".id", "duplicates id '" + a.id + "'");
        if (a.start_year > config.observation_year)
            fail(where + ".start_year", "is after observation_year");
        if (a.stop_year && *a.stop_year < a.start_year)
            fail(where + ".stop_year", "is before start_year");
        if (!(a.papers_per_year >= 0.0)) fail(where + ".papers_per_year", "must be >= 0");
        if (a.senior_after < 0) fail(where + ".senior_after", "must be >= 0");
        if (!(a.intensity >= 0.0)) fail(where + ".intensity", "must be >= 0");
        std::map<std::string, int> pool;
        for (const auto& c : a.collaborators) {
            if (c.empty()) fail(where + ".collaborators", "contains an empty id");
            if (c == a.id) fail(where + ".collaborators", "contains the author itself");
            if (!pool.emplace(c, 0).second)
                fail(where + ".collaborators", "lists '" + c + "' more than once");
        }
    }
}

}  // namespace

std::string to_string(Archetype a) {
    switch (a) {
        case Archetype::linear: return "linear";
        case Archetype::delayed_start: return "delayed-start";
        case Archetype::accelerating: return "accelerating";
        case Archetype::plateau: return "plateau";
        case Archetype::complex: return "complex";
    }
    return "linear";
}

Archetype archetype_from_string(const std::string& name) {
    if (name == "linear") return Archetype::linear;
    if (name == "delayed-start") return Archetype::delayed_start;
    if (name == "accelerating") return Archetype::accelerating;
    if (name == "plateau") return Archetype::plateau;
    if (name == "complex") return Archetype::complex;
    throw DataError("unknown archetype '" + name + "'");
}

Corpus generate(const ScenarioConfig& config) {
    check_config(config);
    Rng rng(config.seed);

    // Configured authors appear as collaborators only inside their own
    // active window; other pool ids are always available.
    std::map<std::string, ActiveWindow> windows;
    for (const auto& spec : config.authors)
        windows[spec.id] = {spec.start_year, effective_stop(spec, config.observation_year)};

    auto available = [&](const std::string& id, int year) {
        auto it = windows.find(id);
        if (it == windows.end()) return true;
        return year >= it->second.start && year <= it->second.stop;
    };

    std::vector<PaperRecord> records;
    int next_paper = 1;

    for (const auto& spec : config.authors) {
        const int stop = effective_stop(spec, config.observation_year);
        const std::size_t early_size = std::min<std::size_t>(2, spec.collaborators.size());

        for (int year = spec.start_year; year <= stop; ++year) {
            const int t = year - spec.start_year;
            const double rate = spec.papers_per_year * rate_factor(spec, t);
            long long n_papers = rng.stochastic_round(rate);
            if (year == spec.start_year) n_papers = std::max<long long>(1, n_papers);

            for (long long i = 0; i < n_papers; ++i) {
                PaperRecord paper;
                char id[16];
                std::snprintf(id, sizeof id, "p%06d", next_paper++);
                paper.paper_id = id;
                paper.pub_year = year;

                // Debut-year papers are single-authored; afterwards the
                // author is first author while junior and last author once
                // senior, with pool members filling the remaining slots.
                if (year == spec.start_year) {
                    paper.authors = {spec.id};
                } else {
                    std::vector<std::string> early, late;
                    for (std::size_t c = 0; c < spec.collaborators.size(); ++c) {
                        const auto& cid = spec.collaborators[c];
                        if (!available(cid, year)) continue;
                        (c < early_size ? early : late).push_back(cid);
                    }
                    const bool senior = t >= spec.senior_after;
                    std::vector<std::string>& pool = senior ? late : early;
                    if (pool.empty() && senior) pool = early;  // no students yet
                    if (pool.empty()) {
                        paper.authors = {spec.id};
                    } else {
                        const int want = 1 + rng.below(static_cast<int>(std::min<std::size_t>(
                                                 senior ? 3 : 2, pool.size())));
                        std::vector<std::string> picked;
                        for (int idx : rng.sample(static_cast<int>(pool.size()), want))
                            picked.push_back(pool[idx]);
                        if (senior) {
                            paper.authors = picked;       // a student leads the paper
                            paper.authors.push_back(spec.id);
                        } else {
                            paper.authors = {spec.id};    // the junior author leads
                            paper.authors.insert(paper.authors.end(), picked.begin(),
                                                 picked.end());
                        }
                    }
                }

                const double quality = quality_factor(spec, t) * paper_quality(rng);
                double geometric = config.kernel.peak_height;
                for (int cite_year = year; cite_year <= config.observation_year; ++cite_year) {
                    const int d = cite_year - year;
                    double mu;
                    if (d < config.kernel.peak_delay) {
                        mu = config.kernel.peak_height * (d + 1) /
                             (config.kernel.peak_delay + 1);
                    } else {
                        if (d > config.kernel.peak_delay) geometric *= config.kernel.decay;
                        mu = geometric;
                    }
                    mu *= quality;
                    if (mu < 1e-4) continue;
                    const long long count = rng.stochastic_round(mu);
                    if (count > 0) paper.cites_by_year[cite_year] = count;
                }
                records.push_back(std::move(paper));
            }
        }
    }
    return Corpus::from_records(std::move(records), config.observation_year);
}

// --- presets -------------------------------------------------------------

namespace {

ScenarioConfig preset_figure1b() {
    ScenarioConfig config;
    config.seed = 101;
    config.observation_year = 2014;
    config.kernel = {3.2, 2, 0.9};

    auto author = [](std::string id, Archetype a, double rate, double intensity,
                     std::optional<int> stop = {}) {
        AuthorSpec s;
        s.id = std::move(id);
        s.archetype = a;
        s.start_year = 1990;
        s.stop_year = stop;
        s.papers_per_year = rate;
        s.senior_after = 12;
        s.intensity = intensity;
        return s;
    };
    // five qualitatively different careers: near-linear, convex, strongly
    // convex, and two non-monotone-slope shapes
    AuthorSpec v = author("V", Archetype::delayed_start, 2.6, 1.0);
    AuthorSpec w = author("W", Archetype::accelerating, 2.0, 1.0);
    AuthorSpec x = author("X", Archetype::accelerating, 2.2, 1.8);
    AuthorSpec y = author("Y", Archetype::complex, 2.4, 1.0);
    AuthorSpec z = author("Z", Archetype::complex, 2.6, 1.8, 2009);
    for (AuthorSpec* s : {&v, &w, &x, &y, &z}) {
        const std::string& id = s->id;
        s->collaborators = {id + "_a1", id + "_a2", id + "_s1", id + "_s2", id + "_s3"};
    }
    config.authors = {v, w, x, y, z};
    return config;
}

ScenarioConfig preset_abc_out_alpha() {
    ScenarioConfig config;
    config.seed = 202;
    config.observation_year = 2014;
    config.kernel = {3.2, 2, 0.7};

    auto author = [](std::string id, double rate, std::optional<int> stop,
                     std::vector<std::string> pool) {
        AuthorSpec s;
        s.id = std::move(id);
        s.archetype = Archetype::linear;
        s.start_year = 1990;
        s.stop_year = stop;
        s.papers_per_year = rate;
        s.senior_after = 99;  // peers throughout; nobody claims the senior slot
        s.collaborators = std::move(pool);
        return s;
    };
    // B and C publish more until they stop in 1999; A keeps going and
    // eventually overtakes both.
    config.authors = {
        author("A", 2.0, {}, {"B", "C"}),
        author("B", 2.8, 1996, {"A", "C"}),
        author("C", 2.8, 1996, {"A", "B"}),
    };
    return config;
}

ScenarioConfig preset_cohort_default() {
    ScenarioConfig config;
    config.seed = 303;
    config.observation_year = 2014;
    config.kernel = {3.0, 2, 0.85};

    auto make = [](std::string id, int start, int variant) {
        AuthorSpec s;
        s.id = std::move(id);
        s.start_year = start;
        s.senior_after = 12;
        s.papers_per_year = 1.8 + 0.1 * (variant % 7);
        s.intensity = 0.8 + 0.05 * (variant % 5);
        switch (variant % 10) {  // 60% linear, 10% each of the other shapes
            case 6: s.archetype = Archetype::delayed_start; break;
            case 7: s.archetype = Archetype::accelerating; break;
            case 8: s.archetype = Archetype::plateau; break;
            case 9: s.archetype = Archetype::complex; break;
            default: s.archetype = Archetype::linear; break;
        }
        const std::string& id_ref = s.id;
        s.collaborators = {id_ref + "_a1", id_ref + "_a2", id_ref + "_s1", id_ref + "_s2",
                           id_ref + "_s3", id_ref + "_s4"};
        return s;
    };

    // 67 authors with a 25-year career (the Fig-scale cohort) plus a younger
    // tail so the >=15 and >=20 cohorts are strict supersets.
    for (int i = 0; i < 67; ++i) {
        char id[8];
        std::snprintf(id, sizeof id, "c%02d", i);
        config.authors.push_back(make(id, 1990, i));
    }
    for (int i = 0; i < 24; ++i) {
        char id[8];
        std::snprintf(id, sizeof id, "m%02d", i);
        config.authors.push_back(make(id, 1992 + (i % 8), i + 3));
    }
    return config;
}

}  // namespace

ScenarioConfig preset(const std::string& name) {
    if (name == "figure1b") return preset_figure1b();
    if (name == "abc_out_alpha") return preset_abc_out_alpha();
    if (name == "cohort_default") return preset_cohort_default();
    throw DataError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"figure1b", "abc_out_alpha", "cohort_default"}; }

// --- config (de)serialization ---------------------------------------------

ScenarioConfig config_from_json(std::istream& in, const std::string& name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError({{name, 0, std::string("invalid JSON: ") + e.what()}});
    }
    if (!doc.is_object()) throw DataError("invalid config: expected a JSON object");

    auto require = [&](const nlohmann::json& obj, const char* key, const std::string& where) {
        if (!obj.contains(key))
            throw DataError("invalid config: missing field " +
                            (where.empty() ? key : where + "." + key));
        return obj[key];
    };

    ScenarioConfig config;
    try {
        config.seed = require(doc, "seed", "").get<std::uint64_t>();
        config.observation_year = require(doc, "observation_year", "").get<int>();
        if (doc.contains("citation_kernel")) {
            const auto& k = doc["citation_kernel"];
            config.kernel.peak_height =
                require(k, "peak_height", "citation_kernel").get<double>();
            config.kernel.peak_delay = require(k, "peak_delay", "citation_kernel").get<int>();
            config.kernel.decay = require(k, "decay", "citation_kernel").get<double>();
        }
        const auto& authors = require(doc, "authors", "");
        if (!authors.is_array()) throw DataError("invalid config: authors must be an array");
        for (std::size_t i = 0; i < authors.size(); ++i) {
            const auto& a = authors[i];
            const std::string where = "authors[" + std::to_string(i) + "]";
            AuthorSpec spec;
            spec.id = require(a, "id", where).get<std::string>();
            spec.archetype =
                archetype_from_string(require(a, "archetype", where).get<std::string>());
            spec.start_year = require(a, "start_year", where).get<int>();
            if (a.contains("stop_year") && !a["stop_year"].is_null())
                spec.stop_year = a["stop_year"].get<int>();
            spec.papers_per_year = require(a, "papers_per_year", where).get<double>();
            if (a.contains("senior_after")) spec.senior_after = a["senior_after"].get<int>();
            if (a.contains("intensity")) spec.intensity = a["intensity"].get<double>();
            if (a.contains("collaborators"))
                spec.collaborators = a["collaborators"].get<std::vector<std::string>>();
            config.authors.push_back(std::move(spec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid config: ") + e.what());
    }
    check_config(config);
    return config;
}

ScenarioConfig config_from_json_string(const std::string& text) {
    std::istringstream in(text);
    return config_from_json(in, "config");
}

std::string config_to_json(const ScenarioConfig& config) {
    nlohmann::ordered_json doc;
    doc["seed"] = config.seed;
    doc["observation_year"] = config.observation_year;
    doc["citation_kernel"] = {{"peak_height", config.kernel.peak_height},
                              {"peak_delay", config.kernel.peak_delay},
                              {"decay", config.kernel.decay}};
    auto& authors = doc["authors"] = nlohmann::ordered_json::array();
    for (const auto& spec : config.authors) {
        nlohmann::ordered_json a;
        a["id"] = spec.id;
        a["archetype"] = to_string(spec.archetype);
        a["start_year"] = spec.start_year;
        if (spec.stop_year) a["stop_year"] = *spec.stop_year;
        a["papers_per_year"] = spec.papers_per_year;
        a["senior_after"] = spec.senior_after;
        a["intensity"] = spec.intensity;
        a["collaborators"] = spec.collaborators;
        authors.push_back(std::move(a));
    }
    return doc.dump(2) + "\n";
}

}  // namespace bibliodex
