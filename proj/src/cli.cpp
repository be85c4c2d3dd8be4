#include "bibliodex/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bibliodex/alpha.hpp"
#include "bibliodex/cohort.hpp"
#include "bibliodex/corpus.hpp"
#include "bibliodex/indices.hpp"
#include "bibliodex/synth.hpp"

namespace bibliodex::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

/// Reals are emitted with six digits after the decimal point (CSV) or rounded
/// to six decimals (JSON) so that repeated runs are byte-identical.
std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

double round6(double value) { return std::round(value * 1e6) / 1e6; }

class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(nlohmann::ordered_json row) { rows_.push_back(std::move(row)); }

    void render(Format format, std::ostream& out) const {
        if (format == Format::csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out << (i ? "," : "") << columns_[i];
            out << '\n';
            for (const auto& row : rows_) {
                for (std::size_t i = 0; i < columns_.size(); ++i) {
                    if (i) out << ',';
                    const auto& cell = row[columns_[i]];
                    if (cell.is_string())
                        out << cell.get<std::string>();
                    else if (cell.is_boolean())
                        out << (cell.get<bool>() ? "true" : "false");
                    else if (cell.is_number_float())
                        out << format_real(cell.get<double>());
                    else
                        out << cell.dump();
                }
                out << '\n';
            }
        } else {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (auto row : rows_) {
                for (auto& [key, value] : row.items())
                    if (value.is_number_float()) value = round6(value.get<double>());
                doc.push_back(std::move(row));
            }
            out << doc.dump(2) << '\n';
        }
    }

private:
    std::vector<std::string> columns_;
    std::vector<nlohmann::ordered_json> rows_;
};

struct CorpusInput {
    std::string papers_file;
    std::string citations_file;
    std::string json_file;
    std::optional<int> observation_year;

    void attach(CLI::App& cmd) {
        auto* papers = cmd.add_option("--papers", papers_file, "papers CSV file");
        auto* citations = cmd.add_option("--citations", citations_file, "citations CSV file");
        auto* json = cmd.add_option("--json", json_file, "corpus JSON file ('-' for stdin)");
        cmd.add_option("--observation", observation_year,
                       "calendar year through which citation data is complete");
        papers->needs(citations);
        citations->needs(papers);
        json->excludes(papers);
    }

    Corpus load(std::istream& in) const {
        if (!papers_file.empty()) {
            if (!observation_year)
                throw UsageError("--observation is required with --papers/--citations");
            return ingest_csv(papers_file, citations_file, *observation_year);
        }
        if (json_file.empty() || json_file == "-")
            return ingest_json_stream(in, observation_year, "stdin");
        return ingest_json(json_file, observation_year);
    }
};

std::vector<std::string> resolve_authors(const Corpus& corpus,
                                         const std::vector<std::string>& requested) {
    if (requested.empty()) return corpus.author_ids();
    std::vector<std::string> authors = requested;
    std::sort(authors.begin(), authors.end());
    authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
    for (const auto& author : authors)
        if (!corpus.has_author(author)) throw DataError("unknown author " + author);
    return authors;
}

IndexKind resolve_kind(const std::string& index_name, AlphaMode mode) {
    if (index_name == "h_alpha")
        return mode == AlphaMode::current ? IndexKind::h_alpha_current
                                          : IndexKind::h_alpha_historical;
    return index_kind_from_string(index_name);
}

int index_value(const Corpus& corpus, const std::string& author, IndexKind kind,
                TiePolicy tie_policy) {
    const int year = corpus.observation_year();
    switch (kind) {
        case IndexKind::h: return h_at(corpus, author, year);
        case IndexKind::gh_e: return gh_index(corpus, author, year, CreditScheme::equal);
        case IndexKind::gh_1: return gh_index(corpus, author, year, CreditScheme::first);
        case IndexKind::gh_L: return gh_index(corpus, author, year, CreditScheme::last);
        case IndexKind::h_alpha_current:
            return h_alpha(corpus, author, AlphaMode::current, tie_policy);
        case IndexKind::h_alpha_historical:
            return h_alpha(corpus, author, AlphaMode::historical, tie_policy);
    }
    return 0;
}

// --- subcommand bodies ---------------------------------------------------

void run_validate(const Corpus& corpus, Format format, std::ostream& out) {
    Table table({"papers", "authors", "observation_year"});
    table.add_row({{"papers", corpus.paper_count()},
                   {"authors", corpus.author_count()},
                   {"observation_year", corpus.observation_year()}});
    table.render(format, out);
}

void run_index(const Corpus& corpus, const std::vector<std::string>& requested,
               const std::string& index_name, AlphaMode mode, TiePolicy tie_policy,
               Format format, std::ostream& out) {
    std::vector<IndexKind> kinds;
    if (index_name == "all") {
        kinds = {IndexKind::h, IndexKind::gh_e, IndexKind::gh_1, IndexKind::gh_L,
                 mode == AlphaMode::current ? IndexKind::h_alpha_current
                                            : IndexKind::h_alpha_historical};
    } else {
        kinds = {resolve_kind(index_name, mode)};
    }
    Table table({"author", "index", "value"});
    for (const auto& author : resolve_authors(corpus, requested))
        for (IndexKind kind : kinds)
            table.add_row({{"author", author},
                           {"index", to_string(kind)},
                           {"value", index_value(corpus, author, kind, tie_policy)}});
    table.render(format, out);
}

void run_series(const Corpus& corpus, const std::vector<std::string>& requested,
                const std::string& index_name, AlphaMode mode, TiePolicy tie_policy,
                Format format, std::ostream& out) {
    const IndexKind kind = resolve_kind(index_name, mode);
    Table table({"author", "index", "t", "value"});
    for (const auto& author : resolve_authors(corpus, requested)) {
        const HSeries series = index_series(corpus, author, kind, tie_policy);
        for (std::size_t t = 0; t < series.values.size(); ++t)
            table.add_row({{"author", author},
                           {"index", to_string(kind)},
                           {"t", t},
                           {"value", series.values[t]}});
    }
    table.render(format, out);
}

void run_cohort(const Corpus& corpus, const CohortSpec& spec, Format format, std::ostream& out) {
    Table table({"t", "mean", "cohort_size"});
    for (const auto& point : cohort_average(corpus, spec))
        table.add_row(
            {{"t", point.t}, {"mean", point.mean}, {"cohort_size", point.cohort_size}});
    table.render(format, out);
}

void run_fit(const Corpus& corpus, int min_career, std::optional<double> histogram_width,
             Format format, std::ostream& out) {
    std::vector<FitResult> fits;
    for (const auto& author : cohort_members(corpus, std::max(min_career, 2)))
        fits.push_back(fit_linear_constrained(h_series(corpus, author)));
    if (fits.empty()) throw DataError("no author has a career of at least 2 years");

    if (histogram_width) {
        Table table({"bin_lo", "bin_hi", "count"});
        for (const auto& bin : slope_histogram(fits, *histogram_width))
            table.add_row({{"bin_lo", bin.lo}, {"bin_hi", bin.hi}, {"count", bin.count}});
        table.render(format, out);
    } else {
        Table table({"author", "slope", "h0", "rss"});
        for (const auto& fit : fits)
            table.add_row({{"author", fit.author_id},
                           {"slope", fit.slope},
                           {"h0", fit.intercept},
                           {"rss", fit.rss}});
        table.render(format, out);
    }
}

void run_distribution(const Corpus& corpus, int min_career, const std::string& scheme_name,
                      Format format, std::ostream& out) {
    const CreditScheme scheme = credit_scheme_from_string(scheme_name);
    Table table({"h", "gh", "count"});
    for (const auto& row : distribution_table(corpus, min_career, scheme))
        table.add_row({{"h", row.h}, {"gh", row.gh}, {"count", row.count}});
    table.render(format, out);
}

void run_alpha(const Corpus& corpus, AlphaMode mode, Format format, std::ostream& out) {
    const HatCache cache(corpus);
    Table table({"paper_id", "mode", "alpha_authors", "tie"});
    for (const auto& [paper_id, paper] : corpus.papers()) {
        const AlphaAssignment assignment = assign_alpha(corpus, paper_id, mode, &cache);
        std::string alphas;
        for (std::size_t i = 0; i < assignment.alpha_authors.size(); ++i) {
            if (i) alphas += '|';
            alphas += assignment.alpha_authors[i];
        }
        table.add_row({{"paper_id", paper_id},
                       {"mode", to_string(mode)},
                       {"alpha_authors", alphas},
                       {"tie", assignment.tie}});
    }
    table.render(format, out);
}

struct SynthOptions {
    std::string preset_name;
    std::string config_file;
    std::optional<std::uint64_t> seed;
    std::string out_papers;
    std::string out_citations;
    std::string out_json;
    bool print_config = false;
};

void run_synth(const SynthOptions& options, Format format, bool format_given,
               std::ostream& out) {
    ScenarioConfig config;
    if (!options.preset_name.empty()) {
        config = preset(options.preset_name);
    } else {
        std::ifstream in(options.config_file);
        if (!in) throw DataError("cannot open " + options.config_file);
        config = config_from_json(in, options.config_file);
    }
    if (options.seed) config.seed = *options.seed;
    if (const char* env_seed = std::getenv("BIBLIODEX_SEED")) {
        try {
            config.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            throw UsageError(std::string("BIBLIODEX_SEED is not an unsigned integer: ") +
                             env_seed);
        }
    }

    if (options.print_config) {
        out << config_to_json(config);
        return;
    }

    const Corpus corpus = generate(config);
    if (!options.out_papers.empty()) {
        write_csv(corpus, options.out_papers, options.out_citations);
        return;
    }
    if (!options.out_json.empty()) {
        std::ofstream json_out(options.out_json);
        if (!json_out) throw DataError("cannot open " + options.out_json + " for writing");
        write_json(corpus, json_out);
        return;
    }
    // A corpus is two CSV tables; stdout carries the self-describing JSON
    // form unless file outputs were requested.
    if (format_given && format == Format::csv)
        throw UsageError("synth --format csv requires --out-papers and --out-citations");
    write_json(corpus, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"corpus-driven h-index / gh-index analytics"};
    app.name("bibliodex");
    app.require_subcommand(1);

    std::string format_name = "csv";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CorpusInput input;
    std::vector<std::string> authors;
    std::string index_name = "h";
    std::string series_index_name = "h";
    std::string mode_name = "current";
    std::string tie_name = "inclusive";
    std::string scheme_name;
    int min_career = 1;
    int fit_min_career = 2;
    std::optional<int> truncate_after;
    std::optional<double> histogram_width;
    SynthOptions synth_options;
    std::optional<std::uint64_t> seed_flag;

    auto* validate_cmd = app.add_subcommand("validate", "ingest and validate a corpus");
    input.attach(*validate_cmd);

    auto add_mode_flags = [&](CLI::App& cmd) {
        cmd.add_option("--mode", mode_name, "alpha-author mode")
            ->check(CLI::IsMember({"current", "historical"}));
        cmd.add_option("--tie-policy", tie_name, "alpha tie handling")
            ->check(CLI::IsMember({"inclusive", "strict"}));
    };

    auto* index_cmd = app.add_subcommand("index", "per-author index values");
    input.attach(*index_cmd);
    index_cmd->add_option("--authors", authors, "author ids (default: all)")->delimiter(',');
    index_cmd->add_option("--index", index_name, "index kind")
        ->check(CLI::IsMember({"h", "gh_e", "gh_1", "gh_L", "h_alpha", "all"}));
    add_mode_flags(*index_cmd);

    auto* series_cmd = app.add_subcommand("series", "per-career-year index series");
    input.attach(*series_cmd);
    series_cmd->add_option("--authors", authors, "author ids (default: all)")->delimiter(',');
    series_cmd->add_option("--index", series_index_name, "index kind")
        ->check(CLI::IsMember({"h", "gh_e", "gh_1", "gh_L", "h_alpha"}));
    add_mode_flags(*series_cmd);

    auto* cohort_cmd = app.add_subcommand("cohort", "mean index over a career-length cohort");
    input.attach(*cohort_cmd);
    cohort_cmd->add_option("--min-career", min_career, "minimum career length (years)")
        ->required()
        ->check(CLI::PositiveNumber);
    cohort_cmd->add_option("--index", series_index_name, "index kind")
        ->check(CLI::IsMember({"h", "gh_e", "gh_1", "gh_L", "h_alpha"}));
    cohort_cmd->add_option("--truncate-after", truncate_after,
                           "drop papers published after the first N career years")
        ->check(CLI::PositiveNumber);
    add_mode_flags(*cohort_cmd);

    auto* fit_cmd = app.add_subcommand("fit", "constrained linear fits of h(t)");
    input.attach(*fit_cmd);
    fit_cmd->add_option("--min-career", fit_min_career, "minimum career length (years)")
        ->check(CLI::Range(2, 1000));
    fit_cmd->add_option("--histogram", histogram_width, "emit a slope histogram with this bin width")
        ->check(CLI::PositiveNumber);

    auto* distribution_cmd =
        app.add_subcommand("distribution", "final gh vs h distribution over a cohort");
    input.attach(*distribution_cmd);
    distribution_cmd->add_option("--scheme", scheme_name, "credit scheme")
        ->required()
        ->check(CLI::IsMember({"first", "last"}));
    distribution_cmd->add_option("--min-career", min_career, "minimum career length (years)")
        ->check(CLI::PositiveNumber);

    auto* alpha_cmd = app.add_subcommand("alpha", "per-paper alpha-author assignments");
    input.attach(*alpha_cmd);
    alpha_cmd->add_option("--mode", mode_name, "alpha-author mode")
        ->check(CLI::IsMember({"current", "historical"}));

    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic corpus");
    auto* preset_opt =
        synth_cmd->add_option("--preset", synth_options.preset_name, "pinned scenario name")
            ->check(CLI::IsMember(preset_names()));
    auto* config_opt =
        synth_cmd->add_option("--config", synth_options.config_file, "scenario config JSON");
    preset_opt->excludes(config_opt);
    synth_cmd->add_option("--seed", seed_flag, "override the scenario seed");
    auto* out_papers_opt =
        synth_cmd->add_option("--out-papers", synth_options.out_papers, "write papers CSV here");
    auto* out_citations_opt = synth_cmd->add_option("--out-citations", synth_options.out_citations,
                                                    "write citations CSV here");
    out_papers_opt->needs(out_citations_opt);
    out_citations_opt->needs(out_papers_opt);
    synth_cmd->add_option("--out-json", synth_options.out_json, "write corpus JSON here");
    synth_cmd->add_flag("--print-config", synth_options.print_config,
                        "print the resolved scenario config instead of generating");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return exit_ok;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            err << "error[usage]: " << e.what() << '\n';
            return exit_usage_error;
        }

        const Format format = format_name == "json" ? Format::json : Format::csv;
        const AlphaMode mode = alpha_mode_from_string(mode_name);
        const TiePolicy tie_policy = tie_policy_from_string(tie_name);

        if (app.got_subcommand(synth_cmd)) {
            if (synth_options.preset_name.empty() && synth_options.config_file.empty())
                throw UsageError("synth requires --preset or --config");
            synth_options.seed = seed_flag;
            run_synth(synth_options, format, app.count("--format") > 0, out);
            return exit_ok;
        }

        const Corpus corpus = input.load(in);
        if (app.got_subcommand(validate_cmd)) {
            run_validate(corpus, format, out);
        } else if (app.got_subcommand(index_cmd)) {
            run_index(corpus, authors, index_name, mode, tie_policy, format, out);
        } else if (app.got_subcommand(series_cmd)) {
            run_series(corpus, authors, series_index_name, mode, tie_policy, format, out);
        } else if (app.got_subcommand(cohort_cmd)) {
            CohortSpec spec;
            spec.min_career_length = min_career;
            spec.kind = resolve_kind(series_index_name, mode);
            spec.truncate_after = truncate_after;
            spec.tie_policy = tie_policy;
            run_cohort(corpus, spec, format, out);
        } else if (app.got_subcommand(fit_cmd)) {
            run_fit(corpus, fit_min_career, histogram_width, format, out);
        } else if (app.got_subcommand(distribution_cmd)) {
            run_distribution(corpus, min_career, scheme_name, format, out);
        } else if (app.got_subcommand(alpha_cmd)) {
            run_alpha(corpus, mode, format, out);
        }
        return exit_ok;
    } catch (const UsageError& e) {
        err << "error[usage]: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const DataError& e) {
        for (const auto& diagnostic : e.diagnostics())
            err << "error[data]: " << diagnostic.format() << '\n';
        return exit_data_error;
    } catch (const std::exception& e) {
        err << "error[data]: " << e.what() << '\n';
        return exit_data_error;
    }
}

}  // namespace bibliodex::cli
