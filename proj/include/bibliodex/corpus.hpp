#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bibliodex/error.hpp"

namespace bibliodex {

/// One publication: ordered author list plus the number of times it has been
/// cited in each calendar year. Years absent from cites_by_year are zero.
struct PaperRecord {
    std::string paper_id;
    int pub_year = 0;
    std::vector<std::string> authors;        // position 0 = first author, back = last author
    std::map<int, long long> cites_by_year;  // sparse; keys >= pub_year, counts >= 0

    /// Citations accrued in all years <= `year`.
    long long citations_through(int year) const;
    long long total_citations() const;
    bool has_author(const std::string& author_id) const;
    /// 0-based position in the author list, or nullopt.
    std::optional<std::size_t> author_position(const std::string& author_id) const;

    bool operator==(const PaperRecord&) const = default;
};

struct AuthorCareer {
    std::string author_id;
    int first_pub_year = 0;
    int career_length = 0;  // observation_year - first_pub_year + 1
};

/// Validated, immutable collection of papers plus an author -> papers index.
/// Construct through from_records() or the ingest_* functions; both throw
/// DataError listing every violation found.
class Corpus {
public:
    static Corpus from_records(std::vector<PaperRecord> records, int observation_year);

    int observation_year() const { return observation_year_; }
    std::size_t paper_count() const { return papers_.size(); }
    std::size_t author_count() const { return author_index_.size(); }

    bool has_paper(const std::string& paper_id) const;
    bool has_author(const std::string& author_id) const;

    const PaperRecord& paper(const std::string& paper_id) const;
    /// Paper ids for one author, sorted; unknown author throws.
    const std::vector<std::string>& papers_of(const std::string& author_id) const;

    const std::map<std::string, PaperRecord>& papers() const { return papers_; }
    const std::map<std::string, std::vector<std::string>>& author_index() const { return author_index_; }
    std::vector<std::string> author_ids() const;

    AuthorCareer career(const std::string& author_id) const;

    bool operator==(const Corpus&) const = default;

private:
    Corpus() = default;

    std::map<std::string, PaperRecord> papers_;
    std::map<std::string, std::vector<std::string>> author_index_;
    std::map<std::string, int> first_pub_year_;
    int observation_year_ = 0;
};

// --- ingestion ---------------------------------------------------------
//
// papers.csv    header `paper_id,pub_year,authors`, authors `|`-separated.
// citations.csv header `paper_id,year,count`, one row per (paper, year),
//               count >= 1; absent pairs mean zero citations.
// JSON          either a bare array of paper objects (observation year must
//               be supplied by the caller) or a wrapper object
//               `{"observation_year": N, "papers": [...]}`.

Corpus ingest_csv(const std::filesystem::path& papers_file,
                  const std::filesystem::path& citations_file, int observation_year);
Corpus ingest_csv_streams(std::istream& papers, std::istream& citations, int observation_year,
                          const std::string& papers_name = "papers",
                          const std::string& citations_name = "citations");

Corpus ingest_json(const std::filesystem::path& file, std::optional<int> observation_year = {});
Corpus ingest_json_stream(std::istream& in, std::optional<int> observation_year = {},
                          const std::string& name = "json");

// --- export ------------------------------------------------------------
// Canonical forms: rows sorted by paper id (citations additionally by year),
// JSON papers sorted by paper id with ascending year keys. Ingesting an
// exported corpus reproduces it exactly.

void write_csv(const Corpus& corpus, std::ostream& papers_out, std::ostream& citations_out);
void write_csv(const Corpus& corpus, const std::filesystem::path& papers_file,
               const std::filesystem::path& citations_file);
/// Wrapper-object JSON including the observation year.
void write_json(const Corpus& corpus, std::ostream& out);
std::string to_json_string(const Corpus& corpus);

}  // namespace bibliodex
