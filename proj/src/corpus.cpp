#include "bibliodex/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace bibliodex {

namespace {

constexpr const char* papers_header = "paper_id,pub_year,authors";
constexpr const char* citations_header = "paper_id,year,count";

std::optional<long long> parse_int(std::string_view field) {
    long long value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) return std::nullopt;
    return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(text.substr(start));
            break;
        }
        fields.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

// getline with CRLF and (first line only) BOM stripping.
bool next_line(std::istream& in, std::string& line, bool strip_bom) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip_bom && line.size() >= 3 && line.compare(0, 3, "\xef\xbb\xbf") == 0)
        line.erase(0, 3);
    return true;
}

struct RecordChecker {
    std::vector<Diagnostic>& diags;
    int observation_year;

    void check(const PaperRecord& p, const std::string& source, int line) {
        auto add = [&](std::string msg) { diags.push_back({source, line, std::move(msg)}); };
        if (p.paper_id.empty()) add("empty paper_id");
        if (p.authors.empty()) {
            add("paper " + p.paper_id + " has no authors");
        } else {
            std::set<std::string> seen;
            for (const auto& a : p.authors) {
                if (a.empty()) add("paper " + p.paper_id + " has an empty author id");
                if (!seen.insert(a).second)
                    add("paper " + p.paper_id + " lists author " + a + " more than once");
            }
        }
        if (p.pub_year > observation_year)
            add("paper " + p.paper_id + " pub_year " + std::to_string(p.pub_year) +
                " is after observation year " + std::to_string(observation_year));
        for (const auto& [year, count] : p.cites_by_year) {
            if (year < p.pub_year)
                add("paper " + p.paper_id + " cited in " + std::to_string(year) +
                    ", before its publication year " + std::to_string(p.pub_year));
            if (count < 0)
                add("paper " + p.paper_id + " has a negative citation count in " +
                    std::to_string(year));
        }
    }
};

}  // namespace

long long PaperRecord::citations_through(int year) const {
    long long total = 0;
    for (const auto& [y, count] : cites_by_year) {
        if (y > year) break;
        total += count;
    }
    return total;
}

long long PaperRecord::total_citations() const {
    long long total = 0;
    for (const auto& [y, count] : cites_by_year) total += count;
    return total;
}

bool PaperRecord::has_author(const std::string& author_id) const {
    return std::find(authors.begin(), authors.end(), author_id) != authors.end();
}

std::optional<std::size_t> PaperRecord::author_position(const std::string& author_id) const {
    auto it = std::find(authors.begin(), authors.end(), author_id);
    if (it == authors.end()) return std::nullopt;
    return static_cast<std::size_t>(it - authors.begin());
}

Corpus Corpus::from_records(std::vector<PaperRecord> records, int observation_year) {
    std::vector<Diagnostic> diags;
    RecordChecker checker{diags, observation_year};

    Corpus corpus;
    corpus.observation_year_ = observation_year;
    std::set<std::string> seen_ids;
    for (auto& record : records) {
        const std::size_t before = diags.size();
        checker.check(record, "", 0);
        if (!record.paper_id.empty() && !seen_ids.insert(record.paper_id).second)
            diags.push_back({"", 0, "duplicate paper_id " + record.paper_id});
        if (diags.size() == before) {
            std::string id = record.paper_id;
            corpus.papers_.emplace(std::move(id), std::move(record));
        }
    }
    if (!diags.empty()) throw DataError(std::move(diags));

    for (const auto& [id, paper] : corpus.papers_) {
        for (const auto& author : paper.authors) {
            corpus.author_index_[author].push_back(id);
            auto [it, inserted] = corpus.first_pub_year_.emplace(author, paper.pub_year);
            if (!inserted) it->second = std::min(it->second, paper.pub_year);
        }
    }
    // papers_ is ordered, so the per-author lists are already sorted.
    return corpus;
}

bool Corpus::has_paper(const std::string& paper_id) const { return papers_.count(paper_id) > 0; }

bool Corpus::has_author(const std::string& author_id) const {
    return author_index_.count(author_id) > 0;
}

const PaperRecord& Corpus::paper(const std::string& paper_id) const {
    auto it = papers_.find(paper_id);
    if (it == papers_.end()) throw DataError("unknown paper_id " + paper_id);
    return it->second;
}

const std::vector<std::string>& Corpus::papers_of(const std::string& author_id) const {
    auto it = author_index_.find(author_id);
    if (it == author_index_.end()) throw DataError("unknown author " + author_id);
    return it->second;
}

std::vector<std::string> Corpus::author_ids() const {
    std::vector<std::string> ids;
    ids.reserve(author_index_.size());
    for (const auto& [id, papers] : author_index_) ids.push_back(id);
    return ids;
}

AuthorCareer Corpus::career(const std::string& author_id) const {
    auto it = first_pub_year_.find(author_id);
    if (it == first_pub_year_.end()) throw DataError("unknown author " + author_id);
    return {author_id, it->second, observation_year_ - it->second + 1};
}

// --- CSV ingestion ------------------------------------------------------

namespace {

struct ParsedPapers {
    std::map<std::string, PaperRecord> papers;  // cites empty at this stage
    std::map<std::string, int> row_of_paper;
};

ParsedPapers parse_papers_csv(std::istream& in, int observation_year, const std::string& name) {
    std::vector<Diagnostic> diags;
    ParsedPapers result;
    std::string line;
    if (!next_line(in, line, true) || line != papers_header) {
        throw DataError({{name, 1, std::string("expected header '") + papers_header + "'"}});
    }
    int lineno = 1;
    while (next_line(in, line, false)) {
        ++lineno;
        auto add = [&](std::string msg) { diags.push_back({name, lineno, std::move(msg)}); };
        if (line.empty()) {
            add("empty row");
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != 3) {
            add("expected 3 fields, got " + std::to_string(fields.size()));
            continue;
        }
        PaperRecord record;
        record.paper_id = fields[0];
        if (record.paper_id.empty()) {
            add("empty paper_id");
            continue;
        }
        auto year = parse_int(fields[1]);
        if (!year) {
            add("pub_year '" + fields[1] + "' is not an integer");
            continue;
        }
        record.pub_year = static_cast<int>(*year);
        record.authors = split(fields[2], '|');

        bool row_ok = true;
        std::set<std::string> seen;
        for (const auto& a : record.authors) {
            if (a.empty()) {
                add("empty author id");
                row_ok = false;
            } else if (!seen.insert(a).second) {
                add("author " + a + " listed more than once");
                row_ok = false;
            }
        }
        if (record.pub_year > observation_year) {
            add("pub_year " + std::to_string(record.pub_year) + " is after observation year " +
                std::to_string(observation_year));
            row_ok = false;
        }
        if (result.papers.count(record.paper_id)) {
            add("duplicate paper_id " + record.paper_id);
            row_ok = false;
        }
        if (row_ok) {
            result.row_of_paper[record.paper_id] = lineno;
            result.papers.emplace(record.paper_id, std::move(record));
        }
    }
    if (!diags.empty()) throw DataError(std::move(diags));
    return result;
}

void parse_citations_csv(std::istream& in, ParsedPapers& parsed, const std::string& name) {
    std::vector<Diagnostic> diags;
    std::string line;
    if (!next_line(in, line, true) || line != citations_header) {
        throw DataError({{name, 1, std::string("expected header '") + citations_header + "'"}});
    }
    int lineno = 1;
    while (next_line(in, line, false)) {
        ++lineno;
        auto add = [&](std::string msg) { diags.push_back({name, lineno, std::move(msg)}); };
        if (line.empty()) {
            add("empty row");
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != 3) {
            add("expected 3 fields, got " + std::to_string(fields.size()));
            continue;
        }
        auto year = parse_int(fields[1]);
        auto count = parse_int(fields[2]);
        if (!year) {
            add("year '" + fields[1] + "' is not an integer");
            continue;
        }
        if (!count) {
            add("count '" + fields[2] + "' is not an integer");
            continue;
        }
        auto it = parsed.papers.find(fields[0]);
        if (it == parsed.papers.end()) {
            add("unknown paper_id " + fields[0]);
            continue;
        }
        PaperRecord& paper = it->second;
        if (*count < 1) {
            add("count must be >= 1 (paper " + fields[0] + ", year " + fields[1] + ")");
            continue;
        }
        if (static_cast<int>(*year) < paper.pub_year) {
            add("paper " + fields[0] + " cited in " + fields[1] +
                ", before its publication year " + std::to_string(paper.pub_year));
            continue;
        }
        if (!paper.cites_by_year.emplace(static_cast<int>(*year), *count).second) {
            add("duplicate citation row for paper " + fields[0] + ", year " + fields[1]);
            continue;
        }
    }
    if (!diags.empty()) throw DataError(std::move(diags));
}

}  // namespace

Corpus ingest_csv_streams(std::istream& papers, std::istream& citations, int observation_year,
                          const std::string& papers_name, const std::string& citations_name) {
    ParsedPapers parsed = parse_papers_csv(papers, observation_year, papers_name);
    parse_citations_csv(citations, parsed, citations_name);
    std::vector<PaperRecord> records;
    records.reserve(parsed.papers.size());
    for (auto& [id, record] : parsed.papers) records.push_back(std::move(record));
    return Corpus::from_records(std::move(records), observation_year);
}

Corpus ingest_csv(const std::filesystem::path& papers_file,
                  const std::filesystem::path& citations_file, int observation_year) {
    std::ifstream papers(papers_file);
    if (!papers) throw DataError("cannot open " + papers_file.string());
    std::ifstream citations(citations_file);
    if (!citations) throw DataError("cannot open " + citations_file.string());
    return ingest_csv_streams(papers, citations, observation_year, papers_file.string(),
                              citations_file.string());
}

// --- JSON ingestion -----------------------------------------------------

namespace {

PaperRecord record_from_json(const nlohmann::json& item, const std::string& context,
                             std::vector<Diagnostic>& diags) {
    PaperRecord record;
    auto add = [&](std::string msg) { diags.push_back({context, 0, std::move(msg)}); };
    if (!item.is_object()) {
        add("paper entry is not an object");
        return record;
    }
    if (!item.contains("paper_id") || !item["paper_id"].is_string())
        add("missing or non-string paper_id");
    else
        record.paper_id = item["paper_id"].get<std::string>();
    if (!item.contains("pub_year") || !item["pub_year"].is_number_integer())
        add("missing or non-integer pub_year");
    else
        record.pub_year = item["pub_year"].get<int>();
    if (!item.contains("authors") || !item["authors"].is_array()) {
        add("missing or non-array authors");
    } else {
        for (const auto& a : item["authors"]) {
            if (!a.is_string()) {
                add("author id is not a string");
                continue;
            }
            record.authors.push_back(a.get<std::string>());
        }
    }
    if (item.contains("cites_by_year")) {
        if (!item["cites_by_year"].is_object()) {
            add("cites_by_year is not an object");
        } else {
            for (const auto& [key, value] : item["cites_by_year"].items()) {
                auto year = parse_int(key);
                if (!year) {
                    add("cites_by_year key '" + key + "' is not a year");
                    continue;
                }
                if (!value.is_number_integer()) {
                    add("cites_by_year[" + key + "] is not an integer");
                    continue;
                }
                record.cites_by_year[static_cast<int>(*year)] = value.get<long long>();
            }
        }
    }
    return record;
}

}  // namespace

Corpus ingest_json_stream(std::istream& in, std::optional<int> observation_year,
                          const std::string& name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError({{name, 0, std::string("invalid JSON: ") + e.what()}});
    }

    const nlohmann::json* papers = nullptr;
    if (doc.is_array()) {
        papers = &doc;
    } else if (doc.is_object() && doc.contains("papers") && doc["papers"].is_array()) {
        papers = &doc["papers"];
        if (!observation_year) {
            if (!doc.contains("observation_year") || !doc["observation_year"].is_number_integer())
                throw DataError({{name, 0, "wrapper object lacks an integer observation_year"}});
            observation_year = doc["observation_year"].get<int>();
        }
    } else {
        throw DataError({{name, 0, "expected an array of papers or a wrapper object"}});
    }
    if (!observation_year)
        throw DataError({{name, 0, "observation year required for a bare paper array"}});

    std::vector<Diagnostic> diags;
    std::vector<PaperRecord> records;
    records.reserve(papers->size());
    for (std::size_t i = 0; i < papers->size(); ++i) {
        std::string context = name + ": papers[" + std::to_string(i) + "]";
        records.push_back(record_from_json((*papers)[i], context, diags));
    }
    if (!diags.empty()) throw DataError(std::move(diags));
    return Corpus::from_records(std::move(records), *observation_year);
}

Corpus ingest_json(const std::filesystem::path& file, std::optional<int> observation_year) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open " + file.string());
    return ingest_json_stream(in, observation_year, file.string());
}

// --- export -------------------------------------------------------------

void write_csv(const Corpus& corpus, std::ostream& papers_out, std::ostream& citations_out) {
    papers_out << papers_header << '\n';
    citations_out << citations_header << '\n';
    for (const auto& [id, paper] : corpus.papers()) {
        papers_out << id << ',' << paper.pub_year << ',';
        for (std::size_t i = 0; i < paper.authors.size(); ++i) {
            if (i) papers_out << '|';
            papers_out << paper.authors[i];
        }
        papers_out << '\n';
        for (const auto& [year, count] : paper.cites_by_year) {
            if (count == 0) continue;  // sparse: zero rows are never written
            citations_out << id << ',' << year << ',' << count << '\n';
        }
    }
}

void write_csv(const Corpus& corpus, const std::filesystem::path& papers_file,
               const std::filesystem::path& citations_file) {
    std::ofstream papers(papers_file);
    if (!papers) throw DataError("cannot open " + papers_file.string() + " for writing");
    std::ofstream citations(citations_file);
    if (!citations) throw DataError("cannot open " + citations_file.string() + " for writing");
    write_csv(corpus, papers, citations);
}

void write_json(const Corpus& corpus, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["observation_year"] = corpus.observation_year();
    auto& papers = doc["papers"] = nlohmann::ordered_json::array();
    for (const auto& [id, paper] : corpus.papers()) {
        nlohmann::ordered_json item;
        item["paper_id"] = id;
        item["pub_year"] = paper.pub_year;
        item["authors"] = paper.authors;
        auto& cites = item["cites_by_year"] = nlohmann::ordered_json::object();
        for (const auto& [year, count] : paper.cites_by_year) {
            if (count == 0) continue;
            cites[std::to_string(year)] = count;
        }
        papers.push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

std::string to_json_string(const Corpus& corpus) {
    std::ostringstream out;
    write_json(corpus, out);
    return out.str();
}

}  // namespace bibliodex
