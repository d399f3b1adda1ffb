#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace repoalign::corpus {

enum class UnitKind { Function, Method, Class };
enum class DifficultyTier { Full, Challenge, Expert };

std::string_view to_string(UnitKind kind);
std::string_view to_string(DifficultyTier tier);
UnitKind unit_kind_from_string(std::string_view text);
DifficultyTier tier_from_string(std::string_view text);

/// Attribution metadata attached to every stored code unit.
struct ProvenanceMeta {
    std::string repo;
    std::string commit_hash; // 40 lowercase hex chars
};

/// A natural-language change intent extracted from a PR/issue; the query side.
struct ChangeRequest {
    std::string id;
    std::string repo;
    std::int64_t pr_id = 0;
    std::optional<std::int64_t> issue_id;
    std::string problem_text;
    std::int64_t created_at = 0; // seconds since the Unix epoch, UTC

    bool operator==(const ChangeRequest&) const = default;
};

/// An extracted function/method/class; the candidate side.
struct CodeUnit {
    std::string id;
    std::string repo;
    std::string path; // repository-relative file path
    std::string qualified_name;
    UnitKind kind = UnitKind::Function;
    int start_line = 1; // 1-based, inclusive
    int end_line = 1;
    std::string signature;
    std::string source;
    ProvenanceMeta provenance;

    bool operator==(const CodeUnit&) const = default;

    int line_count() const { return end_line - start_line + 1; }
};

/// Ground-truth link from one change request to the units its commit touched.
struct AlignedPair {
    std::string query_id;
    std::vector<std::string> code_unit_ids; // non-empty, no duplicates
    std::string commit_hash;
    DifficultyTier tier = DifficultyTier::Challenge;

    bool operator==(const AlignedPair&) const = default;
};

struct Corpus {
    std::vector<ChangeRequest> requests;
    std::vector<CodeUnit> units;
    std::vector<AlignedPair> pairs;

    const ChangeRequest* find_request(std::string_view id) const;
    const CodeUnit* find_unit(std::string_view id) const;
    bool empty() const { return requests.empty() && units.empty() && pairs.empty(); }
};

// Per-record invariant checks. Violations are data, not failures.
std::vector<std::string> validate_record(const ChangeRequest& record);
std::vector<std::string> validate_record(const CodeUnit& record);
std::vector<std::string> validate_record(const AlignedPair& record);
// Whole-corpus validation: per-record checks plus id uniqueness and
// referential integrity of pairs.
std::vector<std::string> validate_corpus(const Corpus& corpus);

nlohmann::json to_json(const ChangeRequest& record);
nlohmann::json to_json(const CodeUnit& record);
nlohmann::json to_json(const AlignedPair& record);
ChangeRequest request_from_json(const nlohmann::json& j);
CodeUnit unit_from_json(const nlohmann::json& j);
AlignedPair pair_from_json(const nlohmann::json& j);

/// Reads a UTF-8 JSONL corpus file. Each line is one record carrying a
/// "type" field in {"request","unit","pair"}. Malformed lines raise
/// ParseError with the line number; unresolved references raise
/// IntegrityError naming the id.
Corpus read_corpus(const std::filesystem::path& path);

/// Writes the corpus as JSONL with sorted keys, records sorted by id.
/// read_corpus(write_corpus(c)) == c, and re-writing is byte-stable.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

struct LengthStats {
    double mean = 0;
    double max = 0;
    double min = 0;
    double std = 0; // population standard deviation
};

struct RepoStats {
    LengthStats patch_len;   // characters of concatenated modified-unit source
    LengthStats problem_len; // characters of the problem text
};

struct CorpusStats {
    std::map<std::string, RepoStats> by_repo;
};

/// Mean/max/min/population-std per repo over the corpus pairs. Repos
/// without pairs are omitted.
CorpusStats compute_corpus_stats(const Corpus& corpus);

LengthStats length_stats(const std::vector<std::int64_t>& lengths);

// Table-shaped serialization (PLM/PLX/PLN/PLS + PrLM/PrLX/PrLN/PrLS keys).
nlohmann::json to_json(const RepoStats& stats);
nlohmann::json to_json(const CorpusStats& stats);
RepoStats repo_stats_from_json(const nlohmann::json& j);

/// 1970-01-01T00:00:00Z style formatting of a UTC timestamp.
std::string format_utc(std::int64_t seconds_since_epoch);
std::int64_t parse_utc(const std::string& iso8601);

} // namespace repoalign::corpus
