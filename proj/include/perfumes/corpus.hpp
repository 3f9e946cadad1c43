#ifndef PERFUMES_CORPUS_HPP
#define PERFUMES_CORPUS_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "perfumes/report.hpp"
#include "perfumes/stats.hpp"

namespace perfumes {

struct PerfumeTotals {
    std::uint64_t total_instances = 0;
    std::uint64_t projects_containing = 0;
    std::uint64_t wmc_sum_of_containing = 0; // running sum; avg derived on render

    double avg_wmc() const {
        return projects_containing == 0
                   ? 0.0
                   : static_cast<double>(wmc_sum_of_containing) / static_cast<double>(projects_containing);
    }
};

struct CorpusSummary {
    std::array<PerfumeTotals, kPerfumeCount> per_kind{};
    std::uint64_t total_instances = 0;
    std::uint64_t projects_with_any_perfume = 0;
    std::uint64_t wmc_sum_of_perfumed = 0;
    std::uint64_t project_count = 0;
    std::uint64_t failed_project_count = 0;

    /// Fold one report into the summary. Commutative over report sets.
    void add(const ProjectReport &r);
};

struct CorpusResult {
    std::vector<ProjectReport> reports; // sorted by project id
    CorpusSummary summary;
    std::vector<std::string> diagnostics;
};

/// Analyze every *.sb3 / *.json file in a directory. Unparseable candidates
/// are skipped and counted in failed_project_count. Throws IoError if the
/// directory is unreadable.
CorpusResult analyze_corpus(const std::filesystem::path &directory, unsigned parallelism);

struct JoinedRow {
    std::string project_id;
    double passed_tests = 0.0;
    double perfume_count = 0.0;
    double block_count = 0.0;
    double perfumes_per_block = 0.0;
};

struct JoinResult {
    std::vector<JoinedRow> rows;
    std::vector<std::string> warnings;
};

/// Inner-join project reports with a results CSV (`project_id,passed_tests`).
/// Rows with block_count 0 are dropped with a diagnostic. Throws FormatError
/// on a missing header.
JoinResult join_results(const std::vector<ProjectReport> &reports, const std::string &csv_text);

/// Correlations of the RQ2 pipeline: perfume count vs passed tests and
/// perfumes-per-block vs passed tests.
std::vector<stats::CorrelationResult> correlate(const JoinResult &joined);

/// Table-1-shaped summary: `perfume,total_instances,projects,avg_wmc` plus a
/// TOTAL row. Byte-deterministic.
std::string render_summary(const CorpusSummary &s, OutputFormat format,
                           const std::vector<stats::CorrelationResult> &correlations = {});

} // namespace perfumes

#endif
