#include "perfumes/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "perfumes/ast_build.hpp"
#include "perfumes/errors.hpp"
#include "perfumes/sb3.hpp"

namespace perfumes {

void CorpusSummary::add(const ProjectReport &r) {
    bool any = false;
    for (const auto &[kind, count] : r.counts) {
        if (count == 0)
            continue;
        any = true;
        PerfumeTotals &pt = per_kind[static_cast<std::size_t>(kind)];
        pt.total_instances += count;
        pt.projects_containing += 1;
        pt.wmc_sum_of_containing += r.metrics.wmc;
        total_instances += count;
    }
    if (any) {
        projects_with_any_perfume += 1;
        wmc_sum_of_perfumed += r.metrics.wmc;
    }
    project_count += 1;
}

CorpusResult analyze_corpus(const std::filesystem::path &directory, unsigned parallelism) {
    std::error_code ec;
    auto it = std::filesystem::directory_iterator(directory, ec);
    if (ec)
        throw IoError("cannot read directory: " + directory.string() + " (" + ec.message() + ")");

    std::vector<std::filesystem::path> candidates;
    for (const auto &entry : it) {
        if (!entry.is_regular_file())
            continue;
        auto ext = entry.path().extension().string();
        if (ext == ".sb3" || ext == ".json")
            candidates.push_back(entry.path());
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto &a, const auto &b) { return a.stem().string() < b.stem().string(); });

    struct Slot {
        std::optional<ProjectReport> report;
        std::string failure;
    };
    std::vector<Slot> slots(candidates.size());

    unsigned jobs = std::max(1u, parallelism);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= candidates.size())
                return;
            try {
                auto raw = sb3::load_project(candidates[i]);
                auto ast = ast::build_ast(raw, candidates[i].stem().string());
                slots[i].report = build_report(candidates[i].stem().string(), ast);
            } catch (const std::exception &e) {
                slots[i].failure = candidates[i].filename().string() + ": " + e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    // Slots are in sorted candidate order; the fold below is order-independent
    // in its result but kept sequential for determinism of diagnostics.
    CorpusResult res;
    for (Slot &s : slots) {
        if (s.report) {
            res.summary.add(*s.report);
            res.reports.push_back(std::move(*s.report));
        } else {
            res.summary.failed_project_count += 1;
            res.diagnostics.push_back("failed: " + s.failure);
        }
    }
    return res;
}

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    return s;
}

std::string format_double(double v, const char *fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace

JoinResult join_results(const std::vector<ProjectReport> &reports, const std::string &csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "project_id,passed_tests")
        throw FormatError("results csv must start with header: project_id,passed_tests");

    std::map<std::string, double> passed;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty())
            continue;
        auto cells = split_csv_line(line);
        if (cells.size() != 2)
            throw FormatError("results csv line " + std::to_string(line_no) + ": expected 2 columns");
        try {
            passed[cells[0]] = std::stod(cells[1]);
        } catch (const std::exception &) {
            throw FormatError("results csv line " + std::to_string(line_no) +
                              ": passed_tests is not a number");
        }
    }

    std::map<std::string, const ProjectReport *> by_id;
    for (const ProjectReport &r : reports)
        by_id[r.project_id] = &r;

    JoinResult res;
    for (const auto &[id, tests] : passed) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            res.warnings.push_back("results csv id '" + id + "' has no analyzed project");
            continue;
        }
        const ProjectReport &r = *it->second;
        if (r.metrics.block_count == 0) {
            res.warnings.push_back("project '" + id + "' has block_count 0, dropped from join");
            continue;
        }
        JoinedRow row;
        row.project_id = id;
        row.passed_tests = tests;
        row.perfume_count = static_cast<double>(r.instances.size());
        row.block_count = static_cast<double>(r.metrics.block_count);
        row.perfumes_per_block = row.perfume_count / row.block_count;
        res.rows.push_back(std::move(row));
    }
    for (const ProjectReport &r : reports)
        if (!passed.contains(r.project_id))
            res.warnings.push_back("project '" + r.project_id + "' missing from results csv");
    return res;
}

std::vector<stats::CorrelationResult> correlate(const JoinResult &joined) {
    std::vector<double> tests, perfumes, per_block;
    for (const JoinedRow &row : joined.rows) {
        tests.push_back(row.passed_tests);
        perfumes.push_back(row.perfume_count);
        per_block.push_back(row.perfumes_per_block);
    }
    std::vector<stats::CorrelationResult> out;
    out.push_back(stats::pearson(perfumes, tests, "perfumes_vs_passed_tests"));
    out.push_back(stats::pearson(per_block, tests, "perfumes_per_block_vs_passed_tests"));
    return out;
}

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string summary_csv(const CorpusSummary &s, const std::vector<stats::CorrelationResult> &corr) {
    std::ostringstream out;
    out << "perfume,total_instances,projects,avg_wmc\n";
    for (PerfumeKind k : all_perfume_kinds()) {
        const PerfumeTotals &pt = s.per_kind[static_cast<std::size_t>(k)];
        out << csv_escape(display_name(k)) << ',' << pt.total_instances << ','
            << pt.projects_containing << ',' << format_double(pt.avg_wmc(), "%.2f") << "\n";
    }
    double total_avg = s.projects_with_any_perfume == 0
                           ? 0.0
                           : static_cast<double>(s.wmc_sum_of_perfumed) /
                                 static_cast<double>(s.projects_with_any_perfume);
    out << "TOTAL," << s.total_instances << ',' << s.projects_with_any_perfume << ','
        << format_double(total_avg, "%.2f") << "\n";
    for (const auto &c : corr)
        out << "CORRELATION," << c.pair_name << ',' << c.n << ','
            << format_double(c.r, "%.6f") << ',' << format_double(c.p, "%.6g") << "\n";
    return out.str();
}

std::string summary_json(const CorpusSummary &s, const std::vector<stats::CorrelationResult> &corr) {
    nlohmann::json j;
    nlohmann::json per_kind = nlohmann::json::object();
    for (PerfumeKind k : all_perfume_kinds()) {
        const PerfumeTotals &pt = s.per_kind[static_cast<std::size_t>(k)];
        per_kind[machine_name(k)] = {{"total_instances", pt.total_instances},
                                     {"projects", pt.projects_containing},
                                     {"avg_wmc", pt.avg_wmc()}};
    }
    j["perfumes"] = std::move(per_kind);
    j["total_instances"] = s.total_instances;
    j["projects_with_any_perfume"] = s.projects_with_any_perfume;
    j["project_count"] = s.project_count;
    j["failed_project_count"] = s.failed_project_count;
    if (!corr.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &c : corr)
            arr.push_back({{"pair", c.pair_name}, {"n", c.n}, {"r", c.r}, {"p", c.p}});
        j["correlations"] = std::move(arr);
    }
    return j.dump() + "\n";
}

std::string summary_text(const CorpusSummary &s, const std::vector<stats::CorrelationResult> &corr) {
    std::ostringstream out;
    out << "Projects analyzed: " << s.project_count << " (" << s.failed_project_count
        << " failed)\n";
    for (PerfumeKind k : all_perfume_kinds()) {
        const PerfumeTotals &pt = s.per_kind[static_cast<std::size_t>(k)];
        out << "  " << display_name(k) << ": " << pt.total_instances << " instances in "
            << pt.projects_containing << " projects (avg WMC "
            << format_double(pt.avg_wmc(), "%.2f") << ")\n";
    }
    out << "Total: " << s.total_instances << " instances, " << s.projects_with_any_perfume
        << " projects with at least one perfume\n";
    for (const auto &c : corr)
        out << "Correlation " << c.pair_name << ": n=" << c.n << " r="
            << format_double(c.r, "%.6f") << " p=" << format_double(c.p, "%.6g") << "\n";
    return out.str();
}

} // namespace

std::string render_summary(const CorpusSummary &s, OutputFormat format,
                           const std::vector<stats::CorrelationResult> &correlations) {
    switch (format) {
    case OutputFormat::Csv:
        return summary_csv(s, correlations);
    case OutputFormat::Json:
        return summary_json(s, correlations);
    case OutputFormat::Text:
        return summary_text(s, correlations);
    }
    return {};
}

} // namespace perfumes
