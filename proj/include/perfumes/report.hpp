#ifndef PERFUMES_REPORT_HPP
#define PERFUMES_REPORT_HPP

#include <map>
#include <string>

#include "perfumes/ast.hpp"
#include "perfumes/metrics.hpp"
#include "perfumes/perfumes.hpp"

namespace perfumes {

enum class OutputFormat { Text, Json, Csv };

struct ProjectReport {
    std::string project_id;
    Instances instances;
    std::map<PerfumeKind, std::uint64_t> counts; // one entry per kind, zeros included
    ProjectMetrics metrics;
    std::vector<std::string> diagnostics;
};

/// Run all finders and the metrics over one program.
ProjectReport build_report(const std::string &project_id, const ast::ProgramAST &p);

/// Render a report. Byte-deterministic for identical reports: JSON keys
/// sorted, '\n' newlines, fixed number formatting.
std::string render(const ProjectReport &report, OutputFormat format);

OutputFormat parse_format(const std::string &name); // throws FormatError

} // namespace perfumes

#endif
