#include "perfumes/report.hpp"

#include <sstream>

#include <json.hpp>

#include "perfumes/errors.hpp"

namespace perfumes {

ProjectReport build_report(const std::string &project_id, const ast::ProgramAST &p) {
    ProjectReport r;
    r.project_id = project_id;
    r.instances = find_all(p);
    r.metrics = project_metrics(p);
    r.diagnostics = p.diagnostics;
    for (PerfumeKind k : all_perfume_kinds())
        r.counts[k] = 0;
    for (const PerfumeInstance &i : r.instances)
        ++r.counts[i.kind];
    return r;
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

std::string render_text(const ProjectReport &r) {
    std::ostringstream out;
    out << "Project: " << r.project_id << "\n";
    out << "Perfumes found: " << r.instances.size() << "\n";
    for (const PerfumeInstance &i : r.instances) {
        out << "  [" << display_name(i.kind) << "] target '" << i.target_name << "', block "
            << i.anchor_block_id;
        if (!i.detail.empty())
            out << " (" << i.detail << ")";
        out << "\n    " << feedback_text(i.kind) << "\n";
    }
    out << "Scripts: " << r.metrics.script_count << ", blocks: " << r.metrics.block_count
        << ", weighted method count: " << r.metrics.wmc << "\n";
    for (const std::string &d : r.diagnostics)
        out << "note: " << d << "\n";
    return out.str();
}

std::string render_json(const ProjectReport &r) {
    nlohmann::json j; // keys serialize sorted
    j["project_id"] = r.project_id;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &[k, n] : r.counts)
        counts[machine_name(k)] = n;
    j["counts"] = std::move(counts);
    nlohmann::json instances = nlohmann::json::array();
    for (const PerfumeInstance &i : r.instances)
        instances.push_back({{"block_id", i.anchor_block_id},
                             {"detail", i.detail},
                             {"kind", machine_name(i.kind)},
                             {"target", i.target_name}});
    j["instances"] = std::move(instances);
    j["metrics"] = {{"block_count", r.metrics.block_count},
                    {"script_count", r.metrics.script_count},
                    {"wmc", r.metrics.wmc}};
    j["diagnostics"] = r.diagnostics;
    return j.dump() + "\n";
}

std::string render_csv(const ProjectReport &r) {
    std::ostringstream out;
    out << "project_id,perfume,target,block_id,detail\n";
    for (const PerfumeInstance &i : r.instances)
        out << csv_escape(r.project_id) << ',' << machine_name(i.kind) << ','
            << csv_escape(i.target_name) << ',' << csv_escape(i.anchor_block_id) << ','
            << csv_escape(i.detail) << "\n";
    return out.str();
}

} // namespace

std::string render(const ProjectReport &report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text:
        return render_text(report);
    case OutputFormat::Json:
        return render_json(report);
    case OutputFormat::Csv:
        return render_csv(report);
    }
    return {};
}

OutputFormat parse_format(const std::string &name) {
    if (name == "text")
        return OutputFormat::Text;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    throw FormatError("unknown format: " + name);
}

} // namespace perfumes
