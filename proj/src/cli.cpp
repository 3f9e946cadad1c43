#include "perfumes/cli.hpp"

#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "perfumes/ast_build.hpp"
#include "perfumes/corpus.hpp"
#include "perfumes/errors.hpp"
#include "perfumes/report.hpp"
#include "perfumes/sb3.hpp"

namespace perfumes::cli {

namespace {

void write_output(const std::string &content, const std::string &output_path, std::ostream &out) {
    if (output_path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f)
        throw IoError("cannot open output file: " + output_path);
    f << content;
    if (!f)
        throw IoError("write failed: " + output_path);
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return std::move(buf).str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Detects code perfumes (good-practice idioms) in Scratch 3 projects"};
    app.require_subcommand(1);

    std::string lint_input, lint_format = "text", lint_output;
    auto *lint = app.add_subcommand("lint", "Analyze one project and report its perfumes");
    lint->add_option("file", lint_input, "Project file (.sb3 or project.json)")->required();
    lint->add_option("--format", lint_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    lint->add_option("--output", lint_output, "Write to this file instead of stdout");

    std::string corpus_input, corpus_format = "csv", corpus_output, results_csv;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto *corpus = app.add_subcommand("corpus", "Analyze a directory of projects");
    corpus->add_option("dir", corpus_input, "Directory with .sb3/.json projects")->required();
    corpus->add_option("--format", corpus_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    corpus->add_option("--output", corpus_output, "Write to this file instead of stdout");
    corpus->add_option("--results", results_csv, "CSV with project_id,passed_tests for correlations");
    corpus->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    // CLI11 wants argv-style reversed input when parsing a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (lint->parsed()) {
            auto raw = sb3::load_project(lint_input);
            std::string id = std::filesystem::path(lint_input).stem().string();
            auto ast = ast::build_ast(raw, id);
            auto report = build_report(id, ast);
            write_output(render(report, parse_format(lint_format)), lint_output, out);
            return 0;
        }
        // corpus
        auto result = analyze_corpus(corpus_input, jobs);
        for (const std::string &d : result.diagnostics)
            err << d << "\n";
        std::vector<stats::CorrelationResult> correlations;
        if (!results_csv.empty()) {
            auto joined = join_results(result.reports, read_file(results_csv));
            for (const std::string &w : joined.warnings)
                err << "warning: " << w << "\n";
            correlations = correlate(joined);
        }
        write_output(render_summary(result.summary, parse_format(corpus_format), correlations),
                     corpus_output, out);
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace perfumes::cli
