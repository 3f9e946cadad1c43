#ifndef PERFUMES_METRICS_HPP
#define PERFUMES_METRICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perfumes/ast.hpp"

namespace perfumes {

struct ProjectMetrics {
    std::uint64_t block_count = 0;  // statement + expression nodes backed by a real block
    std::uint64_t script_count = 0; // hatted and dead scripts, not procedures
    std::uint64_t wmc = 0;
    std::vector<std::pair<std::string, std::uint64_t>> per_script_cc; // anchor block id -> cc
};

/// Cyclomatic complexity of one statement sequence:
/// 1 + #If + #IfElse + #Forever + #Repeat + #RepeatUntil + #WaitUntil,
/// counted over the whole nested body.
std::uint64_t cyclomatic(const std::vector<ast::Stmt> &body);

/// Whole-project metrics. WMC sums cyclomatic over all scripts (dead ones
/// included) and all procedure definitions.
ProjectMetrics project_metrics(const ast::ProgramAST &p);

} // namespace perfumes

#endif
