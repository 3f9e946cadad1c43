#include "perfumes/metrics.hpp"

namespace perfumes {

using namespace ast;

namespace {

bool is_decision_point(StmtKind k) {
    switch (k) {
    case StmtKind::If:
    case StmtKind::IfElse:
    case StmtKind::Forever:
    case StmtKind::Repeat:
    case StmtKind::RepeatUntil:
    case StmtKind::WaitUntil:
        return true;
    default:
        return false;
    }
}

std::uint64_t count_decisions(const std::vector<Stmt> &seq) {
    std::uint64_t n = 0;
    for (const Stmt &s : seq) {
        if (is_decision_point(s.kind))
            ++n;
        for (const auto &body : s.bodies)
            n += count_decisions(body);
    }
    return n;
}

std::uint64_t count_expr_blocks(const Expr &e) {
    std::uint64_t n = e.block_id.empty() ? 0 : 1;
    for (const Expr &c : e.children)
        n += count_expr_blocks(c);
    return n;
}

std::uint64_t count_blocks(const std::vector<Stmt> &seq) {
    std::uint64_t n = 0;
    for (const Stmt &s : seq) {
        if (!s.block_id.empty())
            ++n;
        for (const Expr &a : s.args)
            n += count_expr_blocks(a);
        for (const auto &body : s.bodies)
            n += count_blocks(body);
    }
    return n;
}

} // namespace

std::uint64_t cyclomatic(const std::vector<Stmt> &body) {
    return 1 + count_decisions(body);
}

ProjectMetrics project_metrics(const ProgramAST &p) {
    ProjectMetrics m;
    for (const TargetAST &t : p.targets) {
        for (const Script &s : t.scripts) {
            std::uint64_t cc = cyclomatic(s.body);
            m.per_script_cc.emplace_back(s.anchor_block_id, cc);
            m.wmc += cc;
            m.block_count += count_blocks(s.body);
            ++m.script_count;
        }
        for (const ProcedureDef &pd : t.procedures) {
            std::uint64_t cc = cyclomatic(pd.body);
            m.per_script_cc.emplace_back(pd.block_id, cc);
            m.wmc += cc;
            m.block_count += count_blocks(pd.body);
        }
    }
    return m;
}

} // namespace perfumes
