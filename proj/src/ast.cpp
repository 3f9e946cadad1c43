#include "perfumes/ast.hpp"

namespace perfumes::ast {

namespace {

void walk_seq(const std::vector<Stmt> &seq, std::size_t target_index, const TargetAST &target,
              const Script *script, const ProcedureDef *proc, std::vector<const Stmt *> &ancestors,
              const std::function<void(const StmtVisit &)> &fn) {
    for (const Stmt &s : seq) {
        fn(StmtVisit{target_index, &target, script, proc, &s, ancestors});
        ancestors.push_back(&s);
        for (const auto &body : s.bodies)
            walk_seq(body, target_index, target, script, proc, ancestors, fn);
        ancestors.pop_back();
    }
}

} // namespace

void for_each_statement(const ProgramAST &p, const std::function<void(const StmtVisit &)> &fn) {
    std::vector<const Stmt *> ancestors;
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti) {
        const TargetAST &t = p.targets[ti];
        for (const Script &s : t.scripts)
            walk_seq(s.body, ti, t, &s, nullptr, ancestors, fn);
        for (const ProcedureDef &pd : t.procedures)
            walk_seq(pd.body, ti, t, nullptr, &pd, ancestors, fn);
    }
}

void for_each_expr(const Expr &e, const std::function<void(const Expr &)> &fn) {
    fn(e);
    for (const Expr &c : e.children)
        for_each_expr(c, fn);
}

void for_each_expr(const Stmt &s, const std::function<void(const Expr &)> &fn) {
    for (const Expr &a : s.args)
        for_each_expr(a, fn);
}

bool is_loop(StmtKind k) {
    return k == StmtKind::Forever || k == StmtKind::Repeat || k == StmtKind::RepeatUntil;
}

bool is_motion_stmt(StmtKind k) {
    switch (k) {
    case StmtKind::MoveSteps:
    case StmtKind::PointInDirection:
    case StmtKind::PointTowards:
    case StmtKind::GoToXY:
    case StmtKind::GoToTarget:
    case StmtKind::GlideSecsToXY:
    case StmtKind::GlideTo:
    case StmtKind::SetX:
    case StmtKind::SetY:
    case StmtKind::ChangeX:
    case StmtKind::ChangeY:
        return true;
    default:
        return false;
    }
}

bool is_looks_stmt(StmtKind k) {
    switch (k) {
    case StmtKind::SwitchCostume:
    case StmtKind::SwitchBackdrop:
    case StmtKind::SetSize:
    case StmtKind::SetEffect:
    case StmtKind::ClearEffects:
    case StmtKind::Show:
    case StmtKind::Hide:
    case StmtKind::Say:
    case StmtKind::SayForSecs:
        return true;
    default:
        return false;
    }
}

bool is_comparison(ExprKind k) {
    return k == ExprKind::Gt || k == ExprKind::Lt || k == ExprKind::Equals;
}

} // namespace perfumes::ast
