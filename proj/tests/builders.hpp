// AST construction helpers shared by the unit, oracle, and acceptance suites.
#ifndef PERFUMES_TESTS_BUILDERS_HPP
#define PERFUMES_TESTS_BUILDERS_HPP

#include <string>
#include <vector>

#include "perfumes/ast.hpp"

namespace tb {

using namespace perfumes::ast;

inline std::string fresh_id() {
    static int counter = 0;
    return "blk" + std::to_string(++counter);
}

inline Expr num(std::string v) { return {ExprKind::NumberLiteral, "", std::move(v)}; }
inline Expr str(std::string v) { return {ExprKind::StringLiteral, "", std::move(v)}; }
inline Expr var(std::string name) { return {ExprKind::VariableRef, fresh_id(), std::move(name)}; }
inline Expr empty() { return {ExprKind::Empty}; }

inline Expr unary(ExprKind k, Expr a) {
    Expr e{k, fresh_id()};
    e.children.push_back(std::move(a));
    return e;
}
inline Expr binary(ExprKind k, Expr a, Expr b) {
    Expr e{k, fresh_id()};
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

inline Expr gt(Expr a, Expr b) { return binary(ExprKind::Gt, std::move(a), std::move(b)); }
inline Expr lt(Expr a, Expr b) { return binary(ExprKind::Lt, std::move(a), std::move(b)); }
inline Expr eq(Expr a, Expr b) { return binary(ExprKind::Equals, std::move(a), std::move(b)); }
inline Expr band(Expr a, Expr b) { return binary(ExprKind::And, std::move(a), std::move(b)); }
inline Expr bor(Expr a, Expr b) { return binary(ExprKind::Or, std::move(a), std::move(b)); }
inline Expr bnot(Expr a) { return unary(ExprKind::Not, std::move(a)); }

inline Expr touching(std::string target) { return {ExprKind::Touching, fresh_id(), std::move(target)}; }
inline Expr key_pressed(std::string key) { return {ExprKind::KeyPressed, fresh_id(), std::move(key)}; }
inline Expr mouse_down() { return {ExprKind::MouseDown, fresh_id()}; }
inline Expr x_position() { return {ExprKind::XPosition, fresh_id()}; }
inline Expr y_position() { return {ExprKind::YPosition, fresh_id()}; }
inline Expr distance_to(std::string target) { return {ExprKind::DistanceTo, fresh_id(), std::move(target)}; }
inline Expr arg_reporter(std::string name) {
    return {ExprKind::ArgumentReporter, fresh_id(), std::move(name), "string-number"};
}
inline Expr list_reporter(std::string op, std::string list) {
    return {ExprKind::ListReporter, fresh_id(), std::move(list), std::move(op)};
}

inline Stmt stmt0(StmtKind k) { return {k, fresh_id()}; }
inline Stmt stmt1(StmtKind k, Expr a) {
    Stmt s{k, fresh_id()};
    s.args.push_back(std::move(a));
    return s;
}

inline Stmt forever(std::vector<Stmt> body) {
    Stmt s{StmtKind::Forever, fresh_id()};
    s.bodies.push_back(std::move(body));
    return s;
}
inline Stmt repeat(Expr times, std::vector<Stmt> body) {
    Stmt s{StmtKind::Repeat, fresh_id()};
    s.args.push_back(std::move(times));
    s.bodies.push_back(std::move(body));
    return s;
}
inline Stmt repeat_until(Expr cond, std::vector<Stmt> body) {
    Stmt s{StmtKind::RepeatUntil, fresh_id()};
    s.args.push_back(std::move(cond));
    s.bodies.push_back(std::move(body));
    return s;
}
inline Stmt if_(Expr cond, std::vector<Stmt> then) {
    Stmt s{StmtKind::If, fresh_id()};
    s.args.push_back(std::move(cond));
    s.bodies.push_back(std::move(then));
    return s;
}
inline Stmt if_else(Expr cond, std::vector<Stmt> then, std::vector<Stmt> els) {
    Stmt s{StmtKind::IfElse, fresh_id()};
    s.args.push_back(std::move(cond));
    s.bodies.push_back(std::move(then));
    s.bodies.push_back(std::move(els));
    return s;
}

inline Stmt say(Expr msg) { return stmt1(StmtKind::Say, std::move(msg)); }
inline Stmt move_steps(Expr steps) { return stmt1(StmtKind::MoveSteps, std::move(steps)); }
inline Stmt point_in_direction(Expr d) { return stmt1(StmtKind::PointInDirection, std::move(d)); }
inline Stmt wait_seconds(Expr secs) { return stmt1(StmtKind::WaitSeconds, std::move(secs)); }
inline Stmt wait_until(Expr cond) { return stmt1(StmtKind::WaitUntil, std::move(cond)); }

inline Stmt point_towards(std::string target) {
    Stmt s{StmtKind::PointTowards, fresh_id()};
    s.name = std::move(target);
    return s;
}
inline Stmt go_to_target(std::string target) {
    Stmt s{StmtKind::GoToTarget, fresh_id()};
    s.name = std::move(target);
    return s;
}
inline Stmt go_to_xy(Expr x, Expr y) {
    Stmt s{StmtKind::GoToXY, fresh_id()};
    s.args.push_back(std::move(x));
    s.args.push_back(std::move(y));
    return s;
}
inline Stmt broadcast(std::string message, bool and_wait = false) {
    Stmt s{StmtKind::Broadcast, fresh_id()};
    s.name = std::move(message);
    s.flag = and_wait;
    return s;
}
inline Stmt stop(std::string scope) {
    Stmt s{StmtKind::Stop, fresh_id()};
    s.name = std::move(scope);
    return s;
}
inline Stmt switch_backdrop(std::string name, bool and_wait = false) {
    Stmt s{StmtKind::SwitchBackdrop, fresh_id()};
    s.name = std::move(name);
    s.flag = and_wait;
    return s;
}
inline Stmt switch_costume(std::string name) {
    Stmt s{StmtKind::SwitchCostume, fresh_id()};
    s.name = std::move(name);
    return s;
}
inline Stmt play_sound(std::string name, bool until_done) {
    Stmt s{StmtKind::PlaySound, fresh_id()};
    s.name = std::move(name);
    s.flag = until_done;
    return s;
}
inline Stmt set_variable(std::string name, Expr value) {
    Stmt s{StmtKind::SetVariable, fresh_id()};
    s.name = std::move(name);
    s.args.push_back(std::move(value));
    return s;
}
inline Stmt change_variable_by(std::string name, Expr value) {
    Stmt s{StmtKind::ChangeVariableBy, fresh_id()};
    s.name = std::move(name);
    s.args.push_back(std::move(value));
    return s;
}
inline Stmt list_op(std::string op, std::string list) {
    Stmt s{StmtKind::ListOp, fresh_id()};
    s.op = std::move(op);
    s.name = std::move(list);
    return s;
}
inline Stmt procedure_call(std::string proccode) {
    Stmt s{StmtKind::ProcedureCall, fresh_id()};
    s.name = std::move(proccode);
    return s;
}
inline Stmt glide_to(std::string target) {
    Stmt s{StmtKind::GlideTo, fresh_id()};
    s.name = std::move(target);
    s.args.push_back(num("1"));
    return s;
}

inline EventHandler green_flag() { return {EventHandler::Kind::GreenFlag}; }
inline EventHandler when_key(std::string key) {
    return {EventHandler::Kind::KeyPressed, std::move(key)};
}
inline EventHandler when_receive(std::string message) {
    return {EventHandler::Kind::BroadcastReceived, std::move(message)};
}
inline EventHandler when_backdrop(std::string backdrop) {
    return {EventHandler::Kind::BackdropSwitchesTo, std::move(backdrop)};
}

inline Script script(EventHandler hat, std::vector<Stmt> body) {
    Script s;
    s.anchor_block_id = fresh_id();
    s.hat = std::move(hat);
    s.body = std::move(body);
    return s;
}
inline Script dead_script(std::vector<Stmt> body) {
    Script s;
    s.body = std::move(body);
    s.anchor_block_id = s.body.empty() ? fresh_id() : s.body.front().block_id;
    return s;
}

inline ProcedureDef procedure(std::string proccode,
                              std::vector<std::pair<std::string, ParamType>> params,
                              std::vector<Stmt> body) {
    ProcedureDef pd;
    pd.block_id = fresh_id();
    pd.proccode = std::move(proccode);
    pd.parameters = std::move(params);
    pd.body = std::move(body);
    return pd;
}

/// One stage plus one sprite named "Sprite1" holding the given scripts.
inline ProgramAST program(std::vector<Script> scripts, std::vector<ProcedureDef> procedures = {}) {
    ProgramAST p;
    p.project_id = "test";
    TargetAST stage;
    stage.name = "Stage";
    stage.is_stage = true;
    p.targets.push_back(std::move(stage));
    TargetAST sprite;
    sprite.name = "Sprite1";
    sprite.scripts = std::move(scripts);
    sprite.procedures = std::move(procedures);
    p.targets.push_back(std::move(sprite));
    return p;
}

inline ProgramAST &declare_list(ProgramAST &p, const std::string &name) {
    p.targets.back().list_names.insert(name);
    return p;
}

} // namespace tb

#endif
