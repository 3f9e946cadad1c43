#ifndef PERFUMES_AST_HPP
#define PERFUMES_AST_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace perfumes::ast {

// Sentinel target names used by motion/sensing drop-down menus.
inline constexpr const char *kMousePointer = "mouse-pointer";
inline constexpr const char *kRandomPosition = "random";
inline constexpr const char *kEdge = "edge";

enum class ExprKind {
    NumberLiteral,
    StringLiteral,
    ColorLiteral,
    Gt,
    Lt,
    Equals,
    And,
    Or,
    Not,
    Touching,
    TouchingColor,
    ColorTouchingColor,
    KeyPressed,
    MouseDown,
    DistanceTo,
    XPosition,
    YPosition,
    VariableRef,
    ListRef,
    ListReporter,
    ArgumentReporter,
    Empty,
    Unknown,
};

struct Expr {
    ExprKind kind = ExprKind::Empty;
    std::string block_id; // empty for inline literals / menu-derived values
    std::string value;    // literal text, target/key name, variable/list/argument name, opcode for Unknown
    std::string op;       // list reporter op kind, argument reporter type
    std::vector<Expr> children;
};

enum class StmtKind {
    If,
    IfElse,
    Forever,
    Repeat,
    RepeatUntil,
    WaitSeconds,
    WaitUntil,
    Stop,
    Broadcast,
    MoveSteps,
    PointInDirection,
    PointTowards,
    GoToXY,
    GoToTarget,
    GlideSecsToXY,
    GlideTo,
    SetX,
    SetY,
    ChangeX,
    ChangeY,
    SwitchCostume,
    SwitchBackdrop,
    SetSize,
    SetEffect,
    ClearEffects,
    Show,
    Hide,
    Say,
    SayForSecs,
    PlaySound,
    SetVariable,
    ChangeVariableBy,
    ListOp,
    ProcedureCall,
    Unknown,
};

struct Stmt {
    StmtKind kind = StmtKind::Unknown;
    std::string block_id;
    // Resolved drop-down / field value: message, variable, list, costume,
    // backdrop, sound, effect, stop scope, motion target, proccode, or the
    // opcode for Unknown. Empty when the slot holds a dynamic expression.
    std::string name;
    std::string op;     // list op kind
    bool flag = false;  // and_wait / until_done
    std::vector<Expr> args;
    std::vector<std::vector<Stmt>> bodies; // [0] = body/then, [1] = else
};

struct EventHandler {
    enum class Kind {
        GreenFlag,
        KeyPressed,
        BroadcastReceived,
        BackdropSwitchesTo,
        SpriteClicked,
        StageClicked,
        Other,
    };
    Kind kind = Kind::Other;
    std::string value;  // key / message / backdrop name
    std::string opcode; // set for Other
};

struct Script {
    std::string anchor_block_id; // top-level block (the hat, for hatted scripts)
    std::optional<EventHandler> hat; // nullopt: dead script, never triggered
    std::vector<Stmt> body;
};

enum class ParamType { Boolean, StringNumber };

struct ProcedureDef {
    std::string block_id; // the definition block
    std::string proccode;
    std::vector<std::pair<std::string, ParamType>> parameters;
    bool warp = false;
    std::vector<Stmt> body;
};

struct TargetAST {
    std::string name;
    bool is_stage = false;
    std::vector<Script> scripts;
    std::vector<ProcedureDef> procedures;
    std::set<std::string> variable_names;
    std::set<std::string> list_names;
    std::set<std::string> broadcast_names;
};

struct ProgramAST {
    std::string project_id;
    std::vector<TargetAST> targets;
    std::vector<std::string> diagnostics;
};

/// One statement visit during traversal. Exactly one of script/procedure is set.
struct StmtVisit {
    std::size_t target_index;
    const TargetAST *target;
    const Script *script;
    const ProcedureDef *procedure;
    const Stmt *stmt;
    const std::vector<const Stmt *> &ancestors; // outermost first
};

/// Depth-first, document-order walk over every statement of the program.
/// Procedure bodies are visited as independent roots after the scripts of
/// their target.
void for_each_statement(const ProgramAST &p, const std::function<void(const StmtVisit &)> &fn);

/// Walk every expression hanging off one statement (args and their subtrees,
/// not nested statements).
void for_each_expr(const Stmt &s, const std::function<void(const Expr &)> &fn);

/// Walk one expression subtree including the root.
void for_each_expr(const Expr &e, const std::function<void(const Expr &)> &fn);

bool is_loop(StmtKind k);
bool is_motion_stmt(StmtKind k);
bool is_looks_stmt(StmtKind k);
bool is_comparison(ExprKind k);

} // namespace perfumes::ast

#endif
