#include "perfumes/perfumes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace perfumes {

using namespace ast;

namespace {

struct Collector {
    PerfumeKind kind;
    struct Entry {
        std::size_t target_index;
        PerfumeInstance inst;
    };
    std::vector<Entry> entries;

    void add(std::size_t target_index, const std::string &target_name, const std::string &anchor,
             std::string detail = "") {
        entries.push_back({target_index, {kind, target_name, anchor, std::move(detail)}});
    }

    Instances sorted() {
        std::stable_sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
            if (a.target_index != b.target_index)
                return a.target_index < b.target_index;
            return a.inst.anchor_block_id < b.inst.anchor_block_id;
        });
        Instances out;
        out.reserve(entries.size());
        for (auto &e : entries)
            out.push_back(std::move(e.inst));
        return out;
    }
};

bool subtree_contains(const Expr &e, const std::function<bool(const Expr &)> &pred) {
    bool found = false;
    for_each_expr(e, [&](const Expr &x) { found = found || pred(x); });
    return found;
}

bool is_sensing_expr(const Expr &e) {
    switch (e.kind) {
    case ExprKind::Touching:
    case ExprKind::TouchingColor:
    case ExprKind::ColorTouchingColor:
    case ExprKind::KeyPressed:
    case ExprKind::MouseDown:
        return true;
    default:
        return false;
    }
}

bool is_touch_expr(const Expr &e) {
    return e.kind == ExprKind::Touching || e.kind == ExprKind::TouchingColor ||
           e.kind == ExprKind::ColorTouchingColor;
}

bool is_literal(const Expr &e) {
    return e.kind == ExprKind::NumberLiteral || e.kind == ExprKind::StringLiteral;
}

bool is_conditional(StmtKind k) { return k == StmtKind::If || k == StmtKind::IfElse; }

const Expr *condition_of(const Stmt &s) {
    // If/IfElse/RepeatUntil/WaitUntil keep the condition as args[0].
    return s.args.empty() ? nullptr : &s.args[0];
}

bool has_ancestor(const std::vector<const Stmt *> &ancestors, bool (*pred)(StmtKind)) {
    return std::any_of(ancestors.begin(), ancestors.end(),
                       [&](const Stmt *a) { return pred(a->kind); });
}

/// Any statement inside the given branches (any nesting depth) matching pred.
bool branches_contain(const Stmt &s, const std::function<bool(const Stmt &)> &pred) {
    bool found = false;
    std::function<void(const std::vector<Stmt> &)> walk = [&](const std::vector<Stmt> &seq) {
        for (const Stmt &c : seq) {
            if (pred(c))
                found = true;
            for (const auto &body : c.bodies)
                walk(body);
        }
    };
    for (const auto &body : s.bodies)
        walk(body);
    return found;
}

/// Document-order flattening of one statement subtree, any nesting depth.
void flatten(const std::vector<Stmt> &seq, std::vector<const Stmt *> &out) {
    for (const Stmt &s : seq) {
        out.push_back(&s);
        for (const auto &body : s.bodies)
            flatten(body, out);
    }
}

struct KindMeta {
    const char *machine;
    const char *display;
    const char *feedback;
};

const KindMeta &meta(PerfumeKind k) {
    static const std::array<KindMeta, kPerfumeCount> table = {{
        {"backdrop_switch", "Backdrop Switch",
         "Nice! Switching the backdrop triggers a matching backdrop event handler."},
        {"boolean_expression", "Boolean Expression",
         "Well done combining comparisons with Boolean operators to control the program flow."},
        {"collision", "Collision",
         "Great collision handling: the sprite keeps checking for touches and reacts to them."},
        {"conditional_inside_loop", "Conditional Inside Loop",
         "Good use of a conditional inside a loop, an advanced control structure."},
        {"controlled_broadcast_or_stop", "Controlled Broadcast Or Stop",
         "Nice! Broadcasting or stopping only when a condition holds keeps the timing right."},
        {"coordination", "Coordination",
         "Good coordination: waiting until a condition holds synchronises your scripts."},
        {"correct_broadcast", "Correct Broadcast",
         "Well done: this broadcast has a matching receiving script."},
        {"custom_block_usage", "Custom Block Usage",
         "Great job defining a custom block and using it in your code."},
        {"directed_motion", "Directed Motion",
         "Nice key-controlled movement: pointing in a direction and then moving."},
        {"gliding_motion", "Gliding Motion",
         "Good use of gliding to move the sprite smoothly on a key press."},
        {"initialisation_of_looks", "Initialisation Of Looks",
         "Well done setting up how things look when the green flag is clicked."},
        {"initialisation_of_position", "Initialisation Of Position",
         "Well done setting the start position when the green flag is clicked."},
        {"list_usage", "List Usage",
         "Great job using a list to hold and process several values."},
        {"loop_sensing", "Loop Sensing",
         "Great job continuously checking for events inside a loop."},
        {"matching_parameter", "Matching Parameter",
         "Well done: every parameter used in this custom block is declared in its signature."},
        {"mouse_follower", "Mouse Follower",
         "Nice! The sprite follows the mouse pointer continuously."},
        {"movement_in_loop", "Movement In Loop",
         "Great smooth movement: checking the key inside a loop avoids stuttering."},
        {"nested_conditional_checks", "Nested Conditional Checks",
         "Good use of nested conditionals to combine several decisions."},
        {"nested_loops", "Nested Loops Perfume",
         "Nice advanced control flow with a loop inside another loop."},
        {"object_follower", "Object Follower",
         "Nice! The sprite keeps pointing towards another sprite and follows it."},
        {"parallelisation", "Parallelisation",
         "Good job splitting work into scripts that react to the same event in parallel."},
        {"say_sound_synchronisation", "Say Sound Synchronisation",
         "Great synchronisation of the speech bubble with the sound being played."},
        {"timer", "Timer",
         "Good timer: changing a variable by a fixed amount together with a wait."},
        {"useful_position_check", "Useful Position Check",
         "Well done comparing positions with greater/less than instead of equality."},
        {"valid_termination", "Valid Termination",
         "Good job giving your repeat-until loop a termination condition."},
    }};
    return table[static_cast<std::size_t>(k)];
}

} // namespace

const std::string &machine_name(PerfumeKind k) {
    static std::array<std::string, kPerfumeCount> names = [] {
        std::array<std::string, kPerfumeCount> a;
        for (std::size_t i = 0; i < kPerfumeCount; ++i)
            a[i] = meta(static_cast<PerfumeKind>(i)).machine;
        return a;
    }();
    return names[static_cast<std::size_t>(k)];
}

const std::string &display_name(PerfumeKind k) {
    static std::array<std::string, kPerfumeCount> names = [] {
        std::array<std::string, kPerfumeCount> a;
        for (std::size_t i = 0; i < kPerfumeCount; ++i)
            a[i] = meta(static_cast<PerfumeKind>(i)).display;
        return a;
    }();
    return names[static_cast<std::size_t>(k)];
}

const std::string &feedback_text(PerfumeKind k) {
    static std::array<std::string, kPerfumeCount> texts = [] {
        std::array<std::string, kPerfumeCount> a;
        for (std::size_t i = 0; i < kPerfumeCount; ++i)
            a[i] = meta(static_cast<PerfumeKind>(i)).feedback;
        return a;
    }();
    return texts[static_cast<std::size_t>(k)];
}

bool is_comparing_literals(const Expr &comparison) {
    if (!is_comparison(comparison.kind) || comparison.children.size() != 2)
        return false;
    return is_literal(comparison.children[0]) && is_literal(comparison.children[1]);
}

bool has_nested_loop_smell(const std::vector<Stmt> &enclosing_seq, const Stmt &inner_loop) {
    return enclosing_seq.size() == 1 && &enclosing_seq[0] == &inner_loop;
}

Instances find_backdrop_switch(const ProgramAST &p) {
    // Literal backdrop names that some switch-backdrop statement sets.
    std::set<std::string> switched;
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.stmt->kind == StmtKind::SwitchBackdrop && !v.stmt->name.empty())
            switched.insert(v.stmt->name);
    });
    Collector c{PerfumeKind::BackdropSwitch};
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti)
        for (const Script &s : p.targets[ti].scripts)
            if (s.hat && s.hat->kind == EventHandler::Kind::BackdropSwitchesTo &&
                switched.contains(s.hat->value))
                c.add(ti, p.targets[ti].name, s.anchor_block_id, s.hat->value);
    return c.sorted();
}

Instances find_boolean_expression(const ProgramAST &p) {
    Collector c{PerfumeKind::BooleanExpression};
    for_each_statement(p, [&](const StmtVisit &v) {
        for_each_expr(*v.stmt, [&](const Expr &e) {
            if (e.kind != ExprKind::And && e.kind != ExprKind::Or && e.kind != ExprKind::Not)
                return;
            bool has_comparison = subtree_contains(e, [](const Expr &x) { return is_comparison(x.kind); });
            bool has_literal_cmp = subtree_contains(e, [](const Expr &x) { return is_comparing_literals(x); });
            if (has_comparison && !has_literal_cmp)
                c.add(v.target_index, v.target->name, e.block_id);
        });
    });
    return c.sorted();
}

Instances find_collision(const ProgramAST &p) {
    Collector c{PerfumeKind::Collision};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (!is_conditional(v.stmt->kind) || !has_ancestor(v.ancestors, is_loop))
            return;
        const Expr *cond = condition_of(*v.stmt);
        if (!cond || !subtree_contains(*cond, is_touch_expr))
            return;
        if (branches_contain(*v.stmt, [](const Stmt &s) {
                return is_motion_stmt(s.kind) || is_looks_stmt(s.kind);
            }))
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_conditional_inside_loop(const ProgramAST &p) {
    Collector c{PerfumeKind::ConditionalInsideLoop};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (is_conditional(v.stmt->kind) && has_ancestor(v.ancestors, is_loop))
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_controlled_broadcast_or_stop(const ProgramAST &p) {
    Collector c{PerfumeKind::ControlledBroadcastOrStop};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (!is_conditional(v.stmt->kind) || !has_ancestor(v.ancestors, is_loop))
            return;
        if (branches_contain(*v.stmt, [](const Stmt &s) {
                return s.kind == StmtKind::Broadcast || s.kind == StmtKind::Stop;
            }))
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_coordination(const ProgramAST &p) {
    Collector c{PerfumeKind::Coordination};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.stmt->kind == StmtKind::WaitUntil)
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_correct_broadcast(const ProgramAST &p) {
    std::set<std::string> received;
    for (const TargetAST &t : p.targets)
        for (const Script &s : t.scripts)
            if (s.hat && s.hat->kind == EventHandler::Kind::BroadcastReceived)
                received.insert(s.hat->value);
    Collector c{PerfumeKind::CorrectBroadcast};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.stmt->kind == StmtKind::Broadcast && !v.stmt->name.empty() &&
            received.contains(v.stmt->name))
            c.add(v.target_index, v.target->name, v.stmt->block_id, v.stmt->name);
    });
    return c.sorted();
}

Instances find_custom_block_usage(const ProgramAST &p) {
    Collector c{PerfumeKind::CustomBlockUsage};
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti) {
        const TargetAST &t = p.targets[ti];
        std::set<std::string> called;
        for (const Script &s : t.scripts) {
            std::vector<const Stmt *> flat;
            flatten(s.body, flat);
            for (const Stmt *st : flat)
                if (st->kind == StmtKind::ProcedureCall)
                    called.insert(st->name);
        }
        for (const ProcedureDef &pd : t.procedures) {
            std::vector<const Stmt *> flat;
            flatten(pd.body, flat);
            for (const Stmt *st : flat)
                if (st->kind == StmtKind::ProcedureCall)
                    called.insert(st->name);
        }
        for (const ProcedureDef &pd : t.procedures)
            if (called.contains(pd.proccode))
                c.add(ti, t.name, pd.block_id, pd.proccode);
    }
    return c.sorted();
}

namespace {

/// Document-order scan: some statement matching `first` strictly precedes a
/// statement matching `second` within the flattened sequence.
bool ordered_pair(const std::vector<Stmt> &seq, StmtKind first, StmtKind second,
                  const std::function<bool(const Stmt &)> &first_extra = nullptr) {
    std::vector<const Stmt *> flat;
    flatten(seq, flat);
    bool seen_first = false;
    for (const Stmt *s : flat) {
        if (s->kind == first && (!first_extra || first_extra(*s)))
            seen_first = true;
        else if (seen_first && s->kind == second)
            return true;
    }
    return false;
}

} // namespace

Instances find_directed_motion(const ProgramAST &p) {
    Collector c{PerfumeKind::DirectedMotion};
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti)
        for (const Script &s : p.targets[ti].scripts)
            if (s.hat && s.hat->kind == EventHandler::Kind::KeyPressed &&
                ordered_pair(s.body, StmtKind::PointInDirection, StmtKind::MoveSteps))
                c.add(ti, p.targets[ti].name, s.anchor_block_id);
    return c.sorted();
}

Instances find_gliding_motion(const ProgramAST &p) {
    Collector c{PerfumeKind::GlidingMotion};
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti)
        for (const Script &s : p.targets[ti].scripts) {
            if (!s.hat || s.hat->kind != EventHandler::Kind::KeyPressed)
                continue;
            std::vector<const Stmt *> flat;
            flatten(s.body, flat);
            bool glides = std::any_of(flat.begin(), flat.end(), [](const Stmt *st) {
                return st->kind == StmtKind::GlideSecsToXY || st->kind == StmtKind::GlideTo;
            });
            if (glides)
                c.add(ti, p.targets[ti].name, s.anchor_block_id);
        }
    return c.sorted();
}

namespace {

bool is_looks_setter(StmtKind k) {
    switch (k) {
    case StmtKind::SwitchCostume:
    case StmtKind::SwitchBackdrop:
    case StmtKind::SetSize:
    case StmtKind::SetEffect:
    case StmtKind::ClearEffects:
    case StmtKind::Show:
    case StmtKind::Hide:
        return true;
    default:
        return false;
    }
}

bool is_position_setter(StmtKind k) {
    // Relative changes (change x/y by) do not establish a start state.
    return k == StmtKind::GoToXY || k == StmtKind::GoToTarget || k == StmtKind::SetX ||
           k == StmtKind::SetY;
}

Instances find_green_flag_setters(const ProgramAST &p, PerfumeKind kind, bool (*setter)(StmtKind)) {
    Collector c{kind};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.script && v.script->hat && v.script->hat->kind == EventHandler::Kind::GreenFlag &&
            setter(v.stmt->kind))
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

} // namespace

Instances find_initialisation_of_looks(const ProgramAST &p) {
    return find_green_flag_setters(p, PerfumeKind::InitialisationOfLooks, is_looks_setter);
}

Instances find_initialisation_of_position(const ProgramAST &p) {
    return find_green_flag_setters(p, PerfumeKind::InitialisationOfPosition, is_position_setter);
}

Instances find_list_usage(const ProgramAST &p) {
    Collector c{PerfumeKind::ListUsage};
    const TargetAST *stage = nullptr;
    for (const TargetAST &t : p.targets)
        if (t.is_stage)
            stage = &t;
    auto declared = [&](const TargetAST &t, const std::string &name) {
        return t.list_names.contains(name) || (stage && stage->list_names.contains(name));
    };
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.stmt->kind == StmtKind::ListOp && declared(*v.target, v.stmt->name))
            c.add(v.target_index, v.target->name, v.stmt->block_id, v.stmt->name);
        for_each_expr(*v.stmt, [&](const Expr &e) {
            if ((e.kind == ExprKind::ListReporter || e.kind == ExprKind::ListRef) &&
                declared(*v.target, e.value))
                c.add(v.target_index, v.target->name,
                      e.block_id.empty() ? v.stmt->block_id : e.block_id, e.value);
        });
    });
    return c.sorted();
}

Instances find_loop_sensing(const ProgramAST &p) {
    // Restricted to forever / repeat-until, not plain repeat.
    auto sensing_loop = [](StmtKind k) {
        return k == StmtKind::Forever || k == StmtKind::RepeatUntil;
    };
    Collector c{PerfumeKind::LoopSensing};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.stmt->kind == StmtKind::RepeatUntil) {
            const Expr *cond = condition_of(*v.stmt);
            if (cond && subtree_contains(*cond, is_sensing_expr))
                c.add(v.target_index, v.target->name, v.stmt->block_id);
        }
        if (is_conditional(v.stmt->kind) && has_ancestor(v.ancestors, sensing_loop)) {
            const Expr *cond = condition_of(*v.stmt);
            if (cond && subtree_contains(*cond, is_sensing_expr))
                c.add(v.target_index, v.target->name, v.stmt->block_id);
        }
    });
    return c.sorted();
}

Instances find_matching_parameter(const ProgramAST &p) {
    Collector c{PerfumeKind::MatchingParameter};
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti)
        for (const ProcedureDef &pd : p.targets[ti].procedures) {
            if (pd.parameters.empty())
                continue;
            std::set<std::string> declared;
            for (const auto &[name, type] : pd.parameters)
                declared.insert(name);
            bool all_match = true;
            std::vector<const Stmt *> flat;
            flatten(pd.body, flat);
            for (const Stmt *st : flat)
                for_each_expr(*st, [&](const Expr &e) {
                    if (e.kind == ExprKind::ArgumentReporter && !declared.contains(e.value))
                        all_match = false;
                });
            if (all_match)
                c.add(ti, p.targets[ti].name, pd.block_id, pd.proccode);
        }
    return c.sorted();
}

namespace {

Instances find_follower(const ProgramAST &p, PerfumeKind kind, bool towards_mouse) {
    Collector c{kind};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (!is_loop(v.stmt->kind))
            return;
        static const std::vector<Stmt> kEmpty;
        const std::vector<Stmt> &body = v.stmt->bodies.empty() ? kEmpty : v.stmt->bodies[0];
        bool hit = false;
        if (towards_mouse) {
            std::vector<const Stmt *> flat;
            flatten(body, flat);
            hit = std::any_of(flat.begin(), flat.end(), [](const Stmt *s) {
                return s->kind == StmtKind::GoToTarget && s->name == kMousePointer;
            });
        }
        if (!hit)
            hit = ordered_pair(body, StmtKind::PointTowards, StmtKind::MoveSteps,
                               [&](const Stmt &s) {
                                   if (towards_mouse)
                                       return s.name == kMousePointer;
                                   // A named sprite: not the mouse pointer, not dynamic.
                                   return !s.name.empty() && s.name != kMousePointer &&
                                          s.name != kRandomPosition;
                               });
        if (hit)
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

} // namespace

Instances find_mouse_follower(const ProgramAST &p) {
    return find_follower(p, PerfumeKind::MouseFollower, true);
}

Instances find_object_follower(const ProgramAST &p) {
    return find_follower(p, PerfumeKind::ObjectFollower, false);
}

Instances find_movement_in_loop(const ProgramAST &p) {
    Collector c{PerfumeKind::MovementInLoop};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (!is_conditional(v.stmt->kind) || !has_ancestor(v.ancestors, is_loop))
            return;
        const Expr *cond = condition_of(*v.stmt);
        if (!cond || !subtree_contains(*cond, [](const Expr &e) { return e.kind == ExprKind::KeyPressed; }))
            return;
        if (branches_contain(*v.stmt, [](const Stmt &s) { return is_motion_stmt(s.kind); }))
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_nested_conditional_checks(const ProgramAST &p) {
    Collector c{PerfumeKind::NestedConditionalChecks};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (is_conditional(v.stmt->kind) && has_ancestor(v.ancestors, is_conditional))
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_nested_loops(const ProgramAST &p) {
    Collector c{PerfumeKind::NestedLoops};
    std::function<void(const std::vector<Stmt> &, bool, std::size_t, const TargetAST &)> walk =
        [&](const std::vector<Stmt> &seq, bool inside_loop, std::size_t ti, const TargetAST &t) {
            for (const Stmt &s : seq) {
                if (is_loop(s.kind) && inside_loop && !has_nested_loop_smell(seq, s))
                    c.add(ti, t.name, s.block_id);
                bool next_inside = inside_loop || is_loop(s.kind);
                for (const auto &body : s.bodies)
                    walk(body, next_inside, ti, t);
            }
        };
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti) {
        const TargetAST &t = p.targets[ti];
        for (const Script &s : t.scripts)
            walk(s.body, false, ti, t);
        for (const ProcedureDef &pd : t.procedures)
            walk(pd.body, false, ti, t);
    }
    return c.sorted();
}

Instances find_parallelisation(const ProgramAST &p) {
    struct ScriptRef {
        std::size_t target_index;
        const Script *script;
    };
    std::map<std::string, std::vector<ScriptRef>> groups;
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti)
        for (const Script &s : p.targets[ti].scripts) {
            if (!s.hat)
                continue;
            std::string sig = std::to_string(static_cast<int>(s.hat->kind)) + "\x1f" +
                              s.hat->opcode + "\x1f" + s.hat->value;
            groups[sig].push_back({ti, &s});
        }
    Collector c{PerfumeKind::Parallelisation};
    for (const auto &[sig, scripts] : groups)
        if (scripts.size() >= 2)
            for (const ScriptRef &r : scripts)
                c.add(r.target_index, p.targets[r.target_index].name, r.script->anchor_block_id,
                      r.script->hat->value);
    return c.sorted();
}

Instances find_say_sound_synchronisation(const ProgramAST &p) {
    auto say_message_empty = [](const Stmt &s) {
        if (s.args.empty())
            return true;
        const Expr &m = s.args[0];
        return m.kind == ExprKind::Empty ||
               ((m.kind == ExprKind::StringLiteral || m.kind == ExprKind::NumberLiteral) &&
                m.value.empty());
    };
    Collector c{PerfumeKind::SaySoundSynchronisation};
    std::function<void(const std::vector<Stmt> &, std::size_t, const TargetAST &)> scan =
        [&](const std::vector<Stmt> &seq, std::size_t ti, const TargetAST &t) {
            for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
                if (seq[i].kind == StmtKind::Say && !say_message_empty(seq[i]) &&
                    seq[i + 1].kind == StmtKind::PlaySound && seq[i + 1].flag &&
                    seq[i + 2].kind == StmtKind::Say && say_message_empty(seq[i + 2]))
                    c.add(ti, t.name, seq[i].block_id);
            }
            for (const Stmt &s : seq)
                for (const auto &body : s.bodies)
                    scan(body, ti, t);
        };
    for (std::size_t ti = 0; ti < p.targets.size(); ++ti) {
        const TargetAST &t = p.targets[ti];
        for (const Script &s : t.scripts)
            scan(s.body, ti, t);
        for (const ProcedureDef &pd : t.procedures)
            scan(pd.body, ti, t);
    }
    return c.sorted();
}

Instances find_timer(const ProgramAST &p) {
    Collector c{PerfumeKind::Timer};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (!is_loop(v.stmt->kind))
            return;
        std::vector<const Stmt *> flat;
        for (const auto &body : v.stmt->bodies)
            flatten(body, flat);
        bool has_fixed_wait = std::any_of(flat.begin(), flat.end(), [](const Stmt *s) {
            return s->kind == StmtKind::WaitSeconds && !s->args.empty() &&
                   s->args[0].kind == ExprKind::NumberLiteral;
        });
        if (!has_fixed_wait)
            return;
        // One instance per variable; anchor at the first fixed-step change.
        std::set<std::string> seen;
        for (const Stmt *s : flat)
            if (s->kind == StmtKind::ChangeVariableBy && !s->args.empty() &&
                s->args[0].kind == ExprKind::NumberLiteral && seen.insert(s->name).second)
                c.add(v.target_index, v.target->name, s->block_id, s->name);
    });
    return c.sorted();
}

Instances find_useful_position_check(const ProgramAST &p) {
    auto is_position_reporter = [](const Expr &e) {
        return e.kind == ExprKind::XPosition || e.kind == ExprKind::YPosition ||
               e.kind == ExprKind::DistanceTo;
    };
    Collector c{PerfumeKind::UsefulPositionCheck};
    for_each_statement(p, [&](const StmtVisit &v) {
        for_each_expr(*v.stmt, [&](const Expr &e) {
            if (e.kind != ExprKind::Gt && e.kind != ExprKind::Lt)
                return;
            for (const Expr &operand : e.children)
                if (subtree_contains(operand, is_position_reporter)) {
                    c.add(v.target_index, v.target->name, e.block_id);
                    return;
                }
        });
    });
    return c.sorted();
}

Instances find_valid_termination(const ProgramAST &p) {
    Collector c{PerfumeKind::ValidTermination};
    for_each_statement(p, [&](const StmtVisit &v) {
        if (v.stmt->kind != StmtKind::RepeatUntil)
            return;
        const Expr *cond = condition_of(*v.stmt);
        if (cond && cond->kind != ExprKind::Empty)
            c.add(v.target_index, v.target->name, v.stmt->block_id);
    });
    return c.sorted();
}

Instances find_kind(PerfumeKind k, const ProgramAST &p) {
    switch (k) {
    case PerfumeKind::BackdropSwitch: return find_backdrop_switch(p);
    case PerfumeKind::BooleanExpression: return find_boolean_expression(p);
    case PerfumeKind::Collision: return find_collision(p);
    case PerfumeKind::ConditionalInsideLoop: return find_conditional_inside_loop(p);
    case PerfumeKind::ControlledBroadcastOrStop: return find_controlled_broadcast_or_stop(p);
    case PerfumeKind::Coordination: return find_coordination(p);
    case PerfumeKind::CorrectBroadcast: return find_correct_broadcast(p);
    case PerfumeKind::CustomBlockUsage: return find_custom_block_usage(p);
    case PerfumeKind::DirectedMotion: return find_directed_motion(p);
    case PerfumeKind::GlidingMotion: return find_gliding_motion(p);
    case PerfumeKind::InitialisationOfLooks: return find_initialisation_of_looks(p);
    case PerfumeKind::InitialisationOfPosition: return find_initialisation_of_position(p);
    case PerfumeKind::ListUsage: return find_list_usage(p);
    case PerfumeKind::LoopSensing: return find_loop_sensing(p);
    case PerfumeKind::MatchingParameter: return find_matching_parameter(p);
    case PerfumeKind::MouseFollower: return find_mouse_follower(p);
    case PerfumeKind::MovementInLoop: return find_movement_in_loop(p);
    case PerfumeKind::NestedConditionalChecks: return find_nested_conditional_checks(p);
    case PerfumeKind::NestedLoops: return find_nested_loops(p);
    case PerfumeKind::ObjectFollower: return find_object_follower(p);
    case PerfumeKind::Parallelisation: return find_parallelisation(p);
    case PerfumeKind::SaySoundSynchronisation: return find_say_sound_synchronisation(p);
    case PerfumeKind::Timer: return find_timer(p);
    case PerfumeKind::UsefulPositionCheck: return find_useful_position_check(p);
    case PerfumeKind::ValidTermination: return find_valid_termination(p);
    }
    return {};
}

Instances find_all(const ProgramAST &p) {
    Instances all;
    for (PerfumeKind k : all_perfume_kinds()) {
        Instances part = find_kind(k, p);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return all;
}

} // namespace perfumes
