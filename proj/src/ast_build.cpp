#include "perfumes/ast_build.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "perfumes/errors.hpp"

namespace perfumes::ast {

namespace {

using sb3::InputSlot;
using sb3::RawBlock;
using sb3::RawTarget;

std::string normalize_menu_target(const std::string &v) {
    if (v == "_mouse_")
        return kMousePointer;
    if (v == "_random_")
        return kRandomPosition;
    if (v == "_edge_")
        return kEdge;
    return v;
}

bool is_expr_opcode(const std::string &op) {
    static const std::unordered_set<std::string> exact = {
        "sensing_touchingobject", "sensing_touchingcolor", "sensing_coloristouchingcolor",
        "sensing_keypressed",     "sensing_mousedown",     "sensing_distanceto",
        "sensing_mousex",         "sensing_mousey",        "sensing_timer",
        "sensing_answer",         "sensing_loudness",      "sensing_of",
        "sensing_current",        "sensing_dayssince2000", "sensing_username",
        "motion_xposition",       "motion_yposition",      "motion_direction",
        "looks_costumenumbername", "looks_backdropnumbername", "looks_size",
        "sound_volume",
        "data_itemoflist",        "data_itemnumoflist",    "data_lengthoflist",
        "data_listcontainsitem",  "data_listcontents",     "data_variable",
    };
    return exact.contains(op) || op.starts_with("operator_") || op.starts_with("argument_reporter");
}

struct TargetBuilder {
    const RawTarget &raw;
    std::vector<std::string> &diagnostics;

    const RawBlock *block(const std::string &id) const {
        auto it = raw.blocks.find(id);
        return it == raw.blocks.end() ? nullptr : &it->second;
    }

    std::string field_value(const RawBlock &b, const std::string &name) const {
        auto it = b.fields.find(name);
        return it == b.fields.end() ? "" : it->second.first;
    }

    // Resolve an input that normally holds a drop-down menu shadow block.
    // Returns the menu value, or nullopt with *dynamic set when the slot
    // holds a real expression.
    std::optional<std::string> menu_value(const RawBlock &b, const std::string &input,
                                          const std::string &menu_field, Expr *dynamic,
                                          std::unordered_set<std::string> &visited) {
        auto it = b.inputs.find(input);
        if (it == b.inputs.end())
            return std::nullopt;
        const InputSlot &slot = it->second;
        if (slot.type == InputSlot::Type::Literal)
            return normalize_menu_target(slot.value);
        if (slot.type == InputSlot::Type::BlockRef) {
            const RawBlock *ref = block(slot.value);
            if (ref && ref->is_shadow && !ref->fields.empty()) {
                auto fv = ref->fields.find(menu_field);
                if (fv != ref->fields.end())
                    return normalize_menu_target(fv->second.first);
                return normalize_menu_target(ref->fields.begin()->second.first);
            }
            if (dynamic)
                *dynamic = build_expr_ref(slot.value, visited);
            return std::nullopt;
        }
        return std::nullopt;
    }

    Expr slot_to_expr(const InputSlot &slot, std::unordered_set<std::string> &visited) {
        switch (slot.type) {
        case InputSlot::Type::Empty:
            return Expr{ExprKind::Empty};
        case InputSlot::Type::BlockRef:
            return build_expr_ref(slot.value, visited);
        case InputSlot::Type::Literal:
            if (slot.literal_kind == "number")
                return Expr{ExprKind::NumberLiteral, "", slot.value};
            if (slot.literal_kind == "color")
                return Expr{ExprKind::ColorLiteral, "", slot.value};
            if (slot.literal_kind == "unknown")
                return Expr{ExprKind::Unknown, "", slot.value};
            return Expr{ExprKind::StringLiteral, "", slot.value};
        case InputSlot::Type::VariableRef:
            return Expr{ExprKind::VariableRef, "", slot.value};
        case InputSlot::Type::ListRef:
            return Expr{ExprKind::ListRef, "", slot.value};
        case InputSlot::Type::BroadcastRef:
            return Expr{ExprKind::StringLiteral, "", slot.value};
        }
        return Expr{ExprKind::Empty};
    }

    Expr input_expr(const RawBlock &b, const std::string &name,
                    std::unordered_set<std::string> &visited) {
        auto it = b.inputs.find(name);
        if (it == b.inputs.end())
            return Expr{ExprKind::Empty};
        return slot_to_expr(it->second, visited);
    }

    Expr build_expr_ref(const std::string &id, std::unordered_set<std::string> &visited) {
        const RawBlock *b = block(id);
        if (!b) {
            diagnostics.push_back("unresolved block reference " + id + " in target " + raw.name);
            return Expr{ExprKind::Unknown, "", id};
        }
        if (!visited.insert(id).second)
            throw CycleError("expression chain revisits block " + id);
        Expr e = build_expr(id, *b, visited);
        visited.erase(id);
        return e;
    }

    Expr build_expr(const std::string &id, const RawBlock &b,
                    std::unordered_set<std::string> &visited) {
        const std::string &op = b.opcode;
        Expr e;
        e.block_id = id;

        auto binary = [&](ExprKind k, const char *lhs, const char *rhs) {
            e.kind = k;
            e.children.push_back(input_expr(b, lhs, visited));
            e.children.push_back(input_expr(b, rhs, visited));
        };

        if (op == "operator_gt")
            binary(ExprKind::Gt, "OPERAND1", "OPERAND2");
        else if (op == "operator_lt")
            binary(ExprKind::Lt, "OPERAND1", "OPERAND2");
        else if (op == "operator_equals")
            binary(ExprKind::Equals, "OPERAND1", "OPERAND2");
        else if (op == "operator_and")
            binary(ExprKind::And, "OPERAND1", "OPERAND2");
        else if (op == "operator_or")
            binary(ExprKind::Or, "OPERAND1", "OPERAND2");
        else if (op == "operator_not") {
            e.kind = ExprKind::Not;
            e.children.push_back(input_expr(b, "OPERAND", visited));
        } else if (op == "sensing_touchingobject") {
            e.kind = ExprKind::Touching;
            Expr dyn{ExprKind::Empty};
            if (auto v = menu_value(b, "TOUCHINGOBJECTMENU", "TOUCHINGOBJECTMENU", &dyn, visited))
                e.value = *v;
            else if (dyn.kind != ExprKind::Empty)
                e.children.push_back(std::move(dyn));
        } else if (op == "sensing_touchingcolor") {
            e.kind = ExprKind::TouchingColor;
            e.children.push_back(input_expr(b, "COLOR", visited));
        } else if (op == "sensing_coloristouchingcolor") {
            e.kind = ExprKind::ColorTouchingColor;
            e.children.push_back(input_expr(b, "COLOR", visited));
            e.children.push_back(input_expr(b, "COLOR2", visited));
        } else if (op == "sensing_keypressed") {
            e.kind = ExprKind::KeyPressed;
            Expr dyn{ExprKind::Empty};
            if (auto v = menu_value(b, "KEY_OPTION", "KEY_OPTION", &dyn, visited))
                e.value = *v;
            else if (dyn.kind != ExprKind::Empty)
                e.children.push_back(std::move(dyn));
        } else if (op == "sensing_mousedown") {
            e.kind = ExprKind::MouseDown;
        } else if (op == "sensing_distanceto") {
            e.kind = ExprKind::DistanceTo;
            Expr dyn{ExprKind::Empty};
            if (auto v = menu_value(b, "DISTANCETOMENU", "DISTANCETOMENU", &dyn, visited))
                e.value = *v;
            else if (dyn.kind != ExprKind::Empty)
                e.children.push_back(std::move(dyn));
        } else if (op == "motion_xposition") {
            e.kind = ExprKind::XPosition;
        } else if (op == "motion_yposition") {
            e.kind = ExprKind::YPosition;
        } else if (op == "data_variable") {
            e.kind = ExprKind::VariableRef;
            e.value = field_value(b, "VARIABLE");
        } else if (op == "data_listcontents") {
            e.kind = ExprKind::ListRef;
            e.value = field_value(b, "LIST");
        } else if (op == "data_itemoflist" || op == "data_itemnumoflist" ||
                   op == "data_lengthoflist" || op == "data_listcontainsitem") {
            e.kind = ExprKind::ListReporter;
            e.value = field_value(b, "LIST");
            e.op = op.substr(std::string("data_").size());
            if (b.inputs.contains("INDEX"))
                e.children.push_back(input_expr(b, "INDEX", visited));
            if (b.inputs.contains("ITEM"))
                e.children.push_back(input_expr(b, "ITEM", visited));
        } else if (op == "argument_reporter_boolean" || op == "argument_reporter_string_number") {
            e.kind = ExprKind::ArgumentReporter;
            e.value = field_value(b, "VALUE");
            e.op = op == "argument_reporter_boolean" ? "boolean" : "string-number";
        } else {
            e.kind = ExprKind::Unknown;
            e.value = op;
            for (const auto &[name, slot] : b.inputs)
                e.children.push_back(slot_to_expr(slot, visited));
        }
        return e;
    }

    std::vector<Stmt> substack(const RawBlock &b, const std::string &name,
                               std::unordered_set<std::string> &visited) {
        auto it = b.inputs.find(name);
        if (it == b.inputs.end() || it->second.type != InputSlot::Type::BlockRef)
            return {};
        return walk_chain(it->second.value, visited);
    }

    Stmt build_stmt(const std::string &id, const RawBlock &b,
                    std::unordered_set<std::string> &visited) {
        const std::string &op = b.opcode;
        Stmt s;
        s.block_id = id;

        auto one_arg = [&](StmtKind k, const char *input) {
            s.kind = k;
            s.args.push_back(input_expr(b, input, visited));
        };
        auto menu_or_arg = [&](StmtKind k, const char *input, const char *menu_field) {
            s.kind = k;
            Expr dyn{ExprKind::Empty};
            if (auto v = menu_value(b, input, menu_field, &dyn, visited))
                s.name = *v;
            else if (dyn.kind != ExprKind::Empty)
                s.args.push_back(std::move(dyn));
        };

        if (op == "control_if") {
            s.kind = StmtKind::If;
            s.args.push_back(input_expr(b, "CONDITION", visited));
            s.bodies.push_back(substack(b, "SUBSTACK", visited));
        } else if (op == "control_if_else") {
            s.kind = StmtKind::IfElse;
            s.args.push_back(input_expr(b, "CONDITION", visited));
            s.bodies.push_back(substack(b, "SUBSTACK", visited));
            s.bodies.push_back(substack(b, "SUBSTACK2", visited));
        } else if (op == "control_forever") {
            s.kind = StmtKind::Forever;
            s.bodies.push_back(substack(b, "SUBSTACK", visited));
        } else if (op == "control_repeat") {
            s.kind = StmtKind::Repeat;
            s.args.push_back(input_expr(b, "TIMES", visited));
            s.bodies.push_back(substack(b, "SUBSTACK", visited));
        } else if (op == "control_repeat_until") {
            s.kind = StmtKind::RepeatUntil;
            s.args.push_back(input_expr(b, "CONDITION", visited));
            s.bodies.push_back(substack(b, "SUBSTACK", visited));
        } else if (op == "control_wait") {
            one_arg(StmtKind::WaitSeconds, "DURATION");
        } else if (op == "control_wait_until") {
            one_arg(StmtKind::WaitUntil, "CONDITION");
        } else if (op == "control_stop") {
            s.kind = StmtKind::Stop;
            s.name = field_value(b, "STOP_OPTION");
        } else if (op == "event_broadcast" || op == "event_broadcastandwait") {
            s.kind = StmtKind::Broadcast;
            s.flag = (op == "event_broadcastandwait");
            auto it = b.inputs.find("BROADCAST_INPUT");
            if (it != b.inputs.end()) {
                const InputSlot &slot = it->second;
                if (slot.type == InputSlot::Type::BroadcastRef ||
                    slot.type == InputSlot::Type::Literal)
                    s.name = slot.value;
                else if (slot.type == InputSlot::Type::BlockRef)
                    s.args.push_back(build_expr_ref(slot.value, visited));
            }
        } else if (op == "motion_movesteps") {
            one_arg(StmtKind::MoveSteps, "STEPS");
        } else if (op == "motion_pointindirection") {
            one_arg(StmtKind::PointInDirection, "DIRECTION");
        } else if (op == "motion_pointtowards") {
            menu_or_arg(StmtKind::PointTowards, "TOWARDS", "TOWARDS");
        } else if (op == "motion_gotoxy") {
            s.kind = StmtKind::GoToXY;
            s.args.push_back(input_expr(b, "X", visited));
            s.args.push_back(input_expr(b, "Y", visited));
        } else if (op == "motion_goto") {
            menu_or_arg(StmtKind::GoToTarget, "TO", "TO");
        } else if (op == "motion_glidesecstoxy") {
            s.kind = StmtKind::GlideSecsToXY;
            s.args.push_back(input_expr(b, "SECS", visited));
            s.args.push_back(input_expr(b, "X", visited));
            s.args.push_back(input_expr(b, "Y", visited));
        } else if (op == "motion_glideto") {
            menu_or_arg(StmtKind::GlideTo, "TO", "TO");
            s.args.insert(s.args.begin(), input_expr(b, "SECS", visited));
        } else if (op == "motion_setx") {
            one_arg(StmtKind::SetX, "X");
        } else if (op == "motion_sety") {
            one_arg(StmtKind::SetY, "Y");
        } else if (op == "motion_changexby") {
            one_arg(StmtKind::ChangeX, "DX");
        } else if (op == "motion_changeyby") {
            one_arg(StmtKind::ChangeY, "DY");
        } else if (op == "looks_switchcostumeto") {
            menu_or_arg(StmtKind::SwitchCostume, "COSTUME", "COSTUME");
        } else if (op == "looks_switchbackdropto" || op == "looks_switchbackdroptoandwait") {
            menu_or_arg(StmtKind::SwitchBackdrop, "BACKDROP", "BACKDROP");
            s.flag = (op == "looks_switchbackdroptoandwait");
        } else if (op == "looks_setsizeto") {
            one_arg(StmtKind::SetSize, "SIZE");
        } else if (op == "looks_seteffectto") {
            s.kind = StmtKind::SetEffect;
            s.name = field_value(b, "EFFECT");
            s.args.push_back(input_expr(b, "VALUE", visited));
        } else if (op == "looks_cleargraphiceffects") {
            s.kind = StmtKind::ClearEffects;
        } else if (op == "looks_show") {
            s.kind = StmtKind::Show;
        } else if (op == "looks_hide") {
            s.kind = StmtKind::Hide;
        } else if (op == "looks_say" || op == "looks_think") {
            one_arg(StmtKind::Say, "MESSAGE");
        } else if (op == "looks_sayforsecs" || op == "looks_thinkforsecs") {
            s.kind = StmtKind::SayForSecs;
            s.args.push_back(input_expr(b, "MESSAGE", visited));
            s.args.push_back(input_expr(b, "SECS", visited));
        } else if (op == "sound_play" || op == "sound_playuntildone") {
            menu_or_arg(StmtKind::PlaySound, "SOUND_MENU", "SOUND_MENU");
            s.flag = (op == "sound_playuntildone");
        } else if (op == "data_setvariableto") {
            s.kind = StmtKind::SetVariable;
            s.name = field_value(b, "VARIABLE");
            s.args.push_back(input_expr(b, "VALUE", visited));
        } else if (op == "data_changevariableby") {
            s.kind = StmtKind::ChangeVariableBy;
            s.name = field_value(b, "VARIABLE");
            s.args.push_back(input_expr(b, "VALUE", visited));
        } else if (op.starts_with("data_") && b.fields.contains("LIST")) {
            s.kind = StmtKind::ListOp;
            s.name = field_value(b, "LIST");
            s.op = op.substr(std::string("data_").size());
            for (const char *arg : {"ITEM", "INDEX"})
                if (b.inputs.contains(arg))
                    s.args.push_back(input_expr(b, arg, visited));
        } else if (op == "procedures_call") {
            s.kind = StmtKind::ProcedureCall;
            s.name = b.mutation_proccode;
            // Arguments in the order declared by the prototype.
            auto ids = nlohmann::json::parse(b.mutation_argumentids, nullptr, false);
            if (ids.is_array())
                for (const auto &aid : ids) {
                    if (!aid.is_string())
                        continue;
                    auto it = b.inputs.find(aid.get<std::string>());
                    s.args.push_back(it == b.inputs.end() ? Expr{ExprKind::Empty}
                                                          : slot_to_expr(it->second, visited));
                }
        } else {
            s.kind = StmtKind::Unknown;
            s.name = op;
            diagnostics.push_back("unknown opcode " + op + " in target " + raw.name);
            for (const auto &[name, slot] : b.inputs) {
                if (slot.type == InputSlot::Type::BlockRef) {
                    const RawBlock *ref = block(slot.value);
                    if (ref && !ref->is_shadow && !is_expr_opcode(ref->opcode)) {
                        s.bodies.push_back(walk_chain(slot.value, visited));
                        continue;
                    }
                }
                s.args.push_back(slot_to_expr(slot, visited));
            }
        }
        return s;
    }

    std::vector<Stmt> walk_chain(const std::string &start, std::unordered_set<std::string> &visited) {
        std::vector<Stmt> out;
        std::optional<std::string> cur = start;
        while (cur) {
            const RawBlock *b = block(*cur);
            if (!b) {
                diagnostics.push_back("unresolved block reference " + *cur + " in target " + raw.name);
                break;
            }
            if (!visited.insert(*cur).second)
                throw CycleError("statement chain revisits block " + *cur);
            if (!b->is_shadow)
                out.push_back(build_stmt(*cur, *b, visited));
            cur = b->next;
        }
        return out;
    }

    std::optional<EventHandler> hat_for(const RawBlock &b) {
        const std::string &op = b.opcode;
        EventHandler h;
        if (op == "event_whenflagclicked") {
            h.kind = EventHandler::Kind::GreenFlag;
        } else if (op == "event_whenkeypressed") {
            h.kind = EventHandler::Kind::KeyPressed;
            h.value = field_value(b, "KEY_OPTION");
        } else if (op == "event_whenbroadcastreceived") {
            h.kind = EventHandler::Kind::BroadcastReceived;
            h.value = field_value(b, "BROADCAST_OPTION");
        } else if (op == "event_whenbackdropswitchesto") {
            h.kind = EventHandler::Kind::BackdropSwitchesTo;
            h.value = field_value(b, "BACKDROP");
        } else if (op == "event_whenthisspriteclicked") {
            h.kind = EventHandler::Kind::SpriteClicked;
        } else if (op == "event_whenstageclicked") {
            h.kind = EventHandler::Kind::StageClicked;
        } else if (op == "event_whengreaterthan" || op == "event_whentouchingobject" ||
                   op == "control_start_as_clone") {
            h.kind = EventHandler::Kind::Other;
            h.opcode = op;
            for (const auto &[name, fv] : b.fields) {
                if (!h.value.empty())
                    h.value += "|";
                h.value += fv.first;
            }
        } else {
            return std::nullopt;
        }
        return h;
    }

    ProcedureDef build_procedure(const std::string &def_id, const RawBlock &def,
                                 std::unordered_set<std::string> &visited) {
        ProcedureDef pd;
        pd.block_id = def_id;

        const RawBlock *proto = nullptr;
        if (auto it = def.inputs.find("custom_block");
            it != def.inputs.end() && it->second.type == InputSlot::Type::BlockRef)
            proto = block(it->second.value);

        if (proto) {
            pd.proccode = proto->mutation_proccode;
            pd.warp = proto->mutation_warp;
            auto names = nlohmann::json::parse(proto->mutation_argumentnames, nullptr, false);
            auto ids = nlohmann::json::parse(proto->mutation_argumentids, nullptr, false);
            if (names.is_array()) {
                for (std::size_t i = 0; i < names.size(); ++i) {
                    if (!names[i].is_string())
                        continue;
                    ParamType pt = ParamType::StringNumber;
                    if (ids.is_array() && i < ids.size() && ids[i].is_string()) {
                        auto slot = proto->inputs.find(ids[i].get<std::string>());
                        if (slot != proto->inputs.end() &&
                            slot->second.type == InputSlot::Type::BlockRef) {
                            const RawBlock *arg = block(slot->second.value);
                            if (arg && arg->opcode == "argument_reporter_boolean")
                                pt = ParamType::Boolean;
                        }
                    }
                    pd.parameters.emplace_back(names[i].get<std::string>(), pt);
                }
            }
        } else {
            diagnostics.push_back("procedure definition " + def_id + " has no prototype");
        }
        if (def.next)
            pd.body = walk_chain(*def.next, visited);
        return pd;
    }

    TargetAST build() {
        TargetAST t;
        t.name = raw.name;
        t.is_stage = raw.is_stage;
        for (const auto &[id, name] : raw.variables)
            t.variable_names.insert(name);
        for (const auto &[id, name] : raw.lists)
            t.list_names.insert(name);
        for (const auto &[id, name] : raw.broadcasts)
            t.broadcast_names.insert(name);

        // Block ids iterate in sorted order; construction is deterministic.
        for (const auto &[id, b] : raw.blocks) {
            if (!b.is_top_level || b.is_shadow)
                continue;
            std::unordered_set<std::string> visited;
            if (b.opcode == "procedures_definition") {
                visited.insert(id);
                t.procedures.push_back(build_procedure(id, b, visited));
                continue;
            }
            Script s;
            s.anchor_block_id = id;
            s.hat = hat_for(b);
            visited.insert(id);
            if (s.hat) {
                if (b.next)
                    s.body = walk_chain(*b.next, visited);
            } else {
                s.body.push_back(build_stmt(id, b, visited));
                if (b.next) {
                    auto rest = walk_chain(*b.next, visited);
                    std::move(rest.begin(), rest.end(), std::back_inserter(s.body));
                }
            }
            t.scripts.push_back(std::move(s));
        }
        return t;
    }
};

} // namespace

ProgramAST build_ast(const sb3::RawProject &raw, const std::string &project_id) {
    ProgramAST p;
    p.project_id = project_id;
    p.diagnostics = raw.diagnostics;
    for (const auto &rt : raw.targets) {
        TargetBuilder tb{rt, p.diagnostics};
        p.targets.push_back(tb.build());
    }
    return p;
}

} // namespace perfumes::ast
