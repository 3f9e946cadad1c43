// Minimal positive and near-miss negative fixture per perfume kind.
#ifndef PERFUMES_TESTS_CATALOG_HPP
#define PERFUMES_TESTS_CATALOG_HPP

#include <vector>

#include "builders.hpp"
#include "perfumes/perfumes.hpp"

namespace catalog {

using perfumes::PerfumeKind;
using perfumes::ast::ProgramAST;
using perfumes::ast::StmtKind;

struct Entry {
    PerfumeKind kind;
    ProgramAST positive;
    // 1 for every kind except Parallelisation, whose smallest group has two
    // scripts and therefore two instances.
    int expected_positive;
    ProgramAST negative;
};

inline std::vector<Entry> build() {
    using namespace tb;
    std::vector<Entry> entries;
    auto add = [&](PerfumeKind k, ProgramAST pos, ProgramAST neg, int expected = 1) {
        entries.push_back({k, std::move(pos), expected, std::move(neg)});
    };

    add(PerfumeKind::BackdropSwitch,
        program({script(when_backdrop("sunset"), {say(str("go"))}),
                 script(green_flag(), {switch_backdrop("sunset")})}),
        program({script(when_backdrop("sunset"), {say(str("go"))}),
                 script(green_flag(), {switch_backdrop("beach")})}));

    add(PerfumeKind::BooleanExpression,
        program({script(green_flag(),
                        {if_(band(gt(var("score"), num("50")), lt(var("score"), num("100"))),
                             {say(str("mid"))})})}),
        program({script(green_flag(),
                        {if_(band(eq(num("1"), num("1")), gt(var("score"), num("0"))),
                             {say(str("no"))})})}));

    add(PerfumeKind::Collision,
        program({script(green_flag(),
                        {forever({if_(touching(kEdge), {move_steps(num("-10"))})})})}),
        program({script(green_flag(),
                        {forever({if_(touching(kEdge), {set_variable("score", num("0"))})})})}));

    add(PerfumeKind::ConditionalInsideLoop,
        program({script(green_flag(),
                        {forever({if_(gt(var("score"), num("10")), {say(str("hi"))})})})}),
        program({script(green_flag(),
                        {if_(gt(var("score"), num("10")), {say(str("hi"))})})}));

    add(PerfumeKind::ControlledBroadcastOrStop,
        program({script(green_flag(),
                        {forever({if_(gt(var("score"), num("10")), {broadcast("win")})})})}),
        program({script(green_flag(),
                        {if_(gt(var("score"), num("10")), {broadcast("win")})})}));

    add(PerfumeKind::Coordination,
        program({script(green_flag(), {wait_until(gt(var("score"), num("10")))})}),
        program({script(green_flag(), {wait_seconds(num("1"))})}));

    add(PerfumeKind::CorrectBroadcast,
        program({script(when_receive("go"), {say(str("hi"))}),
                 script(green_flag(), {broadcast("go")})}),
        program({script(when_receive("go"), {say(str("hi"))}),
                 script(green_flag(), {broadcast("win")})}));

    add(PerfumeKind::CustomBlockUsage,
        program({script(green_flag(), {procedure_call("jump")})},
                {procedure("jump", {}, {move_steps(num("10"))})}),
        program({script(green_flag(), {say(str("hi"))})},
                {procedure("jump", {}, {move_steps(num("10"))})}));

    add(PerfumeKind::DirectedMotion,
        program({script(when_key("right arrow"),
                        {point_in_direction(num("90")), move_steps(num("10"))})}),
        program({script(when_key("right arrow"),
                        {move_steps(num("10")), point_in_direction(num("90"))})}));

    add(PerfumeKind::GlidingMotion,
        program({script(when_key("space"), {glide_to("Cat"), glide_to("Dog")})}),
        program({script(green_flag(), {glide_to("Cat")})}));

    add(PerfumeKind::InitialisationOfLooks,
        program({script(green_flag(), {switch_costume("idle")})}),
        program({script(when_key("space"), {stmt0(StmtKind::Show)})}));

    add(PerfumeKind::InitialisationOfPosition,
        program({script(green_flag(), {go_to_xy(num("0"), num("0"))})}),
        program({script(green_flag(), {stmt1(StmtKind::ChangeX, num("10"))})}));

    {
        ProgramAST pos = program({script(green_flag(), {list_op("addtolist", "items")})});
        declare_list(pos, "items");
        ProgramAST neg = program({script(green_flag(), {say(str("hi"))})});
        declare_list(neg, "items");
        add(PerfumeKind::ListUsage, std::move(pos), std::move(neg));
    }

    add(PerfumeKind::LoopSensing,
        program({script(green_flag(), {forever({if_(mouse_down(), {say(str("hi"))})})})}),
        program({script(green_flag(), {if_(mouse_down(), {say(str("hi"))})})}));

    add(PerfumeKind::MatchingParameter,
        program({script(green_flag(), {procedure_call("jump %s")})},
                {procedure("jump %s", {{"h", ParamType::StringNumber}},
                           {move_steps(arg_reporter("h"))})}),
        program({script(green_flag(), {procedure_call("jump %s")})},
                {procedure("jump %s", {{"h", ParamType::StringNumber}},
                           {move_steps(arg_reporter("g"))})}));

    add(PerfumeKind::MouseFollower,
        program({script(green_flag(), {forever({go_to_target(kMousePointer)})})}),
        program({script(green_flag(), {go_to_target(kMousePointer)})}));

    add(PerfumeKind::MovementInLoop,
        program({script(green_flag(),
                        {forever({if_(key_pressed("right arrow"),
                                      {stmt1(StmtKind::ChangeX, num("10"))})})})}),
        program({script(green_flag(),
                        {forever({if_(key_pressed("right arrow"), {say(str("hi"))})})})}));

    add(PerfumeKind::NestedConditionalChecks,
        program({script(green_flag(),
                        {if_(gt(var("score"), num("10")),
                             {if_(lt(var("score"), num("20")), {say(str("hi"))})})})}),
        program({script(green_flag(),
                        {if_(gt(var("score"), num("10")), {say(str("a"))}),
                         if_(lt(var("score"), num("20")), {say(str("b"))})})}));

    add(PerfumeKind::NestedLoops,
        program({script(green_flag(),
                        {forever({move_steps(num("10")), repeat(num("10"), {say(str("hi"))})})})}),
        program({script(green_flag(),
                        {forever({repeat(num("10"), {say(str("hi"))})})})}));

    add(PerfumeKind::ObjectFollower,
        program({script(green_flag(),
                        {forever({point_towards("Cat"), move_steps(num("3"))})})}),
        program({script(green_flag(),
                        {forever({move_steps(num("3")), point_towards("Cat")})})}));

    add(PerfumeKind::Parallelisation,
        program({script(green_flag(), {say(str("a"))}),
                 script(green_flag(), {say(str("b"))})}),
        program({script(green_flag(), {say(str("a"))}),
                 script(when_key("space"), {say(str("b"))})}),
        2);

    add(PerfumeKind::SaySoundSynchronisation,
        program({script(green_flag(),
                        {say(str("hi")), play_sound("pop", true), say(str(""))})}),
        program({script(green_flag(),
                        {say(str("hi")), play_sound("pop", false), say(str(""))})}));

    add(PerfumeKind::Timer,
        program({script(green_flag(),
                        {forever({change_variable_by("t", num("-1")), wait_seconds(num("1"))})})}),
        program({script(green_flag(),
                        {forever({change_variable_by("t", var("step")), wait_seconds(num("1"))})})}));

    add(PerfumeKind::UsefulPositionCheck,
        program({script(green_flag(),
                        {if_(gt(x_position(), num("200")), {say(str("far"))})})}),
        program({script(green_flag(),
                        {if_(eq(x_position(), num("200")), {say(str("far"))})})}));

    add(PerfumeKind::ValidTermination,
        program({script(green_flag(),
                        {repeat_until(touching(kEdge), {move_steps(num("10"))})})}),
        program({script(green_flag(),
                        {repeat_until(empty(), {move_steps(num("10"))})})}));

    return entries;
}

} // namespace catalog

#endif
