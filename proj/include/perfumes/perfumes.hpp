#ifndef PERFUMES_PERFUMES_HPP
#define PERFUMES_PERFUMES_HPP

#include <array>
#include <string>
#include <vector>

#include "perfumes/ast.hpp"

namespace perfumes {

enum class PerfumeKind {
    BackdropSwitch,
    BooleanExpression,
    Collision,
    ConditionalInsideLoop,
    ControlledBroadcastOrStop,
    Coordination,
    CorrectBroadcast,
    CustomBlockUsage,
    DirectedMotion,
    GlidingMotion,
    InitialisationOfLooks,
    InitialisationOfPosition,
    ListUsage,
    LoopSensing,
    MatchingParameter,
    MouseFollower,
    MovementInLoop,
    NestedConditionalChecks,
    NestedLoops,
    ObjectFollower,
    Parallelisation,
    SaySoundSynchronisation,
    Timer,
    UsefulPositionCheck,
    ValidTermination,
};

inline constexpr std::size_t kPerfumeCount = 25;

constexpr std::array<PerfumeKind, kPerfumeCount> all_perfume_kinds() {
    std::array<PerfumeKind, kPerfumeCount> a{};
    for (std::size_t i = 0; i < kPerfumeCount; ++i)
        a[i] = static_cast<PerfumeKind>(i);
    return a;
}

/// Stable machine name, e.g. "loop_sensing".
const std::string &machine_name(PerfumeKind k);
/// Display name matching the catalogue, e.g. "Loop Sensing".
const std::string &display_name(PerfumeKind k);
/// One-sentence positive feedback text for the learner.
const std::string &feedback_text(PerfumeKind k);

struct PerfumeInstance {
    PerfumeKind kind;
    std::string target_name;
    std::string anchor_block_id;
    std::string detail; // message / variable / procedure name where applicable
};

using Instances = std::vector<PerfumeInstance>;

// Exclusion helpers used by the definitions below.
bool is_comparing_literals(const ast::Expr &comparison);
bool has_nested_loop_smell(const std::vector<ast::Stmt> &enclosing_seq, const ast::Stmt &inner_loop);

Instances find_backdrop_switch(const ast::ProgramAST &p);
Instances find_boolean_expression(const ast::ProgramAST &p);
Instances find_collision(const ast::ProgramAST &p);
Instances find_conditional_inside_loop(const ast::ProgramAST &p);
Instances find_controlled_broadcast_or_stop(const ast::ProgramAST &p);
Instances find_coordination(const ast::ProgramAST &p);
Instances find_correct_broadcast(const ast::ProgramAST &p);
Instances find_custom_block_usage(const ast::ProgramAST &p);
Instances find_directed_motion(const ast::ProgramAST &p);
Instances find_gliding_motion(const ast::ProgramAST &p);
Instances find_initialisation_of_looks(const ast::ProgramAST &p);
Instances find_initialisation_of_position(const ast::ProgramAST &p);
Instances find_list_usage(const ast::ProgramAST &p);
Instances find_loop_sensing(const ast::ProgramAST &p);
Instances find_matching_parameter(const ast::ProgramAST &p);
Instances find_mouse_follower(const ast::ProgramAST &p);
Instances find_movement_in_loop(const ast::ProgramAST &p);
Instances find_nested_conditional_checks(const ast::ProgramAST &p);
Instances find_nested_loops(const ast::ProgramAST &p);
Instances find_object_follower(const ast::ProgramAST &p);
Instances find_parallelisation(const ast::ProgramAST &p);
Instances find_say_sound_synchronisation(const ast::ProgramAST &p);
Instances find_timer(const ast::ProgramAST &p);
Instances find_useful_position_check(const ast::ProgramAST &p);
Instances find_valid_termination(const ast::ProgramAST &p);

/// Run one finder by kind.
Instances find_kind(PerfumeKind k, const ast::ProgramAST &p);

/// All finders, concatenated in kind order. Deterministic.
Instances find_all(const ast::ProgramAST &p);

} // namespace perfumes

#endif
