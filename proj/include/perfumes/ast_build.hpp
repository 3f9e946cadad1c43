#ifndef PERFUMES_AST_BUILD_HPP
#define PERFUMES_AST_BUILD_HPP

#include <string>

#include "perfumes/ast.hpp"
#include "perfumes/sb3.hpp"

namespace perfumes::ast {

/// Reconstruct typed scripts and procedure definitions from the raw block
/// graph. Shadow blocks are folded into their parents or dropped; orphaned
/// blocks are reported through ProgramAST::diagnostics. Throws CycleError if
/// a next/substack chain revisits a block.
ProgramAST build_ast(const sb3::RawProject &raw, const std::string &project_id);

} // namespace perfumes::ast

#endif
