#ifndef PERFUMES_SB3_HPP
#define PERFUMES_SB3_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace perfumes::sb3 {

/// Normalized form of one sb3 input slot.
struct InputSlot {
    enum class Type { Empty, BlockRef, Literal, VariableRef, ListRef, BroadcastRef };

    Type type = Type::Empty;
    std::string value;        // block id, literal text, or name
    std::string id;           // variable/list/broadcast id when present
    std::string literal_kind; // "number", "color", "string", "unknown"

    static InputSlot empty() { return {}; }
    static InputSlot block_ref(std::string bid) {
        return {Type::BlockRef, std::move(bid), "", ""};
    }
    static InputSlot literal(std::string kind, std::string text) {
        return {Type::Literal, std::move(text), "", std::move(kind)};
    }
};

struct RawBlock {
    std::string opcode;
    std::optional<std::string> next;
    std::optional<std::string> parent;
    std::map<std::string, InputSlot> inputs;
    std::map<std::string, std::pair<std::string, std::string>> fields; // name -> (value, id)
    std::string mutation_proccode;
    std::string mutation_argumentnames; // JSON-encoded array, verbatim
    std::string mutation_argumentids;
    bool mutation_warp = false;
    bool is_shadow = false;
    bool is_top_level = false;
};

struct RawTarget {
    std::string name;
    bool is_stage = false;
    std::map<std::string, RawBlock> blocks;
    std::map<std::string, std::string> variables;  // id -> name
    std::map<std::string, std::string> lists;      // id -> name
    std::map<std::string, std::string> broadcasts; // id -> name
};

struct RawProject {
    std::vector<RawTarget> targets;
    std::vector<std::string> diagnostics;
};

/// Decode one sb3-encoded input slot value (the JSON array form) given as
/// serialized JSON text. Unknown literal type codes decode as kind "unknown".
InputSlot decode_input_slot(const std::string &raw_json);

/// Load a project from an .sb3 zip archive or a bare project.json file.
/// Throws IoError, FormatError, SchemaError.
RawProject load_project(const std::filesystem::path &path);

/// Parse project.json text that has already been read into memory.
RawProject parse_project_json(const std::string &text);

} // namespace perfumes::sb3

#endif
