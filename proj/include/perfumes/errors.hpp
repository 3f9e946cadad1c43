#ifndef PERFUMES_ERRORS_HPP
#define PERFUMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perfumes {

struct IoError : std::runtime_error {
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

// Input is not a zip and not parseable JSON, or lacks the expected top-level shape.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string &msg) : std::runtime_error(msg) {}
};

// A block record violates the sb3 schema (e.g. missing opcode).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string &msg) : std::runtime_error(msg) {}
};

// A next/substack chain revisits a block id.
struct CycleError : std::runtime_error {
    explicit CycleError(const std::string &msg) : std::runtime_error(msg) {}
};

// Correlation undefined: fewer than 3 samples or a constant vector.
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace perfumes

#endif
