#pragma once
// Error taxonomy shared by every engine module. All conditions that a
// caller can provoke map to one of these; internal logic bugs stay asserts.

#include <stdexcept>
#include <string>

namespace share {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error("stimulus space mismatch: " + what) {}
};

struct NonFiniteResult : Error {
    explicit NonFiniteResult(const std::string& what) : Error("non-finite result: " + what) {}
};

struct ZeroVector : Error {
    explicit ZeroVector(const std::string& what) : Error("zero vector: " + what) {}
};

struct ZeroGradient : Error {
    explicit ZeroGradient(const std::string& what) : Error("zero gradient: " + what) {}
};

struct MissingField : Error {
    explicit MissingField(const std::string& what) : Error("missing field: " + what) {}
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& what) : Error("unknown label: " + what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error("invalid parameters: " + what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

// Scenario file problems carry the JSON path of the offending node.
struct ScenarioError : Error {
    std::string path;
    ScenarioError(const std::string& kind, std::string path_, const std::string& what)
        : Error(kind + " at '" + path_ + "': " + what), path(std::move(path_)) {}
};

struct SyntaxError : ScenarioError {
    SyntaxError(const std::string& where, const std::string& what)
        : ScenarioError("syntax error", where, what) {}
};

struct UnknownKey : ScenarioError {
    explicit UnknownKey(const std::string& path) : ScenarioError("unknown key", path, "not part of the scenario schema") {}
};

struct TypeMismatch : ScenarioError {
    TypeMismatch(const std::string& path, const std::string& what) : ScenarioError("type mismatch", path, what) {}
};

}  // namespace share
