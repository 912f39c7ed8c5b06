#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clawpoly {

/// Error categories shared by every module. The CLI maps each category onto an
/// exit code (see commands.hpp).
enum class ErrorKind {
    Dimension,
    LeafCount,
    UnsupportedGroup,
    NotAMember,
    ClassificationUndefined,
    NotTight,
    IntegralPoint,
    Configuration,
    Unbounded,
    Infeasible,
    ResourceCap,
    EmptyInput,
    Parse,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::LeafCount: return "leaf-count";
    case ErrorKind::UnsupportedGroup: return "unsupported-group";
    case ErrorKind::NotAMember: return "not-a-member";
    case ErrorKind::ClassificationUndefined: return "classification-undefined";
    case ErrorKind::NotTight: return "not-tight";
    case ErrorKind::IntegralPoint: return "integral-point";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::ResourceCap: return "resource-cap";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace clawpoly
