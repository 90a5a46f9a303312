#include "minicg/diagnostics.hpp"

namespace minicg {

const char* diag_code_name(DiagCode code) {
    switch (code) {
        case DiagCode::SyntaxError: return "syntax-error";
        case DiagCode::DuplicateClass: return "duplicate-class";
        case DiagCode::DuplicateMethod: return "duplicate-method";
        case DiagCode::DuplicateLocal: return "duplicate-local";
        case DiagCode::UndeclaredSuperclass: return "undeclared-superclass";
        case DiagCode::UndeclaredLocalType: return "undeclared-local-type";
        case DiagCode::UndeclaredInstantiation: return "undeclared-instantiation";
        case DiagCode::UndeclaredLocal: return "undeclared-local";
        case DiagCode::InheritanceCycle: return "inheritance-cycle";
        case DiagCode::UnknownClass: return "unknown-class";
        case DiagCode::UnknownMethod: return "unknown-method";
        case DiagCode::UnresolvedTarget: return "unresolved-target";
        case DiagCode::NoEntryPoint: return "no-entry-point";
        case DiagCode::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

namespace {

std::string format_message(DiagCode code, const std::string& message,
                           std::size_t line, std::size_t column) {
    std::string out;
    if (line > 0) {
        out += std::to_string(line);
        out += ":";
        out += std::to_string(column);
        out += ": ";
    }
    out += diag_code_name(code);
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(DiagCode code, const std::string& message,
             std::size_t line, std::size_t column)
    : std::runtime_error(format_message(code, message, line, column)),
      code_(code), line_(line), column_(column) {}

} // namespace minicg
