#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minicg {

/// Every diagnostic the toolkit can raise, one code per distinct condition.
enum class DiagCode {
    SyntaxError,
    DuplicateClass,
    DuplicateMethod,
    DuplicateLocal,
    UndeclaredSuperclass,
    UndeclaredLocalType,
    UndeclaredInstantiation,
    UndeclaredLocal,
    InheritanceCycle,
    UnknownClass,
    UnknownMethod,
    UnresolvedTarget,
    NoEntryPoint,
    InvalidArgument,
};

const char* diag_code_name(DiagCode code);

/// Exception carrying a diagnostic code and, where known, a source position.
/// Line and column are 1-based; 0 means "not tied to a source location".
class Error : public std::runtime_error {
  public:
    Error(DiagCode code, const std::string& message,
          std::size_t line = 0, std::size_t column = 0);

    DiagCode code() const { return code_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    DiagCode code_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace minicg
