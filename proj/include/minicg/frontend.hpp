#pragma once

#include <string>
#include <string_view>

#include "minicg/model.hpp"

namespace minicg {

// MiniJ grammar:
//   program    := class_decl*
//   class_decl := "class" IDENT ("extends" IDENT)? "{" method_decl* "}"
//   method_decl:= "def" IDENT "(" ")" "{" stmt* "}"
//   stmt       := var_decl | inst_stmt | call_stmt
//   var_decl   := "var" IDENT ":" IDENT ";"
//   inst_stmt  := "new" IDENT ";"
//   call_stmt  := (IDENT ".")? IDENT "(" ")" ";"
// Identifiers are [A-Za-z_][A-Za-z0-9_]*, whitespace is insignificant and
// "//" starts a line comment. "class", "extends", "def", "var" and "new"
// are reserved words.

/// Parses a MiniJ source unit and validates it (unique names, declared
/// superclasses and types, acyclic inheritance, declared call receivers).
/// Throws Error with a distinct DiagCode per condition.
ProgramModel parse_program(std::string_view source);

/// Canonical MiniJ rendering: classes and methods in declaration order,
/// locals and instantiations sorted by name, call sites in source order.
/// parse_program(pretty_print(m)) == m for every valid model.
std::string pretty_print(const ProgramModel& model);

/// Returns a copy of `model` with the named method's body replaced.
/// The input model is not modified. Throws Error(UnknownMethod) when the
/// method does not exist and validates the new body against the model.
ProgramModel apply_edit(const ProgramModel& model, const Delta& delta);

/// Parses a patch file: a header line "@@ Class.method" followed by a MiniJ
/// method declaration whose name must match the header.
Delta parse_delta(std::string_view patch_text);

} // namespace minicg
