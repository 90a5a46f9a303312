#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace minicg {

/// Fully qualified method name, the node identity used across the toolkit.
struct MethodId {
    std::string class_name;
    std::string method_name;

    auto operator<=>(const MethodId&) const = default;

    std::string str() const { return class_name + "." + method_name; }

    /// Parses "Class.method"; throws Error(InvalidArgument) on bad shape.
    static MethodId parse(const std::string& text);
};

/// One call statement. A bare call `m();` has no receiver (dispatch starts at
/// the enclosing class); `x.m();` dispatches on the static type of local x.
struct CallSite {
    std::size_t index = 0; // position within the enclosing method's call list
    std::optional<std::string> receiver; // nullopt = self call
    std::string target;

    bool operator==(const CallSite&) const = default;
};

struct MethodDecl {
    std::string owner;
    std::string name;
    std::map<std::string, std::string> locals; // var name -> static class type
    std::set<std::string> instantiations;      // classes created via `new C;`
    std::vector<CallSite> call_sites;          // source order

    MethodId id() const { return MethodId{owner, name}; }
    bool operator==(const MethodDecl&) const = default;
};

struct ClassDecl {
    std::string name;
    std::optional<std::string> superclass;
    std::vector<MethodDecl> methods; // declaration order

    const MethodDecl* find_method(const std::string& method_name) const;
    bool operator==(const ClassDecl&) const = default;
};

/// Parsed program unit. Classes keep declaration order; lookups are by name.
struct ProgramModel {
    std::vector<ClassDecl> classes; // declaration order

    const ClassDecl* find_class(const std::string& class_name) const;
    const MethodDecl* find_method(const MethodId& id) const;
    std::size_t method_count() const;
    std::vector<MethodId> all_methods() const; // declaration order

    bool operator==(const ProgramModel&) const = default;
};

/// Replacement body for one method, the unit of incremental change.
struct Delta {
    MethodId method;
    std::map<std::string, std::string> locals;
    std::set<std::string> instantiations;
    std::vector<CallSite> call_sites;
};

} // namespace minicg
