#include "minicg/model.hpp"

#include "minicg/diagnostics.hpp"

namespace minicg {

MethodId MethodId::parse(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size())
        throw Error(DiagCode::InvalidArgument,
                    "expected Class.method, got '" + text + "'");
    return MethodId{text.substr(0, dot), text.substr(dot + 1)};
}

const MethodDecl* ClassDecl::find_method(const std::string& method_name) const {
    for (const auto& m : methods)
        if (m.name == method_name)
            return &m;
    return nullptr;
}

const ClassDecl* ProgramModel::find_class(const std::string& class_name) const {
    for (const auto& c : classes)
        if (c.name == class_name)
            return &c;
    return nullptr;
}

const MethodDecl* ProgramModel::find_method(const MethodId& id) const {
    const ClassDecl* c = find_class(id.class_name);
    return c ? c->find_method(id.method_name) : nullptr;
}

std::size_t ProgramModel::method_count() const {
    std::size_t n = 0;
    for (const auto& c : classes)
        n += c.methods.size();
    return n;
}

std::vector<MethodId> ProgramModel::all_methods() const {
    std::vector<MethodId> out;
    for (const auto& c : classes)
        for (const auto& m : c.methods)
            out.push_back(m.id());
    return out;
}

} // namespace minicg
