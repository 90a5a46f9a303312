#include "minicg/frontend.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "minicg/diagnostics.hpp"

namespace minicg {
namespace {

enum class Tok {
    Ident,
    KwClass,
    KwExtends,
    KwDef,
    KwVar,
    KwNew,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Colon,
    Dot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

const char* token_desc(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::KwClass: return "'class'";
        case Tok::KwExtends: return "'extends'";
        case Tok::KwDef: return "'def'";
        case Tok::KwVar: return "'var'";
        case Tok::KwNew: return "'new'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Semi: return "';'";
        case Tok::Colon: return "':'";
        case Tok::Dot: return "'.'";
        case Tok::End: return "end of input";
    }
    return "token";
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view src, std::size_t start_line = 1) {
    std::vector<Token> out;
    std::size_t line = start_line, col = 1, i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n')
                ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t begin = i, begin_col = col;
            while (i < src.size() && ident_char(src[i])) {
                ++i;
                ++col;
            }
            std::string word(src.substr(begin, i - begin));
            Tok kind = Tok::Ident;
            if (word == "class")
                kind = Tok::KwClass;
            else if (word == "extends")
                kind = Tok::KwExtends;
            else if (word == "def")
                kind = Tok::KwDef;
            else if (word == "var")
                kind = Tok::KwVar;
            else if (word == "new")
                kind = Tok::KwNew;
            out.push_back({kind, std::move(word), line, begin_col});
            continue;
        }
        Tok kind;
        switch (c) {
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ';': kind = Tok::Semi; break;
            case ':': kind = Tok::Colon; break;
            case '.': kind = Tok::Dot; break;
            default:
                throw Error(DiagCode::SyntaxError,
                            std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({kind, std::string(1, c), line, col});
        ++col;
        ++i;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// Deferred name checks collected while parsing, run once all classes are known.
struct NameCheck {
    DiagCode code;
    std::string name;    // the name that must be declared
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct ClassPos {
    std::size_t line = 0;
    std::size_t column = 0;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ProgramModel parse_program() {
        ProgramModel model;
        while (!at(Tok::End)) {
            parse_class(model);
        }
        run_deferred_checks(model);
        check_inheritance_cycles(model);
        return model;
    }

    MethodDecl parse_single_method(const std::string& owner) {
        MethodDecl m = parse_method(owner, nullptr);
        expect(Tok::End, "end of patch");
        return m;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<NameCheck> checks_;
    std::map<std::string, ClassPos> class_pos_;

    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok kind) const { return peek().kind == kind; }

    Token expect(Tok kind, const char* what) {
        if (!at(kind)) {
            const Token& t = peek();
            std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
            throw Error(DiagCode::SyntaxError,
                        std::string("expected ") + what + ", got " + got, t.line, t.column);
        }
        return tokens_[pos_++];
    }

    bool accept(Tok kind) {
        if (!at(kind))
            return false;
        ++pos_;
        return true;
    }

    void parse_class(ProgramModel& model) {
        expect(Tok::KwClass, "'class'");
        Token name = expect(Tok::Ident, "class name");
        if (model.find_class(name.text))
            throw Error(DiagCode::DuplicateClass,
                        "class '" + name.text + "' already declared", name.line, name.column);
        ClassDecl cls;
        cls.name = name.text;
        class_pos_[name.text] = {name.line, name.column};
        if (accept(Tok::KwExtends)) {
            Token sup = expect(Tok::Ident, "superclass name");
            cls.superclass = sup.text;
            checks_.push_back({DiagCode::UndeclaredSuperclass, sup.text,
                               "class '" + cls.name + "' extends undeclared class '" +
                                   sup.text + "'",
                               sup.line, sup.column});
        }
        expect(Tok::LBrace, "'{'");
        while (at(Tok::KwDef)) {
            cls.methods.push_back(parse_method(cls.name, &cls));
        }
        expect(Tok::RBrace, "'}'");
        model.classes.push_back(std::move(cls));
    }

    MethodDecl parse_method(const std::string& owner, const ClassDecl* cls) {
        expect(Tok::KwDef, "'def'");
        Token name = expect(Tok::Ident, "method name");
        if (cls && cls->find_method(name.text))
            throw Error(DiagCode::DuplicateMethod,
                        "method '" + name.text + "' already declared in class '" +
                            owner + "'",
                        name.line, name.column);
        expect(Tok::LParen, "'('");
        expect(Tok::RParen, "')'");
        expect(Tok::LBrace, "'{'");

        MethodDecl m;
        m.owner = owner;
        m.name = name.text;
        std::vector<Token> receiver_uses;
        while (!at(Tok::RBrace)) {
            if (accept(Tok::KwVar)) {
                Token var = expect(Tok::Ident, "variable name");
                expect(Tok::Colon, "':'");
                Token type = expect(Tok::Ident, "type name");
                expect(Tok::Semi, "';'");
                if (m.locals.count(var.text))
                    throw Error(DiagCode::DuplicateLocal,
                                "local '" + var.text + "' already declared in '" + owner +
                                    "." + m.name + "'",
                                var.line, var.column);
                m.locals.emplace(var.text, type.text);
                checks_.push_back({DiagCode::UndeclaredLocalType, type.text,
                                   "local '" + var.text + "' has undeclared type '" +
                                       type.text + "'",
                                   type.line, type.column});
            } else if (accept(Tok::KwNew)) {
                Token type = expect(Tok::Ident, "class name");
                expect(Tok::Semi, "';'");
                m.instantiations.insert(type.text);
                checks_.push_back({DiagCode::UndeclaredInstantiation, type.text,
                                   "instantiation of undeclared class '" + type.text + "'",
                                   type.line, type.column});
            } else if (at(Tok::Ident)) {
                Token first = expect(Tok::Ident, "identifier");
                CallSite site;
                site.index = m.call_sites.size();
                if (accept(Tok::Dot)) {
                    Token target = expect(Tok::Ident, "method name");
                    site.receiver = first.text;
                    site.target = target.text;
                    receiver_uses.push_back(first);
                } else {
                    site.target = first.text;
                }
                expect(Tok::LParen, "'('");
                expect(Tok::RParen, "')'");
                expect(Tok::Semi, "';'");
                m.call_sites.push_back(std::move(site));
            } else {
                const Token& t = peek();
                std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
                throw Error(DiagCode::SyntaxError, "expected statement, got " + got,
                            t.line, t.column);
            }
        }
        expect(Tok::RBrace, "'}'");

        for (const Token& use : receiver_uses) {
            if (!m.locals.count(use.text))
                throw Error(DiagCode::UndeclaredLocal,
                            "call receiver '" + use.text + "' is not a local of '" +
                                owner + "." + m.name + "'",
                            use.line, use.column);
        }
        return m;
    }

    void run_deferred_checks(const ProgramModel& model) {
        for (const auto& check : checks_) {
            if (!model.find_class(check.name))
                throw Error(check.code, check.message, check.line, check.column);
        }
    }

    void check_inheritance_cycles(const ProgramModel& model) {
        // Each class has at most one parent, so a simple walk with a path
        // marker finds any cycle.
        std::map<std::string, int> state; // 0 unseen, 1 on path, 2 done
        for (const auto& cls : model.classes) {
            if (state[cls.name] == 2)
                continue;
            std::vector<const ClassDecl*> path;
            const ClassDecl* cur = &cls;
            while (cur) {
                if (state[cur->name] == 1) {
                    std::string text = "inheritance cycle: ";
                    bool in_cycle = false;
                    for (const ClassDecl* p : path) {
                        if (p == cur)
                            in_cycle = true;
                        if (in_cycle)
                            text += p->name + " -> ";
                    }
                    text += cur->name;
                    ClassPos pos = class_pos_[cur->name];
                    throw Error(DiagCode::InheritanceCycle, text, pos.line, pos.column);
                }
                if (state[cur->name] == 2)
                    break;
                state[cur->name] = 1;
                path.push_back(cur);
                cur = cur->superclass ? model.find_class(*cur->superclass) : nullptr;
            }
            for (const ClassDecl* p : path)
                state[p->name] = 2;
        }
    }
};

} // namespace

ProgramModel parse_program(std::string_view source) {
    Parser parser(lex(source));
    return parser.parse_program();
}

std::string pretty_print(const ProgramModel& model) {
    std::string out;
    for (const auto& cls : model.classes) {
        out += "class " + cls.name;
        if (cls.superclass)
            out += " extends " + *cls.superclass;
        out += " {\n";
        for (const auto& m : cls.methods) {
            out += "  def " + m.name + "() {\n";
            for (const auto& [var, type] : m.locals)
                out += "    var " + var + ": " + type + ";\n";
            for (const auto& type : m.instantiations)
                out += "    new " + type + ";\n";
            for (const auto& site : m.call_sites) {
                out += "    ";
                if (site.receiver)
                    out += *site.receiver + ".";
                out += site.target + "();\n";
            }
            out += "  }\n";
        }
        out += "}\n";
    }
    return out;
}

ProgramModel apply_edit(const ProgramModel& model, const Delta& delta) {
    ProgramModel out = model;
    MethodDecl* target = nullptr;
    for (auto& cls : out.classes) {
        if (cls.name != delta.method.class_name)
            continue;
        for (auto& m : cls.methods)
            if (m.name == delta.method.method_name)
                target = &m;
        break;
    }
    if (!target)
        throw Error(DiagCode::UnknownMethod,
                    "no method '" + delta.method.str() + "' to edit");

    for (const auto& [var, type] : delta.locals)
        if (!model.find_class(type))
            throw Error(DiagCode::UndeclaredLocalType,
                        "local '" + var + "' has undeclared type '" + type + "'");
    for (const auto& type : delta.instantiations)
        if (!model.find_class(type))
            throw Error(DiagCode::UndeclaredInstantiation,
                        "instantiation of undeclared class '" + type + "'");
    for (const auto& site : delta.call_sites)
        if (site.receiver && !delta.locals.count(*site.receiver))
            throw Error(DiagCode::UndeclaredLocal,
                        "call receiver '" + *site.receiver + "' is not a local of '" +
                            delta.method.str() + "'");

    target->locals = delta.locals;
    target->instantiations = delta.instantiations;
    target->call_sites = delta.call_sites;
    for (std::size_t i = 0; i < target->call_sites.size(); ++i)
        target->call_sites[i].index = i;
    return out;
}

Delta parse_delta(std::string_view patch_text) {
    // Header: first non-empty, non-comment line is "@@ Class.method".
    std::size_t line_no = 0;
    std::size_t offset = 0;
    std::string header;
    while (offset < patch_text.size()) {
        std::size_t eol = patch_text.find('\n', offset);
        if (eol == std::string_view::npos)
            eol = patch_text.size();
        std::string_view line = patch_text.substr(offset, eol - offset);
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line.substr(first, 2) != "//") {
            header = std::string(line.substr(first));
            offset = eol == patch_text.size() ? eol : eol + 1;
            break;
        }
        offset = eol == patch_text.size() ? eol : eol + 1;
    }
    if (header.substr(0, 2) != "@@")
        throw Error(DiagCode::SyntaxError, "patch must start with an '@@ Class.method' header",
                    line_no, 1);
    std::string id_text = header.substr(2);
    std::size_t begin = id_text.find_first_not_of(" \t");
    std::size_t end = id_text.find_last_not_of(" \t\r");
    if (begin == std::string::npos)
        throw Error(DiagCode::SyntaxError, "patch header names no method", line_no, 1);
    MethodId id = MethodId::parse(id_text.substr(begin, end - begin + 1));

    Parser parser(lex(patch_text.substr(offset), line_no + 1));
    MethodDecl m = parser.parse_single_method(id.class_name);
    if (m.name != id.method_name)
        throw Error(DiagCode::SyntaxError,
                    "patch header names '" + id.str() + "' but the declaration is 'def " +
                        m.name + "'");

    Delta delta;
    delta.method = id;
    delta.locals = std::move(m.locals);
    delta.instantiations = std::move(m.instantiations);
    delta.call_sites = std::move(m.call_sites);
    return delta;
}

} // namespace minicg
