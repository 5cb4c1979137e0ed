#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pbv {

struct Var {
    uint32_t id = 0;

    bool operator==(const Var&) const = default;
    auto operator<=>(const Var&) const = default;
};

class Lit {
public:
    Lit() = default;
    Lit(Var var, bool negated)
        : code_((var.id << 1) | static_cast<uint32_t>(negated))
    {}

    Var var() const { return Var{code_ >> 1}; }
    bool negated() const { return code_ & 1; }

    Lit operator~() const {
        Lit res;
        res.code_ = code_ ^ 1;
        return res;
    }

    bool operator==(const Lit&) const = default;
    auto operator<=>(const Lit&) const = default;

    uint32_t code() const { return code_; }

private:
    uint32_t code_ = 0;
};

// Interns variable names to dense ids; bijective within one session.
class VarPool {
public:
    // Valid names match [A-Za-z_][A-Za-z0-9_]*.
    static bool validName(std::string_view name);

    Var intern(std::string_view name);
    std::optional<Var> find(std::string_view name) const;
    const std::string& name(Var v) const { return names_.at(v.id); }
    size_t size() const { return names_.size(); }

    std::string litName(Lit l) const {
        return l.negated() ? "~" + name(l.var()) : name(l.var());
    }

private:
    std::unordered_map<std::string, uint32_t> byName_;
    std::vector<std::string> names_;
};

inline bool VarPool::validName(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(name[0])) return false;
    for (char c : name.substr(1))
        if (!alnum(c)) return false;
    return true;
}

inline Var VarPool::intern(std::string_view name) {
    auto it = byName_.find(std::string(name));
    if (it != byName_.end()) return Var{it->second};
    uint32_t id = static_cast<uint32_t>(names_.size());
    names_.emplace_back(name);
    byName_.emplace(names_.back(), id);
    return Var{id};
}

inline std::optional<Var> VarPool::find(std::string_view name) const {
    auto it = byName_.find(std::string(name));
    if (it == byName_.end()) return std::nullopt;
    return Var{it->second};
}

} // namespace pbv

template <>
struct std::hash<pbv::Var> {
    size_t operator()(const pbv::Var& v) const { return std::hash<uint32_t>()(v.id); }
};

template <>
struct std::hash<pbv::Lit> {
    size_t operator()(const pbv::Lit& l) const { return std::hash<uint32_t>()(l.code()); }
};
