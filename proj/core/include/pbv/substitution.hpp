#pragma once

#include <map>
#include <variant>

#include "pbv/vars.hpp"

namespace pbv {

// Image of a variable under a substitution: a truth constant or a literal.
struct SubstImage {
    enum class Kind { Zero, One, Literal } kind = Kind::Literal;
    Lit lit;

    static SubstImage zero() { return {Kind::Zero, Lit()}; }
    static SubstImage one() { return {Kind::One, Lit()}; }
    static SubstImage literal(Lit l) { return {Kind::Literal, l}; }

    SubstImage negated() const {
        switch (kind) {
        case Kind::Zero: return one();
        case Kind::One: return zero();
        default: return literal(~lit);
        }
    }

    bool operator==(const SubstImage&) const = default;
};

// Substitution (affine restriction): variables outside the domain are identity.
class Substitution {
public:
    Substitution() = default;

    void set(Var v, SubstImage img) { map_[v] = img; }
    void set(Var v, Lit l) { map_[v] = SubstImage::literal(l); }
    void setConstant(Var v, bool value) {
        map_[v] = value ? SubstImage::one() : SubstImage::zero();
    }

    bool identityOn(Var v) const {
        auto it = map_.find(v);
        return it == map_.end()
            || (it->second.kind == SubstImage::Kind::Literal && it->second.lit == Lit(v, false));
    }

    SubstImage operator()(Var v) const {
        auto it = map_.find(v);
        if (it == map_.end()) return SubstImage::literal(Lit(v, false));
        return it->second;
    }

    SubstImage operator()(Lit l) const {
        SubstImage img = (*this)(l.var());
        return l.negated() ? img.negated() : img;
    }

    const std::map<Var, SubstImage>& entries() const { return map_; }
    bool empty() const { return map_.empty(); }

    bool operator==(const Substitution&) const = default;

private:
    std::map<Var, SubstImage> map_; // keyed by var id; deterministic iteration
};

// first w1, then w2: (w1 then w2)(x) = w2(w1(x))
inline Substitution compose(const Substitution& w1, const Substitution& w2) {
    Substitution out;
    for (const auto& [v, img] : w1.entries()) {
        if (img.kind == SubstImage::Kind::Literal)
            out.set(v, w2(img.lit));
        else
            out.set(v, img);
    }
    for (const auto& [v, img] : w2.entries()) {
        if (w1.identityOn(v) && !out.entries().count(v)) out.set(v, img);
    }
    return out;
}

} // namespace pbv
