#include "pbv/order.hpp"

#include <cassert>

namespace pbv {

std::vector<Constraint> PreorderDefinition::instantiate(const std::vector<SubstImage>& a,
                                                        const std::vector<SubstImage>& b) const {
    assert(a.size() == arity() && b.size() == arity());
    Substitution w;
    for (size_t i = 0; i < arity(); ++i) {
        w.set(leftVars[i], a[i]);
        w.set(rightVars[i], b[i]);
    }
    std::vector<Constraint> out;
    out.reserve(constraints.size());
    for (const Constraint& c : constraints) out.push_back(c.substitute(w));
    return out;
}

PreorderDefinition trivialOrder() {
    PreorderDefinition def;
    def.name = "trivial";
    def.proven = true;
    return def;
}

PreorderDefinition lexOrder(size_t n, VarPool& pool, const std::string& name) {
    assert(n >= 1);
    PreorderDefinition def;
    def.name = name;
    std::vector<std::pair<Int, Lit>> raw;
    for (size_t i = 1; i <= n; ++i) {
        Var u = pool.intern("u" + std::to_string(i));
        Var v = pool.intern("v" + std::to_string(i));
        Var w = pool.intern("w" + std::to_string(i));
        def.leftVars.push_back(u);
        def.rightVars.push_back(v);
        def.freshRight.push_back(w);
        Int coeff = Int(1) << (n - i);
        raw.push_back({coeff, Lit(v, false)});
        raw.push_back({-coeff, Lit(u, false)});
    }
    def.constraints.push_back(Constraint::fromSigned(raw, Int(0)));
    return def;
}

Subproof lexTransitivitySubproof() {
    Subproof sub;
    sub.goalIndex = 1;
    PolStep step;
    auto num = [](long long v) {
        PolToken t;
        t.kind = PolToken::Kind::Number;
        t.number = v;
        return t;
    };
    PolToken plus;
    plus.kind = PolToken::Kind::Add;
    step.tokens = {num(1), num(2), plus, num(3), plus};
    sub.steps.push_back(step);
    sub.qedRef = -1;
    return sub;
}

} // namespace pbv
