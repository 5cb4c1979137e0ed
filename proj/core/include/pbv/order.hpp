#pragma once

#include <string>
#include <vector>

#include "pbv/commands.hpp"
#include "pbv/constraint.hpp"
#include "pbv/vars.hpp"

namespace pbv {

// A named preorder encoding O(u, v) over two equal-length placeholder lists.
// `proven` is set only after the reflexivity and transitivity checks pass.
struct PreorderDefinition {
    std::string name;
    std::vector<Var> leftVars;   // u
    std::vector<Var> rightVars;  // v
    std::vector<Var> freshRight; // w, used by the transitivity obligation
    std::vector<Constraint> constraints;
    bool proven = false;

    size_t arity() const { return leftVars.size(); }
    bool trivial() const { return constraints.empty(); }

    // O(a, b): substitute u_i -> a_i and v_i -> b_i simultaneously.
    std::vector<Constraint> instantiate(const std::vector<SubstImage>& a,
                                        const std::vector<SubstImage>& b) const;
};

// The trivial preorder relating all assignments (arity 0, no constraints).
PreorderDefinition trivialOrder();

// Lexicographic order on n bits: sum 2^(n-i) * (v_i - u_i) >= 0.
// Placeholder names are u1..un / v1..vn / w1..wn, interned into the pool.
PreorderDefinition lexOrder(size_t n, VarPool& pool, const std::string& name);

// The one-step transitivity subproof that closes the lex order goal:
// add O(u,v), O(v,w) and the negated conclusion.
Subproof lexTransitivitySubproof();

} // namespace pbv
