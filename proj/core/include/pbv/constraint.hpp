#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pbv/ints.hpp"
#include "pbv/substitution.hpp"
#include "pbv/vars.hpp"

namespace pbv {

struct Term {
    Int coeff; // > 0 in a normalized constraint
    Lit lit;

    bool operator==(const Term&) const = default;
};

// A normalized pseudo-Boolean constraint: sum of positive-coefficient terms,
// at most one term per variable, terms sorted by variable id, degree >= 0.
// Trivially true iff the degree is 0.
class Constraint {
public:
    Constraint() = default; // 0 >= 0

    // Normalizes sum(coeff_i * lit_i) >= rhs; coefficients may be signed and
    // variables may repeat (like terms are merged, x + ~x folds into the degree).
    static Constraint fromSigned(const std::vector<std::pair<Int, Lit>>& raw, const Int& rhs);
    static Constraint literalAxiom(Lit l);
    static Constraint contradiction(); // 0 >= 1

    const std::vector<Term>& terms() const { return terms_; }
    const Int& degree() const { return degree_; }

    bool triviallyTrue() const { return degree_ == 0; }
    bool conflicting() const; // sum of coefficients < degree
    Int coeffSum() const;

    Constraint negate() const;
    Constraint substitute(const Substitution& w) const;
    Constraint add(const Constraint& other) const;
    Constraint multiply(const Int& k) const; // requires k >= 1
    Constraint divide(const Int& d) const;   // requires d >= 1; ceiling division
    Constraint saturate() const;

    // val must be total on the constraint's variables.
    bool evaluate(const std::function<bool(Var)>& val) const;

    // True if some variable of the constraint is moved by w.
    bool touchedBy(const Substitution& w) const;

    bool operator==(const Constraint&) const = default;
    size_t hash() const;

private:
    friend class SignedCombiner;
    Constraint(std::vector<Term> terms, Int degree)
        : terms_(std::move(terms))
        , degree_(std::move(degree))
    {}

    std::vector<Term> terms_;
    Int degree_ = 0;
};

// Accumulates terms and constraints in signed form and renormalizes once.
class SignedCombiner {
public:
    void addTerm(const Int& coeff, Lit lit);
    void addConstraint(const Constraint& c, const Int& mult = 1);
    void addRhs(const Int& r) { rhs_ += r; }
    Constraint build() const;

private:
    std::map<Var, Int> signedCoeffs_;
    Int rhs_ = 0;
};

// True iff target is derivable from c by adding literal axioms only.
// Decided by coefficient comparison: the signed gap on each variable is
// covered by axioms, and the degree left over must still reach the target's.
bool literalAxiomImplies(const Constraint& c, const Constraint& target);

// An integer linear objective; terms may carry signed coefficients.
class Objective {
public:
    Objective() = default; // the zero objective (decision problems)
    Objective(std::vector<std::pair<Int, Lit>> terms, Int constant);

    const std::vector<std::pair<Int, Lit>>& terms() const { return terms_; }
    const Int& constant() const { return constant_; }
    bool zero() const { return terms_.empty() && constant_ == 0; }

    Int evaluate(const std::function<bool(Var)>& val) const;
    Objective substitute(const Substitution& w) const;

    // normalize(f|w <= f), i.e. the constraint f - f|w >= 0.
    Constraint witnessNonIncreasing(const Substitution& w) const;
    // normalize(f <= bound), used for the model-improving constraint.
    Constraint atMost(const Int& bound) const;

    bool operator==(const Objective&) const = default;

private:
    std::vector<std::pair<Int, Lit>> terms_; // merged per variable, sorted by var id
    Int constant_ = 0;
};

} // namespace pbv

template <>
struct std::hash<pbv::Constraint> {
    size_t operator()(const pbv::Constraint& c) const { return c.hash(); }
};
