#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pbv/constraint.hpp"
#include "pbv/vars.hpp"

namespace pbv {

using ConstraintId = uint64_t;

enum class TruthValue : uint8_t { Unassigned, True, False };

// Partial assignment with a trail of (literal, reason) entries.
class Assignment {
public:
    explicit Assignment(size_t nVars)
        : values_(nVars, TruthValue::Unassigned)
    {}

    TruthValue value(Var v) const { return values_[v.id]; }
    TruthValue value(Lit l) const {
        TruthValue tv = values_[l.var().id];
        if (tv == TruthValue::Unassigned || !l.negated()) return tv;
        return tv == TruthValue::True ? TruthValue::False : TruthValue::True;
    }
    bool assigned(Var v) const { return values_[v.id] != TruthValue::Unassigned; }

    // Returns false on an inconsistent assignment (variable already set the other way).
    bool assign(Lit l, ConstraintId reason) {
        TruthValue want = l.negated() ? TruthValue::False : TruthValue::True;
        TruthValue& slot = values_[l.var().id];
        if (slot != TruthValue::Unassigned) return slot == want;
        slot = want;
        trail_.push_back({l, reason});
        return true;
    }

    const std::vector<std::pair<Lit, ConstraintId>>& trail() const { return trail_; }
    size_t nVars() const { return values_.size(); }

private:
    std::vector<TruthValue> values_;
    std::vector<std::pair<Lit, ConstraintId>> trail_;
};

struct PropagationOutcome {
    bool conflict = false;
    ConstraintId conflictId = 0; // lowest-id violated constraint when conflict
};

// Sum of coefficients whose literal is not falsified, minus the degree.
// Negative slack means the constraint is violated under the assignment.
Int slack(const Constraint& c, const Assignment& a);

// One (id, constraint) view into whatever store the caller keeps.
struct PropagationDbEntry {
    ConstraintId id;
    const Constraint* constraint;
};

// Unit propagation to fixpoint. Scans entries in the given (ascending id)
// order and restarts the scan after every new assignment; returns a conflict
// as soon as any constraint is violated. Deterministic by construction.
PropagationOutcome propagate(const std::vector<PropagationDbEntry>& db, Assignment& a);

// F implies c by reverse unit propagation: F plus the negation of c
// propagates to conflict under the empty assignment.
bool rupCheck(const std::vector<PropagationDbEntry>& premises, const Constraint& c, size_t nVars);

// Premises alone propagate to conflict (used by contradiction proof goals).
bool propagatesToConflict(const std::vector<PropagationDbEntry>& premises, size_t nVars);

} // namespace pbv
