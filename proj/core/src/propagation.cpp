#include "pbv/propagation.hpp"

#include <limits>

namespace pbv {

Int slack(const Constraint& c, const Assignment& a) {
    Int s = -c.degree();
    for (const Term& t : c.terms()) {
        if (a.value(t.lit) != TruthValue::False) s += t.coeff;
    }
    return s;
}

PropagationOutcome propagate(const std::vector<PropagationDbEntry>& db, Assignment& a) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const PropagationDbEntry& entry : db) {
            const Constraint& c = *entry.constraint;
            Int s = slack(c, a);
            if (s < 0) return {true, entry.id};
            for (const Term& t : c.terms()) {
                if (t.coeff > s && a.value(t.lit) == TruthValue::Unassigned) {
                    a.assign(t.lit, entry.id);
                    changed = true;
                    break; // restart the scan after each new assignment
                }
            }
            if (changed) break;
        }
    }
    return {false, 0};
}

bool rupCheck(const std::vector<PropagationDbEntry>& premises, const Constraint& c, size_t nVars) {
    Constraint negated = c.negate();
    std::vector<PropagationDbEntry> db = premises;
    db.push_back({std::numeric_limits<ConstraintId>::max(), &negated});
    Assignment a(nVars);
    return propagate(db, a).conflict;
}

bool propagatesToConflict(const std::vector<PropagationDbEntry>& premises, size_t nVars) {
    Assignment a(nVars);
    return propagate(premises, a).conflict;
}

} // namespace pbv
