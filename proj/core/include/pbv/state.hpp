#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pbv/constraint.hpp"
#include "pbv/propagation.hpp"

namespace pbv {

enum class Mode { Checked, Unchecked };

// Where a live constraint sits. Bound is the distinguished model-improving
// constraint f <= v-1; it lives with the core but is excluded from the
// substituted proof obligations of redundance and dominance.
enum class StoreKind : uint8_t { Core, Derived, Bound };

struct StoredConstraint {
    Constraint constraint;
    StoreKind kind;
    size_t hash; // cached value hash, used by the syntactic-equality index
};

struct Stats {
    uint64_t polSteps = 0;
    uint64_t rupSteps = 0;
    uint64_t redSteps = 0;
    uint64_t domSteps = 0;
    uint64_t solSteps = 0;
    uint64_t deletions = 0;
    uint64_t coreTransfers = 0;
    uint64_t constraintsCreated = 0;
    uint64_t constraintsDeleted = 0;
    uint64_t goalsAuto = 0;
    uint64_t goalsBySubproof = 0;
    uint64_t peakLiveConstraints = 0;
    double wallSeconds = 0.0;

    bool operator==(const Stats& o) const {
        // wall time excluded: replay determinism covers everything else
        return polSteps == o.polSteps && rupSteps == o.rupSteps && redSteps == o.redSteps
            && domSteps == o.domSteps && solSteps == o.solSteps && deletions == o.deletions
            && coreTransfers == o.coreTransfers && constraintsCreated == o.constraintsCreated
            && constraintsDeleted == o.constraintsDeleted && goalsAuto == o.goalsAuto
            && goalsBySubproof == o.goalsBySubproof
            && peakLiveConstraints == o.peakLiveConstraints;
    }
};

enum class VerdictKind { NoneConcluded, Unsatisfiable, Optimal, BoundOnly };

struct Verdict {
    VerdictKind kind = VerdictKind::NoneConcluded;
    Int value; // Optimal / BoundOnly
    Stats stats;

    std::string describe() const {
        switch (kind) {
        case VerdictKind::NoneConcluded: return "NONE";
        case VerdictKind::Unsatisfiable: return "UNSAT";
        case VerdictKind::Optimal: return "OPTIMAL " + value.str();
        case VerdictKind::BoundOnly: return "BOUND-GE " + value.str();
        }
        return "NONE";
    }
};

} // namespace pbv
