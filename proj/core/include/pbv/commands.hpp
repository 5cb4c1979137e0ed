#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pbv/constraint.hpp"
#include "pbv/propagation.hpp"
#include "pbv/substitution.hpp"

namespace pbv {

// One token of a reverse-polish derivation: a number (constraint reference or
// scalar operand), a literal axiom push, or an operator.
struct PolToken {
    enum class Kind { Number, Literal, Add, Multiply, Divide, Saturate } kind;
    Int number;   // Kind::Number; negative numbers are relative references
    Lit literal;  // Kind::Literal
    size_t line = 0;
    size_t column = 0;
};

struct PolStep {
    std::vector<PolToken> tokens;
    size_t line = 0;
};

struct RupStep {
    Constraint constraint;
    size_t line = 0;
};

using SubproofStep = std::variant<PolStep, RupStep>;

// proofgoal #<index> ... qed <ref>
struct Subproof {
    int goalIndex = 0;
    std::vector<SubproofStep> steps;
    long long qedRef = 0;
    size_t line = 0;    // of the proofgoal line
    size_t qedLine = 0;
};

struct LoadFormulaCommand {
    uint64_t count = 0;
};

struct PolCommand {
    std::vector<PolToken> tokens;
};

struct RupCommand {
    Constraint constraint;
};

struct RedCommand {
    Constraint constraint;
    Substitution witness;
    std::vector<Subproof> subproofs;
};

struct DomCommand {
    Constraint constraint;
    Substitution witness;
    std::vector<Subproof> subproofs;
};

struct DelDerivedCommand {
    std::vector<ConstraintId> ids;
};

struct DelCoreCommand {
    std::vector<ConstraintId> ids;
    std::optional<Substitution> witness;
    std::vector<Subproof> subproofs;
};

struct CoreTransferCommand {
    std::vector<ConstraintId> ids;
};

struct SolCommand {
    std::vector<Lit> literals;
};

struct PreOrderCommand {
    std::string name;
    std::vector<Var> left;
    std::vector<Var> right;
    std::vector<Var> freshRight;
    std::vector<Constraint> constraints;
    std::vector<Subproof> transitivityProofs;
    std::vector<Subproof> reflexivityProofs;
};

struct LoadOrderCommand {
    std::string name;
    std::vector<Var> vars;
};

struct OutputCommand {
    enum class Kind { None, Equisatisfiable } kind = Kind::None;
    std::vector<ConstraintId> ids; // for Equisatisfiable: claimed core set
};

struct ConclusionCommand {
    enum class Claim { None, Unsat, Optimal, BoundGE } claim = Claim::None;
    Int value; // Optimal / BoundGE
};

struct EndCommand {};

using ProofCommandPayload = std::variant<LoadFormulaCommand,
                                         PolCommand,
                                         RupCommand,
                                         RedCommand,
                                         DomCommand,
                                         DelDerivedCommand,
                                         DelCoreCommand,
                                         CoreTransferCommand,
                                         SolCommand,
                                         PreOrderCommand,
                                         LoadOrderCommand,
                                         OutputCommand,
                                         ConclusionCommand,
                                         EndCommand>;

struct ProofCommand {
    size_t line = 0;
    ProofCommandPayload payload;
};

} // namespace pbv
