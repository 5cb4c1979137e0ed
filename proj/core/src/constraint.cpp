#include "pbv/constraint.hpp"

#include <cassert>

namespace pbv {

void SignedCombiner::addTerm(const Int& coeff, Lit lit) {
    if (coeff == 0) return;
    if (lit.negated()) {
        // a * ~x == a - a * x; the constant moves to the right-hand side
        signedCoeffs_[lit.var()] -= coeff;
        rhs_ -= coeff;
    } else {
        signedCoeffs_[lit.var()] += coeff;
    }
}

void SignedCombiner::addConstraint(const Constraint& c, const Int& mult) {
    for (const Term& t : c.terms()) addTerm(mult * t.coeff, t.lit);
    rhs_ += mult * c.degree();
}

Constraint SignedCombiner::build() const {
    std::vector<Term> terms;
    Int degree = rhs_;
    for (const auto& [var, s] : signedCoeffs_) {
        if (s == 0) continue;
        if (s > 0) {
            terms.push_back({s, Lit(var, false)});
        } else {
            terms.push_back({-s, Lit(var, true)});
            degree -= s;
        }
    }
    if (degree < 0) degree = 0;
    return Constraint(std::move(terms), std::move(degree));
}

Constraint Constraint::fromSigned(const std::vector<std::pair<Int, Lit>>& raw, const Int& rhs) {
    SignedCombiner comb;
    for (const auto& [coeff, lit] : raw) comb.addTerm(coeff, lit);
    comb.addRhs(rhs);
    return comb.build();
}

Constraint Constraint::literalAxiom(Lit l) {
    return fromSigned({{Int(1), l}}, Int(0));
}

Constraint Constraint::contradiction() {
    return fromSigned({}, Int(1));
}

bool Constraint::conflicting() const {
    return coeffSum() < degree_;
}

Int Constraint::coeffSum() const {
    Int sum = 0;
    for (const Term& t : terms_) sum += t.coeff;
    return sum;
}

Constraint Constraint::negate() const {
    SignedCombiner comb;
    for (const Term& t : terms_) comb.addTerm(-t.coeff, t.lit);
    comb.addRhs(-degree_ + 1);
    return comb.build();
}

Constraint Constraint::substitute(const Substitution& w) const {
    SignedCombiner comb;
    for (const Term& t : terms_) {
        SubstImage img = w(t.lit);
        switch (img.kind) {
        case SubstImage::Kind::Zero:
            break;
        case SubstImage::Kind::One:
            comb.addRhs(-t.coeff); // constant contribution on the left
            break;
        case SubstImage::Kind::Literal:
            comb.addTerm(t.coeff, img.lit);
            break;
        }
    }
    comb.addRhs(degree_);
    return comb.build();
}

Constraint Constraint::add(const Constraint& other) const {
    SignedCombiner comb;
    comb.addConstraint(*this);
    comb.addConstraint(other);
    return comb.build();
}

Constraint Constraint::multiply(const Int& k) const {
    assert(k >= 1);
    Constraint out = *this;
    for (Term& t : out.terms_) t.coeff *= k;
    out.degree_ *= k;
    return out;
}

Constraint Constraint::divide(const Int& d) const {
    assert(d >= 1);
    Constraint out = *this;
    for (Term& t : out.terms_) t.coeff = ceilDiv(t.coeff, d);
    out.degree_ = ceilDiv(out.degree_, d);
    return out;
}

Constraint Constraint::saturate() const {
    Constraint out;
    out.degree_ = degree_;
    for (const Term& t : terms_) {
        Int capped = t.coeff <= degree_ ? t.coeff : degree_;
        if (capped > 0) out.terms_.push_back({capped, t.lit});
    }
    return out;
}

bool Constraint::evaluate(const std::function<bool(Var)>& val) const {
    Int sum = 0;
    for (const Term& t : terms_) {
        bool v = val(t.lit.var());
        if (v != t.lit.negated()) sum += t.coeff;
    }
    return sum >= degree_;
}

bool Constraint::touchedBy(const Substitution& w) const {
    if (w.empty()) return false;
    for (const Term& t : terms_)
        if (!w.identityOn(t.lit.var())) return true;
    return false;
}

size_t Constraint::hash() const {
    size_t h = hashInt(degree_);
    for (const Term& t : terms_) {
        boost::hash_combine(h, t.lit.code());
        boost::hash_combine(h, hashInt(t.coeff));
    }
    return h;
}

namespace {

// signed view per variable plus adjusted right-hand side:
// a*x contributes +a, a*~x contributes -a and lowers the rhs by a.
struct SignedView {
    std::map<Var, Int> coeffs;
    Int rhs;

    explicit SignedView(const Constraint& c)
        : rhs(c.degree())
    {
        for (const Term& t : c.terms()) {
            if (t.lit.negated()) {
                coeffs[t.lit.var()] -= t.coeff;
                rhs -= t.coeff;
            } else {
                coeffs[t.lit.var()] += t.coeff;
            }
        }
    }
};

} // namespace

bool literalAxiomImplies(const Constraint& c, const Constraint& target) {
    SignedView from(c);
    SignedView to(target);
    Int burn = 0;
    auto itF = from.coeffs.begin();
    auto itT = to.coeffs.begin();
    while (itF != from.coeffs.end() || itT != to.coeffs.end()) {
        Int s = 0;
        Int t = 0;
        if (itT == to.coeffs.end() || (itF != from.coeffs.end() && itF->first < itT->first)) {
            s = itF->second;
            ++itF;
        } else if (itF == from.coeffs.end() || itT->first < itF->first) {
            t = itT->second;
            ++itT;
        } else {
            s = itF->second;
            t = itT->second;
            ++itF;
            ++itT;
        }
        if (s > t) burn += s - t;
    }
    return from.rhs - burn >= to.rhs;
}

Objective::Objective(std::vector<std::pair<Int, Lit>> terms, Int constant)
    : constant_(std::move(constant))
{
    // merge per variable in signed form, then re-express on positive literals
    std::map<Var, Int> signedCoeffs;
    for (const auto& [coeff, lit] : terms) {
        if (lit.negated()) {
            signedCoeffs[lit.var()] -= coeff;
            constant_ += coeff;
        } else {
            signedCoeffs[lit.var()] += coeff;
        }
    }
    for (const auto& [var, s] : signedCoeffs) {
        if (s != 0) terms_.push_back({s, Lit(var, false)});
    }
}

Int Objective::evaluate(const std::function<bool(Var)>& val) const {
    Int sum = constant_;
    for (const auto& [coeff, lit] : terms_) {
        bool v = val(lit.var());
        if (v != lit.negated()) sum += coeff;
    }
    return sum;
}

Objective Objective::substitute(const Substitution& w) const {
    std::vector<std::pair<Int, Lit>> out;
    Int constant = constant_;
    for (const auto& [coeff, lit] : terms_) {
        SubstImage img = w(lit);
        switch (img.kind) {
        case SubstImage::Kind::Zero:
            break;
        case SubstImage::Kind::One:
            constant += coeff;
            break;
        case SubstImage::Kind::Literal:
            out.push_back({coeff, img.lit});
            break;
        }
    }
    return Objective(std::move(out), std::move(constant));
}

Constraint Objective::witnessNonIncreasing(const Substitution& w) const {
    // f - f|w >= 0
    Objective sub = substitute(w);
    SignedCombiner comb;
    for (const auto& [coeff, lit] : terms_) comb.addTerm(coeff, lit);
    for (const auto& [coeff, lit] : sub.terms()) comb.addTerm(-coeff, lit);
    comb.addRhs(sub.constant() - constant_);
    return comb.build();
}

Constraint Objective::atMost(const Int& bound) const {
    // f <= bound, normalized as -f >= -bound
    SignedCombiner comb;
    for (const auto& [coeff, lit] : terms_) comb.addTerm(-coeff, lit);
    comb.addRhs(constant_ - bound);
    return comb.build();
}

} // namespace pbv
