#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "accfn/rational.hpp"
#include "accfn/universe.hpp"

namespace accfn {

/// A [0,1]-valued set function given by its full table over all 2^n events.
/// Index into the table is the event bit pattern. Immutable once built.
class SetFunction {
public:
    SetFunction(Universe universe, std::vector<Rational> table);

    const Universe& universe() const { return universe_; }
    const std::vector<Rational>& table() const { return table_; }

    const Rational& at(Event e) const { return table_[e.bits()]; }
    const Rational& at_bits(std::uint32_t bits) const { return table_[bits]; }

    friend bool operator==(const SetFunction& lhs, const SetFunction& rhs) = default;

private:
    Universe universe_;
    std::vector<Rational> table_;
};

/// Signed Moebius masses, one per event; entries may be negative when the
/// source is not a belief function.
class SignedMass {
public:
    SignedMass(Universe universe, std::vector<Rational> values);

    const Universe& universe() const { return universe_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& at(Event e) const { return values_[e.bits()]; }
    const Rational& at_bits(std::uint32_t bits) const { return values_[bits]; }

private:
    Universe universe_;
    std::vector<Rational> values_;
};

struct Violation {
    std::string rule;  // "axiom-i", "axiom-ii", "monotonicity"
    Event a;
    Event b;
    Rational value_a;
    Rational value_b;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct BeliefCheck {
    bool is_belief = false;
    Event witness;     // most negative mass entry when is_belief is false
    Rational witness_mass;
};

/// Checks the confidence axioms: f(empty)=0, f(full)=1, and monotonicity over
/// all covering pairs (A, A+atom), which implies it for all pairs.
ValidationReport validate_confidence(const SetFunction& f);

/// Moebius inverse m of f: summing m over the subsets of A recovers f(A).
SignedMass moebius(const SetFunction& f);

/// Inverse of moebius: accumulates masses over subsets into a set function.
SetFunction accumulate(const SignedMass& m);

/// Throws NotAConfidenceMeasure unless validate_confidence(f).ok.
BeliefCheck is_belief_function(const SetFunction& f);

/// h(A) = 1 - f(complement A). An involution.
SetFunction dual(const SetFunction& f);

/// Dense ranks of the table values: ranks[bits] orders events by value, equal
/// values share a rank. Lets hot sweeps compare integers instead of rationals.
std::vector<std::uint32_t> dense_ranks(const SetFunction& f);

}  // namespace accfn
