#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "accfn/measures.hpp"
#include "accfn/rational.hpp"
#include "accfn/set_function.hpp"
#include "accfn/universe.hpp"

namespace accfn {

struct AcceptanceReport {
    bool is_acceptance = false;
    Event kernel;  // intersection of all accepted events, possibly empty
    std::optional<Rational> indifference_level;  // present iff acceptance and |kernel| >= 2
    std::size_t accepted_count = 0;
    std::optional<std::string> failure_witness;
};

struct BruteForceCheck {
    bool is_acceptance = false;
    std::optional<std::pair<Event, Event>> witness;  // accepted pair, intersection not accepted
};

struct UnitKernelResult {
    std::optional<Event> kernel;  // intersection of {A : f(A)=1}, present iff itself at 1
    std::optional<std::pair<Event, Event>> witness;
};

struct BeliefClassification {
    enum class Kind { SingletonMajority, FocalCore, TwinSingletons, NotAcceptance };
    Kind kind = Kind::NotAcceptance;
    Event subject;  // the majority singleton, the core, or the twin pair's union
    std::optional<std::pair<Event, Event>> witness;
};

struct ProbClassification {
    enum class Kind { MajorityAtom, HalfHalfPair, NotAcceptance };
    Kind kind = Kind::NotAcceptance;
    unsigned atom_a = 0;  // the majority atom, or the first of the half-half pair
    unsigned atom_b = 0;  // the second of the half-half pair
    std::optional<std::pair<Event, Event>> witness;
};

/// Events with f(A) > f(complement A), in ascending bit order.
/// Throws NotAConfidenceMeasure.
std::vector<Event> accepted_set(const SetFunction& f);

/// Intersection of all accepted events. Omega is always accepted, so the
/// intersection is well defined; it may come out empty.
Event kernel(const SetFunction& f);

/// Fast decision. f is an acceptance function iff its kernel K is itself
/// accepted: every accepted event contains K, so if K is accepted then every
/// superset of K is accepted by monotonicity and intersections of accepted
/// events stay accepted; conversely an acceptance function accepts the
/// intersection of its accepted events, which is K.
/// Throws NotAConfidenceMeasure; InternalContradiction if the undecided
/// events fail to share one value (impossible for a valid confidence measure).
AcceptanceReport is_acceptance(const SetFunction& f);

/// Direct pairwise closure check, quadratic in the accepted count. The oracle
/// the fast decision is validated against. Throws UniverseTooLargeForOracle
/// above 10 atoms, NotAConfidenceMeasure.
BruteForceCheck is_acceptance_bruteforce(const SetFunction& f);

/// Intersection of the events at value exactly 1, when that family is closed.
UnitKernelResult unit_kernel(const SetFunction& f);

/// Decides whether Bel from this mass is an acceptance function, by structure:
/// a dominant singleton, a focal core inside every focal, or two equal-mass
/// twin singletons whose union sits inside every other focal. Anything else
/// gets a brute-force witness. Throws BadMass and the from_mass errors.
BeliefClassification classify_belief(const MassAssignment& m);

/// Same decision for probability measures: an atom above one half, or two
/// atoms at exactly one half. Anything else gets a constructed witness pair.
/// Throws BadDistribution.
ProbClassification classify_probability(const ProbabilityDistribution& d);

}  // namespace accfn
