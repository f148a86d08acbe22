#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "accfn/measures.hpp"
#include "accfn/rational.hpp"
#include "accfn/set_function.hpp"
#include "accfn/universe.hpp"

namespace accfn {

/// Controls the exhaustive-vs-sampled sweeps. Exhaustive runs are complete;
/// a sampled run can only report that no counterexample was found.
struct SweepOptions {
    std::optional<unsigned> max_exhaustive;  // per-property default when absent
    std::optional<std::uint64_t> samples;    // enables sampled mode past the cap
    std::uint64_t seed = 0;
};

struct PropertyReport {
    char property = 'A';
    bool holds = true;
    bool exhaustive = true;  // false: sampled, holds means "none found"
    std::uint64_t cases_checked = 0;
    // Property A: {C, S, T}. Property B: {A, B, E}.
    std::optional<std::array<Event, 3>> counterexample;
    // A: f(S&C), f(~S&C), f(T&C), f(~T&C), f(S&T&C), f((~S|~T)&C)
    // B: f(A|E), f(B), f(B|E), f(A), f(E), f(A|B)
    std::vector<Rational> witness_values;
    std::optional<bool> agrees_with_property_a;
};

struct ConditionedReport {
    Event context;
    std::size_t base_size = 0;
    bool is_belief_set = true;
    std::optional<std::pair<Event, Event>> violation_witness;
    std::optional<Event> conditioned_kernel;  // intersection of the base, when closed
};

enum class UpdateClass { Expansion, Revision, Undefined };

struct UpdateReport {
    UpdateClass kind = UpdateClass::Undefined;
    std::optional<Event> conditioned_kernel;  // C&K, when f(C&K) > f(C&~K)
};

/// Events A with f(A&C) > f(~A&C): what is taken for granted once the context
/// narrows to C. Always up-closed. Throws EmptyContext, NotAConfidenceMeasure.
std::vector<Event> conditioned_base(const SetFunction& f, Event context);

/// Pairwise intersection-closure check over the conditioned base.
/// Throws EmptyContext, UniverseTooLargeForOracle (over 10 atoms).
ConditionedReport is_conditioned_base_belief_set(const SetFunction& f, Event context);

/// Sweeps contexts C and event pairs S, T for a failure of: S and T accepted
/// under C implies S&T accepted under C. Cap 8 atoms; throws
/// UniverseTooLargeForExhaustive unless sampled mode is requested.
PropertyReport check_property_A(const SetFunction& f, const SweepOptions& opts = {});

/// Sweeps disjoint triples A, B, E for a failure of: f(A|E) > f(B) and
/// f(B|E) > f(A) implies f(E) > f(A|B). Equivalent to property A. Cap 10.
PropertyReport check_property_B(const SetFunction& f, const SweepOptions& opts = {});

/// Runs both properties and records their agreement in the B report.
std::pair<PropertyReport, PropertyReport> check_both_properties(
    const SetFunction& f, const SweepOptions& opts = {});

/// A accepted outright and still accepted under C. Throws EmptyContext.
bool is_independent(const SetFunction& f, Event a, Event context);

/// Expansion when the context meets the kernel, revision when it misses it
/// but carries positive confidence, undefined on zero confidence.
/// Throws NotAcceptanceFunction, EmptyContext.
UpdateReport classify_update(const SetFunction& f, Event context);

/// Renormalizes onto C. Throws ZeroProbabilityContext.
ProbabilityDistribution condition_probability(const ProbabilityDistribution& d, Event context);

/// Possibilistic conditioning: Pi(A|C) = 1 when Pi(A&C) = Pi(C), else
/// Pi(A&C); N is its dual. Throws ZeroPossibilityContext.
std::pair<SetFunction, SetFunction> condition_possibility(const PossibilityDistribution& d,
                                                          Event context);

/// The distribution behind the conditioned possibility measure: 1 on the
/// atoms of C reaching Pi(C), unchanged on the rest of C, 0 outside.
PossibilityDistribution condition_possibility_distribution(const PossibilityDistribution& d,
                                                           Event context);

}  // namespace accfn
