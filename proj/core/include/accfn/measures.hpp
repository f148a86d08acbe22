#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "accfn/rational.hpp"
#include "accfn/set_function.hpp"
#include "accfn/universe.hpp"

namespace accfn {

struct ProbabilityDistribution {
    Universe universe;
    std::vector<Rational> p;  // indexed by atom
    friend bool operator==(const ProbabilityDistribution&, const ProbabilityDistribution&) = default;
};

struct MassAssignment {
    Universe universe;
    std::map<std::uint32_t, Rational> focal;  // event bits -> mass
    friend bool operator==(const MassAssignment&, const MassAssignment&) = default;
};

struct PossibilityDistribution {
    Universe universe;
    std::vector<Rational> pi;  // indexed by atom
    friend bool operator==(const PossibilityDistribution&, const PossibilityDistribution&) = default;
};

/// The data of an acceptance function in structural form: a nonempty kernel,
/// values on the events containing it (upper chain), values on the events
/// disjoint from it (lower chain), and the shared level for everything else.
struct Skeleton {
    Universe universe;
    Event kernel;
    std::map<std::uint32_t, Rational> upper;  // supersets of kernel
    std::map<std::uint32_t, Rational> lower;  // subsets of complement(kernel)
    Rational k_level;
};

/// P(A) = sum of p over A. Throws BadDistribution.
SetFunction from_probability(const ProbabilityDistribution& d);

/// Bel(A) = sum of masses over focal subsets of A; Pl = dual(Bel).
/// Throws EmptyFocal, NonPositiveMass, MassSumNotOne.
std::pair<SetFunction, SetFunction> from_mass(const MassAssignment& m);

/// Pi(A) = max of pi over A (0 on empty); N = dual(Pi). Throws NotNormalized.
std::pair<SetFunction, SetFunction> from_possibility(const PossibilityDistribution& d);

/// Assembles the full table from a skeleton. The result is always a valid
/// confidence measure and an acceptance function.
/// Throws SkeletonInconsistent, IncompleteCoverage.
SetFunction build_from_skeleton(const Skeleton& s);

/// Deterministic generator: random values with small denominators (ties are
/// likely on purpose), then monotone closure by max propagation up the lattice.
SetFunction random_confidence(const Universe& u, std::uint64_t seed);

}  // namespace accfn
