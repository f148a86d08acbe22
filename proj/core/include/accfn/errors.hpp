#pragma once

#include <stdexcept>
#include <string>

namespace accfn {

/// Base class for every error this library throws on violated preconditions
/// or invalid input. Verdict-style results ("does this property hold") are
/// reported through value types, not exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// universe construction
struct DuplicateAtom : Error { using Error::Error; };
struct TooManyAtoms : Error { using Error::Error; };
struct BadAtomName : Error { using Error::Error; };

// measures that fail their own invariants
struct BadDistribution : Error { using Error::Error; };
struct EmptyFocal : Error { using Error::Error; };
struct NonPositiveMass : Error { using Error::Error; };
struct MassSumNotOne : Error { using Error::Error; };
struct BadMass : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct SkeletonInconsistent : Error { using Error::Error; };
struct IncompleteCoverage : Error { using Error::Error; };

// operation preconditions
struct NotAConfidenceMeasure : Error { using Error::Error; };
struct NotAcceptanceFunction : Error { using Error::Error; };
struct EmptyContext : Error { using Error::Error; };
struct UniverseTooLargeForOracle : Error { using Error::Error; };
struct UniverseTooLargeForExhaustive : Error { using Error::Error; };
struct ZeroProbabilityContext : Error { using Error::Error; };
struct ZeroPossibilityContext : Error { using Error::Error; };

/// Raised only if the structural acceptance test contradicts itself: an
/// accepted kernel whose undecided events do not share one value. Reaching
/// this falsifies the implementation, never the input.
struct InternalContradiction : Error { using Error::Error; };

}  // namespace accfn
