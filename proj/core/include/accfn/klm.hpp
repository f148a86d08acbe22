#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accfn/rational.hpp"
#include "accfn/set_function.hpp"
#include "accfn/universe.hpp"

namespace accfn {

enum class KlmProperty {
    Reflexivity,       // REF: f(A) > 0 implies A |~ A
    RightWeakening,    // RW:  A |~ B, B subset of B' implies A |~ B'
    Conjunction,       // AND: A |~ B, A |~ C implies A |~ B&C
    Disjunction,       // OR:  A |~ C, B |~ C implies A|B |~ C
    CautiousMonotony,  // CM:  A |~ B, A |~ C implies A&B |~ C
    Cut,               // CUT: A&B |~ C, A |~ B implies A |~ C
};

const char* klm_id(KlmProperty p);  // "REF", "RW", "AND", "OR", "CM", "CUT"
std::optional<KlmProperty> klm_from_id(std::string_view id);
std::vector<KlmProperty> all_klm_properties();

struct KlmEntry {
    KlmProperty property = KlmProperty::Reflexivity;
    enum class Status { Holds, NoCounterexample, Fails } status = Status::Holds;
    std::uint64_t cases_checked = 0;
    std::vector<Event> counterexample;  // role order matches the rule's reading
    std::vector<Rational> witness_values;
};

struct KlmReport {
    std::vector<KlmEntry> entries;
    bool all_hold() const {
        for (const auto& e : entries) {
            if (e.status == KlmEntry::Status::Fails) return false;
        }
        return true;
    }
};

struct KlmOptions {
    std::optional<unsigned> max_exhaustive;  // default 6
    std::uint64_t samples = 100000;          // used past the cap
    std::uint64_t seed = 0;
};

/// The consequence relation A |~ B: B is accepted once the context narrows to
/// A, that is f(A&B) > f(A&~B). Throws NotAConfidenceMeasure.
bool entails(const SetFunction& f, Event a, Event b);

/// Sweeps for counterexamples to the requested rules. Exhaustive through 6
/// atoms, sampled beyond; reflexivity and right weakening cannot fail for a
/// confidence measure, conjunction cannot fail when property B holds.
KlmReport check_klm(const SetFunction& f, const std::vector<KlmProperty>& properties,
                    const KlmOptions& opts = {});

}  // namespace accfn
