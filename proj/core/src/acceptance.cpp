#include "accfn/acceptance.hpp"

#include <algorithm>
#include <numeric>

#include "accfn/errors.hpp"

namespace accfn {
namespace {

void require_confidence(const SetFunction& f) {
    if (!validate_confidence(f).ok) {
        throw NotAConfidenceMeasure("operation needs a valid confidence measure");
    }
}

// Flags events with f(A) > f(complement A).
std::vector<char> accepted_flags(const SetFunction& f) {
    const std::uint32_t size = static_cast<std::uint32_t>(f.table().size());
    const std::uint32_t full = size - 1;
    std::vector<char> flags(size, 0);
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        flags[bits] = f.at_bits(bits) > f.at_bits(full & ~bits) ? 1 : 0;
    }
    return flags;
}

}  // namespace

std::vector<Event> accepted_set(const SetFunction& f) {
    require_confidence(f);
    const std::vector<char> flags = accepted_flags(f);
    std::vector<Event> out;
    for (std::uint32_t bits = 0; bits < flags.size(); ++bits) {
        if (flags[bits]) out.push_back(f.universe().event_from_bits(bits));
    }
    return out;
}

Event kernel(const SetFunction& f) {
    require_confidence(f);
    const std::vector<char> flags = accepted_flags(f);
    std::uint32_t meet = static_cast<std::uint32_t>(flags.size()) - 1;
    for (std::uint32_t bits = 0; bits < flags.size(); ++bits) {
        if (flags[bits]) meet &= bits;
    }
    return f.universe().event_from_bits(meet);
}

AcceptanceReport is_acceptance(const SetFunction& f) {
    require_confidence(f);
    const Universe& u = f.universe();
    const std::vector<char> flags = accepted_flags(f);
    const std::uint32_t size = static_cast<std::uint32_t>(flags.size());

    AcceptanceReport report;
    std::uint32_t meet = size - 1;
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        if (!flags[bits]) continue;
        ++report.accepted_count;
        meet &= bits;
    }
    report.kernel = u.event_from_bits(meet);
    report.is_acceptance = flags[meet];
    if (!report.is_acceptance) {
        report.failure_witness =
            "kernel " + u.event_name(report.kernel) + " is not accepted: f = " +
            f.at_bits(meet).str() + ", f of its complement = " +
            f.at_bits((size - 1) & ~meet).str();
        return report;
    }
    if (report.kernel.cardinality() >= 2) {
        // Undecided events neither contain the kernel nor avoid it. They must
        // share a single value; anything else falsifies the implementation,
        // never the input.
        bool seen = false;
        Rational level;
        for (std::uint32_t bits = 0; bits < size; ++bits) {
            if ((bits & meet) == meet || (bits & meet) == 0) continue;
            if (!seen) {
                level = f.at_bits(bits);
                seen = true;
            } else if (f.at_bits(bits) != level) {
                throw InternalContradiction(
                    "undecided events carry distinct values " + level.str() +
                    " and " + f.at_bits(bits).str());
            }
        }
        report.indifference_level = level;
    }
    return report;
}

BruteForceCheck is_acceptance_bruteforce(const SetFunction& f) {
    if (f.universe().size() > 10) {
        throw UniverseTooLargeForOracle("pairwise closure check is capped at 10 atoms");
    }
    require_confidence(f);
    const std::vector<char> flags = accepted_flags(f);
    std::vector<std::uint32_t> accepted;
    for (std::uint32_t bits = 0; bits < flags.size(); ++bits) {
        if (flags[bits]) accepted.push_back(bits);
    }
    BruteForceCheck result;
    result.is_acceptance = true;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        for (std::size_t j = i + 1; j < accepted.size(); ++j) {
            if (!flags[accepted[i] & accepted[j]]) {
                result.is_acceptance = false;
                result.witness = {f.universe().event_from_bits(accepted[i]),
                                  f.universe().event_from_bits(accepted[j])};
                return result;
            }
        }
    }
    return result;
}

UnitKernelResult unit_kernel(const SetFunction& f) {
    require_confidence(f);
    const Universe& u = f.universe();
    const std::uint32_t size = static_cast<std::uint32_t>(f.table().size());
    const Rational one(1);
    std::vector<std::uint32_t> ones;
    std::uint32_t meet = size - 1;
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        if (f.at_bits(bits) == one) {
            ones.push_back(bits);
            meet &= bits;
        }
    }
    UnitKernelResult result;
    if (f.at_bits(meet) == one) {
        result.kernel = u.event_from_bits(meet);
        return result;
    }
    for (std::size_t i = 0; i < ones.size(); ++i) {
        for (std::size_t j = i + 1; j < ones.size(); ++j) {
            if (f.at_bits(ones[i] & ones[j]) != one) {
                result.witness = {u.event_from_bits(ones[i]), u.event_from_bits(ones[j])};
                return result;
            }
        }
    }
    return result;
}

BeliefClassification classify_belief(const MassAssignment& m) {
    const auto [bel, pl] = from_mass(m);
    const Universe& u = m.universe;
    BeliefClassification result;

    // Dominant singleton: its mass beats everything that avoids its atom.
    for (const auto& [bits, value] : m.focal) {
        if (__builtin_popcount(bits) != 1) continue;
        Rational avoiding;
        for (const auto& [other, mass] : m.focal) {
            if ((other & bits) == 0) avoiding += mass;
        }
        if (value > avoiding) {
            result.kind = BeliefClassification::Kind::SingletonMajority;
            result.subject = u.event_from_bits(bits);
            return result;
        }
    }

    // A focal core: a non-singleton focal contained in every focal.
    for (const auto& [bits, value] : m.focal) {
        if (__builtin_popcount(bits) < 2) continue;
        bool core = true;
        for (const auto& [other, mass] : m.focal) {
            if ((other & bits) != bits) {
                core = false;
                break;
            }
        }
        if (core) {
            result.kind = BeliefClassification::Kind::FocalCore;
            result.subject = u.event_from_bits(bits);
            return result;
        }
    }

    // Twin singletons: exactly two singleton focals, equal masses, every other
    // focal containing both.
    {
        std::vector<std::uint32_t> singles;
        for (const auto& [bits, value] : m.focal) {
            if (__builtin_popcount(bits) == 1) singles.push_back(bits);
        }
        if (singles.size() == 2 && m.focal.at(singles[0]) == m.focal.at(singles[1])) {
            const std::uint32_t pair = singles[0] | singles[1];
            bool others_cover = true;
            for (const auto& [bits, value] : m.focal) {
                if (__builtin_popcount(bits) == 1) continue;
                if ((bits & pair) != pair) {
                    others_cover = false;
                    break;
                }
            }
            if (others_cover) {
                result.kind = BeliefClassification::Kind::TwinSingletons;
                result.subject = u.event_from_bits(pair);
                return result;
            }
        }
    }

    BruteForceCheck check = is_acceptance_bruteforce(bel);
    if (check.is_acceptance) {
        throw InternalContradiction("structural belief classification missed an acceptance function");
    }
    result.kind = BeliefClassification::Kind::NotAcceptance;
    result.witness = check.witness;
    return result;
}

ProbClassification classify_probability(const ProbabilityDistribution& d) {
    SetFunction p = from_probability(d);
    const Universe& u = d.universe;
    const unsigned n = u.size();
    const Rational half(1, 2);

    ProbClassification result;
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return d.p[a] > d.p[b]; });

    if (d.p[order[0]] > half) {
        result.kind = ProbClassification::Kind::MajorityAtom;
        result.atom_a = order[0];
        return result;
    }
    if (n >= 2 && d.p[order[0]] == half && d.p[order[1]] == half) {
        result.kind = ProbClassification::Kind::HalfHalfPair;
        result.atom_a = std::min(order[0], order[1]);
        result.atom_b = std::max(order[0], order[1]);
        return result;
    }

    result.kind = ProbClassification::Kind::NotAcceptance;
    if (d.p[order[0]] == half) {
        // One atom at exactly one half. No prefix/suffix pair of the sorted
        // sequence works here, so take the top two atoms against everything
        // but the runner-up: both sides exceed one half, their intersection
        // is the top atom alone, stuck at exactly one half.
        const std::uint32_t a = (1u << order[0]) | (1u << order[1]);
        const std::uint32_t b = (u.full_event().bits()) & ~(1u << order[1]);
        result.witness = {u.event_from_bits(a), u.event_from_bits(b)};
        return result;
    }
    // All atoms below one half: the shortest heavy prefix of the sorted
    // sequence against the latest heavy suffix. The suffix starts at position
    // 2 or later, so the overlap drops the heaviest atom and its total falls
    // to at most one half.
    Rational sum;
    std::uint32_t prefix = 0;
    std::size_t j = 0;
    while (sum <= half) {
        prefix |= 1u << order[j];
        sum += d.p[order[j]];
        ++j;
    }
    Rational tail;
    std::uint32_t suffix = 0;
    std::size_t i = n;
    while (tail <= half) {
        --i;
        suffix |= 1u << order[i];
        tail += d.p[order[i]];
    }
    result.witness = {u.event_from_bits(prefix), u.event_from_bits(suffix)};
    return result;
}

}  // namespace accfn
